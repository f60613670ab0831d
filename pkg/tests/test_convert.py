import pytest
from hypothesis import given
from hypothesis import strategies as st

from spantags import ErrorKind, MalformedSequenceError, TagScheme, convert, parse_spans_strict, write_tags

from strategies import schemes, span_layouts


@pytest.mark.parametrize(
    "labels, source, target, expected",
    [
        (["I-MISC", "B-MISC", "I-MISC"], "iob", "iobes", ["S-MISC", "B-MISC", "E-MISC"]),
        (["B-ORG", "I-ORG"], "bio", "iobes", ["B-ORG", "E-ORG"]),
        (["B-PER", "I-PER", "E-PER"], "iobes", "bilou", ["B-PER", "I-PER", "L-PER"]),
        (["O", "O"], "bio", "bmewo", ["O", "O"]),
        (["B-ORG", "I-ORG"], "bio", "iob", ["I-ORG", "I-ORG"]),
        (["B-A", "B-A", "B-B"], "bio", "iob", ["I-A", "B-A", "I-B"]),
        (["W-A", "B-A", "M-A", "E-A"], "bmewo", "bio", ["B-A", "B-A", "I-A", "I-A"]),
    ],
)
def test_convert(labels, source, target, expected):
    assert convert(labels, source, target) == expected


def test_naive_prefix_rewrite_bug_is_impossible():
    out = convert(["I-MISC", "B-MISC", "I-MISC"], "iob", "iobes")
    assert len(parse_spans_strict(out, "iobes")) == 2


def test_malformed_input_converts_nothing():
    with pytest.raises(MalformedSequenceError) as info:
        convert(["I-PER"], "bio", "iobes")
    assert [(e.kind, e.token_index) for e in info.value.errors] == [(ErrorKind.ILLEGAL_START, 0)]


@given(layout=span_layouts(), a=schemes, b=schemes, c=schemes)
def test_conversion_laws(layout, a, b, c):
    spans, length = layout
    x = write_tags(spans, length, a)
    assert convert(x, a, a) == x
    via_b = convert(x, a, b)
    assert len(via_b) == len(x)
    assert parse_spans_strict(via_b, b) == parse_spans_strict(x, a)
    assert convert(via_b, b, c) == convert(x, a, c)

"""Conversion between encoding schemes.

Labels are parsed into spans and the spans are written back out, never
rewritten prefix by prefix. Malformed input is refused outright.
"""

from __future__ import annotations

from typing import List, Sequence, Union

from .parsing import parse_spans_strict, write_tags
from .schemes import TagScheme


def convert(
    labels: Sequence[str],
    source: Union[TagScheme, str],
    target: Union[TagScheme, str],
) -> List[str]:
    """Re-encode ``labels`` from ``source`` to ``target``.

    Raises :class:`~spantags.schemes.MalformedSequenceError` carrying the
    complete error list if ``labels`` is not well formed under ``source``.

    >>> convert(["I-MISC", "B-MISC", "I-MISC"], "iob", "iobes")
    ['S-MISC', 'B-MISC', 'E-MISC']
    """
    spans = parse_spans_strict(labels, source)
    return write_tags(spans, len(labels), target)

"""Turning label sequences into spans, and spans back into labels."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from .schemes import (
    OUTSIDE_LABEL,
    ErrorKind,
    Function,
    InvalidLabelError,
    MalformedSequenceError,
    ResolutionPolicy,
    Span,
    SpanError,
    TagScheme,
    TokenLabel,
    decode_label,
    encode_label,
)
from .transitions import label_may_end, label_may_follow

B, I, E, S, O = Function.BEGIN, Function.INSIDE, Function.END, Function.SINGLE, Function.OUTSIDE


@dataclass(frozen=True)
class ParseResult:
    spans: Tuple[Span, ...]
    errors: Tuple[SpanError, ...]

    @property
    def ok(self) -> bool:
        return not self.errors


def _decode_all(labels: Sequence[str], scheme: TagScheme):
    decoded: List[TokenLabel] = []
    errors: List[SpanError] = []
    for i, surface in enumerate(labels):
        try:
            decoded.append(decode_label(surface, scheme))
        except InvalidLabelError as exc:
            # structurally an Outside token from here on
            decoded.append(OUTSIDE_LABEL)
            errors.append(SpanError(ErrorKind.INVALID_LABEL_FORMAT, i, str(surface), exc.message))
    return decoded, errors


def _missing_end(index: int, label: TokenLabel, scheme: TagScheme) -> SpanError:
    fmt = scheme.format
    return SpanError(
        ErrorKind.MISSING_END,
        index,
        label.surface,
        f"span of type {label.entity_type} is not closed by an {fmt.end}- or {fmt.single}- label",
    )


def _transition_error(i: int, prev: TokenLabel, cur: TokenLabel, scheme: TagScheme) -> SpanError:
    """Classify the illegal transition ``prev -> cur`` arriving at token ``i``."""
    fmt = scheme.format
    inside_span = prev.function in (B, I)
    if scheme.has_end and inside_span and cur.function in (O, B, S):
        # the open span ends at i - 1 without E-/S-; report it where the End belongs
        return _missing_end(i - 1, prev, scheme)
    if scheme is TagScheme.IOB:
        return SpanError(
            ErrorKind.ILLEGAL_FOLLOW,
            i,
            cur.surface,
            f"{cur.surface} may only follow a token of type {cur.entity_type}",
        )
    if inside_span:
        return SpanError(
            ErrorKind.TYPE_SWITCH_INSIDE_SPAN,
            i,
            cur.surface,
            f"type changes from {prev.entity_type} to {cur.entity_type} inside a span",
        )
    return SpanError(
        ErrorKind.ILLEGAL_START,
        i,
        cur.surface,
        f"span of type {cur.entity_type} starts without a {fmt.begin}- label",
    )


def _grammar_errors(decoded: Sequence[TokenLabel], scheme: TagScheme) -> List[SpanError]:
    """One diagnostic per illegal adjacent pair, plus one for an illegal final label."""
    errors = []
    prev = OUTSIDE_LABEL
    for i, cur in enumerate(decoded):
        if not label_may_follow(prev, cur, scheme):
            errors.append(_transition_error(i, prev, cur, scheme))
        prev = cur
    if decoded and not label_may_end(decoded[-1], scheme):
        errors.append(_missing_end(len(decoded) - 1, decoded[-1], scheme))
    return errors


def _closes(prev: TokenLabel, cur: TokenLabel, open_type: str, scheme: TagScheme) -> bool:
    if cur.function is O or cur.entity_type != open_type:
        return True
    if scheme is TagScheme.IOB:
        return cur.function is B and cur.entity_type == prev.entity_type
    if cur.function in (B, S):
        return True
    return scheme.has_end and prev.function in (E, S)


def _conlleval_spans(decoded: Sequence[TokenLabel], scheme: TagScheme) -> List[Span]:
    spans = []
    open_type, open_start = None, 0
    prev = OUTSIDE_LABEL
    for i, cur in enumerate(decoded):
        if open_type is not None and _closes(prev, cur, open_type, scheme):
            spans.append(Span(open_type, open_start, i))
            open_type = None
        if open_type is None and cur.function is not O:
            open_type, open_start = cur.entity_type, i
        prev = cur
    if open_type is not None:
        spans.append(Span(open_type, open_start, len(decoded)))
    return spans


def _begin_end_spans(decoded: Sequence[TokenLabel], scheme: TagScheme):
    """Spans from Begin...End pairs of the same type; everything in between is ignored."""
    spans, errors = [], []
    fmt = scheme.format
    open_label, open_start = None, 0

    def unmatched():
        return SpanError(
            ErrorKind.MISSING_END,
            open_start,
            open_label.surface,
            f"span of type {open_label.entity_type} is never closed by a matching {fmt.end}- label",
        )

    for i, cur in enumerate(decoded):
        if cur.function is B:
            if open_label is not None:
                errors.append(unmatched())
            open_label, open_start = cur, i
        elif cur.function is S:
            if open_label is not None:
                errors.append(unmatched())
                open_label = None
            spans.append(Span(cur.entity_type, i, i + 1))
        elif cur.function is E:
            if open_label is not None and open_label.entity_type == cur.entity_type:
                spans.append(Span(cur.entity_type, open_start, i + 1))
                open_label = None
            else:
                errors.append(
                    SpanError(
                        ErrorKind.DANGLING_END,
                        i,
                        cur.surface,
                        f"{cur.surface} has no open span of type {cur.entity_type} to close",
                    )
                )
    if open_label is not None:
        errors.append(unmatched())
    return spans, errors


def parse_spans(
    labels: Sequence[str],
    scheme: Union[TagScheme, str],
    policy: Union[ResolutionPolicy, str] = ResolutionPolicy.CONLLEVAL,
) -> ParseResult:
    """Parse token labels into spans, collecting every grammar problem on the way.

    Never raises on bad data: malformed labels and illegal transitions end up
    in ``ParseResult.errors``. With the conlleval policy a change of type
    always starts a new span; with ``begin-end`` only Begin/End/Single
    markers define spans (IOBES, BILOU and BMEWO only).
    """
    scheme = TagScheme.coerce(scheme)
    policy = ResolutionPolicy.coerce(policy)
    if policy is ResolutionPolicy.BEGIN_END_ONLY and not scheme.has_end:
        raise ValueError(f"the begin-end policy needs End markers, which {scheme.name} does not have")
    decoded, errors = _decode_all(labels, scheme)
    errors.extend(_grammar_errors(decoded, scheme))
    if policy is ResolutionPolicy.CONLLEVAL:
        spans = _conlleval_spans(decoded, scheme)
    else:
        spans, structural = _begin_end_spans(decoded, scheme)
        seen = {(e.kind, e.token_index) for e in errors}
        errors.extend(e for e in structural if (e.kind, e.token_index) not in seen)
    spans.sort(key=lambda s: (s.start, s.end))
    errors.sort(key=SpanError.sort_key)
    return ParseResult(tuple(spans), tuple(errors))


def parse_spans_strict(labels: Sequence[str], scheme: Union[TagScheme, str]) -> List[Span]:
    """Parse well-formed labels; raise :class:`MalformedSequenceError` listing all errors otherwise."""
    result = parse_spans(labels, scheme)
    if result.errors:
        raise MalformedSequenceError(result.errors)
    return list(result.spans)


def parse_spans_iob(labels, policy=ResolutionPolicy.CONLLEVAL):
    return parse_spans(labels, TagScheme.IOB, policy)


def parse_spans_bio(labels, policy=ResolutionPolicy.CONLLEVAL):
    return parse_spans(labels, TagScheme.BIO, policy)


def parse_spans_iobes(labels, policy=ResolutionPolicy.CONLLEVAL):
    return parse_spans(labels, TagScheme.IOBES, policy)


def parse_spans_bilou(labels, policy=ResolutionPolicy.CONLLEVAL):
    return parse_spans(labels, TagScheme.BILOU, policy)


def parse_spans_bmewo(labels, policy=ResolutionPolicy.CONLLEVAL):
    return parse_spans(labels, TagScheme.BMEWO, policy)


def write_tags(spans: Sequence[Span], length: int, scheme: Union[TagScheme, str]) -> List[str]:
    """Encode non-overlapping spans as ``length`` labels under ``scheme``.

    Under IOB a span starts with B- only when a span of the same type ends
    right before it; otherwise every token is I-.
    """
    scheme = TagScheme.coerce(scheme)
    ordered = sorted(spans, key=lambda s: (s.start, s.end))
    out = [scheme.format.outside] * length
    prev = None
    for span in ordered:
        if span.end > length:
            raise ValueError(f"span {span} does not fit in {length} tokens")
        if prev is not None and span.start < prev.end:
            raise ValueError(f"spans {prev} and {span} overlap")
        t = span.type
        if scheme.has_end and len(span) == 1:
            functions = [S]
        elif scheme.has_end:
            functions = [B] + [I] * (len(span) - 2) + [E]
        elif scheme is TagScheme.BIO:
            functions = [B] + [I] * (len(span) - 1)
        else:
            touching = prev is not None and prev.end == span.start and prev.type == t
            functions = [B if touching else I] + [I] * (len(span) - 1)
        for offset, function in enumerate(functions):
            out[span.start + offset] = encode_label(TokenLabel(function, t), scheme)
        prev = span
    return out

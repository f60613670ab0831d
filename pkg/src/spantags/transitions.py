"""Which label may follow which, and the transition mask built from it."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from .schemes import Function, TagScheme, TokenLabel, decode_label, encode_label

B, I, E, S, O = Function.BEGIN, Function.INSIDE, Function.END, Function.SINGLE, Function.OUTSIDE


def label_may_follow(prev: TokenLabel, cur: TokenLabel, scheme: TagScheme) -> bool:
    """Transition legality on already decoded labels.

    ``prev`` is the Outside label for the virtual position before the sequence.
    """
    if scheme.has_end:
        if prev.function in (B, I):
            return cur.function in (I, E) and cur.entity_type == prev.entity_type
        return cur.function in (O, B, S)
    if scheme is TagScheme.BIO:
        if cur.function is I:
            return prev.function is not O and cur.entity_type == prev.entity_type
        return True
    # IOB: B- only separates two touching spans of the same type
    if cur.function is B:
        return prev.function is not O and cur.entity_type == prev.entity_type
    return True


def label_may_end(last: TokenLabel, scheme: TagScheme) -> bool:
    if scheme.has_end:
        return last.function in (O, E, S)
    return True


_START = TokenLabel(O)


def is_legal_transition(prev: str, cur: str, scheme: Union[TagScheme, str]) -> bool:
    """Whether the surface label ``cur`` may directly follow ``prev``.

    Raises :class:`~spantags.schemes.InvalidLabelError` if either label does
    not decode under ``scheme``.
    """
    scheme = TagScheme.coerce(scheme)
    return label_may_follow(decode_label(prev, scheme), decode_label(cur, scheme), scheme)


def sequence_start_legal(label: str, scheme: Union[TagScheme, str]) -> bool:
    scheme = TagScheme.coerce(scheme)
    return label_may_follow(_START, decode_label(label, scheme), scheme)


def sequence_end_legal(label: str, scheme: Union[TagScheme, str]) -> bool:
    scheme = TagScheme.coerce(scheme)
    return label_may_end(decode_label(label, scheme), scheme)


@dataclass(frozen=True)
class TransitionTable:
    """Legality of every ordered label pair over a fixed vocabulary.

    ``allowed[i][j]`` says whether ``labels[j]`` may follow ``labels[i]``.
    ``start_allowed`` and ``end_allowed`` cover the sequence boundaries.
    """

    labels: Tuple[str, ...]
    allowed: Tuple[Tuple[bool, ...], ...]
    start_allowed: Tuple[bool, ...]
    end_allowed: Tuple[bool, ...]

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def is_allowed(self, prev: str, cur: str) -> bool:
        return self.allowed[self.index(prev)][self.index(cur)]

    def mask(self) -> List[List[int]]:
        """The matrix as 0/1 rows, ready to multiply into (or log-mask) CRF transition scores."""
        return [[int(v) for v in row] for row in self.allowed]

    def pairs(self):
        """Yield ``(from, to, legal)`` for every ordered pair, row-major."""
        for i, prev in enumerate(self.labels):
            for j, cur in enumerate(self.labels):
                yield prev, cur, self.allowed[i][j]

    def to_text(self, fmt: str = "table") -> str:
        if fmt == "table":
            word = {True: "legal", False: "illegal"}
            lines = [f"{a} -> {b} : {word[ok]}" for a, b, ok in self.pairs()]
            lines += [f"START -> {lab} : {word[ok]}" for lab, ok in zip(self.labels, self.start_allowed)]
            lines += [f"{lab} -> END : {word[ok]}" for lab, ok in zip(self.labels, self.end_allowed)]
        elif fmt == "mask":
            def bits(row):
                return " ".join(str(int(v)) for v in row)

            lines = [" ".join(self.labels)]
            lines += [bits(row) for row in self.allowed]
            lines.append("START: " + bits(self.start_allowed))
            lines.append("END: " + bits(self.end_allowed))
        else:
            raise ValueError(f"unknown table format {fmt!r}; expected 'table' or 'mask'")
        return "\n".join(lines) + "\n"


def vocabulary(types: Sequence[str], scheme: Union[TagScheme, str]) -> Tuple[str, ...]:
    """``O`` followed by every prefixed label, types in caller order, prefixes in scheme order."""
    scheme = TagScheme.coerce(scheme)
    types = list(types)
    if not types:
        raise ValueError("at least one entity type is required")
    seen = set()
    for t in types:
        if not isinstance(t, str) or not t:
            raise ValueError(f"entity types must be non-empty strings, got {t!r}")
        if t in seen:
            raise ValueError(f"duplicate entity type {t!r}")
        seen.add(t)
    fmt = scheme.format
    functions = [f for f, p in ((B, fmt.begin), (I, fmt.inside), (E, fmt.end), (S, fmt.single)) if p]
    labels = [fmt.outside]
    for t in types:
        labels.extend(encode_label(TokenLabel(f, t), scheme) for f in functions)
    return tuple(labels)


def build_transition_table(types: Sequence[str], scheme: Union[TagScheme, str]) -> TransitionTable:
    scheme = TagScheme.coerce(scheme)
    labels = vocabulary(types, scheme)
    decoded = [decode_label(lab, scheme) for lab in labels]
    allowed = tuple(tuple(label_may_follow(a, b, scheme) for b in decoded) for a in decoded)
    return TransitionTable(
        labels=labels,
        allowed=allowed,
        start_allowed=tuple(label_may_follow(_START, d, scheme) for d in decoded),
        end_allowed=tuple(label_may_end(d, scheme) for d in decoded),
    )

"""Encoding schemes, label grammar, spans and diagnostics.

Every scheme is described by a :class:`SpanFormat` prefix table. Parsing,
writing and transition checks look prefixes up in that table instead of
comparing against literal strings, so a single code path serves all five
schemes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

OUTSIDE = "O"
SEPARATOR = "-"


@dataclass(frozen=True)
class SpanFormat:
    begin: str
    inside: str
    end: Optional[str] = None
    single: Optional[str] = None
    outside: str = OUTSIDE

    def __post_init__(self):
        prefixes = self.prefixes
        if len(set(prefixes)) != len(prefixes):
            raise ValueError(f"duplicate prefixes in {prefixes}")

    @property
    def prefixes(self) -> Tuple[str, ...]:
        """Prefix characters in declaration order (begin, inside, end, single)."""
        return tuple(p for p in (self.begin, self.inside, self.end, self.single) if p is not None)


class Function(enum.Enum):
    """The role a token label plays inside (or outside) a span."""

    BEGIN = "begin"
    INSIDE = "inside"
    END = "end"
    SINGLE = "single"
    OUTSIDE = "outside"


class TagScheme(enum.Enum):
    IOB = "IOB"
    BIO = "BIO"
    IOBES = "IOBES"
    BILOU = "BILOU"
    BMEWO = "BMEWO"

    @property
    def format(self) -> SpanFormat:
        return _FORMATS[self]

    @property
    def has_end(self) -> bool:
        """True for schemes with explicit End and Single markers (IOBES, BILOU, BMEWO)."""
        return self.format.end is not None

    @classmethod
    def coerce(cls, value: Union["TagScheme", str]) -> "TagScheme":
        if isinstance(value, cls):
            return value
        if isinstance(value, str):
            try:
                return cls[value.upper()]
            except KeyError:
                pass
        names = ", ".join(s.name for s in cls)
        raise ValueError(f"unknown tag scheme {value!r}; expected one of {names}")


_FORMATS = {
    TagScheme.IOB: SpanFormat(begin="B", inside="I"),
    TagScheme.BIO: SpanFormat(begin="B", inside="I"),
    TagScheme.IOBES: SpanFormat(begin="B", inside="I", end="E", single="S"),
    TagScheme.BILOU: SpanFormat(begin="B", inside="I", end="L", single="U"),
    TagScheme.BMEWO: SpanFormat(begin="B", inside="M", end="E", single="W"),
}


class ResolutionPolicy(enum.Enum):
    """How malformed label sequences are turned into spans.

    ``CONLLEVAL`` starts a new span whenever the type changes between adjacent
    labels. ``BEGIN_END_ONLY`` only trusts Begin/End (and Single) markers and
    ignores whatever sits between them.
    """

    CONLLEVAL = "conlleval"
    BEGIN_END_ONLY = "begin-end"

    @classmethod
    def coerce(cls, value: Union["ResolutionPolicy", str]) -> "ResolutionPolicy":
        if isinstance(value, cls):
            return value
        for policy in cls:
            if value in (policy.value, policy.name, policy.name.lower()):
                return policy
        raise ValueError(f"unknown resolution policy {value!r}")


@dataclass(frozen=True)
class TokenLabel:
    function: Function
    entity_type: str = ""
    surface: str = field(default="", compare=False)

    @property
    def is_outside(self) -> bool:
        return self.function is Function.OUTSIDE


OUTSIDE_LABEL = TokenLabel(Function.OUTSIDE, "", OUTSIDE)


@dataclass(frozen=True)
class Span:
    """A typed run of tokens. ``end`` is exclusive, so ``tokens[start:end]`` recovers it."""

    type: str
    start: int
    end: int
    tokens: Tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.type, str) or not self.type:
            raise ValueError(f"span type must be a non-empty string, got {self.type!r}")
        if not 0 <= self.start < self.end:
            raise ValueError(f"invalid span bounds [{self.start}, {self.end})")
        object.__setattr__(self, "tokens", tuple(range(self.start, self.end)))

    def __len__(self):
        return self.end - self.start

    def __str__(self):
        return f"{self.type}@({self.start},{self.end})"


class ErrorKind(enum.Enum):
    # declaration order breaks ties when sorting errors at the same token
    INVALID_LABEL_FORMAT = "InvalidLabelFormat"
    ILLEGAL_START = "IllegalStart"
    TYPE_SWITCH_INSIDE_SPAN = "TypeSwitchInsideSpan"
    MISSING_END = "MissingEnd"
    DANGLING_END = "DanglingEnd"
    ILLEGAL_FOLLOW = "IllegalFollow"

    def __str__(self):
        return self.value


_KIND_ORDER = {kind: i for i, kind in enumerate(ErrorKind)}


@dataclass(frozen=True)
class SpanError:
    kind: ErrorKind
    token_index: int
    label: str
    message: str

    def sort_key(self):
        return (self.token_index, _KIND_ORDER[self.kind])

    def __str__(self):
        return f"{self.kind}@{self.token_index}: {self.message} (label {self.label!r})"


class InvalidLabelError(ValueError):
    """A label string that does not belong to the scheme's grammar."""

    def __init__(self, surface, message):
        super().__init__(message)
        self.surface = surface
        self.message = message


class MalformedSequenceError(ValueError):
    """Raised by strict parsing and conversion; ``errors`` holds every problem found."""

    def __init__(self, errors):
        self.errors = tuple(errors)
        lines = "; ".join(str(e) for e in self.errors[:5])
        more = f" (+{len(self.errors) - 5} more)" if len(self.errors) > 5 else ""
        super().__init__(f"{len(self.errors)} error(s): {lines}{more}")


def decode_label(surface: str, scheme: Union[TagScheme, str]) -> TokenLabel:
    """Decode a surface label such as ``"B-ORG"`` under ``scheme``.

    Only the first ``-`` is structural, so ``"I-creative-work"`` has type
    ``creative-work``. Raises :class:`InvalidLabelError` for anything that is
    not ``O`` or ``<prefix>-<type>`` with a prefix from the scheme.
    """
    scheme = TagScheme.coerce(scheme)
    if not isinstance(surface, str):
        raise InvalidLabelError(surface, f"label must be a string, got {type(surface).__name__}")
    fmt = scheme.format
    if surface == fmt.outside:
        return OUTSIDE_LABEL
    prefix, sep, entity_type = surface.partition(SEPARATOR)
    if not sep:
        raise InvalidLabelError(surface, f"{surface!r} has no '{SEPARATOR}' separator and is not '{fmt.outside}'")
    if not entity_type:
        raise InvalidLabelError(surface, f"{surface!r} has an empty entity type")
    if len(prefix) != 1 or prefix not in fmt.prefixes:
        allowed = ", ".join(fmt.prefixes)
        raise InvalidLabelError(
            surface, f"prefix {prefix!r} of {surface!r} is not one of {allowed} under {scheme.name}"
        )
    if prefix == fmt.begin:
        function = Function.BEGIN
    elif prefix == fmt.inside:
        function = Function.INSIDE
    elif prefix == fmt.end:
        function = Function.END
    else:
        function = Function.SINGLE
    return TokenLabel(function, entity_type, surface)


def prefix_for(function: Function, scheme: Union[TagScheme, str]) -> Optional[str]:
    """The prefix ``scheme`` uses for ``function``, or None if it has none."""
    fmt = TagScheme.coerce(scheme).format
    return {
        Function.BEGIN: fmt.begin,
        Function.INSIDE: fmt.inside,
        Function.END: fmt.end,
        Function.SINGLE: fmt.single,
        Function.OUTSIDE: None,
    }[function]


def encode_label(label: TokenLabel, scheme: Union[TagScheme, str]) -> str:
    scheme = TagScheme.coerce(scheme)
    if label.function is Function.OUTSIDE:
        return scheme.format.outside
    prefix = prefix_for(label.function, scheme)
    if prefix is None:
        raise ValueError(f"{scheme.name} has no prefix for {label.function.value} labels")
    if not label.entity_type:
        raise ValueError("cannot encode a non-outside label with an empty entity type")
    return f"{prefix}{SEPARATOR}{label.entity_type}"


def normalize_label(surface: str) -> str:
    """Uppercase the prefix of a label (``"b-org"`` -> ``"B-org"``, ``"o"`` -> ``"O"``).

    The entity type is left untouched.
    """
    if surface.upper() == OUTSIDE:
        return OUTSIDE
    prefix, sep, rest = surface.partition(SEPARATOR)
    if not sep:
        return surface
    return prefix.upper() + sep + rest

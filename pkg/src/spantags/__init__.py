"""Parse, validate, convert and score span annotations encoded as token labels.

Supports the IOB, BIO, IOBES, BILOU and BMEWO schemes.
"""

from .conll import ConllFormatError, Document, Sentence, read_conll, write_conll
from .convert import convert
from .metrics import ScoreReport, TypeScore, score, score_labels
from .parsing import (
    ParseResult,
    parse_spans,
    parse_spans_bilou,
    parse_spans_bio,
    parse_spans_bmewo,
    parse_spans_iob,
    parse_spans_iobes,
    parse_spans_strict,
    write_tags,
)
from .schemes import (
    ErrorKind,
    Function,
    InvalidLabelError,
    MalformedSequenceError,
    ResolutionPolicy,
    Span,
    SpanError,
    SpanFormat,
    TagScheme,
    TokenLabel,
    decode_label,
    encode_label,
    normalize_label,
)
from .transitions import (
    TransitionTable,
    build_transition_table,
    is_legal_transition,
    sequence_end_legal,
    sequence_start_legal,
)

__version__ = "0.1.0"

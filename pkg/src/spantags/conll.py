"""Reading and writing CoNLL-style column files.

One token per line, columns separated by spaces or tabs, sentences separated
by blank lines. The label column defaults to the last one.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from typing import List, Optional, Sequence, Tuple, Union

from .schemes import normalize_label

DOCSTART = "-DOCSTART-"
_COLUMN_SEP = re.compile(r"[ \t]+")

LabelColumn = Union[int, str]


class ConllFormatError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


@dataclass(frozen=True)
class Sentence:
    rows: Tuple[Tuple[str, ...], ...]
    # 1-based physical line of each row; not part of equality
    line_numbers: Tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.rows:
            raise ValueError("a sentence needs at least one row")
        width = len(self.rows[0])
        if width == 0 or any(len(r) != width for r in self.rows):
            raise ValueError("all rows of a sentence need the same, non-zero column count")

    def __len__(self):
        return len(self.rows)

    def column(self, index: int) -> List[str]:
        return [row[index] for row in self.rows]

    @property
    def tokens(self) -> List[str]:
        return self.column(0)

    def line_of(self, token_index: int) -> Optional[int]:
        return self.line_numbers[token_index] if self.line_numbers else None


@dataclass(frozen=True)
class Document:
    sentences: Tuple[Sentence, ...] = ()
    label_column: int = -1

    def labels(self) -> List[List[str]]:
        return [s.column(self.label_column) for s in self.sentences]

    def with_labels(self, labels: Sequence[Sequence[str]]) -> "Document":
        """Copy of the document with the label column replaced, sentence by sentence."""
        if len(labels) != len(self.sentences):
            raise ValueError(f"expected labels for {len(self.sentences)} sentences, got {len(labels)}")
        sentences = []
        for sent, new in zip(self.sentences, labels):
            if len(new) != len(sent):
                raise ValueError(f"expected {len(sent)} labels, got {len(new)}")
            col = self.label_column % len(sent.rows[0])
            rows = tuple(row[:col] + (lab,) + row[col + 1:] for row, lab in zip(sent.rows, new))
            sentences.append(replace(sent, rows=rows))
        return replace(self, sentences=tuple(sentences))


def _resolve_column(label_column: LabelColumn) -> int:
    if label_column == "last":
        return -1
    if isinstance(label_column, bool) or not isinstance(label_column, int):
        raise ValueError(f"label_column must be an integer or 'last', got {label_column!r}")
    return label_column


def read_conll(
    text: Union[bytes, str],
    label_column: LabelColumn = "last",
    skip_docstart: bool = False,
    comment_prefix: Optional[str] = None,
    normalize_prefixes: bool = False,
) -> Document:
    """Parse CoNLL column data.

    ``text`` may be bytes (decoded as UTF-8) or an already decoded string.
    Raises :class:`ConllFormatError` for undecodable input, ragged rows within
    a sentence, or a label column that does not exist.
    """
    column = _resolve_column(label_column)
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ConllFormatError(f"input is not valid UTF-8 ({exc.reason} at byte {exc.start})") from None

    sentences = []
    rows: List[Tuple[str, ...]] = []
    lines: List[int] = []

    def flush():
        if rows:
            sentences.append(Sentence(tuple(rows), tuple(lines)))
            rows.clear()
            lines.clear()

    physical = text.split("\n")
    if physical and physical[-1] == "":
        physical.pop()
    for lineno, raw in enumerate(physical, start=1):
        stripped = raw.strip(" \t\r")
        if not stripped:
            flush()
            continue
        if comment_prefix and stripped.startswith(comment_prefix):
            continue
        cols = tuple(_COLUMN_SEP.split(stripped))
        if skip_docstart and cols[0] == DOCSTART:
            continue
        if rows and len(cols) != len(rows[0]):
            raise ConllFormatError(f"expected {len(rows[0])} columns, found {len(cols)}", lineno)
        if not -len(cols) <= column < len(cols):
            raise ConllFormatError(f"label column {label_column} out of range for {len(cols)} columns", lineno)
        if normalize_prefixes:
            col = column % len(cols)
            cols = cols[:col] + (normalize_label(cols[col]),) + cols[col + 1:]
        rows.append(cols)
        lines.append(lineno)
    flush()
    return Document(tuple(sentences), column)


def write_conll(doc: Document) -> str:
    """Serialize with single spaces between columns and one blank line between sentences."""
    blocks = ["".join(" ".join(row) + "\n" for row in s.rows) for s in doc.sentences]
    return "\n".join(blocks)

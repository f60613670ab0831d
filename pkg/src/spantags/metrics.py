"""Exact-match span precision, recall and F1."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from typing import Dict, Iterable, Sequence, Tuple, Union

from .parsing import parse_spans
from .schemes import ResolutionPolicy, Span, TagScheme

FIELDS = ("gold_count", "predicted_count", "correct_count", "precision", "recall", "f1")


def _ratio(num: int, den: int) -> Fraction:
    return Fraction(num, den) if den else Fraction(0)


@dataclass(frozen=True)
class TypeScore:
    gold_count: int = 0
    predicted_count: int = 0
    correct_count: int = 0

    @property
    def precision_exact(self) -> Fraction:
        return _ratio(self.correct_count, self.predicted_count)

    @property
    def recall_exact(self) -> Fraction:
        return _ratio(self.correct_count, self.gold_count)

    @property
    def f1_exact(self) -> Fraction:
        # 2PR / (P + R) reduces to 2c / (g + p), and is 0 whenever c is 0
        return _ratio(2 * self.correct_count, self.gold_count + self.predicted_count)

    @property
    def precision(self) -> float:
        return float(self.precision_exact)

    @property
    def recall(self) -> float:
        return float(self.recall_exact)

    @property
    def f1(self) -> float:
        return float(self.f1_exact)

    def __add__(self, other: "TypeScore") -> "TypeScore":
        return TypeScore(
            self.gold_count + other.gold_count,
            self.predicted_count + other.predicted_count,
            self.correct_count + other.correct_count,
        )

    def formatted(self, name: str) -> str:
        if name in ("precision", "recall", "f1"):
            return format_ratio(getattr(self, f"{name}_exact"))
        return str(getattr(self, name))


def format_ratio(value: Fraction, places: int = 4) -> str:
    """Decimal string rounded half-up (``Fraction(1, 8)`` -> ``"0.1250"``, ``Fraction(5, 100000)`` -> ``"0.0001"``)."""
    quantum = Decimal(1).scaleb(-places)
    exact = Decimal(value.numerator) / Decimal(value.denominator)
    return str(exact.quantize(quantum, rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class ScoreReport:
    per_type: Dict[str, TypeScore] = field(default_factory=dict)

    @property
    def micro(self) -> TypeScore:
        total = TypeScore()
        for s in self.per_type.values():
            total = total + s
        return total

    def merge(self, other: "ScoreReport") -> "ScoreReport":
        """Combine reports computed on disjoint sets of sequences."""
        merged = dict(self.per_type)
        for t, s in other.per_type.items():
            merged[t] = merged.get(t, TypeScore()) + s
        return ScoreReport(dict(sorted(merged.items())))

    def to_table(self) -> str:
        rows = [(t, s) for t, s in self.per_type.items()] + [("micro", self.micro)]
        width = max(len("type"), *(len(name) for name, _ in rows))
        header = f"{'type':<{width}}  {'gold':>6}  {'pred':>6}  {'correct':>7}  {'precision':>9}  {'recall':>6}  {'f1':>6}"
        lines = [header]
        for name, s in rows:
            lines.append(
                f"{name:<{width}}  {s.gold_count:>6}  {s.predicted_count:>6}  {s.correct_count:>7}  "
                f"{s.formatted('precision'):>9}  {s.formatted('recall'):>6}  {s.formatted('f1'):>6}"
            )
        return "\n".join(lines) + "\n"

    def to_machine(self) -> str:
        """``metric.<type>.<field>=<value>`` lines, per type then ``micro``."""
        lines = []
        for name, s in list(self.per_type.items()) + [("micro", self.micro)]:
            lines.extend(f"metric.{name}.{f}={s.formatted(f)}" for f in FIELDS)
        return "\n".join(lines) + "\n"


def _key(span: Span) -> Tuple[str, int, int]:
    return (span.type, span.start, span.end)


def score(gold: Sequence[Iterable[Span]], predicted: Sequence[Iterable[Span]]) -> ScoreReport:
    """Score predicted spans against gold spans, sequence by sequence.

    A prediction counts as correct only when a gold span in the same sequence
    has the same type, start and end; each gold span is matched at most once.
    """
    if len(gold) != len(predicted):
        raise ValueError(f"gold has {len(gold)} sequences but predicted has {len(predicted)}")
    gold_n: Counter = Counter()
    pred_n: Counter = Counter()
    correct_n: Counter = Counter()
    for gold_spans, pred_spans in zip(gold, predicted):
        g = Counter(_key(s) for s in gold_spans)
        p = Counter(_key(s) for s in pred_spans)
        for key, n in g.items():
            gold_n[key[0]] += n
        for key, n in p.items():
            pred_n[key[0]] += n
        for key, n in (g & p).items():
            correct_n[key[0]] += n
    types = sorted(set(gold_n) | set(pred_n))
    return ScoreReport({t: TypeScore(gold_n[t], pred_n[t], correct_n[t]) for t in types})


def score_labels(
    gold: Sequence[Sequence[str]],
    predicted: Sequence[Sequence[str]],
    scheme: Union[TagScheme, str],
    policy: Union[ResolutionPolicy, str] = ResolutionPolicy.CONLLEVAL,
) -> ScoreReport:
    """Parse both sides with the same (robust) policy, then :func:`score` them."""
    if len(gold) != len(predicted):
        raise ValueError(f"gold has {len(gold)} sequences but predicted has {len(predicted)}")
    for i, (g, p) in enumerate(zip(gold, predicted)):
        if len(g) != len(p):
            raise ValueError(f"sequence {i}: gold has {len(g)} labels but predicted has {len(p)}")
    gold_spans = [parse_spans(g, scheme, policy).spans for g in gold]
    pred_spans = [parse_spans(p, scheme, policy).spans for p in predicted]
    return score(gold_spans, pred_spans)

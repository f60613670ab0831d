"""Command line front end.

Exit status is 0 when clean, 1 when the data has span errors and 2 for
usage, I/O or file format problems. Data goes to stdout and diagnostics to
stderr.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .conll import ConllFormatError, Document, read_conll, write_conll
from .convert import convert
from .metrics import score
from .parsing import parse_spans
from .schemes import ResolutionPolicy, SpanError, TagScheme
from .transitions import build_transition_table

SCHEMES = [s.name.lower() for s in TagScheme]
POLICIES = [p.value for p in ResolutionPolicy]

EXIT_OK, EXIT_ERRORS, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _label_column(value: str):
    if value == "last":
        return value
    try:
        return int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'last', got {value!r}") from None


def _add_io_options(p: argparse.ArgumentParser):
    p.add_argument("--label-column", type=_label_column, default="last", help="label column index or 'last' (default)")
    p.add_argument("--skip-docstart", action="store_true", help="drop -DOCSTART- lines")
    p.add_argument("--comment-prefix", default=None, help="ignore lines starting with this string")
    p.add_argument("--normalize-prefixes", action="store_true", help="uppercase label prefixes before decoding")


def _load(path: str, args) -> Document:
    try:
        if path == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(path, "rb") as fh:
                data = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return read_conll(
            data,
            label_column=args.label_column,
            skip_docstart=args.skip_docstart,
            comment_prefix=args.comment_prefix,
            normalize_prefixes=args.normalize_prefixes,
        )
    except (ConllFormatError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _diagnostic(path: str, sentence, error: SpanError) -> str:
    return f"{path}:{sentence.line_of(error.token_index)}: {error.kind}: {error.message} (label '{error.label}')"


def _scheme_and_policy(args):
    scheme, policy = TagScheme.coerce(args.scheme), ResolutionPolicy.coerce(args.policy)
    if policy is ResolutionPolicy.BEGIN_END_ONLY and not scheme.has_end:
        raise UsageError(f"--policy {policy.value} needs a scheme with End markers, not {args.scheme}")
    return scheme, policy


def _parse_document(doc: Document, scheme, policy=ResolutionPolicy.CONLLEVAL):
    return [parse_spans(labels, scheme, policy) for labels in doc.labels()]


def _report(path, doc, results) -> int:
    count = 0
    for sentence, result in zip(doc.sentences, results):
        for error in result.errors:
            print(_diagnostic(path, sentence, error), file=sys.stderr)
            count += 1
    return count


def cmd_validate(args) -> int:
    doc = _load(args.file, args)
    scheme = TagScheme.coerce(args.scheme)
    results = _parse_document(doc, scheme)
    n_errors = _report(args.file, doc, results)
    n_spans = sum(len(r.spans) for r in results)
    print(f"{len(doc.sentences)} sentences, {n_spans} spans, {n_errors} errors")
    return EXIT_ERRORS if n_errors else EXIT_OK


def cmd_convert(args) -> int:
    doc = _load(args.file, args)
    source, target = TagScheme.coerce(args.source), TagScheme.coerce(args.target)
    results = _parse_document(doc, source)
    if _report(args.file, doc, results):
        return EXIT_ERRORS
    converted = doc.with_labels([convert(labels, source, target) for labels in doc.labels()])
    text = write_conll(converted)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc.strerror}") from None
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_parse(args) -> int:
    scheme, policy = _scheme_and_policy(args)
    doc = _load(args.file, args)
    results = _parse_document(doc, scheme, policy)
    n_errors = _report(args.file, doc, results)
    if args.strict and n_errors:
        return EXIT_ERRORS
    for number, (sentence, result) in enumerate(zip(doc.sentences, results), start=1):
        tokens = sentence.tokens
        for span in result.spans:
            surface = " ".join(tokens[span.start:span.end])
            print(f"{number} {span.type} {span.start} {span.end} {surface}")
    return EXIT_OK


def cmd_score(args) -> int:
    scheme, policy = _scheme_and_policy(args)
    gold, pred = _load(args.gold, args), _load(args.pred, args)
    if len(gold.sentences) != len(pred.sentences):
        raise UsageError(f"{args.gold} has {len(gold.sentences)} sentences but {args.pred} has {len(pred.sentences)}")
    for number, (g, p) in enumerate(zip(gold.sentences, pred.sentences), start=1):
        if len(g) != len(p):
            raise UsageError(f"sentence {number}: {args.gold} has {len(g)} tokens but {args.pred} has {len(p)}")
    if args.strict_gold:
        if _report(args.gold, gold, _parse_document(gold, scheme)):
            return EXIT_ERRORS
    gold_spans = [r.spans for r in _parse_document(gold, scheme, policy)]
    pred_spans = [r.spans for r in _parse_document(pred, scheme, policy)]
    report = score(gold_spans, pred_spans)
    sys.stdout.write(report.to_table())
    if args.machine:
        sys.stdout.write(report.to_machine())
    return EXIT_OK


def cmd_transitions(args) -> int:
    types = args.types.split(",") if args.types else []
    try:
        table = build_transition_table(types, args.scheme)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(table.to_text(args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spantags", description="Parse, validate, convert and score span labels.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check that every sentence is well formed")
    p.add_argument("file")
    p.add_argument("--scheme", choices=SCHEMES, required=True)
    _add_io_options(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("convert", help="re-encode labels in another scheme")
    p.add_argument("file")
    p.add_argument("--from", dest="source", choices=SCHEMES, required=True)
    p.add_argument("--to", dest="target", choices=SCHEMES, required=True)
    p.add_argument("--output", "-o", default=None, help="output file (default: stdout)")
    _add_io_options(p)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("parse", help="list the spans of every sentence")
    p.add_argument("file")
    p.add_argument("--scheme", choices=SCHEMES, required=True)
    p.add_argument("--policy", choices=POLICIES, default="conlleval")
    p.add_argument("--strict", action="store_true", help="fail (exit 1) on any error")
    _add_io_options(p)
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("score", help="exact-match span precision/recall/F1")
    p.add_argument("gold")
    p.add_argument("pred")
    p.add_argument("--scheme", choices=SCHEMES, required=True)
    p.add_argument("--policy", choices=POLICIES, default="conlleval")
    p.add_argument("--strict-gold", action="store_true", help="refuse malformed gold labels")
    p.add_argument("--machine", action="store_true", help="also print metric.<type>.<field>=<value> lines")
    _add_io_options(p)
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("transitions", help="print the transition table or mask")
    p.add_argument("--scheme", choices=SCHEMES, required=True)
    p.add_argument("--types", required=True, help="comma separated entity types")
    p.add_argument("--format", choices=["table", "mask"], default="table")
    p.set_defaults(func=cmd_transitions)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

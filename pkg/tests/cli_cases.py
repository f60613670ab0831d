"""CLI golden-file cases.

Each case runs ``python -m spantags`` inside ``fixtures/`` and records the
exit status, stdout and stderr. Regenerate with ``python tests/cli_cases.py``
and review the diff before committing.
"""

import os
import subprocess
import sys
from pathlib import Path

HERE = Path(__file__).resolve().parent
FIXTURES = HERE / "fixtures"
GOLDEN = HERE / "golden"

CASES = {
    "validate_wnut_bio": ["validate", "wnut_bio.txt", "--scheme", "bio"],
    "validate_clean_iobes": ["validate", "clean.iobes", "--scheme", "iobes"],
    "validate_errors_iobes": ["validate", "errors.iobes", "--scheme", "iobes"],
    "validate_errors_iob": ["validate", "errors.iob", "--scheme", "iob"],
    "validate_errors_bio": ["validate", "errors.bio", "--scheme", "bio"],
    "validate_conll03_iob": ["validate", "conll03_iob.txt", "--scheme", "iob", "--skip-docstart"],
    "validate_ragged": ["validate", "ragged.txt", "--scheme", "bio"],
    "validate_missing_file": ["validate", "no_such_file.txt", "--scheme", "bio"],
    "convert_conll03_iob_to_iobes": ["convert", "conll03_iob.txt", "--from", "iob", "--to", "iobes"],
    "convert_clean_identity": ["convert", "clean.iobes", "--from", "iobes", "--to", "iobes"],
    "convert_clean_to_bilou": ["convert", "clean.iobes", "--from", "iobes", "--to", "bilou"],
    "convert_clean_to_bmewo": ["convert", "clean.iobes", "--from", "iobes", "--to", "bmewo"],
    "convert_clean_to_iob": ["convert", "clean.iobes", "--from", "iobes", "--to", "iob"],
    "convert_wnut_malformed": ["convert", "wnut_bio.txt", "--from", "bio", "--to", "iobes"],
    "parse_bank_conlleval": ["parse", "bank_pred.iobes", "--scheme", "iobes", "--policy", "conlleval"],
    "parse_bank_begin_end": ["parse", "bank_pred.iobes", "--scheme", "iobes", "--policy", "begin-end"],
    "parse_all_o": ["parse", "all_o.txt", "--scheme", "bio"],
    "parse_dangling_begin_end": ["parse", "dangling.iobes", "--scheme", "iobes", "--policy", "begin-end"],
    "parse_dangling_conlleval": ["parse", "dangling.iobes", "--scheme", "iobes"],
    "parse_errors_strict": ["parse", "errors.iobes", "--scheme", "iobes", "--strict"],
    "parse_begin_end_on_bio": ["parse", "wnut_bio.txt", "--scheme", "bio", "--policy", "begin-end"],
    "score_bank_conlleval": ["score", "bank_gold.iobes", "bank_pred.iobes", "--scheme", "iobes", "--policy", "conlleval"],
    "score_bank_begin_end": ["score", "bank_gold.iobes", "bank_pred.iobes", "--scheme", "iobes", "--policy", "begin-end"],
    "score_identical_machine": ["score", "clean.iobes", "clean.iobes", "--scheme", "iobes", "--machine"],
    "score_strict_gold": ["score", "wnut_bio.txt", "wnut_bio.txt", "--scheme", "bio", "--strict-gold"],
    "score_length_mismatch": ["score", "bank_gold.iobes", "short.iobes", "--scheme", "iobes"],
    "score_count_mismatch": ["score", "clean.iobes", "bank_gold.iobes", "--scheme", "iobes"],
    "transitions_iobes_per_table": ["transitions", "--scheme", "iobes", "--types", "PER"],
    "transitions_bio_a_mask": ["transitions", "--scheme", "bio", "--types", "A", "--format", "mask"],
    "transitions_iob_a_table": ["transitions", "--scheme", "iob", "--types", "A"],
    "transitions_bilou_mask": ["transitions", "--scheme", "bilou", "--types", "PER,LOC", "--format", "mask"],
    "transitions_empty_types": ["transitions", "--scheme", "bio", "--types", ""],
    "transitions_unknown_scheme": ["transitions", "--scheme", "iob2", "--types", "A"],
}

# argparse wording differs between Python versions; only exit status and stdout are pinned
STDERR_UNPINNED = {"transitions_unknown_scheme"}


def run(args):
    env = dict(os.environ, PYTHONIOENCODING="utf-8", COLUMNS="80")
    proc = subprocess.run(
        [sys.executable, "-m", "spantags", *args], cwd=FIXTURES, capture_output=True, env=env
    )
    return proc.returncode, proc.stdout, proc.stderr


def render(code, out, err):
    return b"exit: %d\n--- stdout\n%s--- stderr\n%s" % (code, out, err)


def golden_path(name):
    return GOLDEN / f"{name}.txt"


if __name__ == "__main__":
    GOLDEN.mkdir(exist_ok=True)
    for name, args in CASES.items():
        golden_path(name).write_bytes(render(*run(args)))
        print("wrote", golden_path(name).relative_to(HERE))

"""
Command-line front end.

Subcommands: classify, label, verify, spectrum, oracle, crosscheck, enumerate.
Connection sets are given as generators (``--set 1,5,12``); the inverse
closure is taken automatically.

Exit codes: 0 positive, 1 negative, 2 input error, 3 indeterminate (timeout).
"""
import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import nullcontext
from dataclasses import dataclass
from pathlib import Path

from tqdm import tqdm

from . import _log
from ._SETTINGS import (DEFAULT_WORKERS, FAMILY_II_BUDGET, FAMILY_II_STRATEGY, ORACLE_MAX_N,
                        TIMEOUT_PER_INSTANCE, WORKERS_ENV)
from ._staging import StagedReport
from .circulant import CirculantSpec, make_spec
from .classifier import classify
from .errors import (InvalidSpecError, LabelingDefectError, OracleRefusalError, SearchTimeoutError,
                     UnsupportedValencyError)
from .labeler import FAMILY_II_STRATEGIES, label, verify_labeling
from .oracle import SearchStatus, enumerate_specs, solve_cdm
from .reports import (CROSSCHECK_COLUMNS, FORMATS, dot_graph, labeling_record, read_labeling,
                      write_labeling_csv, write_records)
from .spectral import exact_float_mismatches, spectrum

EXIT_POSITIVE = 0
EXIT_NEGATIVE = 1
EXIT_INPUT_ERROR = 2
EXIT_INDETERMINATE = 3


def default_workers() -> int:
    """Worker count from the environment override, else the configured default."""
    raw = os.environ.get(WORKERS_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_WORKERS
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{WORKERS_ENV} must be an integer: got {raw!r}")


@dataclass(frozen=True)
class RunConfig:
    """
    Settings of a crosscheck sweep.

    Raises:
        ValueError: If a field is out of range.
    """

    max_n: int
    valency: int
    timeout_per_instance: float = TIMEOUT_PER_INSTANCE
    workers: int = DEFAULT_WORKERS
    output_format: str = "csv"
    output_path: Path | None = None
    oracle_max_n: int = ORACLE_MAX_N
    prefilter: bool = True
    progress: bool = False

    def __post_init__(self):
        if self.valency not in (3, 4, 5):
            raise ValueError(f"valency must be 3, 4 or 5: got {self.valency}")
        if self.workers < 1:
            raise ValueError(f"workers must be at least 1: got {self.workers}")
        if not self.timeout_per_instance > 0:
            raise ValueError(f"timeout must be positive: got {self.timeout_per_instance}")
        if self.output_format not in ("csv", "jsonl"):
            raise ValueError(f"crosscheck writes csv or jsonl: got {self.output_format!r}")
        if self.max_n > self.oracle_max_n:
            raise ValueError(f"max_n {self.max_n} is above the oracle maximum {self.oracle_max_n}")


def parse_generators(text: str) -> list[int]:
    try:
        generators = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"generators must be comma separated integers: {text!r}")
    if not generators:
        raise argparse.ArgumentTypeError("at least one generator is required")
    return generators


def _spec(args) -> CirculantSpec:
    return make_spec(args.n, args.set)


def _output(path: Path | None):
    return StagedReport(path) if path is not None else nullcontext(sys.stdout)


def cmd_classify(args) -> int:
    result = classify(_spec(args))
    with _output(args.output) as stream:
        write_records([result.as_record()], stream, args.format)
    return EXIT_POSITIVE if result.is_cdm else EXIT_NEGATIVE


def cmd_label(args) -> int:
    spec = _spec(args)
    result = classify(spec)
    if not result.is_cdm:
        reason = result.reason
        print(f"not closed distance magic: {reason.value if reason else 'unknown'}", file=sys.stderr)
        return EXIT_NEGATIVE
    labeling = label(spec, family_ii_strategy=args.family_ii, budget=args.budget, classification=result)
    with _output(args.output) as stream:
        if args.format == "csv":
            write_labeling_csv(labeling, stream)
        elif args.format == "dot":
            stream.write(dot_graph(spec, labeling))
        else:
            write_records([labeling_record(spec, labeling)], stream, "jsonl")
    return EXIT_POSITIVE


def cmd_verify(args) -> int:
    spec = _spec(args)
    text = sys.stdin.read() if str(args.input) == "-" else Path(args.input).read_text()
    verdict = verify_labeling(spec, read_labeling(text, spec.n))
    record = {"n": spec.n, "S": list(spec.S), "accepted": verdict.accepted, "r": verdict.r,
              "expected_r": verdict.expected_r, "vertex": verdict.vertex, "vertex_sum": verdict.vertex_sum,
              "reason": verdict.reason}
    write_records([record], sys.stdout, "jsonl")
    return EXIT_POSITIVE if verdict.accepted else EXIT_NEGATIVE


def cmd_spectrum(args) -> int:
    spec = _spec(args)
    mismatches = exact_float_mismatches(spec)
    if mismatches:
        _log.logger.warning("floating eigenvalues disagree with exact admissibility at j=%s", mismatches)
    rows = [row.as_dict() for row in spectrum(spec)]
    with _output(args.output) as stream:
        write_records(rows, stream, args.format)
    return EXIT_POSITIVE


def cmd_oracle(args) -> int:
    spec = _spec(args)
    outcome = solve_cdm(spec, budget=args.timeout, max_n=args.max_n, prefilter=not args.no_prefilter)
    record = {"n": spec.n, "S": list(spec.S), "status": outcome.status.value,
              "nodes": outcome.nodes_explored, "millis": round(outcome.elapsed * 1000),
              "refusal": str(outcome.refusal) if outcome.refusal else None,
              "values": list(outcome.labeling.values) if outcome.labeling else None}
    write_records([record], sys.stdout, "jsonl")
    if outcome.status is SearchStatus.TIMEOUT:
        return EXIT_INDETERMINATE
    return EXIT_POSITIVE if outcome.status is SearchStatus.FOUND else EXIT_NEGATIVE


def _crosscheck_one(job: tuple[CirculantSpec, float, int, bool]) -> dict:
    spec, timeout, oracle_max_n, prefilter = job
    is_cdm = classify(spec).is_cdm
    outcome = solve_cdm(spec, budget=timeout, max_n=oracle_max_n, prefilter=prefilter)
    found = outcome.status is SearchStatus.FOUND
    return {
        "n": spec.n,
        "S": list(spec.S),
        "classifier_verdict": "cdm" if is_cdm else "not-cdm",
        "oracle_status": outcome.status.value,
        "agree": outcome.status is not SearchStatus.TIMEOUT and found == is_cdm,
        "nodes": outcome.nodes_explored,
        "millis": round(outcome.elapsed * 1000),
    }


def run_crosscheck(config: RunConfig) -> tuple[list[dict], dict]:
    """Classifier against oracle over enumerate_specs; returns rows and the summary counts."""
    jobs = [(spec, config.timeout_per_instance, config.oracle_max_n, config.prefilter)
            for spec in enumerate_specs(config.valency, config.max_n)]
    _log.debug_log(f"crosscheck valency={config.valency} max_n={config.max_n}: "
                   f"{len(jobs)} instances on {config.workers} worker(s)")
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            rows = list(tqdm(pool.map(_crosscheck_one, jobs), total=len(jobs), disable=not config.progress))
    else:
        rows = [_crosscheck_one(job) for job in tqdm(jobs, disable=not config.progress)]
    timeouts = sum(row["oracle_status"] == SearchStatus.TIMEOUT.value for row in rows)
    agreements = sum(row["agree"] for row in rows)
    summary = {
        "total": len(rows),
        "agreements": agreements,
        "disagreements": len(rows) - agreements - timeouts,
        "timeouts": timeouts,
        "cdm": sum(row["oracle_status"] == SearchStatus.FOUND.value for row in rows),
    }
    return rows, summary


def cmd_crosscheck(args) -> int:
    config = RunConfig(
        max_n=args.max_n,
        valency=args.valency,
        timeout_per_instance=args.timeout,
        workers=args.workers if args.workers is not None else default_workers(),
        output_format=args.format,
        output_path=args.output,
        oracle_max_n=args.oracle_max_n,
        prefilter=not args.no_prefilter,
        progress=args.progress,
    )
    rows, summary = run_crosscheck(config)
    with _output(config.output_path) as stream:
        write_records(rows, stream, config.output_format, CROSSCHECK_COLUMNS)
    print(" ".join(f"{key}={value}" for key, value in summary.items()), file=sys.stderr)
    return EXIT_POSITIVE if summary["disagreements"] == summary["timeouts"] == 0 else EXIT_NEGATIVE


def cmd_enumerate(args) -> int:
    specs = enumerate_specs(args.valency, args.max_n)
    with _output(args.output) as stream:
        if args.format == "dot":
            for spec in specs:
                stream.write(dot_graph(spec))
        else:
            write_records((spec.as_dict() for spec in specs), stream, args.format)
    return EXIT_POSITIVE


def _add_spec_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, required=True, help="Order of the circulant.")
    parser.add_argument("--set", type=parse_generators, required=True, metavar="A,B,...",
                        help="Generators of the connection set; inverses are added.")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circulant-cdm",
        description="Closed distance magic circulants of valency at most 5.",
    )
    parser.add_argument("--verbose", action="store_true", help="Debug logging on stderr.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="Decide closed distance magic status.")
    _add_spec_arguments(p)
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p.add_argument("--output", type=Path, default=None)
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("label", help="Construct a verified closed distance magic labeling.")
    _add_spec_arguments(p)
    p.add_argument("--format", choices=FORMATS, default="jsonl")
    p.add_argument("--output", type=Path, default=None)
    p.add_argument("--family-ii", choices=FAMILY_II_STRATEGIES, default=FAMILY_II_STRATEGY,
                   help="Search for family (ii) labelings or use the closed form.")
    p.add_argument("--budget", type=float, default=FAMILY_II_BUDGET, help="Family (ii) search budget in seconds.")
    p.set_defaults(handler=cmd_label)

    p = sub.add_parser("verify", help="Check a labeling written by `label`.")
    _add_spec_arguments(p)
    p.add_argument("--input", required=True, help="Labeling file (JSON or CSV), or - for stdin.")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("spectrum", help="Eigenvalues, exact admissibility and character types.")
    _add_spec_arguments(p)
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.add_argument("--output", type=Path, default=None)
    p.set_defaults(handler=cmd_spectrum)

    p = sub.add_parser("oracle", help="Exhaustive search for one circulant.")
    _add_spec_arguments(p)
    p.add_argument("--timeout", type=float, default=TIMEOUT_PER_INSTANCE)
    p.add_argument("--max-n", type=int, default=ORACLE_MAX_N, help="Largest order the oracle accepts.")
    p.add_argument("--no-prefilter", action="store_true", help="Skip the spectral necessary conditions.")
    p.set_defaults(handler=cmd_oracle)

    p = sub.add_parser("crosscheck", help="Classifier against oracle over all circulants of a valency.")
    p.add_argument("--valency", type=int, choices=(3, 4, 5), required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--timeout", type=float, default=TIMEOUT_PER_INSTANCE, help="Seconds per instance.")
    p.add_argument("--workers", type=int, default=None, help=f"Worker processes (default: ${WORKERS_ENV} or 1).")
    p.add_argument("--oracle-max-n", type=int, default=ORACLE_MAX_N)
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.add_argument("--output", type=Path, default=None)
    p.add_argument("--no-prefilter", action="store_true")
    p.add_argument("--progress", action="store_true", help="Show a progress bar.")
    p.set_defaults(handler=cmd_crosscheck)

    p = sub.add_parser("enumerate", help="List connected circulants of a valency.")
    p.add_argument("--valency", type=int, choices=(3, 4, 5), required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="jsonl")
    p.add_argument("--output", type=Path, default=None)
    p.set_defaults(handler=cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    _log.configure(args.verbose)
    try:
        return args.handler(args)
    except SearchTimeoutError as exc:
        print(f"timeout: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE
    except LabelingDefectError as exc:
        _log.logger.error("internal labeling defect: %s", exc)
        return EXIT_INDETERMINATE
    except (InvalidSpecError, UnsupportedValencyError, OracleRefusalError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR

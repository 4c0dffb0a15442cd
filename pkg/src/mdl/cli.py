"""Command-line surface: reproducible CSV/JSON reports over the library.

Every subcommand echoes its mathematical parameters into the report, so a
report is self-describing.  Execution knobs (threads, cache directory,
output path) never appear in report bytes: identical parameters give
byte-identical reports at any thread count, once the optional timestamp
is suppressed with --no-timestamp.

Exit codes: 0 success, 2 precondition violation, 3 resource-guard
rejection.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Sequence

from . import __version__
from .arith import PrimePowerModulus
from .digits import count_blocks, discrepancy, erdos_turan_bound
from .errors import PreconditionError, ResourceGuardError, SelfCheckError
from .expsum import ExpSumResult, mangoldt_exp_sum, mersenne_prime_sum
from .order import congruence_criterion, order_structure, valuation_difference
from .primes import cached_primes
from .vmvt import vmvt_count

CSV_SCHEMA = "mdl v1"

SubcommandOutput = tuple[dict, dict, list[str], list[tuple]]


@dataclass(frozen=True)
class RunConfig:
    """One fully parsed invocation."""

    subcommand: str
    parameters: dict
    output_format: str
    output_path: Path | None
    cache_dir: Path | None
    threads: int
    timestamp: bool

    def __post_init__(self) -> None:
        if self.threads < 1:
            raise PreconditionError(f"threads must be >= 1, got {self.threads}")
        if self.output_format not in ("csv", "json"):
            raise PreconditionError(f"unknown output format {self.output_format!r}")


def _cell(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _render_json(config: RunConfig, results: dict, stamp: str | None) -> str:
    doc = {
        "tool": "mdl",
        "version": __version__,
        "subcommand": config.subcommand,
        "parameters": config.parameters,
        "results": results,
    }
    if stamp is not None:
        doc["timestamp"] = stamp
    return json.dumps(doc, indent=2) + "\n"


def _render_csv(
    config: RunConfig,
    columns: list[str],
    rows: list[tuple],
    stamp: str | None,
) -> str:
    params = "".join(f" {k}={v}" for k, v in config.parameters.items())
    lines = [f"# {CSV_SCHEMA} {config.subcommand}{params}"]
    if stamp is not None:
        lines.append(f"# generated {stamp}")
    lines.append(",".join(columns))
    lines.extend(",".join(_cell(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _primes_for(config: RunConfig, X: int) -> list[int]:
    return list(cached_primes(X, config.cache_dir))


def _expsum_results(result: ExpSumResult) -> dict:
    return {
        "real": result.real,
        "imag": result.imag,
        "magnitude": result.magnitude,
        "term_count": result.term_count,
        "normalizer": result.normalizer,
        "rho": result.rho,
    }


def _run_digit_stats(config: RunConfig) -> SubcommandOutput:
    p = config.parameters
    report = count_blocks(
        p["q"], p["X"], p["r"], p["s"],
        threads=config.threads,
        primes=_primes_for(config, p["X"]),
    )
    results = {
        "pi_X": report.pi_X,
        "expected": report.expected,
        "max_abs_deviation": report.max_abs_deviation,
        "counts": {str(v): c for v, c in report.counts.items()},
    }
    rows = [
        (value, report.counts[value], report.deviation(value))
        for value in range(p["q"] ** p["s"])
    ]
    return p, results, ["block", "count", "deviation"], rows


def _run_expsum(config: RunConfig) -> SubcommandOutput:
    p = config.parameters
    m = PrimePowerModulus(p["q"], p["gamma"])
    result = mangoldt_exp_sum(m, p["a"], p["g"], p["X"], threads=config.threads)
    results = _expsum_results(result)
    columns = list(results)
    return p, results, columns, [tuple(results.values())]


def _run_mersenne_sum(config: RunConfig) -> SubcommandOutput:
    p = config.parameters
    m = PrimePowerModulus(p["q"], p["gamma"])
    result = mersenne_prime_sum(
        m, p["a"], p["X"],
        threads=config.threads,
        primes=_primes_for(config, p["X"]),
    )
    results = _expsum_results(result)
    columns = list(results)
    return p, results, columns, [tuple(results.values())]


def _run_order_structure(config: RunConfig) -> SubcommandOutput:
    p = config.parameters
    structure = order_structure(p["q"], p["g"])
    results = {
        "order_mod_q": structure.order_mod_q,
        "lift_valuation": structure.lift_valuation,
        "cofactor": structure.cofactor,
    }
    return p, results, list(results), [tuple(results.values())]


def _run_vmvt(config: RunConfig) -> SubcommandOutput:
    p = config.parameters
    instance = vmvt_count(p["r"], p["k"], p["P"], threads=config.threads)
    return p, {"count": instance.count}, ["count"], [(instance.count,)]


def _run_discrepancy(config: RunConfig) -> SubcommandOutput:
    p = config.parameters
    primes = _primes_for(config, p["X"])
    observed = discrepancy(p["q"], p["gamma"], p["X"], config.threads, primes)
    bound = erdos_turan_bound(
        p["q"], p["gamma"], p["X"], p["H"], config.threads, primes
    )
    results = {
        "discrepancy": observed,
        "erdos_turan_bound": bound,
        "certified": observed <= bound,
    }
    return p, results, list(results), [tuple(results.values())]


# fixed desk-scale boxes for the lemma sweep
_LEMMA_R_MAX = 5
_LEMMA_N_MAX = 30
_LEMMA_M_MAX = 20
_LEMMA_XY_MAX = 20


def _run_verify_lemmas(config: RunConfig) -> SubcommandOutput:
    p = config.parameters
    structure = order_structure(p["q"], p["g"])
    G = structure.lift_valuation

    congruence_cases = 0
    congruence_ok = True
    for r in range(1, _LEMMA_R_MAX + 1):
        for s in range(G, r + 1):
            for n1 in range(_LEMMA_N_MAX + 1):
                for n2 in range(_LEMMA_N_MAX + 1):
                    lhs, rhs = congruence_criterion(structure, r, s, n1, n2)
                    congruence_cases += 1
                    if lhs != rhs:
                        congruence_ok = False

    valuation_cases = 0
    valuation_ok = True
    for m in range(1, _LEMMA_M_MAX + 1):
        for x in range(_LEMMA_XY_MAX + 1):
            for y in range(x):
                valuation_cases += 1
                try:
                    valuation_difference(structure, m, x, y)
                except SelfCheckError:
                    valuation_ok = False

    results = {
        "congruence_cases": congruence_cases,
        "congruence_ok": congruence_ok,
        "valuation_cases": valuation_cases,
        "valuation_ok": valuation_ok,
        "all_ok": congruence_ok and valuation_ok,
    }
    columns = ["check", "cases", "ok"]
    rows = [
        ("congruence", congruence_cases, congruence_ok),
        ("valuation", valuation_cases, valuation_ok),
    ]
    return p, results, columns, rows


_HANDLERS: dict[str, Callable[[RunConfig], SubcommandOutput]] = {
    "digit-stats": _run_digit_stats,
    "expsum": _run_expsum,
    "mersenne-sum": _run_mersenne_sum,
    "order-structure": _run_order_structure,
    "vmvt": _run_vmvt,
    "discrepancy": _run_discrepancy,
    "verify-lemmas": _run_verify_lemmas,
}

# flag order here fixes the parameter echo order in reports
_PARAMS: dict[str, list[str]] = {
    "digit-stats": ["q", "X", "r", "s"],
    "expsum": ["q", "gamma", "a", "g", "X"],
    "mersenne-sum": ["q", "gamma", "a", "X"],
    "order-structure": ["q", "g"],
    "vmvt": ["r", "k", "P"],
    "discrepancy": ["q", "gamma", "X", "H"],
    "verify-lemmas": ["q", "g"],
}

_DEFAULT_FORMAT = {name: "json" for name in _HANDLERS}
_DEFAULT_FORMAT["digit-stats"] = "csv"

_HELP = {
    "digit-stats": "count primes p <= X by a base-q digit window of 2^p - 1",
    "expsum": "log-weighted exponential sum of a*g^n over prime powers n <= X",
    "mersenne-sum": "exponential sum of a*(2^p - 1) over primes p <= X",
    "order-structure": "multiplicative order of g mod q and its lifting data",
    "vmvt": "exact power-sum collision count over [1, P]^(2r)",
    "discrepancy": "star discrepancy of (2^p - 1)/q^gamma points, with its certified bound",
    "verify-lemmas": "sweep the order-lifting congruence and valuation identities",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mdl",
        description="Exact desk-scale statistics of base-q digits of Mersenne numbers.",
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    for name, params in _PARAMS.items():
        sub = subparsers.add_parser(name, help=_HELP[name])
        for flag in params:
            sub.add_argument(f"--{flag}", type=int, required=flag != "H")
        if "H" in params:
            sub.set_defaults(H=100)
        sub.add_argument("--threads", type=int, default=1)
        sub.add_argument(
            "--format", choices=("csv", "json"), default=_DEFAULT_FORMAT[name]
        )
        sub.add_argument("--output", type=Path, default=None)
        sub.add_argument("--cache-dir", type=Path, default=None)
        sub.add_argument(
            "--no-timestamp",
            action="store_true",
            help="omit the timestamp for byte-reproducible reports",
        )
    return parser


def parse_config(argv: Sequence[str]) -> RunConfig:
    ns = build_parser().parse_args(argv)
    cache_dir = ns.cache_dir
    env_cache = os.environ.get("MDL_CACHE_DIR")
    if env_cache:  # environment wins over the flag
        cache_dir = Path(env_cache)
    parameters = {flag: getattr(ns, flag) for flag in _PARAMS[ns.subcommand]}
    return RunConfig(
        subcommand=ns.subcommand,
        parameters=parameters,
        output_format=ns.format,
        output_path=ns.output,
        cache_dir=cache_dir,
        threads=ns.threads,
        timestamp=not ns.no_timestamp,
    )


def run(config: RunConfig) -> str:
    """Execute one configuration and return the rendered report text."""
    _, results, columns, rows = _HANDLERS[config.subcommand](config)
    stamp = (
        datetime.now(timezone.utc).isoformat(timespec="seconds")
        if config.timestamp
        else None
    )
    if config.output_format == "json":
        return _render_json(config, results, stamp)
    return _render_csv(config, columns, rows, stamp)


def main(argv: Sequence[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        config = parse_config(argv)
        report = run(config)
    except PreconditionError as exc:
        print(f"mdl: precondition violated: {exc}", file=sys.stderr)
        return 2
    except ResourceGuardError as exc:
        print(f"mdl: resource guard: {exc}", file=sys.stderr)
        return 3
    if config.output_path is not None:
        config.output_path.write_text(report)
    else:
        sys.stdout.write(report)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

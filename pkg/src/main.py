"""
Command-line entry point for etapoly.

Results go to stdout and are deterministic; structured logs go to stderr.
Exit status: 0 when every executed check passed, 1 when a check failed,
2 for usage errors and invalid input.
"""

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from config.settings import settings
from src.core.binomials import lemma21_bruteforce, lemma21_closed, lemma34_check, require_prime
from src.core.errors import CapExceededError, EtaPolyError
from src.core.etapoly import find_oracle_divergence, hno_oracle, multiset_expansion_oracle
from src.core.modcongruence import reduce_mod, residue_census, triangle_row
from src.core.poly_cache import PolyStore
from src.core.predictor import (
    GROUPING_METHODS,
    grouping_coefficients,
    grouping_invariants,
    population_divisibility,
    predict_coefficient,
    predict_vector,
    progression_index,
)
from src.core.suites import SUITE_NAMES, VerificationRunner
from src.models.run_config import CENSUS_SOURCES, ENGINES, RunConfig
from src.utils.formatter import TRIANGLE_STYLES, formatter
from utils.logger import log_error, setup_logging

logger = logging.getLogger(__name__)

Outcome = Tuple[int, List[str]]


def _require_exact(n: int, config: RunConfig) -> None:
    if n > settings.exact_cap and not config.allow_expensive:
        raise CapExceededError("n", n, settings.exact_cap)


def cmd_compute(config: RunConfig, store: PolyStore) -> Outcome:
    n = config.n
    if config.engine == "hno":
        poly = hno_oracle(n, allow_expensive=config.allow_expensive)
    elif config.engine == "multiset":
        poly = multiset_expansion_oracle(n, allow_expensive=config.allow_expensive)
    else:
        _require_exact(n, config)
        store.ensure_loaded()
        poly = store.get(n, persist=True)
    return 0, [formatter.format_polynomial(n, poly)]


def cmd_oracles(config: RunConfig, store: PolyStore) -> Outcome:
    max_n = 18 if config.max_n is None else config.max_n
    divergence = find_oracle_divergence(max_n, allow_expensive=config.allow_expensive)
    if divergence is None:
        return 0, [f"oracles agree for 0 <= n <= {max_n}"]
    n, t, values = divergence
    details = " ".join(f"{name}={value}" for name, value in values.items())
    return 1, [f"divergence at n={n} t={t}: {details}"]


def cmd_triangle(config: RunConfig, store: PolyStore) -> Outcome:
    max_n = 134 if config.max_n is None else config.max_n
    if max_n < 4:
        return 0, []
    top = max_n - (max_n - 4) % 5
    _require_exact(top, config)
    polys = store.polynomials(top, persist=True)
    lines = []
    for n in range(4, top + 1, 5):
        row = triangle_row(reduce_mod(polys[n], 5), n)
        lines.append(formatter.format_triangle_row(row, config.style))
    return 0, lines


def cmd_census(config: RunConfig, store: PolyStore) -> Outcome:
    p = require_prime(config.p)
    max_n = p * p - p - 1 if config.max_n is None else config.max_n
    indices = list(range(p - 1, max_n + 1, p))
    lines = [formatter.census_header(p)]
    if not indices:
        return 0, lines

    if config.source == "exact":
        _require_exact(indices[-1], config)
        polys = store.polynomials(indices[-1], persist=True)
    for n in indices:
        if config.source == "exact":
            vector = reduce_mod(polys[n], p)
        else:
            vector = predict_vector(p, n // p)
        lines.append(formatter.census_row(residue_census(vector)))
    return 0, lines


def cmd_predict(config: RunConfig, store: PolyStore) -> Outcome:
    p = require_prime(config.p)
    if config.n is not None:
        k, r = divmod(config.n, p)
    else:
        k, r = config.k, config.r
    if config.t is not None:
        return 0, [str(predict_coefficient(p, k, config.t, r))]
    return 0, [formatter.format_residues(predict_vector(p, k, r))]


def cmd_lemma21(config: RunConfig, store: PolyStore) -> Outcome:
    p = require_prime(config.p)
    k = config.k
    rows = []
    failed = False
    for total in range((p - 1) * k + 1):
        brute = lemma21_bruteforce(p, k, total, allow_expensive=config.allow_expensive)
        closed = lemma21_closed(p, k, total)
        failed = failed or brute != closed
        rows.append((total, brute, closed, formatter.flag(brute == closed)))
    return int(failed), formatter.tsv([("total", "bruteforce", "closed", "match")] + rows)


def cmd_lemma34(config: RunConfig, store: PolyStore) -> Outcome:
    p = require_prime(config.p)
    j = config.j
    rows = []
    failed = False
    for s in range(p * j + p - 1):
        lhs, rhs = lemma34_check(p, j, s)
        failed = failed or lhs != rhs
        rows.append((s, lhs, rhs, formatter.flag(lhs == rhs)))
    return int(failed), formatter.tsv([("s", "lhs", "rhs", "match")] + rows)


def cmd_acoeffs(config: RunConfig, store: PolyStore) -> Outcome:
    table = grouping_coefficients(config.p, config.r, config.method)
    checks = grouping_invariants(table)
    return int(not all(checks.values())), formatter.format_grouping(table, checks)


def cmd_divpop(config: RunConfig, store: PolyStore) -> Outcome:
    p = require_prime(config.p)
    n = progression_index(p, config.q) if config.q >= 2 else 0
    predictor_only = n > settings.exact_cap and not config.allow_expensive
    if not predictor_only:
        store.polynomials(n, persist=True)
    report = population_divisibility(p, config.q, store=store, predictor_only=predictor_only)
    return int(not report.divisible), [formatter.format_divisibility(report)]


def cmd_verify_all(config: RunConfig, store: PolyStore) -> Outcome:
    results = VerificationRunner(store).run(config.suite)
    lines: List[str] = []
    for result in results:
        lines += result.lines()
    passed = sum(1 for result in results if result.passed)
    lines.append(f"{passed}/{len(results)} suites passed")
    return int(passed != len(results)), lines


HANDLERS: Dict[str, Callable[[RunConfig, PolyStore], Outcome]] = {
    "compute": cmd_compute,
    "oracles": cmd_oracles,
    "triangle": cmd_triangle,
    "census": cmd_census,
    "predict": cmd_predict,
    "lemma21": cmd_lemma21,
    "lemma34": cmd_lemma34,
    "acoeffs": cmd_acoeffs,
    "divpop": cmd_divpop,
    "verify": cmd_verify_all,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache", dest="cache_path", help="cache file (default from ETAPOLY_CACHE_PATH)")
    common.add_argument("--allow-expensive", action="store_true", help="lift the computational caps")

    parser = argparse.ArgumentParser(
        prog=settings.app_name,
        description="Exact coefficient polynomials of the eta power and their congruences.",
    )
    parser.add_argument("--version", action="version", version=f"{settings.app_name} {settings.app_version}")
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=("DEBUG", "INFO", "WARNING", "ERROR"),
        help="override ETAPOLY_LOG_LEVEL",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", parents=[common], help="print p_n(b)")
    compute.add_argument("--n", type=int, required=True)
    compute.add_argument("--engine", choices=ENGINES, default="recurrence")

    oracles = sub.add_parser("oracles", parents=[common], help="compare the three engines")
    oracles.add_argument("--max-n", type=int)

    triangle = sub.add_parser("triangle", parents=[common], help="mod 5 Pascal triangle rows")
    triangle.add_argument("--max-n", type=int)
    triangle.add_argument("--style", choices=TRIANGLE_STYLES, default="paper")

    census = sub.add_parser("census", parents=[common], help="residue census along n = -1 mod p")
    census.add_argument("--p", type=int, required=True)
    census.add_argument("--max-n", type=int)
    census.add_argument("--source", choices=CENSUS_SOURCES, default="exact")

    predict = sub.add_parser("predict", parents=[common], help="predicted residues of p_n mod p")
    predict.add_argument("--p", type=int, required=True)
    predict.add_argument("--n", type=int)
    predict.add_argument("--k", type=int)
    predict.add_argument("--r", type=int, help="residue of n mod p when --k is given (default p-1)")
    predict.add_argument("--t", type=int)

    lemma21 = sub.add_parser("lemma21", parents=[common], help="binomial sum: brute force vs closed form")
    lemma21.add_argument("--p", type=int, required=True)
    lemma21.add_argument("--k", type=int, required=True)

    lemma34 = sub.add_parser("lemma34", parents=[common], help="convolution identity at k = pj + p - 2")
    lemma34.add_argument("--p", type=int, required=True)
    lemma34.add_argument("--j", type=int, required=True)

    acoeffs = sub.add_parser("acoeffs", parents=[common], help="grouping weights a_c")
    acoeffs.add_argument("--p", type=int, required=True)
    acoeffs.add_argument("--r", type=int)
    acoeffs.add_argument("--method", choices=GROUPING_METHODS, default="generating")

    divpop = sub.add_parser("divpop", parents=[common], help="population divisibility by powers of p-1")
    divpop.add_argument("--p", type=int, required=True)
    divpop.add_argument("--q", type=int, required=True)

    verify = sub.add_parser("verify", parents=[common], help="run the verification suites")
    verify.add_argument("--suite", choices=SUITE_NAMES)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    setup_logging(args.log_level or settings.log_level, settings.log_file)

    fields = {name: value for name, value in vars(args).items() if name in RunConfig.model_fields}
    try:
        config = RunConfig(**fields)
    except ValidationError as e:
        print(f"error: {e.errors()[0]['msg']}", file=sys.stderr)
        return 2

    store = PolyStore(config.cache_path or settings.cache_path)
    try:
        code, lines = HANDLERS[config.command](config, store)
    except (EtaPolyError, OSError) as e:
        log_error(e, config.command)
        print(f"error: {e}", file=sys.stderr)
        return 2

    for line in lines:
        print(line)
    logger.info("Command finished", extra={"extra_fields": {"command": config.command, "exit_code": code}})
    return code


if __name__ == "__main__":
    sys.exit(main())

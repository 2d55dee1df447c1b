"""
Verification suites behind `etapoly verify`.

Each suite returns a SuiteResult; an exception inside one suite marks that
suite FAIL and never stops the others.
"""

import logging
from dataclasses import dataclass, field
from math import factorial
from typing import Callable, Dict, List, Optional

from src.core.binomials import (
    digit_domination,
    lemma21_bruteforce,
    lemma21_closed,
    lemma34_check,
    pascal_entry,
)
from src.core.etapoly import coefficient_formula, find_oracle_divergence
from src.core.golden import PUBLISHED_MOD_7, published_rows
from src.core.modcongruence import reduce_mod, self_similarity_check, theorem11_check, triangle_row
from src.core.partitions import (
    conjugate,
    contributing_partitions,
    enumerate_partitions,
    freq_multiset,
    hook_multiset,
    partition_count,
    pentagonal_sign,
    top_strip,
)
from src.core.poly_cache import PolyStore
from src.core.predictor import (
    boundary_overlap_check,
    grouping_coefficients,
    grouping_invariants,
    population_divisibility,
    predict_vector,
    theorem33_check,
)
from src.utils.formatter import formatter
from utils.logger import log_check_result, log_error

logger = logging.getLogger(__name__)

SMALL_PRIMES = (3, 5, 7, 11, 13)
PRIMES_TO_31 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31)
EXACT_LIMIT = 160

SUITE_NAMES = (
    "cache",
    "partitions",
    "oracles",
    "anchors",
    "theorem11",
    "triangle",
    "pascal",
    "lemma21",
    "lemma34",
    "grouping",
    "predictor",
    "theorem33",
    "divpop",
    "overlap",
)


@dataclass
class SuiteResult:
    """Outcome of one verification suite."""

    name: str
    passed: bool
    detail: str
    findings: List[str] = field(default_factory=list)

    def lines(self) -> List[str]:
        out = [f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"]
        out += [f"  finding: {finding}" for finding in self.findings]
        return out


class VerificationRunner:
    """Runs the named suites in a fixed order against one PolyStore."""

    def __init__(self, store: PolyStore):
        self.store = store
        self.suites: Dict[str, Callable[[], SuiteResult]] = {name: getattr(self, f"check_{name}") for name in SUITE_NAMES}

    def run(self, only: Optional[str] = None) -> List[SuiteResult]:
        names = [only] if only else list(self.suites)
        results = []
        for name in names:
            try:
                result = self.suites[name]()
            except Exception as e:
                log_error(e, f"suite {name}")
                result = SuiteResult(name, False, f"error: {type(e).__name__}: {e}")
            log_check_result(name, result.passed, result.detail)
            results.append(result)
        return results

    def _polys(self, n_max: int):
        return self.store.polynomials(n_max, persist=True)

    def check_cache(self) -> SuiteResult:
        path = self.store.path
        if path is None or not path.exists():
            return SuiteResult("cache", True, f"no cache file at {path}")
        available = self.store.available
        if self.store.load_error is not None:
            return SuiteResult("cache", False, str(self.store.load_error))
        return SuiteResult("cache", True, f"{available + 1} contiguous records valid")

    def check_partitions(self) -> SuiteResult:
        problems = []
        for n in range(0, 31):
            if len(enumerate_partitions(n)) != partition_count(n):
                problems.append(f"count n={n}")
        for n in range(0, 13):
            for lam in enumerate_partitions(n):
                hooks = hook_multiset(lam)
                if len(hooks.values) != n:
                    problems.append(f"hook count {lam.parts}")
                if top_strip(lam) != freq_multiset(lam).values:
                    problems.append(f"top strip {lam.parts}")
                if n <= 10 and hooks != hook_multiset(conjugate(lam)):
                    problems.append(f"conjugation {lam.parts}")
        for n in range(0, 9):
            total = 0
            for lam in enumerate_partitions(n):
                product = 1
                for h in hook_multiset(lam).values:
                    product *= h
                total += (factorial(n) // product) ** 2
            if total != factorial(n):
                problems.append(f"sum of squared dimensions n={n}")
        for p in (3, 5, 7, 11):
            for r in range(p):
                if len(contributing_partitions(p, r)) != partition_count(r):
                    problems.append(f"tails p={p} r={r}")
        if problems:
            return SuiteResult("partitions", False, "; ".join(problems[:5]))
        return SuiteResult("partitions", True, "enumeration, hooks, top strip, conjugation, tails")

    def check_oracles(self) -> SuiteResult:
        divergence = find_oracle_divergence(18, allow_expensive=True)
        if divergence:
            n, t, values = divergence
            return SuiteResult("oracles", False, f"divergence at n={n} t={t}: {values}")
        polys = self._polys(14)
        for n in range(15):
            for t in range(n + 1):
                if coefficient_formula(n, t) != polys[n].coeffs[t]:
                    return SuiteResult("oracles", False, f"coefficient formula differs at n={n} t={t}")
        return SuiteResult("oracles", True, "three engines agree for n <= 18; coefficient formula for n <= 14")

    def check_anchors(self) -> SuiteResult:
        polys = self._polys(60)
        for n, poly in enumerate(polys):
            if poly.evaluate(0) != factorial(n) * partition_count(n):
                return SuiteResult("anchors", False, f"p_{n}(0) != n!p(n)")
            if n >= 1 and poly.evaluate(1) != 0:
                return SuiteResult("anchors", False, f"p_{n}(1) != 0")
            quotient, remainder = divmod(poly.evaluate(2), factorial(n))
            if remainder or quotient != pentagonal_sign(n):
                return SuiteResult("anchors", False, f"p_{n}(2)/n! is not the pentagonal sign")
            if poly.coeffs[-1] != (-1) ** n or poly.degree != n:
                return SuiteResult("anchors", False, f"leading term of p_{n}")
        return SuiteResult("anchors", True, "b=0, b=1, b=2 and leading terms for n <= 60")

    def check_theorem11(self) -> SuiteResult:
        polys = self._polys(154)
        failed = []
        for n in range(4, 155, 5):
            if not theorem11_check(n, reduce_mod(polys[n], 5)).passed:
                failed.append(n)
        if failed:
            return SuiteResult("theorem11", False, f"clauses fail at n={failed}")
        return SuiteResult("theorem11", True, "all three clauses for n = 5k+4 <= 154")

    def check_triangle(self) -> SuiteResult:
        polys = self._polys(134)
        golden = published_rows()
        for n, expected in golden.items():
            rendered = formatter.format_triangle_row(triangle_row(reduce_mod(polys[n], 5), n), "paper")
            if rendered != expected:
                return SuiteResult("triangle", False, f"row n={n}: got {rendered!r}, expected {expected!r}")
        return SuiteResult("triangle", True, f"{len(golden)} rows match the published table")

    def check_pascal(self) -> SuiteResult:
        polys = self._polys(154)
        for k in range(31):
            n = 5 * k + 4
            row = triangle_row(reduce_mod(polys[n], 5), n)
            for m, entry in enumerate(row.entries):
                if entry != pascal_entry(k, m):
                    return SuiteResult("pascal", False, f"entry (k={k}, m={m}) != 2(-1)^m C(k,m)")
                if digit_domination(m, k, 5) != (entry != 0):
                    return SuiteResult("pascal", False, f"digit domination differs at (k={k}, m={m})")
        report = self_similarity_check(2, polys)
        if not report.passed:
            return SuiteResult("pascal", False, f"self-similarity mismatches: {report.apex_mismatches[:3] or report.lucas_mismatches[:3]}")
        return SuiteResult("pascal", True, "Pascal, digit domination and self-similarity for k <= 30")

    def check_lemma21(self) -> SuiteResult:
        checked = 0
        for p in (2, 3, 5, 7):
            for k in range(6):
                for total in range((p - 1) * k + 1):
                    closed = lemma21_closed(p, k, total)
                    if lemma21_bruteforce(p, k, total) != closed:
                        return SuiteResult("lemma21", False, f"p={p} k={k} total={total}")
                    if k <= 3 and lemma21_bruteforce(p, k, total, literal=True) != closed:
                        return SuiteResult("lemma21", False, f"literal sum p={p} k={k} total={total}")
                    checked += 1
        return SuiteResult("lemma21", True, f"{checked} cases")

    def check_lemma34(self) -> SuiteResult:
        checked = 0
        for p in (3, 5, 7, 11):
            for j in range(7):
                for s in range(p * j + p - 1):
                    lhs, rhs = lemma34_check(p, j, s)
                    if lhs != rhs:
                        return SuiteResult("lemma34", False, f"p={p} j={j} s={s}: {lhs} != {rhs}")
                    checked += 1
        return SuiteResult("lemma34", True, f"{checked} cases")

    def check_grouping(self) -> SuiteResult:
        if grouping_coefficients(5).a != (0, 2, 1, 3, 4):
            return SuiteResult("grouping", False, f"p=5 table {grouping_coefficients(5).a}")
        for p in PRIMES_TO_31:
            failed = [name for name, ok in grouping_invariants(grouping_coefficients(p)).items() if not ok]
            if failed:
                return SuiteResult("grouping", False, f"p={p}: {failed}")
        for p in (2,) + SMALL_PRIMES:
            for r in range(p):
                if grouping_coefficients(p, r, "enumerate") != grouping_coefficients(p, r):
                    return SuiteResult("grouping", False, f"engines differ at p={p} r={r}")
        polys = self._polys(6)
        findings = []
        for n, printed in sorted(PUBLISHED_MOD_7.items()):
            exact = reduce_mod(polys[n], 7).residues
            predicted = predict_vector(7, 0, n - 1).residues
            if predicted != exact:
                return SuiteResult("grouping", False, f"p_{n} mod 7: predicted {predicted}, exact {exact}")
            if printed != exact:
                findings.append(f"printed p_{n} mod 7 {printed} differs from exact {exact}")
        return SuiteResult(
            "grouping", True, "p=5 weights, invariants for p <= 31, both engines, p=7 vectors", findings
        )

    def check_predictor(self) -> SuiteResult:
        polys = self._polys(EXACT_LIMIT)
        findings = []
        hard = []
        compared = 0
        for p in SMALL_PRIMES:
            k = 0
            while p * k + p - 1 <= EXACT_LIMIT:
                n = p * k + p - 1
                exact = reduce_mod(polys[n], p).residues
                predicted = predict_vector(p, k).residues
                compared += 1
                if exact != predicted:
                    t = next(i for i, (a, b) in enumerate(zip(exact, predicted)) if a != b)
                    message = f"p={p} n={n} first differs at t={t}"
                    if p == 5 or k % p == p - 2:
                        hard.append(message)
                    else:
                        findings.append(message)
                k += 1
        if hard:
            return SuiteResult("predictor", False, "; ".join(hard[:3]), findings)
        return SuiteResult("predictor", True, f"{compared} progressions n <= {EXACT_LIMIT}", findings)

    def check_theorem33(self) -> SuiteResult:
        self._polys(max(p * p - p - 1 for p in SMALL_PRIMES))
        findings = []
        for p in SMALL_PRIMES:
            report = theorem33_check(p, store=self.store)
            if report.source != "exact":
                return SuiteResult("theorem33", False, f"p={p} was not checked exactly")
            if not report.verdict:
                return SuiteResult("theorem33", False, f"p={p} n={report.n} counts {report.counts}")
        exceptional = theorem33_check(71)
        if not exceptional.exceptional or exceptional.exceptional_census is None:
            return SuiteResult("theorem33", False, "p=71 exceptional case not detected")
        follow_up = exceptional.exceptional_census
        if not exceptional.verdict:
            return SuiteResult("theorem33", False, f"p=71 n={follow_up.n} counts {follow_up.counts}")
        findings.append(
            f"p=71 n={exceptional.n} equidistributed={formatter.flag(exceptional.equidistributed)}, "
            f"n={follow_up.n} equidistributed={formatter.flag(follow_up.equidistributed)} (predictor)"
        )
        return SuiteResult(
            "theorem33", True, "exact at n = 5, 19, 41, 109, 155; p=71 settled at n = 352798", findings
        )

    def check_divpop(self) -> SuiteResult:
        self._polys(94)
        for p, q in ((3, 3), (5, 2), (5, 3)):
            report = population_divisibility(p, q, store=self.store)
            if not report.divisible or report.source != "exact":
                return SuiteResult("divpop", False, formatter.format_divisibility(report))
        return SuiteResult("divpop", True, "(3,3) n=14, (5,2) n=19, (5,3) n=94")

    def check_overlap(self) -> SuiteResult:
        for p in SMALL_PRIMES:
            for j in range(3):
                report = boundary_overlap_check(p, j)
                if not report.passed:
                    return SuiteResult("overlap", False, f"p={p} j={j}: {report.mismatches[:3]}")
                if report.nondegenerate and not report.equidistributed:
                    return SuiteResult("overlap", False, f"p={p} j={j}: overlap terms not equidistributed")
        return SuiteResult("overlap", True, "boundary terms for p <= 13, j <= 2")

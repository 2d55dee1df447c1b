"""
Mod-p coefficient predictor for p_n with n = pk + r.

Only partitions with at least pk ones survive reduction mod p, and each of
their subset sums must absorb every multiple of p up to pk. What is left
is a choice from k copies of the nonzero residues (summed in closed form by
the binomial-sum lemma) times a choice from the tail, which is a partition
of r. Collecting the tail choices by size gives the grouping weights a_c.
"""

import logging
from functools import lru_cache
from math import factorial
from typing import Dict, List, Optional, Tuple

import numpy as np

from src.core.binomials import binom_mod, lemma21_closed, require_prime
from src.core.errors import DomainError
from src.core.modcongruence import reduce_mod, residue_census
from src.core.partitions import contributing_partitions, partition_count
from src.core.poly_cache import PolyStore
from src.models.congruence import (
    CensusReport,
    DivisibilityReport,
    GroupingTable,
    OverlapReport,
    ResidueVector,
    Theorem33Report,
)

logger = logging.getLogger(__name__)

GROUPING_METHODS = ("generating", "enumerate")


def _resolve_residue(p: int, r: Optional[int]) -> int:
    if r is None:
        return p - 1
    if not 0 <= r < p:
        raise DomainError(f"residue r={r} outside [0, {p})")
    return r


def _grouping_by_enumeration(p: int, r: int) -> Tuple[int, ...]:
    totals = [0] * (r + 1)
    for _, tail in contributing_partitions(p, r):
        # elementary symmetric functions of the inverses, mod p
        esf = [1]
        for s in tail.values:
            inv = pow(s, -1, p)
            esf.append(0)
            for j in range(len(esf) - 1, 0, -1):
                esf[j] = (esf[j] + esf[j - 1] * inv) % p
        for c, value in enumerate(esf):
            totals[c] = (totals[c] + value) % p
    return tuple(totals)


def _grouping_by_generating_function(p: int, r: int) -> Tuple[int, ...]:
    """
    y^r coefficient of ∏_j Σ_e y^{je} ∏_{i≤e} (1 + x·i⁻¹), truncated to
    x-degree r, with every product reduced mod p.
    """
    width = r + 1
    # factor[e] = ∏_{i=1}^{e} (1 + x·i⁻¹) mod p
    factor = [np.zeros(width, dtype=np.int64) for _ in range(width)]
    factor[0][0] = 1
    for e in range(1, width):
        inv = pow(e, -1, p)
        shifted = np.zeros(width, dtype=np.int64)
        shifted[1:] = factor[e - 1][:-1] * inv
        factor[e] = (factor[e - 1] + shifted) % p

    state = np.zeros((width, width), dtype=np.int64)
    state[0, 0] = 1
    for part in range(1, r + 1):
        new_state = np.zeros_like(state)
        for d in range(width):
            row = state[d]
            if not row.any():
                continue
            for e in range(0, (r - d) // part + 1):
                product = np.convolve(row, factor[e])[:width] % p
                new_state[d + part * e] = (new_state[d + part * e] + product) % p
        state = new_state
    return tuple(int(x) for x in state[r])


@lru_cache(maxsize=128)
def _grouping_cached(p: int, r: int, method: str) -> Tuple[int, ...]:
    if method == "enumerate":
        return _grouping_by_enumeration(p, r)
    return _grouping_by_generating_function(p, r)


def grouping_coefficients(p: int, r: Optional[int] = None, method: str = "generating") -> GroupingTable:
    """
    The weights a_c: Σ over tails M_e (partitions of r) of the c-th
    elementary symmetric function of the inverses mod p of M_e.
    """
    require_prime(p)
    r = _resolve_residue(p, r)
    if method not in GROUPING_METHODS:
        raise DomainError(f"unknown grouping method {method!r}")
    table = GroupingTable(p=p, r=r, a=_grouping_cached(p, r, method))
    logger.debug("Grouping table", extra={"extra_fields": {"p": p, "r": r, "a": list(table.a)}})
    return table


def grouping_invariants(table: GroupingTable) -> Dict[str, bool]:
    """a_0 ≡ p(r) always; a_{p-1} ≡ -1 when r = p-1 (Wilson)."""
    checks = {"a_0 = p(r) mod p": table.a[0] == partition_count(table.r) % table.p}
    if table.r == table.p - 1:
        checks["a_{p-1} = -1 mod p"] = table.a[table.p - 1] == table.p - 1
    return checks


def _lambda(p: int, k: int, x: int) -> int:
    return lemma21_closed(p, k, x) if x >= 0 else 0


def _predict_with_table(p: int, k: int, t: int, table: GroupingTable) -> int:
    if t < k:
        return 0
    m = t - k
    total = 0
    # Λ(m-c, k) vanishes unless (p-1) | (m-c); at most c0 and c0+p-1 remain
    c0 = m % (p - 1)
    for c in (c0, c0 + p - 1):
        if c <= table.r and c <= m:
            total += table.a[c] * _lambda(p, k, m - c)
    sign = -1 if m % 2 else 1
    return sign * factorial(table.r) * total % p


def predict_coefficient(p: int, k: int, t: int, r: Optional[int] = None) -> int:
    """
    Coefficient of b^t in p_n mod p for n = pk + r (r = p-1 by default).

    0 for t < k; for t = k+m the value is (-1)^m r! Σ_c a_c Λ(m-c, k), where
    Λ(x, k) = (-1)^{x/(p-1)} C(k, x/(p-1)) when (p-1) | x and x ≥ 0. With
    r = p-1, r! ≡ -1 and both boundary terms c = 0 and c = p-1 are included.
    """
    require_prime(p)
    r = _resolve_residue(p, r)
    if k < 0:
        raise DomainError(f"k={k} must be nonnegative")
    n = p * k + r
    if not 0 <= t <= n:
        raise DomainError(f"t={t} outside [0, {n}]")
    return _predict_with_table(p, k, t, grouping_coefficients(p, r))


def predict_vector(p: int, k: int, r: Optional[int] = None) -> ResidueVector:
    """Predicted residues of every coefficient of p_{pk+r}."""
    require_prime(p)
    r = _resolve_residue(p, r)
    if k < 0:
        raise DomainError(f"k={k} must be nonnegative")
    table = grouping_coefficients(p, r)
    n = p * k + r
    residues = tuple(_predict_with_table(p, k, t, table) for t in range(n + 1))
    return ResidueVector(p=p, n=n, residues=residues, source="predictor")


def _progression_vector(p: int, n: int, store: Optional[PolyStore], predictor_only: bool) -> ResidueVector:
    k, r = divmod(n, p)
    if store is not None and not predictor_only and store.holds(n):
        return reduce_mod(store.get(n), p)
    return predict_vector(p, k, r)


def theorem33_check(
    p: int,
    store: Optional[PolyStore] = None,
    predictor_only: bool = False,
    include_exceptional: bool = True,
) -> Theorem33Report:
    """
    Census of p_n mod p at n = p²-p-1, exact when the store already holds
    p_n, otherwise predicted. When p(p-1) ≡ 1 mod p (first at p = 71) the
    census is repeated at n = p³-p²-p-1 with the predictor.
    """
    require_prime(p)
    n = p * p - p - 1
    census = residue_census(_progression_vector(p, n, store, predictor_only))
    exceptional = partition_count(p - 1) % p == 1

    follow_up: Optional[CensusReport] = None
    if exceptional and include_exceptional:
        n_exc = p**3 - p**2 - p - 1
        k_exc, r_exc = divmod(n_exc, p)
        follow_up = residue_census(predict_vector(p, k_exc, r_exc))

    report = Theorem33Report(**census.model_dump(), exceptional=exceptional, exceptional_census=follow_up)
    logger.info(
        "Equidistribution census",
        extra={"extra_fields": {"p": p, "n": n, "source": census.source, "exceptional": exceptional, "verdict": report.verdict}},
    )
    return report


def progression_index(p: int, q: int) -> int:
    """Smallest n ≥ 0 with n ≡ -1-p-...-p^{q-1} mod p^q."""
    return p**q - (p**q - 1) // (p - 1)


def population_divisibility(p: int, q: int, store: Optional[PolyStore] = None, predictor_only: bool = False) -> DivisibilityReport:
    """
    Nonzero-class populations of p_n mod p at n = progression_index(p, q),
    tested for divisibility by (p-1)^{q-2}, or (p-1)^{q-3} in the
    exceptional case p(p-1) ≡ 1 mod p.
    """
    require_prime(p)
    if q < 2:
        raise DomainError(f"q={q} must be at least 2")
    n = progression_index(p, q)
    census = residue_census(_progression_vector(p, n, store, predictor_only))
    exceptional = partition_count(p - 1) % p == 1
    exponent = max(q - 3 if exceptional else q - 2, 0)
    divisor = (p - 1) ** exponent
    divisible = all(count % divisor == 0 for count in census.nonzero_counts)
    return DivisibilityReport(
        p=p,
        q=q,
        n=n,
        counts=census.counts,
        divisor=divisor,
        exceptional=exceptional,
        divisible=divisible,
        source=census.source,
    )


def boundary_overlap_check(p: int, j: int) -> OverlapReport:
    """
    Compare the predicted coefficients of degree k + (p-1)s, k = pj+p-2,
    with (-1)^g C(j, g)·(-a_0 + h(-a_0 - a_{p-1})) for s = gp + h.
    """
    require_prime(p)
    if p == 2:
        raise DomainError("the overlap sequence needs p ≥ 3")
    if j < 0:
        raise DomainError(f"j={j} must be nonnegative")
    table = grouping_coefficients(p)
    a0, a_last = table.a[0], table.a[p - 1]
    k = p * j + p - 2
    mismatches: List[Tuple[int, int, int]] = []
    values: List[int] = []
    for s in range(k + 2):
        g, h = divmod(s, p)
        sign = -1 if g % 2 else 1
        expected = sign * binom_mod(j, g, p) * (-a0 + h * (-a0 - a_last)) % p
        actual = _predict_with_table(p, k, k + (p - 1) * s, table)
        values.append(actual)
        if actual != expected:
            mismatches.append((s, actual, expected))

    counts = [0] * p
    for value in values:
        counts[value] += 1
    return OverlapReport(
        p=p,
        j=j,
        k=k,
        mismatches=mismatches,
        values=tuple(values),
        nondegenerate=(a0 + a_last) % p != 0,
        equidistributed=len(set(counts[1:])) <= 1,
    )

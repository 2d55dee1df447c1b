"""
Exact engines for the polynomials p_n(b) defined by

    ∏_{k≥1} (1 - q^k)^{b-1} = Σ_n p_n(b) q^n / n!

Three independent routes are provided: the σ₁ recurrence (primary engine),
the hooklength sum, and the multiset expansion of the binomial series. A
per-coefficient subset-sum formula rounds out the set.
"""

import logging
import time
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import divisor_sigma

from config.settings import settings
from src.core.binomials import poly_mul
from src.core.errors import CapExceededError, DomainError, IntegralityError
from src.core.partitions import (
    enumerate_partitions,
    freq_multiset,
    hook_multiset,
    partition_count,
)
from src.models.polynomial import DensePolynomial

logger = logging.getLogger(__name__)


def sigma1(m: int) -> int:
    """Sum of the positive divisors of m."""
    if m < 1:
        raise DomainError(f"sigma1 needs m >= 1, got {m}")
    return int(divisor_sigma(m, 1))


@lru_cache(maxsize=8)
def sigma_table(n_max: int) -> Tuple[int, ...]:
    """σ₁(0..n_max) by sieve; index 0 is a placeholder 0."""
    table = [0] * (n_max + 1)
    for d in range(1, n_max + 1):
        for multiple in range(d, n_max + 1, d):
            table[multiple] += d
    return tuple(table)


@lru_cache(maxsize=8)
def factorial_table(n_max: int) -> Tuple[int, ...]:
    table = [1] * (n_max + 1)
    for i in range(1, n_max + 1):
        table[i] = table[i - 1] * i
    return tuple(table)


def _exact_div(numerator: int, denominator: int, context: str) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise IntegralityError(f"{context}: {numerator} / {denominator} is not integral")
    return quotient


def _check_cap(n: int, cap: int, allow_expensive: bool, what: str = "n") -> None:
    if n > cap and not allow_expensive:
        raise CapExceededError(what, n, cap)


def compute_recurrence(n_max: int, known: Optional[Sequence[DensePolynomial]] = None) -> List[DensePolynomial]:
    """
    p_0, ..., p_{n_max} from

        p_n(b) = (n-1)!(b-1) Σ_{m=1}^{n} -σ₁(m) p_{n-m}(b) / (n-m)!

    `known` may hold an already computed prefix p_0..p_j which is extended
    instead of recomputed. The weight (n-1)!/(n-m)! is taken as an exact
    quotient and checked for a zero remainder.
    """
    if n_max < 0:
        raise DomainError(f"n_max={n_max} must be nonnegative")

    polys: List[List[int]] = [list(p.coeffs) for p in (known or [])][: n_max + 1]
    if not polys:
        polys = [[1]]
    fact = factorial_table(n_max)
    sig = sigma_table(n_max)
    start = len(polys)
    started_at = time.perf_counter()

    for n in range(start, n_max + 1):
        acc = [0] * n
        for m in range(1, n + 1):
            weight = -sig[m] * _exact_div(fact[n - 1], fact[n - m], f"(n-1)!/(n-m)! at n={n}, m={m}")
            for t, c in enumerate(polys[n - m]):
                acc[t] += weight * c
        # multiply by (b - 1)
        new = [0] * (n + 1)
        for t, c in enumerate(acc):
            new[t] -= c
            new[t + 1] += c
        polys.append(new)

    if n_max >= start:
        logger.info(
            "Recurrence extended",
            extra={"extra_fields": {"from_n": start, "to_n": n_max, "seconds": round(time.perf_counter() - started_at, 3)}},
        )
    return [DensePolynomial(coeffs=tuple(c)) for c in polys]


def _fraction_vector_to_poly(acc: Sequence[Fraction], context: str) -> DensePolynomial:
    coeffs = []
    for t, value in enumerate(acc):
        if value.denominator != 1:
            raise IntegralityError(f"{context}: coefficient {t} = {value} is not an integer")
        coeffs.append(value.numerator)
    return DensePolynomial(coeffs=tuple(coeffs))


def hno_oracle(n: int, allow_expensive: bool = False) -> DensePolynomial:
    """
    p_n(b) = n! Σ_{λ⊢n} ∏_{h ∈ hooks(λ)} (1 - b/h²), with exact rationals.

    Each product is written as ∏(h² - b) / ∏h², so only one rational weight
    per partition is needed.
    """
    if n < 0:
        raise DomainError(f"n={n} must be nonnegative")
    _check_cap(n, settings.oracle_cap, allow_expensive)
    n_fact = factorial_table(n)[n]
    acc = [Fraction(0)] * (n + 1)
    for partition in enumerate_partitions(n):
        numerator_poly = [1]
        squares = 1
        for h in hook_multiset(partition).values:
            numerator_poly = poly_mul(numerator_poly, [h * h, -1])
            squares *= h * h
        weight = Fraction(n_fact, squares)
        for t, c in enumerate(numerator_poly):
            acc[t] += weight * c
    return _fraction_vector_to_poly(acc, f"hno_oracle({n})")


def multiset_expansion_oracle(n: int, allow_expensive: bool = False) -> DensePolynomial:
    """p_n(b) = Σ_{e⊢n} n!/(e_1! e_2! ...) ∏_j (1-b)(2-b)...(e_j-b)."""
    if n < 0:
        raise DomainError(f"n={n} must be nonnegative")
    _check_cap(n, settings.oracle_cap, allow_expensive)
    fact = factorial_table(n)
    acc = [0] * (n + 1)
    for partition in enumerate_partitions(n):
        denominator = 1
        poly = [1]
        for _, mult in partition.freqs:
            denominator *= fact[mult]
            for i in range(1, mult + 1):
                poly = poly_mul(poly, [i, -1])
        weight = _exact_div(fact[n], denominator, f"multiset weight for {partition.notation()}")
        for t, c in enumerate(poly):
            acc[t] += weight * c
    return DensePolynomial(coeffs=tuple(acc))


@lru_cache(maxsize=32)
def _coefficient_formula_row(n: int) -> Tuple[int, ...]:
    """All coefficients (-1)^t n! Σ_e e_t(1/M_e) for one n."""
    n_fact = factorial_table(n)[n]
    totals = [Fraction(0)] * (n + 1)
    for partition in enumerate_partitions(n):
        # e_t of the inverses, read off ∏_{s ∈ M_e} (1 + x/s)
        esf = [Fraction(1)]
        for s in freq_multiset(partition).values:
            esf.append(Fraction(0))
            inv = Fraction(1, s)
            for j in range(len(esf) - 1, 0, -1):
                esf[j] += esf[j - 1] * inv
        for t, value in enumerate(esf):
            totals[t] += value
    row = []
    for t, total in enumerate(totals):
        value = (-1) ** t * n_fact * total
        if value.denominator != 1:
            raise IntegralityError(f"coefficient_formula({n}, {t}) = {value} is not an integer")
        row.append(value.numerator)
    return tuple(row)


def coefficient_formula(n: int, t: int, allow_expensive: bool = False) -> int:
    """Coefficient of b^t in p_n(b) as (-1)^t n! Σ_{e⊢n} Σ_{S⊆M_e, |S|=t} 1/(s_1···s_t)."""
    if n < 0:
        raise DomainError(f"n={n} must be nonnegative")
    if not 0 <= t <= n:
        raise DomainError(f"t={t} outside [0, {n}]")
    _check_cap(n, settings.coefficient_formula_cap, allow_expensive)
    return _coefficient_formula_row(n)[t]


def invariant_violation(n: int, poly: DensePolynomial) -> Optional[str]:
    """Name of the first p_n invariant the polynomial breaks, or None."""
    coeffs = poly.coeffs
    if len(coeffs) != n + 1:
        return f"length {len(coeffs)} ≠ n+1"
    if coeffs[n] != (-1) ** n:
        return "leading coefficient ≠ (-1)^n"
    if coeffs[0] != factorial_table(n)[n] * partition_count(n):
        return "constant term ≠ n!·p(n)"
    if n >= 1 and sum(coeffs) != 0:
        return "p_n(1) ≠ 0"
    return None


def find_oracle_divergence(max_n: int, allow_expensive: bool = False) -> Optional[Tuple[int, int, Dict[str, int]]]:
    """
    Compare the three engines for 0 ≤ n ≤ max_n.

    Returns None on full agreement, otherwise (n, t, {engine: coefficient})
    for the first differing coefficient.
    """
    _check_cap(max_n, settings.oracle_cap, allow_expensive, what="max_n")
    recurrence = compute_recurrence(max_n)
    for n in range(max_n + 1):
        results = {
            "recurrence": recurrence[n],
            "hno": hno_oracle(n, allow_expensive=allow_expensive),
            "multiset": multiset_expansion_oracle(n, allow_expensive=allow_expensive),
        }
        width = max(len(p.coeffs) for p in results.values())
        for t in range(width):
            values = {name: poly.coefficient(t) for name, poly in results.items()}
            if len(set(values.values())) > 1:
                logger.warning("Oracle divergence", extra={"extra_fields": {"n": n, "t": t, **values}})
                return n, t, values
    return None

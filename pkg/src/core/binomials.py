"""
Binomial coefficients modulo a prime and the two binomial-sum lemmas.

Lucas' theorem does the digit bookkeeping; the brute-force side of the
sum lemma multiplies out ∏(1 + iq)^k exactly.
"""

import itertools
import logging
from functools import lru_cache
from math import comb
from typing import List, Sequence, Tuple

from sympy import isprime

from config.settings import settings
from src.core.errors import CapExceededError, DomainError, NonPrimeModulusError

logger = logging.getLogger(__name__)


@lru_cache(maxsize=256)
def _is_prime(p: int) -> bool:
    return bool(isprime(p))


def require_prime(p: int) -> int:
    """Return p, or raise NonPrimeModulusError."""
    if not isinstance(p, int) or p < 2 or not _is_prime(p):
        raise NonPrimeModulusError(p)
    return p


def base_digits(x: int, p: int) -> List[int]:
    """Base-p digits of x, least significant first (empty for 0)."""
    digits = []
    while x:
        x, d = divmod(x, p)
        digits.append(d)
    return digits


def binom_mod(k: int, m: int, p: int) -> int:
    """C(k, m) mod p as the product of digitwise binomials (Lucas)."""
    require_prime(p)
    if m < 0 or k < 0 or m > k:
        return 0
    result = 1
    while m:
        k, k_digit = divmod(k, p)
        m, m_digit = divmod(m, p)
        if m_digit > k_digit:
            return 0
        result = result * comb(k_digit, m_digit) % p
    return result


def digit_domination(m: int, k: int, p: int) -> bool:
    """True iff every base-p digit of m is at most the matching digit of k."""
    require_prime(p)
    if m < 0 or k < 0:
        return False
    k_digits = base_digits(k, p)
    m_digits = base_digits(m, p)
    if len(m_digits) > len(k_digits):
        return False
    return all(md <= kd for md, kd in zip(m_digits, k_digits))


def pascal_entry(k: int, m: int) -> int:
    """2·(-1)^m·C(k, m) mod 5, the predicted triangle entry."""
    if k < 0 or not 0 <= m <= k:
        raise DomainError(f"need 0 <= m <= k, got k={k}, m={m}")
    sign = -1 if m % 2 else 1
    return 2 * sign * binom_mod(k, m, 5) % 5


def lemma21_closed(p: int, k: int, total: int) -> int:
    """
    Closed form of Σ_{r_1+...+r_{p-1}=total} ∏ C(k, r_i) i^{r_i} mod p:
    (-1)^s C(k, s) when total = (p-1)s, else 0.
    """
    require_prime(p)
    if total < 0 or k < 0:
        return 0
    s, c = divmod(total, p - 1)
    if c:
        return 0
    sign = -1 if s % 2 else 1
    return sign * binom_mod(k, s, p) % p


def _check_lemma21_caps(p: int, k: int, allow_expensive: bool) -> None:
    if allow_expensive:
        return
    if p > settings.lemma21_max_p:
        raise CapExceededError("p", p, settings.lemma21_max_p)
    if k > settings.lemma21_max_k:
        raise CapExceededError("k", k, settings.lemma21_max_k)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """Product of two integer coefficient lists, ascending degree."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=64)
def _lemma21_product(p: int, k: int) -> Tuple[int, ...]:
    """Exact integer coefficients of ∏_{i=1}^{p-1} (1 + i q)^k."""
    product = [1]
    for i in range(1, p):
        for _ in range(k):
            product = poly_mul(product, [1, i])
    return tuple(product)


def _literal_composition_sum(p: int, k: int, total: int) -> int:
    value = 0
    for rs in itertools.product(range(k + 1), repeat=p - 1):
        if sum(rs) != total:
            continue
        term = 1
        for i, r in enumerate(rs, start=1):
            term *= comb(k, r) * i**r
        value += term
    return value % p


def lemma21_bruteforce(p: int, k: int, total: int, allow_expensive: bool = False, literal: bool = False) -> int:
    """
    Left-hand side of the sum lemma, computed without the lemma.

    Default mode reads the coefficient of q^total from the exact product
    ∏(1 + iq)^k; `literal=True` sums over the compositions themselves
    (k ≤ literal_composition_max_k unless allow_expensive).
    """
    require_prime(p)
    if k < 0:
        raise DomainError(f"k={k} must be nonnegative")
    _check_lemma21_caps(p, k, allow_expensive)
    if total < 0:
        return 0
    if literal:
        if not allow_expensive and k > settings.literal_composition_max_k:
            raise CapExceededError("k", k, settings.literal_composition_max_k)
        return _literal_composition_sum(p, k, total)
    product = _lemma21_product(p, k)
    if total >= len(product):
        return 0
    return product[total] % p


def lemma34_check(p: int, j: int, s: int) -> Tuple[int, int]:
    """
    Both sides of (-1)^s C(pj+p-2, s) ≡ (h+1)(-1)^g C(j, g) mod p with s = gp + h.

    The left side uses the exact big-integer binomial; returns (lhs, rhs).
    """
    require_prime(p)
    if j < 0:
        raise DomainError(f"j={j} must be nonnegative")
    top = p * j + p - 2
    if not 0 <= s <= top:
        raise DomainError(f"s={s} outside [0, {top}]")
    g, h = divmod(s, p)
    lhs = (-1) ** s * comb(top, s) % p
    rhs = (h + 1) * (-1) ** g * comb(j, g) % p
    return lhs, rhs

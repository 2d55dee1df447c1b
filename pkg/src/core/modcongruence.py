"""
Reduction of p_n modulo a prime and the mod 5 structure of p_{5k+4}:
residue censuses, the rotation / zero-prefix clauses, the Pascal triangle
of every fourth coefficient and its self-similarity.
"""

import logging
from typing import List, Optional, Sequence, Tuple

from src.core.binomials import base_digits, binom_mod, pascal_entry, require_prime
from src.core.errors import DomainError
from src.models.congruence import (
    CensusReport,
    ResidueVector,
    SelfSimilarityReport,
    Theorem11Verdict,
    TriangleRow,
)
from src.models.polynomial import DensePolynomial

logger = logging.getLogger(__name__)

ROTATION_BASE: Tuple[int, int, int, int] = (2, 4, 3, 1)
ROTATIONS = frozenset(ROTATION_BASE[i:] + ROTATION_BASE[:i] for i in range(4))


def reduce_mod(poly: DensePolynomial, p: int) -> ResidueVector:
    """Coefficients of poly reduced into [0, p)."""
    require_prime(p)
    residues = tuple(c % p for c in poly.coeffs)
    return ResidueVector(p=p, n=len(residues) - 1, residues=residues)


def _split_progression(n: int, p: int) -> Optional[int]:
    """k with n = pk + (p-1), or None when n is off the progression."""
    k, r = divmod(n - (p - 1), p)
    if n < p - 1 or r:
        return None
    return k


def _zero_prefix(residues: Sequence[int], length: int) -> bool:
    return all(r == 0 for r in residues[:length])


def _rotation_groups_ok(residues: Sequence[int], k: int) -> bool:
    for s in range(k + 1):
        start = k + 4 * s + 1
        group = tuple(residues[start:start + 4])
        if group != (0, 0, 0, 0) and group not in ROTATIONS:
            return False
    return True


def residue_census(v: ResidueVector) -> CensusReport:
    """
    Population of each class among the coefficients.

    `equidistributed` compares classes 1..p-1 only. When n = pk + (p-1) the
    report also carries `zero_prefix` (degrees below k vanish, or up to k
    when p = 5) and, for p = 5, the rotation clause.
    """
    counts = [0] * v.p
    for r in v.residues:
        counts[r] += 1
    equidistributed = len(set(counts[1:])) <= 1

    zero_prefix = rotation = None
    k = _split_progression(v.n, v.p)
    if k is not None:
        zero_prefix = _zero_prefix(v.residues, k + 1 if v.p == 5 else k)
        if v.p == 5:
            rotation = _rotation_groups_ok(v.residues, k)
    return CensusReport(
        p=v.p,
        n=v.n,
        counts=tuple(counts),
        equidistributed=equidistributed,
        zero_prefix=zero_prefix,
        rotation=rotation,
        source=v.source,
    )


def _require_mod5_row(n: int, v: ResidueVector) -> int:
    if n % 5 != 4:
        raise DomainError(f"n={n} is not congruent to 4 mod 5")
    if v.p != 5:
        raise DomainError(f"expected a mod 5 vector, got modulus {v.p}")
    if v.n != n:
        raise DomainError(f"vector belongs to n={v.n}, not n={n}")
    return (n - 4) // 5


def theorem11_check(n: int, v: ResidueVector) -> Theorem11Verdict:
    """
    The three clauses for n = 5k+4: equal nonzero populations, every 4-group
    at degrees k+4s+1..k+4s+4 zero or a rotation of (2,4,3,1), and all
    coefficients of degree ≤ k zero.
    """
    k = _require_mod5_row(n, v)
    verdict = Theorem11Verdict(
        n=n,
        equidistributed=residue_census(v).equidistributed,
        rotation=_rotation_groups_ok(v.residues, k),
        zero_prefix=_zero_prefix(v.residues, k + 1),
    )
    if not verdict.passed:
        logger.warning("Mod 5 clause failed", extra={"extra_fields": verdict.model_dump()})
    return verdict


def triangle_row(v: ResidueVector, n: int) -> TriangleRow:
    """Entries v[k+1+4m] for m = 0..k."""
    k = _require_mod5_row(n, v)
    return TriangleRow(n=n, k=k, entries=tuple(v.residues[k + 1 + 4 * m] for m in range(k + 1)))


def _digit_binomial_product(k: int, m: int, p: int) -> int:
    k_digits = base_digits(k, p)
    m_digits = base_digits(m, p)
    if len(m_digits) > len(k_digits):
        return 0
    product = 1
    for i, kd in enumerate(k_digits):
        md = m_digits[i] if i < len(m_digits) else 0
        product = product * binom_mod(kd, md, p) % p
    return product


def self_similarity_check(levels: int, polys: Sequence[DensePolynomial]) -> SelfSimilarityReport:
    """
    Check the triangle built from exact rows against three descriptions:

    - entry(k, m) = 2(-1)^m C(k, m) mod 5;
    - entry(k, m)·2⁻¹·(-1)^m = ∏ C(k_i, m_i) over base-5 digits;
    - for each level ℓ ≤ levels, writing k = 5^ℓ K + k₀ and m = 5^ℓ M + m₀,
      entry(k, m) = 3·entry(K, M)·entry(k₀, m₀) mod 5 (apex digit times the
      fundamental triangle; 3 is the inverse of 2).
    """
    if levels < 1:
        raise DomainError(f"levels={levels} must be at least 1")
    max_k = (len(polys) - 1 - 4) // 5
    if max_k < 0:
        raise DomainError("need exact polynomials up to at least n=4")

    rows: List[Tuple[int, ...]] = []
    for k in range(max_k + 1):
        n = 5 * k + 4
        rows.append(triangle_row(reduce_mod(polys[n], 5), n).entries)

    pascal_bad: List[Tuple[int, int]] = []
    lucas_bad: List[Tuple[int, int]] = []
    apex_bad: List[Tuple[int, int, int]] = []
    for k, row in enumerate(rows):
        for m, entry in enumerate(row):
            if entry != pascal_entry(k, m):
                pascal_bad.append((k, m))
            sign = -1 if m % 2 else 1
            if entry * 3 * sign % 5 != _digit_binomial_product(k, m, 5):
                lucas_bad.append((k, m))
            for level in range(1, levels + 1):
                block = 5**level
                K, k0 = divmod(k, block)
                M, m0 = divmod(m, block)
                if M > K or m0 > k0:
                    expected = 0
                else:
                    expected = 3 * rows[K][M] * rows[k0][m0] % 5
                if entry != expected:
                    apex_bad.append((level, k, m))

    report = SelfSimilarityReport(
        max_k=max_k,
        levels=levels,
        pascal_mismatches=pascal_bad,
        lucas_mismatches=lucas_bad,
        apex_mismatches=apex_bad,
    )
    logger.info("Self-similarity checked", extra={"extra_fields": {"max_k": max_k, "passed": report.passed}})
    return report

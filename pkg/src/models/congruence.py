"""
Data models for residue vectors, grouping tables and census reports.
"""

from typing import List, Optional, Tuple

from pydantic import Field, model_validator

from src.models.base import FrozenModel


class ResidueVector(FrozenModel):
    """Coefficients of p_n reduced into [0, p), ascending degree."""

    p: int = Field(ge=2)
    n: int = Field(ge=0)
    residues: Tuple[int, ...]
    source: str = "exact"

    @model_validator(mode="after")
    def _check_entries(self) -> "ResidueVector":
        if len(self.residues) != self.n + 1:
            raise ValueError(f"length {len(self.residues)} != n+1 = {self.n + 1}")
        p = self.p
        for r in self.residues:
            if not 0 <= r < p:
                raise ValueError(f"residue {r} outside [0, {p})")
        return self

    def __getitem__(self, t: int) -> int:
        return self.residues[t]

    def __len__(self) -> int:
        return len(self.residues)


class GroupingTable(FrozenModel):
    """The weights (a_0, ..., a_r) for prime p and residue r (r = p-1 by default)."""

    p: int = Field(ge=2)
    r: int = Field(ge=0)
    a: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_entries(self) -> "GroupingTable":
        if self.r >= self.p:
            raise ValueError(f"residue r={self.r} must be below p={self.p}")
        if len(self.a) != self.r + 1:
            raise ValueError(f"expected {self.r + 1} weights, got {len(self.a)}")
        if any(not 0 <= x < self.p for x in self.a):
            raise ValueError("weights must lie in [0, p)")
        return self


class TriangleRow(FrozenModel):
    """Every fourth coefficient of p_{5k+4} mod 5, starting at degree k+1."""

    n: int
    k: int
    entries: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_shape(self) -> "TriangleRow":
        if self.n != 5 * self.k + 4:
            raise ValueError(f"n={self.n} is not 5k+4 for k={self.k}")
        if len(self.entries) != self.k + 1:
            raise ValueError(f"row length {len(self.entries)} != k+1 = {self.k + 1}")
        return self


class Theorem11Verdict(FrozenModel):
    """The three clauses of the mod 5 theorem for one n = 5k+4."""

    n: int
    equidistributed: bool
    rotation: bool
    zero_prefix: bool

    @property
    def passed(self) -> bool:
        return self.equidistributed and self.rotation and self.zero_prefix


class CensusReport(FrozenModel):
    """Population of each residue class among the n+1 coefficients of p_n mod p."""

    p: int
    n: int
    counts: Tuple[int, ...]
    equidistributed: bool
    zero_prefix: Optional[bool] = None
    rotation: Optional[bool] = None
    source: str = "exact"

    @model_validator(mode="after")
    def _check_total(self) -> "CensusReport":
        if len(self.counts) != self.p:
            raise ValueError("one count per residue class expected")
        if sum(self.counts) != self.n + 1:
            raise ValueError(f"counts sum to {sum(self.counts)}, expected {self.n + 1}")
        return self

    @property
    def nonzero_counts(self) -> Tuple[int, ...]:
        return self.counts[1:]


class Theorem33Report(CensusReport):
    """Census at n = p^2-p-1 plus the exceptional-case follow-up."""

    exceptional: bool = False
    exceptional_census: Optional[CensusReport] = None

    @property
    def verdict(self) -> bool:
        if self.equidistributed:
            return True
        return bool(self.exceptional and self.exceptional_census and self.exceptional_census.equidistributed)


class DivisibilityReport(FrozenModel):
    """Nonzero-class populations of p_n mod p checked against (p-1)^e."""

    p: int
    q: int
    n: int
    counts: Tuple[int, ...]
    divisor: int
    exceptional: bool
    divisible: bool
    source: str = "exact"


class OverlapReport(FrozenModel):
    """Boundary terms where a_0 and a_{p-1} contributions overlap."""

    p: int
    j: int
    k: int
    mismatches: List[Tuple[int, int, int]] = Field(default_factory=list)
    values: Tuple[int, ...] = ()
    nondegenerate: bool
    equidistributed: bool

    @property
    def passed(self) -> bool:
        return not self.mismatches


class SelfSimilarityReport(FrozenModel):
    """Pascal, Lucas and apex-times-fundamental checks on the triangle rows."""

    max_k: int
    levels: int
    pascal_mismatches: List[Tuple[int, int]] = Field(default_factory=list)
    lucas_mismatches: List[Tuple[int, int]] = Field(default_factory=list)
    apex_mismatches: List[Tuple[int, int, int]] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not (self.pascal_mismatches or self.lucas_mismatches or self.apex_mismatches)

"""
Partition data models.
Partitions are stored in frequency notation; multisets as sorted tuples.
"""

from typing import Dict, Iterable, List, Tuple

from pydantic import Field, model_validator

from src.models.base import FrozenModel


class Partition(FrozenModel):
    """
    A partition of n in frequency notation 1^{e_1} 2^{e_2} ...

    `freqs` holds (part, multiplicity) pairs in increasing part order; parts
    with multiplicity 0 are simply absent.
    """

    n: int = Field(ge=0)
    freqs: Tuple[Tuple[int, int], ...] = ()

    @model_validator(mode="after")
    def _check_freqs(self) -> "Partition":
        parts = [part for part, _ in self.freqs]
        if parts != sorted(set(parts)):
            raise ValueError("parts must be distinct and increasing")
        for part, mult in self.freqs:
            if part < 1 or mult < 1:
                raise ValueError(f"invalid frequency pair ({part}, {mult})")
        total = sum(part * mult for part, mult in self.freqs)
        if total != self.n:
            raise ValueError(f"parts sum to {total}, expected n={self.n}")
        return self

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build a partition from a list of parts in any order."""
        counts: Dict[int, int] = {}
        total = 0
        for part in parts:
            counts[part] = counts.get(part, 0) + 1
            total += part
        return cls(n=total, freqs=tuple(sorted(counts.items())))

    @property
    def parts(self) -> List[int]:
        """Descending part list (λ_1 ≥ λ_2 ≥ ...)."""
        out: List[int] = []
        for part, mult in reversed(self.freqs):
            out.extend([part] * mult)
        return out

    def multiplicity(self, part: int) -> int:
        """e_part, zero when the part is absent."""
        return dict(self.freqs).get(part, 0)

    @property
    def length(self) -> int:
        return sum(mult for _, mult in self.freqs)

    def notation(self) -> str:
        """Frequency notation such as 1^2·2^1; empty partition renders as ∅."""
        if not self.freqs:
            return "∅"
        return "·".join(f"{part}^{mult}" for part, mult in self.freqs)


class HookMultiset(FrozenModel):
    """Hooklengths of a partition, sorted ascending."""

    n: int = Field(ge=0)
    values: Tuple[int, ...] = ()

    @model_validator(mode="after")
    def _check_size(self) -> "HookMultiset":
        if len(self.values) != self.n:
            raise ValueError(f"{len(self.values)} hooklengths for a partition of {self.n}")
        if list(self.values) != sorted(self.values) or any(v < 1 for v in self.values):
            raise ValueError("hooklengths must be positive and sorted")
        return self


class FreqMultiset(FrozenModel):
    """The multiset M_e = ⋃_j {1, ..., e_j}, sorted ascending."""

    values: Tuple[int, ...] = ()

    @model_validator(mode="after")
    def _check_sorted(self) -> "FreqMultiset":
        if list(self.values) != sorted(self.values) or any(v < 1 for v in self.values):
            raise ValueError("multiset entries must be positive and sorted")
        return self

    def __len__(self) -> int:
        return len(self.values)

"""
Polynomial data models.
Coefficients are exact Python integers in ascending degree.
"""

from typing import Dict, List, Optional, Tuple

from pydantic import Field, model_validator

from src.models.base import FrozenModel


class DensePolynomial(FrozenModel):
    """Integer polynomial in b; coeffs[t] is the coefficient of b^t."""

    coeffs: Tuple[int, ...] = Field(min_length=1)

    @property
    def degree(self) -> int:
        """Index of the trailing nonzero entry (-1 for the zero polynomial)."""
        for t in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[t]:
                return t
        return -1

    def coefficient(self, t: int) -> int:
        return self.coeffs[t] if 0 <= t < len(self.coeffs) else 0

    def evaluate(self, b: int) -> int:
        """Horner evaluation at an integer point."""
        value = 0
        for c in reversed(self.coeffs):
            value = value * b + c
        return value

    @classmethod
    def from_list(cls, coeffs: List[int]) -> "DensePolynomial":
        return cls(coeffs=tuple(coeffs))


class PolyCache(FrozenModel):
    """Records p_n keyed by n, plus the file they came from."""

    records: Dict[int, DensePolynomial] = Field(default_factory=dict)
    source: Optional[str] = None

    @model_validator(mode="after")
    def _check_keys(self) -> "PolyCache":
        for n in self.records:
            if n < 0:
                raise ValueError(f"negative record index {n}")
        return self

    def get(self, n: int) -> Optional[DensePolynomial]:
        return self.records.get(n)

    def contiguous_prefix(self) -> List[DensePolynomial]:
        """p_0, p_1, ... up to the first missing index."""
        out: List[DensePolynomial] = []
        while len(out) in self.records:
            out.append(self.records[len(out)])
        return out

    def __len__(self) -> int:
        return len(self.records)

"""
Exception hierarchy for etapoly.
Every error raised for bad input or bad files derives from EtaPolyError.
"""

from typing import Optional


class EtaPolyError(Exception):
    """Base class for all etapoly errors."""


class DomainError(EtaPolyError, ValueError):
    """An argument lies outside the domain of the operation."""


class NonPrimeModulusError(DomainError):
    """A modulus that must be prime is not."""

    def __init__(self, modulus: int):
        self.modulus = modulus
        super().__init__(f"modulus {modulus} is not prime")


class CapExceededError(EtaPolyError):
    """A computational cap was hit without an explicit override."""

    def __init__(self, what: str, value: int, cap: int):
        self.what = what
        self.value = value
        self.cap = cap
        super().__init__(f"{what}={value} exceeds cap {cap}; pass allow_expensive / --allow-expensive to override")


class CacheFormatError(EtaPolyError):
    """The cache file does not follow the record format."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        where = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{where}{message}")


class CacheInvariantError(EtaPolyError):
    """A cached record fails one of the p_n invariants."""

    def __init__(self, n: int, invariant: str):
        self.n = n
        self.invariant = invariant
        super().__init__(f"record n={n} violates invariant: {invariant}")


class IntegralityError(EtaPolyError, AssertionError):
    """An exact division left a remainder (implementation bug)."""

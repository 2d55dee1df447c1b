"""
Integer partitions: enumeration, hooklengths, frequency multisets and the
contributing tails used by the mod-p arguments.
"""

import logging
from functools import lru_cache
from typing import Iterator, List, Tuple

from src.core.binomials import require_prime
from src.core.errors import DomainError
from src.models.partition import FreqMultiset, HookMultiset, Partition

logger = logging.getLogger(__name__)


def _descending(n: int, max_part: int) -> Iterator[Tuple[int, ...]]:
    """Descending part tuples of n with every part ≤ max_part, reverse-lex order."""
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _descending(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> List[Partition]:
    """
    Every partition of n exactly once, in reverse-lexicographic order of the
    descending part list: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
    """
    if n < 0:
        raise DomainError(f"cannot partition negative n={n}")
    return list(_enumerate_cached(n))


@lru_cache(maxsize=64)
def _enumerate_cached(n: int) -> Tuple[Partition, ...]:
    return tuple(Partition.from_parts(parts) for parts in _descending(n, n))


def conjugate(partition: Partition) -> Partition:
    """Transpose of the Young diagram."""
    parts = partition.parts
    if not parts:
        return partition
    return Partition.from_parts(sum(1 for v in parts if v >= i) for i in range(1, parts[0] + 1))


def hook_multiset(partition: Partition) -> HookMultiset:
    """h_ij = λ_i - j + #{a ≥ i : λ_a ≥ j} over every cell of the diagram."""
    parts = partition.parts
    columns = conjugate(partition).parts
    hooks = []
    for i, row in enumerate(parts, start=1):
        for j in range(1, row + 1):
            # rows a ≥ i with λ_a ≥ j number λ'_j - i + 1
            hooks.append(row - j + columns[j - 1] - i + 1)
    return HookMultiset(n=partition.n, values=tuple(sorted(hooks)))


def top_strip(partition: Partition) -> Tuple[int, ...]:
    """End-of-row hooklengths h_{i, λ_i}, sorted."""
    parts = partition.parts
    return tuple(sorted(sum(1 for a in range(i, len(parts)) if parts[a] >= parts[i]) for i in range(len(parts))))


def freq_multiset(partition: Partition) -> FreqMultiset:
    """M_e: the disjoint union of {1, ..., e_j} over the parts j."""
    values: List[int] = []
    for _, mult in partition.freqs:
        values.extend(range(1, mult + 1))
    return FreqMultiset(values=tuple(sorted(values)))


def contributing_partitions(p: int, r: int) -> List[Tuple[Partition, FreqMultiset]]:
    """
    Tails of the partitions of n = pk + r that survive reduction mod p.

    The full contributing partition is the tail with pk extra 1s; only the
    tail matters for the residue, so the partitions of r are returned, each
    paired with its frequency multiset.
    """
    require_prime(p)
    if not 0 <= r < p:
        raise DomainError(f"residue r={r} outside [0, {p})")
    return [(e, freq_multiset(e)) for e in enumerate_partitions(r)]


@lru_cache(maxsize=8)
def partition_counts(n_max: int) -> Tuple[int, ...]:
    """p(0), ..., p(n_max) by Euler's pentagonal recurrence."""
    if n_max < 0:
        raise DomainError(f"n_max={n_max} must be nonnegative")
    counts = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        total = 0
        g = 1
        while True:
            sign = 1 if g % 2 else -1
            first = g * (3 * g - 1) // 2
            if first > n:
                break
            total += sign * counts[n - first]
            second = g * (3 * g + 1) // 2
            if second <= n:
                total += sign * counts[n - second]
            g += 1
        counts[n] = total
    return tuple(counts)


def partition_count(n: int) -> int:
    """p(n), the number of partitions of n."""
    if n < 0:
        return 0
    return partition_counts(n)[n]


def is_generalized_pentagonal(n: int) -> bool:
    """True when n = g(3g-1)/2 for some integer g (positive, zero or negative)."""
    return pentagonal_sign(n) != 0


def pentagonal_sign(n: int) -> int:
    """Coefficient of q^n in ∏(1-q^k): (-1)^g at generalized pentagonal n, else 0."""
    g = 0
    while g * (3 * g - 1) // 2 <= n:
        if n in (g * (3 * g - 1) // 2, g * (3 * g + 1) // 2):
            return -1 if g % 2 else 1
        g += 1
    return 0

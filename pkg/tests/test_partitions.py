import pytest
from math import factorial

from src.core.errors import DomainError, NonPrimeModulusError
from src.core.partitions import (
    conjugate,
    contributing_partitions,
    enumerate_partitions,
    freq_multiset,
    hook_multiset,
    is_generalized_pentagonal,
    partition_count,
    partition_counts,
    pentagonal_sign,
    top_strip,
)
from src.models.partition import Partition


@pytest.mark.unit
class TestEnumeration:
    """Test partition enumeration."""

    def test_reverse_lexicographic_order(self):
        """Partitions of 4 come out largest part first."""
        parts = [p.parts for p in enumerate_partitions(4)]
        assert parts == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]

    def test_empty_partition(self):
        partitions = enumerate_partitions(0)
        assert len(partitions) == 1
        assert partitions[0].parts == []
        assert partitions[0].notation() == "∅"

    @pytest.mark.parametrize("n", range(0, 21))
    def test_count_matches_pentagonal_recurrence(self, n):
        assert len(enumerate_partitions(n)) == partition_count(n)

    def test_no_duplicates(self):
        partitions = enumerate_partitions(12)
        assert len({p.freqs for p in partitions}) == len(partitions)

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            enumerate_partitions(-1)


@pytest.mark.unit
class TestPartitionModel:
    """Test the frequency-notation model."""

    def test_from_parts_collects_frequencies(self):
        partition = Partition.from_parts([2, 1, 1])
        assert partition.n == 4
        assert partition.freqs == ((1, 2), (2, 1))
        assert partition.multiplicity(1) == 2
        assert partition.multiplicity(3) == 0
        assert partition.length == 3
        assert partition.notation() == "1^2·2^1"

    def test_sum_mismatch_rejected(self):
        with pytest.raises(ValueError):
            Partition(n=5, freqs=((1, 2),))

    def test_unsorted_parts_rejected(self):
        with pytest.raises(ValueError):
            Partition(n=5, freqs=((3, 1), (2, 1)))


@pytest.mark.unit
class TestHooks:
    """Test hooklengths, conjugation and the top strip."""

    def test_hooks_of_three_one(self):
        assert hook_multiset(Partition.from_parts([3, 1])).values == (1, 1, 2, 4)

    def test_hooks_of_square(self):
        assert hook_multiset(Partition.from_parts([2, 2])).values == (1, 2, 2, 3)

    def test_conjugate(self):
        assert conjugate(Partition.from_parts([3, 1])).parts == [2, 1, 1]
        assert conjugate(Partition.from_parts([])).parts == []

    @pytest.mark.parametrize("n", range(1, 11))
    def test_conjugation_preserves_hooks(self, n):
        for partition in enumerate_partitions(n):
            assert hook_multiset(conjugate(partition)) == hook_multiset(partition)

    @pytest.mark.parametrize("n", range(0, 9))
    def test_squared_dimensions_sum_to_factorial(self, n):
        """Σ (n!/∏h)² = n!."""
        total = 0
        for partition in enumerate_partitions(n):
            product = 1
            for h in hook_multiset(partition).values:
                product *= h
            total += (factorial(n) // product) ** 2
        assert total == factorial(n)

    @pytest.mark.parametrize("n", range(0, 13))
    def test_top_strip_equals_frequency_multiset(self, n):
        for partition in enumerate_partitions(n):
            assert top_strip(partition) == freq_multiset(partition).values

    def test_freq_multiset(self):
        multiset = freq_multiset(Partition.from_parts([2, 1, 1]))
        assert multiset.values == (1, 1, 2)
        assert len(multiset) == 3


@pytest.mark.unit
class TestContributingPartitions:
    """Test the tails used by the mod-p predictor."""

    @pytest.mark.parametrize("p", [3, 5, 7, 11])
    def test_one_tail_per_partition_of_r(self, p):
        for r in range(p):
            assert len(contributing_partitions(p, r)) == partition_count(r)

    def test_tails_of_four(self):
        tails = contributing_partitions(5, 4)
        assert [multiset.values for _, multiset in tails] == [(1,), (1, 1), (1, 2), (1, 1, 2), (1, 2, 3, 4)]

    def test_residue_out_of_range(self):
        with pytest.raises(DomainError):
            contributing_partitions(5, 5)

    def test_non_prime_modulus(self):
        with pytest.raises(NonPrimeModulusError):
            contributing_partitions(4, 1)


@pytest.mark.unit
class TestPartitionCounts:
    """Test p(n) and the pentagonal numbers."""

    def test_known_values(self):
        counts = partition_counts(10)
        assert counts == (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42)
        assert partition_count(100) == 190569292
        assert partition_count(-3) == 0

    def test_pentagonal_signs(self):
        signs = {n: pentagonal_sign(n) for n in range(16)}
        assert {n for n, s in signs.items() if s} == {0, 1, 2, 5, 7, 12, 15}
        assert [signs[n] for n in (0, 1, 2, 5, 7, 12, 15)] == [1, -1, -1, 1, 1, -1, -1]

    def test_is_generalized_pentagonal(self):
        assert is_generalized_pentagonal(22)
        assert is_generalized_pentagonal(26)
        assert not is_generalized_pentagonal(3)

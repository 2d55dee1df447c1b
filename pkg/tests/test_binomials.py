import pytest
from math import comb

from src.core.binomials import (
    base_digits,
    binom_mod,
    digit_domination,
    lemma21_bruteforce,
    lemma21_closed,
    lemma34_check,
    pascal_entry,
    poly_mul,
    require_prime,
)
from src.core.errors import CapExceededError, DomainError, NonPrimeModulusError


@pytest.mark.unit
class TestLucas:
    """Test binomials mod p and digit domination."""

    def test_require_prime(self):
        assert require_prime(7) == 7
        for bad in (0, 1, 4, 9, 91):
            with pytest.raises(NonPrimeModulusError):
                require_prime(bad)

    def test_base_digits(self):
        assert base_digits(0, 5) == []
        assert base_digits(38, 5) == [3, 2, 1]

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_matches_exact_binomial(self, p):
        for k in range(40):
            for m in range(k + 1):
                assert binom_mod(k, m, p) == comb(k, m) % p

    def test_out_of_range_is_zero(self):
        assert binom_mod(3, 4, 5) == 0
        assert binom_mod(3, -1, 5) == 0

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_domination_iff_nonzero(self, p):
        for k in range(60):
            for m in range(k + 1):
                assert digit_domination(m, k, p) == (binom_mod(k, m, p) != 0)

    def test_domination_examples(self):
        assert digit_domination(1, 5, 2)
        assert not digit_domination(3, 5, 2)
        assert not digit_domination(25, 24, 5)


@pytest.mark.unit
class TestPolyMul:
    """Test the integer polynomial product."""

    def test_binomial_expansion(self):
        product = [1]
        for _ in range(4):
            product = poly_mul(product, [1, 3])
        assert product == [comb(4, i) * 3**i for i in range(5)]

    def test_zero_coefficients_skipped(self):
        assert poly_mul([0, 0, 2], [1, -1]) == [0, 0, 2, -2]


@pytest.mark.unit
class TestPascalEntry:
    """Test the predicted triangle entries."""

    def test_row_three(self):
        assert [pascal_entry(3, m) for m in range(4)] == [2, 4, 1, 3]

    def test_apex(self):
        assert pascal_entry(0, 0) == 2

    def test_row_five_has_blanks(self):
        assert [pascal_entry(5, m) for m in range(6)] == [2, 0, 0, 0, 0, 3]

    def test_out_of_range(self):
        with pytest.raises(DomainError):
            pascal_entry(3, 4)


@pytest.mark.unit
class TestBinomialSumLemma:
    """Test the composition sum against its closed form."""

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    @pytest.mark.parametrize("k", range(6))
    def test_closed_form(self, p, k):
        for total in range((p - 1) * k + 1):
            assert lemma21_bruteforce(p, k, total) == lemma21_closed(p, k, total)

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    @pytest.mark.parametrize("k", range(4))
    def test_literal_compositions(self, p, k):
        for total in range((p - 1) * k + 1):
            assert lemma21_bruteforce(p, k, total, literal=True) == lemma21_closed(p, k, total)

    def test_small_case_by_hand(self):
        """(1+q)(1+2q) = 1 + 3q + 2q²."""
        assert [lemma21_closed(3, 1, t) for t in range(3)] == [1, 0, 2]

    def test_totals_beyond_degree(self):
        assert lemma21_bruteforce(5, 2, 9) == 0
        assert lemma21_closed(5, 2, -4) == 0

    def test_caps(self):
        with pytest.raises(CapExceededError):
            lemma21_bruteforce(11, 1, 0)
        with pytest.raises(CapExceededError):
            lemma21_bruteforce(5, 7, 0)
        with pytest.raises(CapExceededError):
            lemma21_bruteforce(5, 4, 0, literal=True)

    def test_allow_expensive_lifts_cap(self):
        assert lemma21_bruteforce(11, 1, 10, allow_expensive=True) == lemma21_closed(11, 1, 10)


@pytest.mark.unit
class TestConvolutionLemma:
    """Test both sides of the binomial identity at k = pj + p - 2."""

    @pytest.mark.parametrize("p", [3, 5, 7, 11])
    @pytest.mark.parametrize("j", range(7))
    def test_sides_agree(self, p, j):
        for s in range(p * j + p - 1):
            lhs, rhs = lemma34_check(p, j, s)
            assert lhs == rhs

    def test_out_of_range(self):
        with pytest.raises(DomainError):
            lemma34_check(5, 1, 9)
        with pytest.raises(NonPrimeModulusError):
            lemma34_check(6, 1, 0)

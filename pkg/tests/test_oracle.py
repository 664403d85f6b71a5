import random
from fractions import Fraction

import pytest

from helpers import random_point
from negabase import (BranchBudgetError, DigitString, DomainError, FieldError,
                      PairDigit, count_representation_branches,
                      enumerate_prefixes, eval_beta2_pairs, eval_neg_beta,
                      extremal_prefix, greedy_neg_beta, interval_I,
                      lazy_neg_beta, rational_field, sample_unique_numbers)

B, C = PairDigit(1, 1), PairDigit(0, 0)


class TestEnumerate:
    def test_unique_point(self, phi):
        assert enumerate_prefixes(phi.element(-1), 4) == [(1, 0, 1, 0)]

    def test_minus_half_contains_both_extremes(self, phi):
        prefixes = enumerate_prefixes(phi.element(Fraction(-1, 2)), 6)
        assert (1, 1, 1, 0, 0, 0) in prefixes
        assert (1, 0, 0, 1, 1, 1) in prefixes

    def test_sorted_by_alternate_order(self, phi):
        from negabase import alt_compare

        prefixes = enumerate_prefixes(phi.element(Fraction(-1, 3)), 8)
        for u, v in zip(prefixes, prefixes[1:]):
            assert alt_compare(DigitString.finite(u), DigitString.finite(v)) == -1

    def test_bc_value_unique_for_mu(self, mu):
        x = eval_beta2_pairs(mu, DigitString((), (B, C)))
        assert count_representation_branches(x, 12) == 1

    def test_minus_half_branches(self, phi):
        assert count_representation_branches(phi.element(Fraction(-1, 2)), 12) >= 2

    def test_feasibility_certificate(self, phi):
        # each prefix must reproduce x exactly up to a representable remainder
        rng = random.Random(61)
        I = interval_I(phi)
        mb = -phi.beta()
        for _ in range(10):
            x = random_point(rng, I)
            for p in enumerate_prefixes(x, 6):
                word = DigitString.finite(p)
                rem = (x - eval_neg_beta(phi, word)) * mb ** len(p)
                assert I.contains(rem)

    def test_monotone_under_truncation(self, phi):
        rng = random.Random(67)
        I = interval_I(phi)
        for _ in range(8):
            x = random_point(rng, I)
            deep = enumerate_prefixes(x, 9)
            shallow = enumerate_prefixes(x, 8)
            assert sorted(set(p[:8] for p in deep)) == sorted(shallow)
            for p in deep:
                assert p[:8] in shallow

    def test_outside_interval(self, phi):
        with pytest.raises(DomainError):
            enumerate_prefixes(phi.element(10), 3)

    def test_budget(self, phi):
        with pytest.raises(BranchBudgetError):
            enumerate_prefixes(phi.element(Fraction(-1, 2)), 40, node_budget=50)


class TestExtremal:
    def test_matches_paper_values(self, phi):
        x = phi.element(Fraction(-1, 2))
        assert extremal_prefix(x, 12, "max") == (1, 1, 1, 0, 0, 0) * 2
        assert extremal_prefix(x, 12, "min") == (1, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 1)

    def test_max_dominates_min(self, phi):
        from negabase import alt_compare

        rng = random.Random(71)
        I = interval_I(phi)
        for _ in range(10):
            x = random_point(rng, I)
            hi = extremal_prefix(x, 9, "max")
            lo = extremal_prefix(x, 9, "min")
            assert alt_compare(DigitString.finite(lo), DigitString.finite(hi)) <= 0

    def test_agreement_with_algorithms(self, phi, mu, seven_quarters):
        rng = random.Random(73)
        for ctx in (phi, mu, seven_quarters):
            I = interval_I(ctx)
            for _ in range(12):
                x = random_point(rng, I, interior=False)
                assert extremal_prefix(x, 10, "max") == \
                    greedy_neg_beta(x, depth=10).word.preperiod
                assert extremal_prefix(x, 10, "min") == \
                    lazy_neg_beta(x, depth=10).word.preperiod

    def test_bad_which(self, phi):
        with pytest.raises(ValueError):
            extremal_prefix(phi.zero(), 3, "median")


class TestUniqueSampling:
    def test_pair_regime(self):
        ctx = rational_field(Fraction(14, 5))
        records = sample_unique_numbers(ctx, word_length=6, samples=6, depth=10)
        assert len(records) == 6
        for r in records:
            assert r.branch_count == 1 and r.unique_at_depth
            assert set(r.word.period) <= {0, 1, 2}

    def test_wide_alphabet_regime(self):
        ctx = rational_field(Fraction(7, 2))
        records = sample_unique_numbers(ctx, word_length=5, samples=6, depth=10)
        for r in records:
            assert r.branch_count == 1
            digits = set(r.word.preperiod) | set(r.word.period)
            assert digits <= {1, 2}

    def test_values_land_in_overlap(self):
        # unique values must lie where both attractors meet: (r-1, l+1)
        ctx = rational_field(Fraction(14, 5))
        I = interval_I(ctx)
        for r in sample_unique_numbers(ctx, word_length=4, samples=4, depth=8):
            assert (r.value - (I.hi - 1)).sign() > 0
            assert ((I.lo + 1) - r.value).sign() > 0

    def test_below_threshold_rejected(self):
        with pytest.raises(FieldError):
            sample_unique_numbers(rational_field(Fraction(3, 2)))

    def test_at_threshold_rejected(self):
        from negabase import field_from_poly

        ctx = field_from_poly((-2, -2, 1), Fraction(27, 10), Fraction(28, 10))
        with pytest.raises(FieldError):
            sample_unique_numbers(ctx)

    def test_deterministic(self):
        ctx = rational_field(Fraction(14, 5))
        a = sample_unique_numbers(ctx, word_length=4, samples=3, depth=8)
        b = sample_unique_numbers(ctx, word_length=4, samples=3, depth=8)
        assert [r.word for r in a] == [r.word for r in b]

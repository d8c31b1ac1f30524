"""Counter tests: golden values, sieve equivalence, and scalar/bulk agreement."""

import math

import numpy as np
import pytest

from barrett_primes.counter import (
    asymptotic_ratio,
    barrett_count,
    barrett_series,
    barrett_term,
    pi_modern,
    pnt_estimate,
    reduced_sine_argument,
    reduced_sine_arguments,
)
from barrett_primes.errors import DomainError
from barrett_primes.numtheory import factorial_mod
from barrett_primes.sieve import build_sieve

# Barr(n) for n = 5 .. 17: the formula's published miniature behaviour
GOLDEN = {
    5: 3,
    6: 4, 7: 4,
    8: 5, 9: 5, 10: 5, 11: 5,
    12: 6, 13: 6,
    14: 7, 15: 7, 16: 7, 17: 7,
}


class TestReducedArgument:
    @pytest.mark.parametrize("k,m", [(5, 4), (7, 6), (6, 0), (8, 0), (9, 0)])
    def test_hand_examples(self, k, m):
        assert reduced_sine_argument(k) == m

    @pytest.mark.parametrize("k", [4, 0, -3])
    def test_domain(self, k):
        with pytest.raises(DomainError):
            reduced_sine_argument(k)

    def test_bulk_equals_scalar(self):
        bulk = reduced_sine_arguments(5, 2_000)
        for k in range(5, 2_001):
            assert bulk[k - 5] == factorial_mod(k - 1, 2 * k), k

    def test_bulk_is_worker_count_invariant(self):
        serial = reduced_sine_arguments(5, 15_000, threads=1)
        parallel = reduced_sine_arguments(5, 15_000, threads=3)
        assert np.array_equal(serial, parallel)

    def test_bulk_domain(self):
        with pytest.raises(DomainError):
            reduced_sine_arguments(4, 10)
        with pytest.raises(DomainError):
            reduced_sine_arguments(10, 5)
        with pytest.raises(DomainError):
            reduced_sine_arguments(5, 10, threads=0)


class TestBarrettTerm:
    def test_prime_term(self):
        term = barrett_term(5)
        assert (term.m, term.value, term.classification) == (4, 1, "prime")

    def test_composite_term(self):
        term = barrett_term(8)
        assert (term.m, term.value, term.classification) == (0, 0, "composite")

    def test_larger_prime(self):
        term = barrett_term(13)
        assert term.value == 1
        assert term.m == 12

    def test_terms_match_sieve(self):
        oracle = build_sieve(10_000)
        m = reduced_sine_arguments(5, 10_000)
        for k in range(5, 10_001):
            assert (m[k - 5] == k - 1) == oracle.is_prime(k), k


class TestBarrettCount:
    def test_empty_sum_base(self):
        assert barrett_count(5) == 3

    def test_golden_table(self):
        assert {n: barrett_count(n) for n in GOLDEN} == GOLDEN

    def test_hundred(self):
        assert barrett_count(100) == 26

    def test_domain(self):
        for n in (4, 0, -1):
            with pytest.raises(DomainError):
                barrett_count(n)

    def test_equals_sieve_count_plus_unit(self):
        oracle = build_sieve(10_000)
        series = dict(barrett_series(10_000))
        for n in range(5, 10_001):
            assert series[n] == oracle.pi(n - 1) + 1, n

    def test_deltas_step_exactly_at_primes(self):
        oracle = build_sieve(2_000)
        values = [count for _, count in barrett_series(2_000)]
        for i, n in enumerate(range(6, 2_001)):
            delta = values[i + 1] - values[i]
            assert delta == (1 if oracle.is_prime(n - 1) else 0), n

    def test_scalar_and_bulk_paths_agree_across_cutoff(self):
        for n in (510, 511, 512, 513, 514, 600):
            expected = 3 + sum(
                1 for k in range(5, n) if factorial_mod(k - 1, 2 * k) == k - 1
            )
            assert barrett_count(n) == expected, n


class TestBarrettSeries:
    def test_first_entries(self):
        assert list(barrett_series(7)) == [(5, 3), (6, 4), (7, 4)]

    def test_entry_at_twelve(self):
        assert dict(barrett_series(12))[12] == 6

    @pytest.mark.parametrize("n_max", [10, 100, 1000])
    def test_final_entry_equals_count(self, n_max):
        entries = list(barrett_series(n_max))
        assert entries[-1] == (n_max, barrett_count(n_max))
        assert len(entries) == n_max - 4

    def test_deltas_are_zero_or_one(self):
        values = [count for _, count in barrett_series(500)]
        assert set(np.diff(values)) <= {0, 1}

    def test_domain(self):
        with pytest.raises(DomainError):
            list(barrett_series(4))


class TestPiModern:
    @pytest.mark.parametrize("n,expected", [(10, 4), (13, 6), (100, 25)])
    def test_examples(self, n, expected):
        assert pi_modern(n) == expected

    def test_domain(self):
        with pytest.raises(DomainError):
            pi_modern(3)

    def test_matches_oracle(self):
        oracle = build_sieve(1_000)
        for n in range(4, 1_001):
            assert pi_modern(n) == oracle.pi(n), n


class TestPntEstimate:
    def test_derived_values(self):
        assert pnt_estimate(10**6) == pytest.approx(72382.41, abs=0.01)
        assert pnt_estimate(10**4) == pytest.approx(1085.74, abs=0.01)

    def test_near_e(self):
        assert pnt_estimate(3) == pytest.approx(3 / math.log(3), abs=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            pnt_estimate(1)


class TestAsymptoticRatio:
    def test_thousand(self):
        row = asymptotic_ratio(1_000)
        assert row.barr == 169  # pi(999) + 1
        assert row.pi_oracle == 168
        assert row.barr == row.pi_oracle + 1
        assert row.pnt == pytest.approx(1000 / math.log(1000), abs=1e-9)
        assert row.ratio == pytest.approx(169 * math.log(1000) / 1000, abs=1e-12)

    def test_accepts_prebuilt_oracle(self):
        oracle = build_sieve(2_000)
        row = asymptotic_ratio(1_500, oracle=oracle)
        assert row.pi_oracle == oracle.pi(1_499)

    def test_ratio_stays_above_one_at_desk_scale(self):
        # one series sweep; asymptotic_ratio itself is exercised on spot values
        oracle = build_sieve(10_000)
        for n, count in barrett_series(10_000):
            if n >= 10:
                assert count * math.log(n) / n > 1, n
        for n in (10, 100, 1_000, 10_000):
            assert asymptotic_ratio(n, oracle=oracle).ratio > 1, n

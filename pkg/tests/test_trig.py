"""Float path tests: the reduced route must track the exact terms, the naive route must break."""

import numpy as np
import pytest

from barrett_primes.counter import reduced_sine_arguments
from barrett_primes.errors import DomainError
from barrett_primes.trig import (
    NAIVE_DIVERGENCE_THRESHOLD,
    NAIVE_K_MAX,
    REDUCED_TOLERANCE,
    compare_methods,
    term_naive_float,
    term_reduced_trig,
)


class TestReducedTrig:
    @pytest.mark.parametrize("k,expected", [(5, 1.0), (6, 0.0), (9, 0.0)])
    def test_hand_examples(self, k, expected):
        assert term_reduced_trig(k) == pytest.approx(expected, abs=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            term_reduced_trig(4)

    def test_tracks_exact_terms(self):
        m = reduced_sine_arguments(5, 5_000)
        ks = np.arange(5, 5_001)
        exact = (m == ks - 1).astype(float)
        reduced = np.sin(m * np.pi / ks) / np.sin(np.pi / ks)
        assert float(np.abs(reduced - exact).max()) < REDUCED_TOLERANCE

    def test_arguments_stay_reduced(self):
        # the sine is never evaluated beyond one period: m pi / k < 2 pi
        m = reduced_sine_arguments(5, 5_000)
        ks = np.arange(5, 5_001)
        assert np.all(m < 2 * ks)


class TestNaiveFloat:
    def test_small_argument_still_fine(self):
        assert term_naive_float(5) == pytest.approx(1.0, abs=1e-6)

    def test_undefined_beyond_representable_factorial(self):
        assert NAIVE_K_MAX == 19  # 18! < 2**53 < 19!
        assert term_naive_float(20) is None
        assert term_naive_float(25) is None
        assert term_naive_float(19) is not None

    def test_domain(self):
        with pytest.raises(DomainError):
            term_naive_float(4)

    def test_divergence_exists_where_reduced_path_holds(self):
        diverged = []
        for k in range(5, NAIVE_K_MAX + 1):
            exact = 1 if reduced_sine_arguments(k, k)[0] == k - 1 else 0
            naive = term_naive_float(k)
            if abs(naive - exact) > NAIVE_DIVERGENCE_THRESHOLD:
                assert abs(term_reduced_trig(k) - exact) < REDUCED_TOLERANCE
                diverged.append(k)
        assert diverged, "expected the naive path to fail somewhere below k = 20"


class TestCompareMethods:
    def test_six_rows_all_reduced_within_tolerance(self):
        report = compare_methods(5, 10)
        assert len(report.rows) == 6
        assert all(r.abs_error_reduced < REDUCED_TOLERANCE for r in report.rows)
        assert report.max_abs_error_reduced < REDUCED_TOLERANCE

    def test_single_prime_row(self):
        report = compare_methods(5, 5)
        (row,) = report.rows
        assert row.exact == 1
        assert row.naive_defined

    def test_naive_undefined_from_twenty_up(self):
        report = compare_methods(5, 100)
        for row in report.rows:
            assert row.naive_defined == (row.k <= NAIVE_K_MAX)
            if not row.naive_defined:
                assert row.naive_float is None
                assert row.abs_error_naive is None

    def test_first_divergence_found_below_twenty(self):
        report = compare_methods(5, 100)
        assert report.first_naive_divergence is not None
        assert report.first_naive_divergence <= NAIVE_K_MAX

    def test_numerator_is_surfaced(self):
        report = compare_methods(5, 8)
        by_k = {r.k: r for r in report.rows}
        # composite terms have a zero numerator; prime numerators are sin(pi/k), not 1
        assert by_k[6].numerator == pytest.approx(0.0, abs=1e-12)
        assert by_k[5].numerator == pytest.approx(np.sin(np.pi / 5), abs=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            compare_methods(4, 10)
        with pytest.raises(DomainError):
            compare_methods(10, 5)

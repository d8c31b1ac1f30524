"""Floating-point evaluations of the literal series term, correct and deliberately naive.

The reduced path first collapses the factorial to m = (k-1)! mod 2k and only
then touches floating point, so its sine arguments never exceed 2 pi and it
tracks the exact {0, 1} term to ~1e-12.  The naive path evaluates the term
the way the formula reads, factorial and all; once the argument grows large
the rounding of (k-1)! * pi / k costs whole radians and the standard sine
faithfully reduces a wrong argument.  The exact integer path is always the
ground truth here; the floats are the experiment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .counter import reduced_sine_argument, reduced_sine_arguments
from .errors import DomainError

# (k-1)! must fit a 53-bit significand for the naive path to start from an
# exactly represented factorial: 18! < 2**53 < 19!, so k <= 19.
NAIVE_FACTORIAL_MAX = 2**53
NAIVE_UNDEFINED_REASON = "factorial not representable"


def _naive_k_max() -> int:
    k = 5
    while math.factorial(k) <= NAIVE_FACTORIAL_MAX:
        k += 1
    return k


NAIVE_K_MAX = _naive_k_max()

# A term is 0 or 1; an absolute error beyond 0.5 means the naive value is
# closer to the wrong classification than the right one.
NAIVE_DIVERGENCE_THRESHOLD = 0.5

REDUCED_TOLERANCE = 1e-9


def term_reduced_trig(k: int) -> float:
    """sin(m pi / k) / sin(pi / k) with the argument reduced exactly first."""
    m = reduced_sine_argument(k)
    return math.sin(m * math.pi / k) / math.sin(math.pi / k)


def term_naive_float(k: int) -> float | None:
    """The term as a naive numerical recipe, or None when (k-1)! cannot be a double.

    Forms (k-1)! * pi / k in double precision and calls the standard sine
    with no argument reduction beyond the library's own.
    """
    if k < 5:
        raise DomainError(f"the series term is defined for integers k >= 5, got {k}")
    if k > NAIVE_K_MAX:
        return None
    return math.sin(math.factorial(k - 1) * math.pi / k) / math.sin(math.pi / k)


@dataclass(frozen=True)
class TermComparison:
    """Exact term vs both float paths at one k, with absolute errors.

    ``numerator`` is the reduced sine numerator sin(m pi / k) on its own: the
    quantity a reading of the formula without the sin(pi/k) divisor would
    call the term.  It is 0 for composite k but sin(pi/k), not 1, for primes,
    which is why the quotient form is the one implemented.
    """

    k: int
    exact: int
    reduced_trig: float
    naive_float: float | None
    naive_defined: bool
    abs_error_reduced: float
    abs_error_naive: float | None
    numerator: float


@dataclass(frozen=True)
class ComparisonReport:
    """Per-k comparisons plus the two numbers the sweep exists to produce."""

    rows: tuple[TermComparison, ...]
    max_abs_error_reduced: float
    first_naive_divergence: int | None


def compare_methods(k_lo: int, k_hi: int, *, threads: int = 1) -> ComparisonReport:
    """Compare exact, reduced-trig, and naive-float term values over [k_lo, k_hi].

    ``first_naive_divergence`` is the smallest k whose naive error exceeds
    0.5 (None if the range holds no such k); ``max_abs_error_reduced`` is the
    worst reduced-path error seen.
    """
    m = reduced_sine_arguments(k_lo, k_hi, threads=threads)
    ks = np.arange(k_lo, k_hi + 1, dtype=np.int64)
    exact = (m == ks - 1).astype(np.int64)
    numerators = np.sin(m * np.pi / ks)
    reduced = numerators / np.sin(np.pi / ks)
    reduced_err = np.abs(reduced - exact)

    rows = []
    first_divergence = None
    for i, k in enumerate(range(k_lo, k_hi + 1)):
        naive = term_naive_float(k)
        naive_err = None if naive is None else abs(naive - int(exact[i]))
        if (
            first_divergence is None
            and naive_err is not None
            and naive_err > NAIVE_DIVERGENCE_THRESHOLD
        ):
            first_divergence = k
        rows.append(
            TermComparison(
                k=k,
                exact=int(exact[i]),
                reduced_trig=float(reduced[i]),
                naive_float=naive,
                naive_defined=naive is not None,
                abs_error_reduced=float(reduced_err[i]),
                abs_error_naive=naive_err,
                numerator=float(numerators[i]),
            )
        )
    return ComparisonReport(
        rows=tuple(rows),
        max_abs_error_reduced=float(reduced_err.max()),
        first_naive_divergence=first_divergence,
    )

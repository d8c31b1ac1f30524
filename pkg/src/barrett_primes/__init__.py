"""Exact evaluation, verification, and numerical study of the 1903 Barrett prime counter.

The counter is Barr(n) = 3 + sum over k in [5, n-1] of
sin(((k-1)!/k) pi) / sin(pi/k), an exact prime counter built on Wilson's
theorem (1 counted as prime, counting strictly below n).  This package
evaluates it without ever taking a sine, proves the collapse mechanically
against a sieve oracle, and demonstrates where the literal floating-point
reading breaks down.
"""

from .counter import (
    BarrettTerm,
    CountRow,
    asymptotic_ratio,
    barrett_count,
    barrett_series,
    barrett_term,
    pi_modern,
    pnt_estimate,
    reduced_sine_argument,
    reduced_sine_arguments,
)
from .errors import DomainError, ResourceLimitError
from .numtheory import (
    AbsorptionReport,
    Factorization,
    PrimeValuation,
    WilsonWitness,
    absorption_check,
    factorial_mod,
    is_prime_wilson,
    legendre_valuation,
    mulmod,
    trial_factorize,
    wilson_witness,
)
from .sieve import DEFAULT_SIEVE_CAP, SieveOracle, build_sieve
from .trig import (
    ComparisonReport,
    TermComparison,
    compare_methods,
    term_naive_float,
    term_reduced_trig,
)
from .verify import TermMismatch, VerificationReport, full_verification, verify_range

__version__ = "0.1.0"

__all__ = [
    "AbsorptionReport",
    "BarrettTerm",
    "ComparisonReport",
    "CountRow",
    "DEFAULT_SIEVE_CAP",
    "DomainError",
    "Factorization",
    "PrimeValuation",
    "ResourceLimitError",
    "SieveOracle",
    "TermComparison",
    "TermMismatch",
    "VerificationReport",
    "WilsonWitness",
    "absorption_check",
    "asymptotic_ratio",
    "barrett_count",
    "barrett_series",
    "barrett_term",
    "build_sieve",
    "compare_methods",
    "factorial_mod",
    "full_verification",
    "is_prime_wilson",
    "legendre_valuation",
    "mulmod",
    "pi_modern",
    "pnt_estimate",
    "reduced_sine_argument",
    "reduced_sine_arguments",
    "term_naive_float",
    "term_reduced_trig",
    "trial_factorize",
    "verify_range",
    "wilson_witness",
]

"""Sieve-backed verification sweeps: every exact term checked against ground truth.

This is the correctness argument for the series rendered executable: the
term values must match sieve primality, prime k must reduce to m = k - 1,
composite k >= 6 must reduce to m in {0, k} and have every prime power of k
absorbed by (k-1)!.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .counter import reduced_sine_arguments
from .errors import DomainError
from .numtheory import absorption_check
from .sieve import SieveOracle, build_sieve


@dataclass(frozen=True)
class TermMismatch:
    """One k where the exact term disagreed with the oracle or the m-invariant."""

    k: int
    m: int
    value: int
    oracle_prime: bool


def _term_mismatches(
    oracle: SieveOracle, k_lo: int, k_hi: int, m: np.ndarray
) -> list[TermMismatch]:
    ks = np.arange(k_lo, k_hi + 1, dtype=np.int64)
    value_is_one = m == ks - 1
    oracle_prime = ~oracle.is_composite[k_lo : k_hi + 1]
    bad = (value_is_one != oracle_prime) | (~value_is_one & ~((m == 0) | (m == ks)))
    return [
        TermMismatch(
            k=int(ks[i]),
            m=int(m[i]),
            value=int(value_is_one[i]),
            oracle_prime=bool(oracle_prime[i]),
        )
        for i in np.flatnonzero(bad)
    ]


def verify_range(
    oracle: SieveOracle, k_lo: int, k_hi: int, *, threads: int = 1
) -> list[TermMismatch]:
    """Check every k in [k_lo, k_hi] against the oracle; returns all violations.

    A k is reported if its term value disagrees with sieve primality, or if
    its reduced argument falls outside the proven shapes (k - 1 for primes,
    {0, k} for composites).  The expected result is an empty list.
    """
    if k_lo < 5:
        raise DomainError(f"verification starts at k = 5, got {k_lo}")
    if not k_lo <= k_hi <= oracle.limit:
        raise DomainError(f"range [{k_lo}, {k_hi}] not covered by sieve limit {oracle.limit}")
    m = reduced_sine_arguments(k_lo, k_hi, threads=threads)
    return _term_mismatches(oracle, k_lo, k_hi, m)


@dataclass
class VerificationReport:
    """Outcome of a full sweep over k in [5, k_max]."""

    k_max: int
    terms_checked: int
    mismatches: list[TermMismatch] = field(default_factory=list)
    composite_m_zero: int = 0
    composite_m_k: int = 0
    absorption_checked: int = 0
    absorption_failures: list[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches and not self.absorption_failures


def full_verification(
    k_max: int,
    *,
    oracle: SieveOracle | None = None,
    threads: int = 1,
    sieve_cap: int | None = None,
) -> VerificationReport:
    """Run the whole property sweep up to k_max in one pass.

    One bulk residue sweep feeds three checks: term-vs-oracle agreement, the
    reduced-argument invariant with its observed composite split, and the
    absorption report for every composite in [6, k_max] cross-checked against
    the modular zero test ((k-1)! mod k == m mod k).
    """
    if k_max < 5:
        raise DomainError(f"verification requires k_max >= 5, got {k_max}")
    if oracle is None:
        oracle = build_sieve(k_max) if sieve_cap is None else build_sieve(k_max, cap=sieve_cap)
    if oracle.limit < k_max:
        raise DomainError(f"sieve limit {oracle.limit} below k_max {k_max}")

    m = reduced_sine_arguments(5, k_max, threads=threads)
    report = VerificationReport(k_max=k_max, terms_checked=k_max - 4)
    report.mismatches = _term_mismatches(oracle, 5, k_max, m)

    ks = np.arange(5, k_max + 1, dtype=np.int64)
    composite = oracle.is_composite[5 : k_max + 1]
    report.composite_m_zero = int(np.count_nonzero(composite & (m == 0)))
    report.composite_m_k = int(np.count_nonzero(composite & (m == ks)))

    for k in oracle.composites_in(6, k_max) if k_max >= 6 else ():
        k = int(k)
        absorbed = absorption_check(k).absorbed
        # (k-1)! mod k is m mod k, since m = (k-1)! mod 2k
        if not absorbed or absorbed != (m[k - 5] % k == 0):
            report.absorption_failures.append(k)
        report.absorption_checked += 1
    return report

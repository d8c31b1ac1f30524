"""Exact integer arithmetic: modular factorials, Wilson certificates, Legendre valuations.

Everything in this module is pure integer arithmetic, so every result is
exact.  These primitives back the sine-free evaluation of the counting
series and the machine checks of why that evaluation is legitimate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError

# Largest modulus accepted by mulmod.  Python integers are arbitrary
# precision, so this is a contract bound rather than an overflow bound: it
# keeps the API portable to fixed-width implementations (one double-width
# multiply-and-reduce) and catches callers far outside the intended scale.
MODULUS_MAX = 1 << 62


def _check_modulus(m: int) -> None:
    if m < 1:
        raise DomainError(f"modulus must be a positive integer, got {m}")
    if m > MODULUS_MAX:
        raise DomainError(f"modulus {m} exceeds the supported width 2**62")


def mulmod(a: int, b: int, m: int) -> int:
    """Return (a * b) mod m exactly.

    Callers supply a and b already reduced into [0, m).  The full product is
    formed before reduction; Python evaluates it exactly at any width.

    >>> mulmod(3, 4, 5)
    2
    """
    _check_modulus(m)
    return a * b % m


def factorial_mod(t: int, m: int) -> int:
    """Return t! mod m by sequential multiply-and-reduce steps.

    Short-circuits to 0 as soon as the running residue hits 0; for composite
    moduli that usually happens long before t, a measurable win.

    >>> factorial_mod(4, 5)
    4
    >>> factorial_mod(5, 6)
    0
    """
    if t < 0:
        raise DomainError(f"factorial argument must be >= 0, got {t}")
    _check_modulus(m)
    r = 1 % m
    for i in range(2, t + 1):
        r = r * i % m
        if r == 0:
            return 0
    return r


@dataclass(frozen=True)
class WilsonWitness:
    """A candidate k with its residue (k-1)! mod k, the exact primality certificate.

    The residue equals k - 1 exactly when k is prime.  For composite k >= 6
    it is 0; k = 4 is the lone composite with a nonzero residue (2).
    """

    k: int
    residue: int

    @property
    def is_prime(self) -> bool:
        return self.residue == self.k - 1


def wilson_witness(k: int) -> WilsonWitness:
    """Compute the Wilson certificate for k >= 2."""
    if k < 2:
        raise DomainError(f"Wilson witness requires k >= 2, got {k}")
    return WilsonWitness(k=k, residue=factorial_mod(k - 1, k))


def is_prime_wilson(k: int) -> bool:
    """Primality of k >= 2 decided purely by the Wilson residue."""
    return wilson_witness(k).is_prime


@dataclass(frozen=True)
class Factorization:
    """k as an ordered product of prime powers; factors are (p, alpha) with p ascending."""

    k: int
    factors: tuple[tuple[int, int], ...]

    @property
    def is_prime(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1


def trial_factorize(k: int) -> Factorization:
    """Complete prime factorization of k >= 2 by trial division up to sqrt(k).

    >>> trial_factorize(12).factors
    ((2, 2), (3, 1))
    """
    if k < 2:
        raise DomainError(f"factorization requires k >= 2, got {k}")
    factors = []
    n = k
    for d in (2, 3):
        if n % d == 0:
            a = 0
            while n % d == 0:
                n //= d
                a += 1
            factors.append((d, a))
    d = 5
    while d * d <= n:
        # 6j +/- 1 wheel: multiples of 2 and 3 are already removed
        for step in (0, 2):
            c = d + step
            if n % c == 0:
                a = 0
                while n % c == 0:
                    n //= c
                    a += 1
                factors.append((c, a))
        d += 6
    if n > 1:
        factors.append((n, 1))
    return Factorization(k=k, factors=tuple(factors))


def legendre_valuation(p: int, t: int) -> int:
    """Exponent of p in t!, as the sum of floor(t / p**j) over j >= 1.

    Primality of p is the caller's responsibility; factors obtained from
    trial_factorize or the sieve oracle are always valid inputs.

    >>> legendre_valuation(2, 7)
    4
    """
    if p < 2:
        raise DomainError(f"valuation base must be >= 2, got {p}")
    if t < 0:
        raise DomainError(f"valuation argument must be >= 0, got {t}")
    total = 0
    q = p
    while q <= t:
        total += t // q
        q *= p
    return total


@dataclass(frozen=True)
class PrimeValuation:
    """One prime factor p of k: its exponent alpha in k and its exponent nu in (k-1)!."""

    p: int
    alpha: int
    nu: int

    @property
    def absorbed(self) -> bool:
        return self.nu >= self.alpha


@dataclass(frozen=True)
class AbsorptionReport:
    """Per-factor valuations showing whether (k-1)! carries every prime power of k."""

    k: int
    valuations: tuple[PrimeValuation, ...]
    absorbed: bool


def absorption_check(k: int) -> AbsorptionReport:
    """Check that every prime power in composite k divides (k-1)!.

    For composite k >= 6 absorption always holds, which is exactly why
    (k-1)!/k is an integer and the series term vanishes.  k = 4 is the one
    composite that fails (nu = 1 < alpha = 2 for p = 2).  Prime k is a
    domain error: there is nothing to absorb.
    """
    if k < 4:
        raise DomainError(f"absorption check requires composite k >= 4, got {k}")
    factorization = trial_factorize(k)
    if factorization.is_prime:
        raise DomainError(f"absorption check requires composite k, got prime {k}")
    valuations = tuple(
        PrimeValuation(p=p, alpha=alpha, nu=legendre_valuation(p, k - 1))
        for p, alpha in factorization.factors
    )
    return AbsorptionReport(
        k=k,
        valuations=valuations,
        absorbed=all(v.absorbed for v in valuations),
    )

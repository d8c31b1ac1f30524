"""The prime-counting series and its exact, sine-free evaluation.

For integer k >= 5 the series summand sin(((k-1)!/k) pi) / sin(pi/k) is
exactly 1 when k is prime and exactly 0 when k is composite.  Because
sin(m pi / k) has period 2k in m, the summand is fully determined by the
reduced argument m = (k-1)! mod 2k: m = k - 1 for prime k (the Wilson
quotient ((k-1)!+1)/k is odd), m in {0, k} for composite k >= 6.  The
counting path therefore never evaluates a sine.

Counting convention: the base constant 3 counts {1, 2, 3}, i.e. 1 is
treated as prime and counting is strictly below n, so the count equals
pi(n-1) + 1 in the modern convention.  ``pi_modern`` adapts.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import DomainError, ResourceLimitError
from .numtheory import factorial_mod
from .sieve import SieveOracle, build_sieve

# Bulk-path bounds.  Residues stay below 2k and step factors below k, so a
# single-step product stays below 2k**2; k < 2**31 keeps that inside int64.
# Below _PAIR_K_MAX two step factors are folded into one multiply, which
# needs 2k**3 < 2**63.
BULK_K_MAX = 1 << 31
_PAIR_K_MAX = 1_400_000
_COMPACT_MASK = 255  # flush finished and zeroed rows every 256 steps
_SCALAR_CUTOFF = 512  # below this, plain Python beats numpy call overhead
_PARALLEL_MIN = 8192  # ranges smaller than this never amortize worker startup


def reduced_sine_argument(k: int) -> int:
    """Return m = (k-1)! mod 2k, the exact reduced argument of the series sine.

    Defined for k >= 5 only: the series starts there, and k = 4 is the one
    composite whose factorial residue collapses to neither 0 nor k.
    """
    if k < 5:
        raise DomainError(f"the series term is defined for integers k >= 5, got {k}")
    return factorial_mod(k - 1, 2 * k)


def _residues_chunk(lo: int, hi: int) -> np.ndarray:
    """(k-1)! mod 2k for every k in [lo, hi], vectorized over k.

    Walks t = 2 .. hi-1 multiplying the running residues of all still-active
    k (those with k - 1 >= t), folding two step factors into one multiply
    where int64 allows it.  Rows are retired once finished (k <= t + 1) or
    once their residue hits zero; zero rows stay zero forever, so dropping
    them preserves exactness while skipping most composite work.
    """
    ks = np.arange(lo, hi + 1, dtype=np.int64)
    moduli = 2 * ks
    residues = np.ones(len(ks), dtype=np.int64)
    out = np.zeros(hi - lo + 1, dtype=np.int64)
    pairs = hi <= _PAIR_K_MAX
    last = hi - 1
    t = 2
    while t <= last:
        if pairs and t + 1 <= last:
            # rows with k == t+1 need only the factor t; the rest take t*(t+1)
            i1 = int(np.searchsorted(ks, t + 1))
            if i1 >= len(ks):
                break
            i2 = int(np.searchsorted(ks, t + 2))
            if i1 < i2:
                residues[i1:i2] = residues[i1:i2] * t % moduli[i1:i2]
            residues[i2:] = residues[i2:] * (t * (t + 1)) % moduli[i2:]
            t += 2
        else:
            i1 = int(np.searchsorted(ks, t + 1))
            if i1 >= len(ks):
                break
            residues[i1:] = residues[i1:] * t % moduli[i1:]
            t += 1
        if t & _COMPACT_MASK == 0:
            done = (ks <= t) | (residues == 0)
            if done.any():
                out[ks[done] - lo] = residues[done]
                keep = ~done
                ks, moduli, residues = ks[keep], moduli[keep], residues[keep]
                if len(ks) == 0:
                    return out
    out[ks - lo] = residues
    return out


def _residues_span(bounds: tuple[int, int]) -> np.ndarray:
    return _residues_chunk(*bounds)


def _balanced_spans(k_lo: int, k_hi: int, parts: int) -> list[tuple[int, int]]:
    """Split [k_lo, k_hi] into contiguous spans of roughly equal total work.

    Work for one k is proportional to k, so spans are cut at quantiles of the
    cumulative k sum.  The split depends only on the range and the requested
    part count, never on scheduling.
    """
    ks = np.arange(k_lo, k_hi + 1, dtype=np.int64)
    work = np.cumsum(ks)
    targets = work[-1] * np.arange(1, parts) // parts
    cuts = np.searchsorted(work, targets).tolist()
    edges = [k_lo] + [k_lo + int(c) + 1 for c in cuts] + [k_hi + 1]
    return [(a, b - 1) for a, b in zip(edges[:-1], edges[1:]) if a <= b - 1]


def reduced_sine_arguments(k_lo: int, k_hi: int, *, threads: int = 1) -> np.ndarray:
    """Bulk form of :func:`reduced_sine_argument` over the closed range [k_lo, k_hi].

    Each k is an independent computation, so partitioning the range across
    worker processes changes wall time only: the returned array is identical
    for every worker count.  Small ranges always run in-process.
    """
    if k_lo < 5:
        raise DomainError(f"the series term is defined for integers k >= 5, got {k_lo}")
    if k_hi < k_lo:
        raise DomainError(f"empty range [{k_lo}, {k_hi}]")
    if k_hi > BULK_K_MAX:
        raise ResourceLimitError(f"bulk evaluation supports k <= {BULK_K_MAX}, got {k_hi}")
    if threads < 1:
        raise DomainError(f"thread count must be >= 1, got {threads}")
    if threads == 1 or k_hi - k_lo + 1 < _PARALLEL_MIN:
        return _residues_chunk(k_lo, k_hi)
    spans = _balanced_spans(k_lo, k_hi, threads)
    with ProcessPoolExecutor(max_workers=len(spans)) as pool:
        return np.concatenate(list(pool.map(_residues_span, spans)))


@dataclass(frozen=True)
class BarrettTerm:
    """One exact series term: m is (k-1)! mod 2k, value the collapsed summand."""

    k: int
    m: int
    value: int
    classification: str

    @property
    def is_prime(self) -> bool:
        return self.value == 1


def barrett_term(k: int) -> BarrettTerm:
    """Evaluate the series term at k exactly; value is 1 iff m == k - 1."""
    m = reduced_sine_argument(k)
    prime = m == k - 1
    return BarrettTerm(
        k=k,
        m=m,
        value=1 if prime else 0,
        classification="prime" if prime else "composite",
    )


def barrett_count(n: int, *, threads: int = 1) -> int:
    """Barr(n): 3 plus the sum of the exact terms for k in [5, n-1].

    Counts 1 and the primes strictly below n, so Barr(n) == pi(n-1) + 1.
    """
    if n < 5:
        raise DomainError(f"the counter is defined for integers n > 4, got {n}")
    if n == 5:
        return 3
    if n <= _SCALAR_CUTOFF:
        return 3 + sum(1 for k in range(5, n) if reduced_sine_argument(k) == k - 1)
    m = reduced_sine_arguments(5, n - 1, threads=threads)
    ks = np.arange(5, n, dtype=np.int64)
    return 3 + int(np.count_nonzero(m == ks - 1))


def barrett_series(n_max: int, *, threads: int = 1) -> Iterator[tuple[int, int]]:
    """Yield (n, Barr(n)) for n = 5 .. n_max as incremental prefix sums.

    Each term is computed once; total work is the same single sweep that one
    call to ``barrett_count(n_max)`` costs.
    """
    if n_max < 5:
        raise DomainError(f"the counter is defined for integers n > 4, got {n_max}")
    count = 3
    yield 5, count
    if n_max == 5:
        return
    m = reduced_sine_arguments(5, n_max - 1, threads=threads)
    values = m == np.arange(5, n_max, dtype=np.int64) - 1
    for i, n in enumerate(range(6, n_max + 1)):
        count += int(values[i])
        yield n, count


def pi_modern(n: int, *, threads: int = 1) -> int:
    """Modern prime count pi(n) = #{p <= n, p >= 2}, via the counter minus its unit."""
    if n < 4:
        raise DomainError(f"the adapter is defined for n >= 4, got {n}")
    return barrett_count(n + 1, threads=threads) - 1


def pnt_estimate(n: int) -> float:
    """The prime number theorem estimate n / ln(n)."""
    if n < 2:
        raise DomainError(f"n / ln(n) requires n >= 2, got {n}")
    return n / math.log(n)


@dataclass(frozen=True)
class CountRow:
    """One comparison row: exact count, oracle count, PNT estimate, and their quotient."""

    n: int
    barr: int
    pi_oracle: int
    pnt: float
    ratio: float


def asymptotic_ratio(n: int, *, oracle: SieveOracle | None = None, threads: int = 1) -> CountRow:
    """Assemble the comparison row at n; ratio is barr * ln(n) / n.

    The ratio is the counter's analogue of the PNT quotient pi(n) ln(n) / n;
    it approaches 1 from above at desk scale.
    """
    barr = barrett_count(n, threads=threads)
    if oracle is None:
        oracle = build_sieve(n - 1)
    return CountRow(
        n=n,
        barr=barr,
        pi_oracle=oracle.pi(n - 1),
        pnt=pnt_estimate(n),
        ratio=barr * math.log(n) / n,
    )

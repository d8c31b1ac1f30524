"""Sieve of Eratosthenes oracle: ground-truth primality and prime counts.

The oracle is deliberately plain (one boolean array, no segmentation): it
has to be more obviously correct than the formula it is used to check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .errors import DomainError, ResourceLimitError

DEFAULT_SIEVE_CAP = 10**8
PREFIX_BLOCK = 4096


@dataclass
class SieveOracle:
    """Primality bitmap up to ``limit`` plus block-sampled cumulative prime counts.

    ``is_composite[i]`` is True exactly for the composites in [2, limit];
    0 and 1 are non-prime by convention but not marked composite.
    ``prefix_counts[j]`` is the number of primes below j * PREFIX_BLOCK, so a
    count query scans at most one block.  Instances are immutable after
    construction and safe to share across threads.
    """

    limit: int
    is_composite: np.ndarray
    prefix_counts: np.ndarray

    def is_prime(self, k: int) -> bool:
        """Bitmap lookup; 0 and 1 are never prime."""
        if not 0 <= k <= self.limit:
            raise DomainError(f"{k} is outside the sieve range [0, {self.limit}]")
        return k >= 2 and not bool(self.is_composite[k])

    def pi(self, n: int) -> int:
        """Number of primes <= n.  1 is never counted."""
        if not 0 <= n <= self.limit:
            raise DomainError(f"{n} is outside the sieve range [0, {self.limit}]")
        block = n // PREFIX_BLOCK
        lo = max(2, block * PREFIX_BLOCK)
        tail = int(np.count_nonzero(~self.is_composite[lo : n + 1])) if lo <= n else 0
        return int(self.prefix_counts[block]) + tail

    def composites_in(self, lo: int, hi: int) -> np.ndarray:
        """Ascending array of the composite integers in [lo, hi]."""
        if not 0 <= lo <= hi <= self.limit:
            raise DomainError(f"[{lo}, {hi}] is outside the sieve range [0, {self.limit}]")
        return np.flatnonzero(self.is_composite[lo : hi + 1]) + lo


def build_sieve(limit: int, *, cap: int = DEFAULT_SIEVE_CAP) -> SieveOracle:
    """Sieve all composites up to ``limit`` and sample prefix prime counts.

    Marking for prime p starts at p*p.  ``limit`` above the memory cap is a
    resource error, not a domain error: the request is meaningful, just too
    large for the configured budget.
    """
    if limit < 2:
        raise DomainError(f"sieve limit must be >= 2, got {limit}")
    if limit > cap:
        raise ResourceLimitError(f"sieve limit {limit} exceeds the configured cap {cap}")
    is_composite = np.zeros(limit + 1, dtype=bool)
    for p in range(2, isqrt(limit) + 1):
        if not is_composite[p]:
            is_composite[p * p :: p] = True

    is_prime = ~is_composite
    is_prime[:2] = False
    block_starts = np.arange(0, limit + 1, PREFIX_BLOCK)
    block_sums = np.add.reduceat(is_prime.astype(np.int64), block_starts)
    prefix_counts = np.zeros(len(block_starts), dtype=np.int64)
    np.cumsum(block_sums[:-1], out=prefix_counts[1:])
    return SieveOracle(limit=limit, is_composite=is_composite, prefix_counts=prefix_counts)

"""Trusted baseline primality: trial division and a classical Eratosthenes table.

This module is deliberately plain — it exists to check the fast sieve, so it
must stay independent of it.  No generator-index arithmetic, no segmentation;
just the textbook algorithms over ordinary integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

DEFAULT_MEMORY_BUDGET = 1 << 31  # bytes; one flag byte per integer


def is_prime(x: int) -> bool:
    """Trial-division primality of |x|.

    Divides by 2 and 3, then by 6k±1 candidates up to sqrt(|x|).
    """
    n = abs(x)
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    limit = math.isqrt(n)
    d = 5
    while d <= limit:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


@dataclass
class OracleTable:
    """Primality flags for every integer in [0, limit]; immutable once built."""

    limit: int
    flags: bytearray  # flags[x] == 1 iff x is prime

    def is_prime(self, x: int) -> bool:
        return bool(self.flags[abs(x)])

    def count(self) -> int:
        return self.flags.count(1)

    def primes(self) -> np.ndarray:
        """All primes <= limit, ascending (int64)."""
        return np.flatnonzero(np.frombuffer(bytes(self.flags), dtype=np.uint8)).astype(np.int64)


def eratosthenes(limit: int, memory_budget: int = DEFAULT_MEMORY_BUDGET) -> OracleTable:
    """Classical sieve of Eratosthenes up to and including `limit`."""
    if limit < 0:
        raise ValueError(f"limit must be nonnegative, got {limit}")
    if limit + 1 > memory_budget:
        raise ValueError(
            f"limit {limit} needs {limit + 1} flag bytes, over the budget of {memory_budget}"
        )
    flags = bytearray(b"\x01") * (limit + 1)
    flags[:2] = b"\x00" * min(2, limit + 1)
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            span = len(range(p * p, limit + 1, p))
            flags[p * p :: p] = b"\x00" * span
    return OracleTable(limit=limit, flags=flags)

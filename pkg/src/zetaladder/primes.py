"""Exact prime counting from a segmented sieve stored as a packed bitmap."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._series import EULER_GAMMA
from .errors import ConfigError, DomainError, RangeError

DEFAULT_LIMIT = 10**7
SEGMENT = 1 << 18  # numbers per sieve segment (multiple of 8)
BLOCK_BYTES = 64  # bitmap bytes per cumulative-count block

# popcount of every byte value
_POP = np.array([bin(i).count("1") for i in range(256)], dtype=np.int64)


@dataclass(frozen=True)
class PrimeCounter:
    """Packed primality bitmap of 0..limit with cumulative block counts.

    Bit x of the bitmap (big-endian within each byte) is set iff x is prime.
    ``block_counts[k]`` is the number of primes below 8 * BLOCK_BYTES * k.
    """

    limit: int
    bits: np.ndarray
    block_counts: np.ndarray

    def pi(self, x: float) -> int:
        return prime_pi(self, x)


def _base_primes(n: int) -> np.ndarray:
    flags = np.ones(n + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags)


def build_counter(limit: int = DEFAULT_LIMIT) -> PrimeCounter:
    """Sieve 0..limit in segments of ``SEGMENT`` numbers."""
    limit = int(limit)
    if limit < 2:
        raise ConfigError("sieve limit must be >= 2")
    if limit > 10**9:
        raise ConfigError("sieve limit above 1e9 is not supported")
    base = _base_primes(math.isqrt(limit))
    total = ((limit + 1 + SEGMENT - 1) // SEGMENT) * SEGMENT
    bits = np.empty(total // 8, dtype=np.uint8)
    for lo in range(0, total, SEGMENT):
        seg = np.ones(SEGMENT, dtype=bool)
        if lo == 0:
            seg[:2] = False
        hi = lo + SEGMENT
        for p in base:
            p = int(p)
            if p * p >= hi:
                break
            start = max(p * p, -(-lo // p) * p)
            seg[start - lo :: p] = False
        if hi > limit + 1:
            seg[max(0, limit + 1 - lo) :] = False
        bits[lo // 8 : hi // 8] = np.packbits(seg)
    per_byte = _POP[bits]
    nblocks = -(-bits.size // BLOCK_BYTES)
    padded = np.zeros(nblocks * BLOCK_BYTES, dtype=np.int64)
    padded[: bits.size] = per_byte
    block_counts = np.concatenate(([0], np.cumsum(padded.reshape(nblocks, BLOCK_BYTES).sum(axis=1))))
    bits.setflags(write=False)
    block_counts.setflags(write=False)
    return PrimeCounter(limit, bits, block_counts)


def prime_pi(pc: PrimeCounter, x: float) -> int:
    """Number of primes <= floor(x), 0 <= x <= limit."""
    if not x >= 0:
        raise DomainError(f"prime_pi needs x >= 0, got {x}")
    if x > pc.limit:
        raise RangeError(f"x={x:g} exceeds the sieve limit {pc.limit}")
    n = int(math.floor(x))
    byte, bit = divmod(n, 8)
    blk = byte // BLOCK_BYTES
    count = int(pc.block_counts[blk])
    count += int(_POP[pc.bits[blk * BLOCK_BYTES : byte]].sum())
    mask = (0xFF << (7 - bit)) & 0xFF
    return count + int(_POP[pc.bits[byte] & mask])


def expected_drift(pc: PrimeCounter, t: float) -> float:
    """(1 - c) pi(t) with c Euler's constant."""
    return (1.0 - EULER_GAMMA) * prime_pi(pc, t)


def trial_division_pi(x: int) -> int:
    """Reference count by trial division (slow; for checks on small x)."""
    count = 0
    for n in range(2, int(x) + 1):
        if all(n % d for d in range(2, math.isqrt(n) + 1)):
            count += 1
    return count

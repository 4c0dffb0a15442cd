"""Segmented prime generation, von Mangoldt weights, and the prime cache.

The sieve is a classical odd-only segmented sieve of Eratosthenes backed
by numpy boolean segments, so memory stays bounded by the segment size
regardless of the limit.  Streams are emitted in strictly increasing
order; parallel consumers must preserve that order when merging.
"""

from __future__ import annotations

import heapq
import math
import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np

from .errors import PreconditionError

__all__ = [
    "PrimeRange",
    "MangoldtTerm",
    "primes_up_to",
    "prime_segments",
    "pi_of",
    "mangoldt_terms",
    "prime_cache_path",
    "write_prime_cache",
    "read_prime_cache",
    "cached_primes",
]

DEFAULT_SEGMENT_SIZE = 1 << 20

PRIME_CACHE_MAGIC = b"MDLPRIME"
PRIME_CACHE_VERSION = 1
_HEADER = struct.Struct("<8sIQQ")  # magic, version, limit, count


@dataclass(frozen=True)
class PrimeRange:
    """Enumeration range [2, limit] with a sieve segment size."""

    limit: int
    segment_size: int = DEFAULT_SEGMENT_SIZE

    def __post_init__(self) -> None:
        if self.limit < 2:
            raise PreconditionError(f"limit must be >= 2, got {self.limit}")
        if self.segment_size < 64:
            raise PreconditionError(
                f"segment_size must be >= 64, got {self.segment_size}"
            )


@dataclass(frozen=True)
class MangoldtTerm:
    """A prime power n = p**k with its von Mangoldt weight log(p)."""

    n: int
    p: int
    weight: float


def _base_primes(limit: int) -> np.ndarray:
    """Plain sieve up to limit (used for the base primes <= sqrt(X))."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.flatnonzero(mask).astype(np.int64)


def prime_segments(prime_range: PrimeRange) -> Iterator[np.ndarray]:
    """Yield numpy arrays of primes, segment by segment, in increasing order.

    Each array is sorted and the concatenation over all segments is exactly
    the primes <= limit.  Only one segment mask is alive at a time.
    """
    limit = prime_range.limit
    seg = prime_range.segment_size
    base = _base_primes(math.isqrt(limit))
    odd_base = base[base > 2]

    head = [p for p in (2, 3) if p <= limit]
    if head:
        yield np.array(head, dtype=np.int64)

    low = 5
    span = 2 * seg  # seg odd numbers per segment
    while low <= limit:
        high = min(low + span, limit + 1)
        if high % 2 == 0:
            high += 1  # keep [low, high) aligned on odd numbers
        count = (high - low + 1) // 2
        mask = np.ones(count, dtype=bool)
        for p in odd_base:
            p = int(p)
            start = max(p * p, ((low + p - 1) // p) * p)
            if start % 2 == 0:
                start += p
            if start >= high:
                continue
            mask[(start - low) // 2 :: p] = False
        primes = low + 2 * np.flatnonzero(mask).astype(np.int64)
        primes = primes[primes <= limit]
        if primes.size:
            yield primes
        low += span


def primes_up_to(prime_range: PrimeRange) -> Iterator[int]:
    """Stream every prime <= limit exactly once, in increasing order."""
    for segment in prime_segments(prime_range):
        for p in segment.tolist():
            yield p


def pi_of(x: int) -> int:
    """Number of primes <= x."""
    if x < 0:
        raise PreconditionError(f"x must be >= 0, got {x}")
    if x < 2:
        return 0
    return sum(seg.size for seg in prime_segments(PrimeRange(x)))


def _higher_powers(limit: int) -> list[MangoldtTerm]:
    """All p**k <= limit with k >= 2, sorted by n; weights reuse log(p)."""
    out: list[MangoldtTerm] = []
    for p in _base_primes(math.isqrt(limit)).tolist():
        weight = math.log(p)
        n = p * p
        while n <= limit:
            out.append(MangoldtTerm(n, p, weight))
            n *= p
    out.sort(key=lambda t: t.n)
    return out


def mangoldt_terms(prime_range: PrimeRange) -> Iterator[MangoldtTerm]:
    """Stream every n <= limit with nonzero von Mangoldt weight, by n.

    Emits (n, p, log p) for each prime power n = p**k.  The prime stream
    is merged with the (short) sorted list of higher powers, so memory
    stays bounded by the segment size.
    """
    primes = (
        MangoldtTerm(p, p, math.log(p)) for p in primes_up_to(prime_range)
    )
    yield from heapq.merge(primes, _higher_powers(prime_range.limit), key=lambda t: t.n)


def prime_cache_path(cache_dir: Path | str, limit: int) -> Path:
    """Cache file location for a given limit (one file per limit)."""
    return Path(cache_dir) / f"primes-{limit}.mdlcache"


def write_prime_cache(path: Path | str, limit: int, primes: Iterable[int]) -> int:
    """Write the cache file; returns the number of primes written.

    Layout: magic "MDLPRIME", version u32, limit u64, count u64, then the
    primes as strictly increasing little-endian u64.  The byte layout is
    fixed, so identical inputs produce identical files.
    """
    body = np.fromiter(primes, dtype="<u8")
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    with open(tmp, "wb") as fh:
        fh.write(_HEADER.pack(PRIME_CACHE_MAGIC, PRIME_CACHE_VERSION, limit, body.size))
        fh.write(body.tobytes())
    tmp.replace(path)
    return int(body.size)


def read_prime_cache(path: Path | str) -> tuple[int, np.ndarray]:
    """Read a cache file back as (limit, primes array).

    Rejects unknown magic/version and truncated bodies.
    """
    raw = Path(path).read_bytes()
    if len(raw) < _HEADER.size:
        raise ValueError(f"{path}: truncated prime cache header")
    magic, version, limit, count = _HEADER.unpack_from(raw)
    if magic != PRIME_CACHE_MAGIC:
        raise ValueError(f"{path}: bad magic {magic!r}")
    if version != PRIME_CACHE_VERSION:
        raise ValueError(f"{path}: unsupported cache version {version}")
    body = raw[_HEADER.size :]
    if len(body) != 8 * count:
        raise ValueError(f"{path}: expected {count} primes, got {len(body)} body bytes")
    return int(limit), np.frombuffer(body, dtype="<u8").astype(np.int64)


def cached_primes(
    limit: int,
    cache_dir: Path | str | None,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
) -> Iterator[int]:
    """Prime stream with a read-through on-disk cache.

    With no cache_dir this is just the sieve stream.  Otherwise the cache
    file keyed by limit is read if present, or computed and written first;
    either way the emitted stream is identical to the sieve's.
    """
    prime_range = PrimeRange(limit, segment_size)
    if cache_dir is None:
        yield from primes_up_to(prime_range)
        return
    path = prime_cache_path(cache_dir, limit)
    if not path.exists():
        write_prime_cache(path, limit, primes_up_to(prime_range))
    cached_limit, primes = read_prime_cache(path)
    if cached_limit != limit:
        raise ValueError(f"{path}: cache limit {cached_limit} != requested {limit}")
    for p in primes.tolist():
        yield p

"""Base-q digit statistics of Mersenne numbers 2^p - 1 over primes p <= X.

A length-s window of base-q digits at positions r..r-s+1 (position 0 is
the least significant digit) is read off exactly from 2^p - 1 mod q^(r+1).
On top of that sit per-window prime counts, an exact star-discrepancy of
the scaled residues, and an Erdos-Turan upper bound for that discrepancy
built from exponential sums.  Everything float is a single rounding away
from exact integer or rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from ._blocks import kahan_complex_sum, ordered_block_map, split_blocks
from .arith import (
    _check_odd_prime,
    is_prime,
    padic_valuation,
    unit_circle_value,
)
from .errors import PreconditionError

__all__ = [
    "DigitString",
    "DigitCountReport",
    "digit_block",
    "count_blocks",
    "fractional_part_check",
    "mersenne_residues",
    "discrepancy",
    "erdos_turan_bound",
    "ERDOS_TURAN_CONSTANT",
]

# Leading constant of the discrepancy bound; the classical inequality
# D* <= 1/(H+1) + 3 * sum_{h<=H} (1/h) |S_h| / N holds with this value.
ERDOS_TURAN_CONSTANT = 3.0


@dataclass(frozen=True)
class DigitString:
    """A window of base-q digits, most significant first."""

    q: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_odd_prime(self.q)
        if len(self.digits) < 1:
            raise PreconditionError("digit string must have length >= 1")
        for d in self.digits:
            if not 0 <= d < self.q:
                raise PreconditionError(f"digit {d} out of range for base {self.q}")

    @property
    def s(self) -> int:
        return len(self.digits)

    @property
    def block_value(self) -> int:
        value = 0
        for d in self.digits:
            value = value * self.q + d
        return value

    @classmethod
    def from_value(cls, q: int, value: int, s: int) -> "DigitString":
        _check_odd_prime(q)
        if s < 1:
            raise PreconditionError(f"s must be >= 1, got {s}")
        if not 0 <= value < q**s:
            raise PreconditionError(f"value {value} out of range [0, {q}^{s})")
        digits = tuple((value // q**i) % q for i in reversed(range(s)))
        return cls(q, digits)


@dataclass(frozen=True)
class DigitCountReport:
    """Prime counts per digit-window value, with uniformity deviations.

    counts maps every window value in [0, q^s) to the number of primes
    p <= X whose window equals it; expected and max_abs_deviation measure
    the distance of the empirical distribution from uniform.
    """

    q: int
    r: int
    s: int
    X: int
    counts: dict[int, int]
    pi_X: int
    expected: float = field(init=False)
    max_abs_deviation: float = field(init=False)

    def __post_init__(self) -> None:
        size = self.q**self.s
        if sorted(self.counts) != list(range(size)):
            raise PreconditionError("counts must cover every window value exactly once")
        if sum(self.counts.values()) != self.pi_X:
            raise PreconditionError("counts must add up to the prime count")
        if self.pi_X < 1:
            raise PreconditionError("report requires at least one prime")
        object.__setattr__(self, "expected", self.pi_X / size)
        object.__setattr__(
            self,
            "max_abs_deviation",
            max(abs(self.deviation(v)) for v in range(size)),
        )

    def deviation(self, value: int) -> float:
        """Signed gap between the observed frequency of value and uniform."""
        return self.counts[value] / self.pi_X - 1.0 / self.q**self.s


def _window_checks(q: int, r: int, s: int) -> None:
    _check_odd_prime(q)
    if r < 0:
        raise PreconditionError(f"r must be >= 0, got {r}")
    if s < 1 or s > r + 1:
        raise PreconditionError(f"need 1 <= s <= r+1, got s={s}, r={r}")


def digit_block(p: int, q: int, r: int, s: int) -> int:
    """Digits r..r-s+1 of 2^p - 1 in base q, packed into one integer.

    The window is read from the exact residue of 2^p - 1 mod q^(r+1); the
    returned value lies in [0, q^s).
    """
    _window_checks(q, r, s)
    if not is_prime(p):
        raise PreconditionError(f"p must be prime, got {p}")
    modulus = q ** (r + 1)
    residue = (pow(2, p, modulus) - 1) % modulus
    return residue // q ** (r - s + 1)


def count_blocks(
    q: int,
    X: int,
    r: int,
    s: int,
    threads: int = 1,
    primes: Sequence[int] | None = None,
) -> DigitCountReport:
    """Count primes p <= X by the value of their digit window (q, r, s).

    One modular exponentiation per prime.  Counting parallelizes over
    prime blocks; integer counts merge associatively, so the report never
    depends on the thread count.
    """
    _window_checks(q, r, s)
    if X < 2:
        raise PreconditionError(f"X must be >= 2, got {X}")
    if primes is None:
        primes = _primes_list(X)
    modulus = q ** (r + 1)
    divisor = q ** (r - s + 1)
    size = q**s

    def work(block: Sequence[int]) -> np.ndarray:
        values = [
            ((pow(2, p, modulus) - 1) % modulus) // divisor for p in block
        ]
        return np.bincount(values, minlength=size)

    partials = ordered_block_map(work, split_blocks(primes, key=int), threads)
    totals = np.sum(partials, axis=0) if partials else np.zeros(size, dtype=np.int64)
    counts = {value: int(totals[value]) for value in range(size)}
    return DigitCountReport(q, r, s, X, counts, len(primes))


def fractional_part_check(
    p: int, q: int, r: int, sigma: DigitString
) -> tuple[bool, bool]:
    """Test one digit window two independent ways; returns both booleans.

    Route one reads the window from the residue and compares it to sigma.
    Route two asks, with exact rational arithmetic, whether the fractional
    part of (2^p - 1) / q^(r+1) lies in the half-open interval
    [sigma_value / q^s, (sigma_value + 1) / q^s).  The two answers agree
    for every input; returning both keeps the equivalence observable.
    """
    if sigma.q != q:
        raise PreconditionError(f"sigma has base {sigma.q}, expected {q}")
    s = sigma.s
    _window_checks(q, r, s)
    if not is_prime(p):
        raise PreconditionError(f"p must be prime, got {p}")
    target = sigma.block_value
    by_digits = digit_block(p, q, r, s) == target

    modulus = q ** (r + 1)
    residue = (pow(2, p, modulus) - 1) % modulus
    frac = Fraction(residue, modulus)
    lower = Fraction(target, q**s)
    upper = Fraction(target + 1, q**s)
    by_interval = lower <= frac < upper
    return by_digits, by_interval


def _primes_list(X: int) -> list[int]:
    from .primes import PrimeRange, primes_up_to

    return list(primes_up_to(PrimeRange(X)))


def mersenne_residues(
    q: int,
    gamma: int,
    X: int,
    threads: int = 1,
    primes: Sequence[int] | None = None,
) -> list[int]:
    """Residues of 2^p - 1 mod q^gamma for all primes p <= X, in p order."""
    _check_odd_prime(q)
    if gamma < 1:
        raise PreconditionError(f"gamma must be >= 1, got {gamma}")
    if X < 2:
        raise PreconditionError(f"X must be >= 2, got {X}")
    if primes is None:
        primes = _primes_list(X)
    modulus = q**gamma

    def work(block: Sequence[int]) -> list[int]:
        return [(pow(2, p, modulus) - 1) % modulus for p in block]

    partials = ordered_block_map(work, split_blocks(primes, key=int), threads)
    return [r for part in partials for r in part]


def discrepancy(
    q: int,
    gamma: int,
    X: int,
    threads: int = 1,
    primes: Sequence[int] | None = None,
) -> float:
    """Exact star discrepancy of the points (2^p - 1 mod q^gamma) / q^gamma.

    The maximum over sample positions is taken with integer arithmetic on
    the sorted residues; the single division at the end is the only
    floating-point operation.
    """
    residues = sorted(mersenne_residues(q, gamma, X, threads, primes))
    n = len(residues)
    modulus = q**gamma
    best = 0
    for i, residue in enumerate(residues, start=1):
        up = i * modulus - residue * n
        down = residue * n - (i - 1) * modulus
        if up > best:
            best = up
        if down > best:
            best = down
    return best / (n * modulus)


def erdos_turan_bound(
    q: int,
    gamma: int,
    X: int,
    H: int,
    threads: int = 1,
    primes: Sequence[int] | None = None,
) -> float:
    """Erdos-Turan upper bound for the star discrepancy of the same points.

    Evaluates 1/(H+1) + 3 * sum over h <= H of |S_h| / (h * N), where S_h
    sums the phase h * residue / q^gamma over the N primes.  When q
    divides h the phase is reduced: modulus q^(gamma - v) and coefficient
    h / q^v with v the q-adic valuation of h (capped at gamma), keeping
    numerator and modulus coprime.
    """
    if H < 1:
        raise PreconditionError(f"H must be >= 1, got {H}")
    residues = mersenne_residues(q, gamma, X, threads, primes)
    n = len(residues)
    # integer multiplicities keep the per-h pass cheap and deterministic
    multiplicity: dict[int, int] = {}
    for residue in residues:
        multiplicity[residue] = multiplicity.get(residue, 0) + 1
    support = sorted(multiplicity.items())

    total = 0.0
    for h in range(1, H + 1):
        v = min(padic_valuation(q, h), gamma)
        reduced_modulus = q ** (gamma - v)
        reduced_h = h // q**v
        inner = kahan_complex_sum(
            count * unit_circle_value((reduced_h * residue) % reduced_modulus,
                                      reduced_modulus)
            for residue, count in support
        )
        total += abs(inner) / (h * n)
    return 1.0 / (H + 1) + ERDOS_TURAN_CONSTANT * total

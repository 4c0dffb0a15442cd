"""Exact arithmetic over prime-power moduli.

Everything here works on Python's arbitrary-precision integers; floating
point enters exactly once, when a canonical residue is mapped to a point
on the unit circle.  Values are immutable and safe to share across
threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import PreconditionError

__all__ = [
    "PrimePowerModulus",
    "Residue",
    "is_prime",
    "padic_valuation",
    "mod_pow",
    "unit_circle_point",
    "unit_circle_value",
]


@lru_cache(maxsize=4096)
def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test.

    Intended for the small fixed moduli this library works with; cached
    because the same handful of primes is re-checked in hot loops.
    """
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _check_odd_prime(q: int) -> None:
    if not is_prime(q) or q < 3:
        raise PreconditionError(f"q must be an odd prime >= 3, got {q}")


def padic_valuation(q: int, n: int) -> int:
    """Largest k with q**k dividing n; the sign of n is ignored.

    Undefined (and rejected) for n == 0.
    """
    if not is_prime(q):
        raise PreconditionError(f"q must be prime, got {q}")
    if n == 0:
        raise PreconditionError("valuation of 0 is undefined")
    n = abs(n)
    k = 0
    while n % q == 0:
        n //= q
        k += 1
    return k


@dataclass(frozen=True)
class PrimePowerModulus:
    """The modulus q**gamma for an odd prime q and a positive exponent.

    The full power is computed once at construction and reused everywhere;
    it routinely exceeds the 53-bit float significand, so all reductions
    stay in exact integer arithmetic.
    """

    q: int
    gamma: int
    modulus: int = field(init=False)

    def __post_init__(self) -> None:
        _check_odd_prime(self.q)
        if self.gamma < 1:
            raise PreconditionError(f"gamma must be >= 1, got {self.gamma}")
        object.__setattr__(self, "modulus", self.q**self.gamma)

    def __str__(self) -> str:
        return f"{self.q}^{self.gamma}"


@dataclass(frozen=True)
class Residue:
    """Canonical representative in [0, q**gamma) of an element mod q**gamma."""

    value: int
    modulus: PrimePowerModulus

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.modulus.modulus:
            raise PreconditionError(
                f"residue {self.value} outside [0, {self.modulus.modulus})"
            )


def mod_pow(base: int, exponent: int, m: PrimePowerModulus) -> Residue:
    """base**exponent reduced into [0, q**gamma).

    Negative bases are normalized immediately; the base need not be
    coprime to q.  O(log exponent) big-integer multiplications.
    """
    if exponent < 0:
        raise PreconditionError(f"exponent must be >= 0, got {exponent}")
    return Residue(pow(base, exponent, m.modulus), m)


def unit_circle_value(value: int, modulus: int) -> complex:
    """exp(2*pi*i*value/modulus) for exact integers 0 <= value < modulus.

    The ratio value/modulus is formed by one correctly-rounded conversion
    of the exact rational to binary floating point (CPython's int/int
    division), so the phase error is at most one ulp of the ratio even
    when the modulus exceeds 2**53.
    """
    ratio = value / modulus
    angle = math.tau * ratio
    return complex(math.cos(angle), math.sin(angle))


def unit_circle_point(x: Residue) -> complex:
    """Map a canonical residue to the unit circle: e(value/modulus)."""
    return unit_circle_value(x.value, x.modulus.modulus)

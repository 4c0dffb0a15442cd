"""Multiplicative-order structure of a unit g modulo powers of an odd prime q.

Once the order of g mod q and the valuation of g^order - 1 are known, the
order of g modulo every higher power q^n follows from a closed form, as
does the exact power of q dividing differences g^a - g^b.  This module
computes that structure and provides checkable forms of the two underlying
congruence facts, each evaluated by two independent routes.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import _check_odd_prime, padic_valuation
from .errors import PreconditionError, SelfCheckError

__all__ = [
    "OrderStructure",
    "order_structure",
    "order_mod_power",
    "excess_valuation",
    "valuation_difference",
    "congruence_criterion",
]


def _factorize(n: int) -> dict[int, int]:
    # trial division; moduli here stay in the thousands
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _divisors_ascending(n: int) -> list[int]:
    divs = [1]
    for p, e in _factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


@dataclass(frozen=True)
class OrderStructure:
    """Order of g mod q together with its exact lifting data.

    The defining identity, exact over the integers:

        g**order_mod_q - 1 == cofactor * q**lift_valuation

    with gcd(cofactor, q) = 1 and lift_valuation >= 1.  All fields are
    re-verified at construction, so instances can be trusted and shared
    freely across threads.
    """

    q: int
    g: int
    order_mod_q: int
    lift_valuation: int
    cofactor: int

    def __post_init__(self) -> None:
        _check_odd_prime(self.q)
        if self.g in (-1, 0, 1):
            raise PreconditionError(f"g must be an integer with |g| >= 2, got {self.g}")
        if self.g % self.q == 0:
            raise PreconditionError(f"g={self.g} must not be divisible by q={self.q}")
        tau, q = self.order_mod_q, self.q
        if tau < 1 or pow(self.g, tau, q) != 1:
            raise PreconditionError(f"{tau} is not the order of {self.g} mod {q}")
        for p in _factorize(tau):
            if pow(self.g, tau // p, q) == 1:
                raise PreconditionError(f"order of {self.g} mod {q} divides {tau // p}")
        if self.lift_valuation < 1 or gcd(self.cofactor, q) != 1:
            raise PreconditionError("lifting data out of range")
        if self.g**tau - 1 != self.cofactor * q**self.lift_valuation:
            raise PreconditionError("lifting decomposition does not hold exactly")


def order_structure(q: int, g: int) -> OrderStructure:
    """Compute the order structure of g modulo the odd prime q.

    The order is found by walking the divisors of q-1 in increasing order;
    the lifting data comes from the exact integer g**order - 1.
    """
    _check_odd_prime(q)
    if g in (-1, 0, 1):
        raise PreconditionError(f"g must be an integer with |g| >= 2, got {g}")
    if g % q == 0:
        raise PreconditionError(f"g={g} must not be divisible by q={q}")
    tau = next(d for d in _divisors_ascending(q - 1) if pow(g, d, q) == 1)
    diff = g**tau - 1
    lift_valuation = padic_valuation(q, diff)
    cofactor = diff // q**lift_valuation
    return OrderStructure(q, g, tau, lift_valuation, cofactor)


def order_mod_power(structure: OrderStructure, n: int) -> int:
    """Multiplicative order of g modulo q**n.

    Equals order_mod_q while n <= lift_valuation, then grows by a factor
    of q per extra power.
    """
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    if n <= structure.lift_valuation:
        return structure.order_mod_q
    return structure.q ** (n - structure.lift_valuation) * structure.order_mod_q


def excess_valuation(structure: OrderStructure, n: int) -> int:
    """How far the valuation of g**order_mod_power(n) - 1 overshoots n.

    The valuation is exactly n + excess; the excess is lift_valuation - n
    until n reaches lift_valuation and zero afterwards.
    """
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    return max(structure.lift_valuation - n, 0)


def valuation_difference(
    structure: OrderStructure, m: int, x: int, y: int
) -> int | None:
    """q-adic valuation of g**(m*x) - g**(m*y), or None when it is a unit.

    Two routes are always run: the closed form
    valuation(x-y) + valuation(m) + lift_valuation, and a definition-level
    scan testing divisibility by successive powers of q.  Disagreement
    raises SelfCheckError since it would mean the structure is wrong.
    """
    if x == y:
        raise PreconditionError("x and y must differ")
    if m < 1 or x < 0 or y < 0:
        raise PreconditionError(f"need m >= 1 and x, y >= 0, got m={m}, x={x}, y={y}")
    q, g = structure.q, structure.g
    if (pow(g, m * x, q) - pow(g, m * y, q)) % q != 0:
        return None
    formula = (
        padic_valuation(q, x - y)
        + padic_valuation(q, m)
        + structure.lift_valuation
    )
    direct = 1
    while True:
        mod = q ** (direct + 1)
        if (pow(g, m * x, mod) - pow(g, m * y, mod)) % mod != 0:
            break
        direct += 1
    if direct != formula:
        raise SelfCheckError(
            f"valuation mismatch for q={q}, g={g}, m={m}, x={x}, y={y}: "
            f"closed form {formula}, direct scan {direct}"
        )
    return formula


def congruence_criterion(
    structure: OrderStructure, r: int, s: int, n1: int, n2: int
) -> tuple[bool, bool]:
    """Evaluate both sides of the power-congruence equivalence.

    With t the order of g mod q**s and r >= s >= lift_valuation, the claim
    is that g**(n1*t) and g**(n2*t) agree mod q**r exactly when q**(r-s)
    divides n1 - n2.  Returns (left, right), each side computed on its own:
    the left by modular exponentiation, the right by divisibility.
    """
    if n1 < 0 or n2 < 0:
        raise PreconditionError(f"n1, n2 must be >= 0, got {n1}, {n2}")
    if not r >= s >= structure.lift_valuation:
        raise PreconditionError(
            f"need r >= s >= lift_valuation, got r={r}, s={s}, "
            f"lift_valuation={structure.lift_valuation}"
        )
    q = structure.q
    modulus = q**r
    t = order_mod_power(structure, s)
    lhs = pow(structure.g, n1 * t, modulus) == pow(structure.g, n2 * t, modulus)
    rhs = (n1 - n2) % q ** (r - s) == 0
    return lhs, rhs

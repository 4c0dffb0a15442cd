"""Exact desk-scale statistics of the base-q digits of Mersenne numbers.

The library computes, with exact integer and rational arithmetic wherever
a tolerance would otherwise creep in:

- exponential sums over prime powers and over Mersenne exponents, with
  prime-power moduli far beyond double precision;
- the multiplicative-order lifting structure of a unit modulo q^n;
- digit-window counts of 2^p - 1 in base q, their uniformity deviations,
  exact star discrepancy, and an Erdos-Turan upper bound certifying it;
- exact power-sum collision counts (mean-value counts) over small boxes.

All parallel paths reduce in a fixed order, so results are bit-identical
for every thread count.
"""

from .arith import (
    PrimePowerModulus,
    Residue,
    is_prime,
    mod_pow,
    padic_valuation,
    unit_circle_point,
    unit_circle_value,
)
from .digits import (
    DigitCountReport,
    DigitString,
    count_blocks,
    digit_block,
    discrepancy,
    erdos_turan_bound,
    fractional_part_check,
    mersenne_residues,
)
from .errors import PreconditionError, ResourceGuardError, SelfCheckError
from .expsum import (
    ExpSumResult,
    exp_sum_bound,
    log_ratio,
    mangoldt_exp_sum,
    mersenne_prime_sum,
)
from .order import (
    OrderStructure,
    congruence_criterion,
    excess_valuation,
    order_mod_power,
    order_structure,
    valuation_difference,
)
from .primes import (
    MangoldtTerm,
    PrimeRange,
    cached_primes,
    mangoldt_terms,
    pi_of,
    primes_up_to,
    read_prime_cache,
    write_prime_cache,
)
from .vmvt import VmvtInstance, ford_bound_log, monotonicity_check, vmvt_count

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "PrimePowerModulus",
    "Residue",
    "is_prime",
    "mod_pow",
    "padic_valuation",
    "unit_circle_point",
    "unit_circle_value",
    "DigitCountReport",
    "DigitString",
    "count_blocks",
    "digit_block",
    "discrepancy",
    "erdos_turan_bound",
    "fractional_part_check",
    "mersenne_residues",
    "PreconditionError",
    "ResourceGuardError",
    "SelfCheckError",
    "ExpSumResult",
    "exp_sum_bound",
    "log_ratio",
    "mangoldt_exp_sum",
    "mersenne_prime_sum",
    "OrderStructure",
    "congruence_criterion",
    "excess_valuation",
    "order_mod_power",
    "order_structure",
    "valuation_difference",
    "MangoldtTerm",
    "PrimeRange",
    "cached_primes",
    "mangoldt_terms",
    "pi_of",
    "primes_up_to",
    "read_prime_cache",
    "write_prime_cache",
    "VmvtInstance",
    "ford_bound_log",
    "monotonicity_check",
    "vmvt_count",
]

"""Sieves, Dirichlet convolution, sieve weights and exact constants."""

from symlab.arith.constants import (
    MobiusSquareSum,
    mobius_norm_sum,
    mobius_square_deviations,
    mobius_square_partial_sum,
)
from symlab.arith.divisors import (
    corollary_weight,
    corollary_weight_table,
    restricted_divisor_count,
    restricted_divisor_table,
)
from symlab.arith.factor import divisors, mobius_value
from symlab.arith.rational import (
    as_fraction,
    format_rational,
    integer_power_floor,
    integer_root,
    nearest_integer_distance,
    parse_rational,
)
from symlab.arith.sieves import sieve_divisor_k, sieve_mobius, unit_table
from symlab.arith.tables import FunctionTable, dirichlet_convolve
from symlab.arith.weights import (
    SieveWeights,
    convolve_with_unit,
    ramanujan_block_sum,
    ramanujan_coefficient,
)

__all__ = [
    "FunctionTable",
    "MobiusSquareSum",
    "SieveWeights",
    "as_fraction",
    "convolve_with_unit",
    "corollary_weight",
    "corollary_weight_table",
    "dirichlet_convolve",
    "divisors",
    "format_rational",
    "integer_power_floor",
    "integer_root",
    "mobius_norm_sum",
    "mobius_square_deviations",
    "mobius_square_partial_sum",
    "mobius_value",
    "nearest_integer_distance",
    "parse_rational",
    "ramanujan_block_sum",
    "ramanujan_coefficient",
    "restricted_divisor_count",
    "restricted_divisor_table",
    "sieve_divisor_k",
    "sieve_mobius",
    "unit_table",
]

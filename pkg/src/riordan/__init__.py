"""Exact calculus for Riordan arrays.

Truncated power series over exact rationals (or polynomials in a symbolic
exponent), the Riordan group with its fundamental action, A- and
B-sequence conversions, the square-root factorization of pseudo-involutions,
and partition-indexed expansions of [x^n] g^m.
"""

from .array import RiordanArray, is_pseudo_involution, series_action
from .expansion import (
    ExpansionRow,
    ExpansionTable,
    OddPartition,
    Partition,
    a_coeff,
    a_coeff_table,
    all_partitions,
    b_coeff,
    b_coeff_table,
    b_coeff_two_letter,
    b_coeff_via_binomial,
    binomial_series,
    binomial_type_checks,
    expand_a,
    expand_b,
    expand_b_regrouped,
    h_expansion_check,
    lagrange_check,
    odd_partitions,
    pascal_table,
    symbolic_coefficient,
    two_letter_action_check,
)
from .poly import MU, MuPoly
from .sequences import (
    ASequence,
    BSequence,
    Factorization,
    NoBSequenceError,
    a_from_g,
    b_from_factorization,
    b_from_g,
    factorize,
    g_from_a,
    g_from_b,
    verify_a_recurrence,
    verify_b_recurrence,
)
from .series import (
    OrderError,
    RingMismatchError,
    Series,
    compose,
    exp0,
    log1,
    mul_inverse,
    power,
    reversion,
    sqrt1,
    subst_neg,
)

__version__ = "0.1.0"

__all__ = [
    "ASequence",
    "BSequence",
    "ExpansionRow",
    "ExpansionTable",
    "Factorization",
    "MU",
    "MuPoly",
    "NoBSequenceError",
    "OddPartition",
    "OrderError",
    "Partition",
    "RingMismatchError",
    "RiordanArray",
    "Series",
    "a_coeff",
    "a_coeff_table",
    "a_from_g",
    "all_partitions",
    "b_coeff",
    "b_coeff_table",
    "b_coeff_two_letter",
    "b_coeff_via_binomial",
    "b_from_factorization",
    "b_from_g",
    "binomial_series",
    "binomial_type_checks",
    "compose",
    "exp0",
    "expand_a",
    "expand_b",
    "expand_b_regrouped",
    "factorize",
    "g_from_a",
    "g_from_b",
    "h_expansion_check",
    "is_pseudo_involution",
    "lagrange_check",
    "log1",
    "mul_inverse",
    "odd_partitions",
    "pascal_table",
    "power",
    "reversion",
    "series_action",
    "sqrt1",
    "subst_neg",
    "symbolic_coefficient",
    "two_letter_action_check",
    "verify_a_recurrence",
    "verify_b_recurrence",
]

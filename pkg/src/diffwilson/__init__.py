"""Exact verification of alternating difference-sum identities and the
Wilson congruence chain.

All arithmetic is exact: arbitrary-precision integers, ``fractions.Fraction``
rationals, and dense rational-coefficient polynomials represented as tuples.
Nothing here ever rounds, so every check is an equality, not a tolerance.
"""

from .exact import (
    POLY_ONE,
    POLY_ZERO,
    Poly,
    binomial,
    binomial_row,
    factorial,
    falling_factorial,
    format_poly,
    format_rational,
    monomial,
    parse_rational,
    poly_axpy,
    poly_const,
    poly_degree,
    poly_derivative,
    poly_eval,
    poly_from_coeffs,
    poly_is_zero,
    poly_mul,
    poly_shift,
    rational_make,
)
from .identity import (
    VerificationResult,
    backward_difference,
    derivative_collapse_check,
    difference_table,
    eval_difference_sum,
    eval_lower_power_sum,
    sample_rationals,
    symbolic_difference_poly,
    symbolic_lower_power_poly,
    verify_difference_sum,
    verify_lower_power_sum,
)
from .modular import (
    CongruenceEntry,
    CongruenceReport,
    PrimalityVerdict,
    alternating_power_sum_at_zero,
    binomial_row_mod,
    factorial_mod,
    fermat_check,
    identity_at_zero_mod,
    mod_pow,
    power_sum_mod,
    smallest_divisor,
    trial_division,
    wilson_test,
)

__version__ = "0.1.0"

__all__ = [
    "POLY_ONE",
    "POLY_ZERO",
    "Poly",
    "binomial",
    "binomial_row",
    "factorial",
    "falling_factorial",
    "format_poly",
    "format_rational",
    "monomial",
    "parse_rational",
    "poly_axpy",
    "poly_const",
    "poly_degree",
    "poly_derivative",
    "poly_eval",
    "poly_from_coeffs",
    "poly_is_zero",
    "poly_mul",
    "poly_shift",
    "rational_make",
    "VerificationResult",
    "backward_difference",
    "derivative_collapse_check",
    "difference_table",
    "eval_difference_sum",
    "eval_lower_power_sum",
    "sample_rationals",
    "symbolic_difference_poly",
    "symbolic_lower_power_poly",
    "verify_difference_sum",
    "verify_lower_power_sum",
    "CongruenceEntry",
    "CongruenceReport",
    "PrimalityVerdict",
    "alternating_power_sum_at_zero",
    "binomial_row_mod",
    "factorial_mod",
    "fermat_check",
    "identity_at_zero_mod",
    "mod_pow",
    "power_sum_mod",
    "smallest_divisor",
    "trial_division",
    "wilson_test",
    "__version__",
]

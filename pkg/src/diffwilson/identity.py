"""Alternating difference-sum identities, checked two independent ways.

The central object is the alternating sum

    sum_{i=0}^{n} (-1)^i * C(n, i) * (x - i)^n

which collapses to the constant n! for every n >= 0, independent of x.
Lowering the exponent to n - j for any 1 <= j <= n makes the same sum
vanish identically.  Each identity is checked along two routes that share
nothing beyond the exact core: literal pointwise evaluation in exact
rational arithmetic, and symbolic expansion into a polynomial whose
coefficients must cancel.  A disagreement between the routes can only be
an implementation bug, never rounding.

The alternating sum is also the n-th backward difference of X^n, which
``backward_difference`` realises operator-style for cross-checking.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    POLY_ZERO,
    Poly,
    binomial,
    factorial,
    falling_factorial,
    monomial,
    poly_axpy,
    poly_derivative,
    poly_is_zero,
    poly_shift,
)

__all__ = [
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
]


@dataclass(frozen=True)
class VerificationResult:
    """Record of one identity check; holds is true iff lhs == rhs exactly."""

    check: str
    n: int
    lhs: Fraction
    rhs: Fraction
    holds: bool
    j: int | None = None
    x: Fraction | None = None


def _require_n(n: int) -> None:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")


def _require_j(n: int, j: int) -> None:
    # n = 0 admits no valid j, so it is rejected here as well.
    if not 1 <= j <= n:
        raise ValueError(f"j must satisfy 1 <= j <= n, got j={j} with n={n}")


def eval_difference_sum(n: int, x: Fraction | int) -> Fraction:
    """The alternating sum at rational x, accumulated literally i = 0..n.

    Equals n! for every x, but no shortcut is taken: each (x - i)^n term
    is computed and summed in exact rational arithmetic.
    """
    _require_n(n)
    x = Fraction(x)
    total = Fraction(0)
    for i in range(n + 1):
        term = binomial(n, i) * (x - i) ** n
        total = total + term if i % 2 == 0 else total - term
    return total


def eval_lower_power_sum(n: int, j: int, x: Fraction | int) -> Fraction:
    """The alternating sum with exponent lowered to n - j; equals 0 for 1 <= j <= n."""
    _require_j(n, j)
    x = Fraction(x)
    total = Fraction(0)
    for i in range(n + 1):
        term = binomial(n, i) * (x - i) ** (n - j)
        total = total + term if i % 2 == 0 else total - term
    return total


def _alternating_expansion(n: int, exponent: int) -> Poly:
    # sum_i (-1)^i C(n,i) (X - i)^exponent with each power expanded via poly_shift.
    acc = POLY_ZERO
    base = monomial(exponent)
    for i in range(n + 1):
        shifted = poly_shift(base, -i)
        weight = binomial(n, i)
        acc = poly_axpy(weight if i % 2 == 0 else -weight, shifted, acc)
    return acc


def symbolic_difference_poly(n: int) -> Poly:
    """Symbolic expansion of the alternating sum as a polynomial in X.

    All coefficients above degree 0 cancel, leaving the constant n!.
    Callers must treat a non-constant result as a fatal internal error.
    """
    _require_n(n)
    return _alternating_expansion(n, n)


def symbolic_lower_power_poly(n: int, j: int) -> Poly:
    """Symbolic expansion with exponent n - j; must be the zero polynomial."""
    _require_j(n, j)
    return _alternating_expansion(n, n - j)


def backward_difference(p: Poly, order: int) -> Poly:
    """order-fold backward difference, where (del p)(X) = p(X) - p(X-1)."""
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    for _ in range(order):
        p = poly_axpy(-1, poly_shift(p, -1), p)
    return p


def verify_difference_sum(n: int, x: Fraction | int) -> VerificationResult:
    """Check eval_difference_sum(n, x) == n! at one rational point."""
    x = Fraction(x)
    lhs = eval_difference_sum(n, x)
    rhs = Fraction(factorial(n))
    return VerificationResult(
        check="difference-sum", n=n, x=x, lhs=lhs, rhs=rhs, holds=lhs == rhs
    )


def verify_lower_power_sum(n: int, j: int, x: Fraction | int) -> VerificationResult:
    """Check eval_lower_power_sum(n, j, x) == 0 at one rational point."""
    x = Fraction(x)
    lhs = eval_lower_power_sum(n, j, x)
    rhs = Fraction(0)
    return VerificationResult(
        check="lower-power-sum", n=n, j=j, x=x, lhs=lhs, rhs=rhs, holds=lhs == rhs
    )


def derivative_collapse_check(n: int, j: int) -> bool:
    """Cross-check the j-fold derivative route against the lower-power route.

    Differentiating the expanded alternating sum j times must give the zero
    polynomial, and must equal n(n-1)...(n-j+1) times the expanded
    lower-power sum.  Both sides are computed independently and compared
    exactly.
    """
    _require_j(n, j)
    lhs = symbolic_difference_poly(n)
    for _ in range(j):
        lhs = poly_derivative(lhs)
    rhs = poly_axpy(falling_factorial(n, j), symbolic_lower_power_poly(n, j), POLY_ZERO)
    return poly_is_zero(lhs) and lhs == rhs


def difference_table(degree: int, points: int) -> list[list[int]]:
    """Columns of the difference table of x**degree sampled at x = 0..points-1.

    Column 0 holds the sampled values; column m+1 holds consecutive
    differences of column m, so column m has points - m entries.  Column
    `degree` is constant factorial(degree).
    """
    if degree < 0:
        raise ValueError(f"degree must be non-negative, got {degree}")
    if points <= degree:
        raise ValueError(
            f"need at least degree+1 sample points, got points={points} for degree={degree}"
        )
    col = [x**degree for x in range(points)]
    cols = [col]
    for _ in range(degree):
        col = [b - a for a, b in zip(col, col[1:])]
        cols.append(col)
    return cols


def sample_rationals(rng: random.Random, count: int, bound: int = 1000) -> list[Fraction]:
    """count seeded random rationals with components within [-bound, bound].

    Numerators are drawn from [-bound, bound] and denominators from
    [1, bound]; canonical reduction can only shrink the components.
    """
    return [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(count)]

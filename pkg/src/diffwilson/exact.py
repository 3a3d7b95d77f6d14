"""Exact arithmetic core: integers, canonical rationals, dense polynomials.

Integers are plain Python ints, which are arbitrary-precision natively.
Rationals are ``fractions.Fraction``, which guarantees the canonical form
relied on throughout: reduced to lowest terms, positive denominator, zero
stored as 0/1.  Polynomials are immutable tuples of Fraction coefficients
in ascending power order with no trailing zero entries; the zero polynomial
is the empty tuple.  Every operation returns canonical values, so ``==``
on any two results is exact mathematical equality.

Serialization contract (consumed by the CLI): integers as decimal strings,
rationals as ``"num/den"`` strings, polynomials as ascending coefficient
arrays of rational strings.
"""

from __future__ import annotations

import re
from fractions import Fraction

__all__ = [
    "Poly",
    "POLY_ONE",
    "POLY_ZERO",
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
]

Poly = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)

POLY_ZERO: Poly = ()
POLY_ONE: Poly = (_ONE,)


def factorial(n: int) -> int:
    """n! = 1*2*...*n by iterated product; factorial(0) == 1."""
    if n < 0:
        raise ValueError(f"factorial is undefined for negative n, got {n}")
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def falling_factorial(n: int, j: int) -> int:
    """n*(n-1)*...*(n-j+1), the product of j descending factors from n."""
    if j < 0:
        raise ValueError(f"falling factorial needs j >= 0, got {j}")
    out = 1
    for k in range(j):
        out *= n - k
    return out


def binomial(n: int, i: int) -> int:
    """C(n, i) by the multiplicative formula with running exact division.

    Out-of-range i (i < 0 or i > n) gives 0, so alternating sums can index
    freely.
    """
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if i < 0 or i > n:
        return 0
    i = min(i, n - i)
    out = 1
    for k in range(1, i + 1):
        # out * (n - i + k) is divisible by k: k consecutive integers.
        out = out * (n - i + k) // k
    return out


def binomial_row(n: int) -> list[int]:
    """Row n of Pascal's triangle, [C(n,0), ..., C(n,n)], built incrementally.

    Same multiplicative recurrence as binomial(); one pass instead of n calls.
    """
    if n < 0:
        raise ValueError(f"binomial row needs n >= 0, got {n}")
    row = [1]
    for i in range(1, n + 1):
        row.append(row[-1] * (n - i + 1) // i)
    return row


def rational_make(num: int, den: int) -> Fraction:
    """Canonical rational num/den: positive denominator, reduced by gcd."""
    if den == 0:
        raise ValueError("rational denominator must be nonzero")
    return Fraction(num, den)


_RATIONAL_RE = re.compile(r"\A([+-]?\d+)(?:/([+-]?\d+))?\Z")


def parse_rational(text: str) -> Fraction:
    """Parse 'num' or 'num/den' into a canonical rational.

    Floating-point literals are rejected; every accepted input is exact.
    """
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not an integer or num/den rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    return rational_make(num, den)


def format_rational(q: Fraction) -> str:
    """Serialize a rational as 'num/den' (canonical, so den > 0)."""
    return f"{q.numerator}/{q.denominator}"


def format_poly(p: Poly) -> list[str]:
    """Ascending coefficient array of rational strings; [] for the zero polynomial."""
    return [format_rational(c) for c in p]


def _canonical(coeffs: list[Fraction]) -> Poly:
    """Strip trailing zero coefficients and freeze."""
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


def poly_from_coeffs(coeffs) -> Poly:
    """Build a canonical polynomial from ascending int/Fraction coefficients."""
    return _canonical([Fraction(c) for c in coeffs])


def poly_const(c: Fraction | int) -> Poly:
    """The constant polynomial c."""
    c = Fraction(c)
    return (c,) if c else POLY_ZERO


def monomial(n: int) -> Poly:
    """X**n."""
    if n < 0:
        raise ValueError(f"monomial needs n >= 0, got {n}")
    return (_ZERO,) * n + (_ONE,)


def poly_is_zero(p: Poly) -> bool:
    """True for the zero polynomial (whose degree is undefined)."""
    return not p


def poly_degree(p: Poly) -> int:
    """Degree of a nonzero polynomial; the zero polynomial has no degree."""
    if not p:
        raise ValueError("the zero polynomial has no degree")
    return len(p) - 1


def poly_axpy(a: Fraction | int, p: Poly, q: Poly) -> Poly:
    """a*p + q, coefficientwise."""
    a = Fraction(a)
    if not a:
        return q
    out = list(q) + [_ZERO] * (len(p) - len(q))
    for k, c in enumerate(p):
        out[k] += a * c
    return _canonical(out)


def poly_mul(p: Poly, q: Poly) -> Poly:
    """Exact convolution product."""
    if not p or not q:
        return POLY_ZERO
    out = [_ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _canonical(out)


def poly_shift(p: Poly, c: Fraction | int) -> Poly:
    """p(X + c), each (X + c)**k expanded exactly by the binomial theorem."""
    c = Fraction(c)
    if not c or len(p) <= 1:
        return p
    out = [_ZERO] * len(p)
    for k, a in enumerate(p):
        if not a:
            continue
        row = binomial_row(k)
        ck = _ONE  # c**(k - j), j descending from k
        for j in range(k, -1, -1):
            out[j] += a * row[j] * ck
            ck *= c
    return _canonical(out)


def poly_derivative(p: Poly) -> Poly:
    """Formal derivative; constants map to the zero polynomial."""
    return _canonical([k * c for k, c in enumerate(p)][1:])


def poly_eval(p: Poly, x: Fraction | int) -> Fraction:
    """Value of p at x by Horner's rule."""
    x = Fraction(x)
    acc = _ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc

"""Second, independent computation path: build f_p from f_{p-1} by exact
symbolic integration.

The recurrence is

    f_0(n) = n
    f_p(n) = p * integral(f_{p-1}, 0, n) + (1 - p * integral(f_{p-1}, 0, 1)) * n

for p > 0.  Both definite integrals come from one antiderivative with zero
constant term: over [0, n] it is the antiderivative itself, over [0, 1] it
is the antiderivative evaluated at 1.

Polynomials here are dense tuples of rationals, ascending by power, with
trailing zeros trimmed; the zero polynomial is the empty tuple.  This
module does not participate in the operation-count cost model, which
applies to the direct algorithm only.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .direct import CoefficientRow
from .rationals import ONE, ZERO, Rational

__all__ = [
    "Polynomial",
    "polynomial",
    "poly_add",
    "poly_scale",
    "poly_eval",
    "integrate_polynomial",
    "eval_at_one",
    "integration_step",
    "integration_coefficients",
    "row_to_polynomial",
    "power_sum_polynomial_to_row",
]

Polynomial = tuple[Rational, ...]


def polynomial(coeffs: Iterable[Rational | int]) -> Polynomial:
    """Normalize a coefficient sequence: exact rationals, trailing zeros cut."""
    values = [Fraction(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for k, c in enumerate(g):
        out[k] += c
    return polynomial(out)


def poly_scale(f: Polynomial, factor: Rational) -> Polynomial:
    return polynomial(c * factor for c in f)


def poly_eval(f: Polynomial, x: Rational) -> Rational:
    """Exact value of f at x, by Horner's scheme."""
    acc = ZERO
    for c in reversed(f):
        acc = acc * x + c
    return acc


def integrate_polynomial(f: Polynomial) -> Polynomial:
    """Antiderivative with zero constant term: c_k t^k maps to c_k/(k+1) t^(k+1)."""
    if not f:
        return ()
    return (ZERO,) + tuple(c / (k + 1) for k, c in enumerate(f))


def eval_at_one(f: Polynomial) -> Rational:
    """Value of f at 1, i.e. the sum of its coefficients."""
    return sum(f, start=ZERO)


def integration_step(f_prev: Polynomial, p: int) -> Polynomial:
    """One recurrence step: the power-sum polynomial of degree p + 1 from
    the one of degree p (f_prev represents f_{p-1}).

    Computes p * F plus the linear correction (1 - p * F(1)) * n, where F
    is the antiderivative of f_prev with zero constant.
    """
    if p < 1:
        raise ValueError(f"integration recurrence needs p >= 1, got {p}")
    antiderivative = integrate_polynomial(f_prev)
    correction = ONE - p * eval_at_one(antiderivative)
    return poly_add(poly_scale(antiderivative, Fraction(p)), (ZERO, correction))


def integration_coefficients(p: int) -> CoefficientRow:
    """Coefficient row for exponent p via the integration recurrence.

    Starts from f_0(n) = n and applies integration_step p times, then drops
    the constant coefficient, which a correct run leaves exactly zero.
    """
    if p < 0:
        raise ValueError(f"exponent must be >= 0, got {p}")
    f: Polynomial = (ZERO, ONE)
    for i in range(1, p + 1):
        f = integration_step(f, i)
    return power_sum_polynomial_to_row(f)


def row_to_polynomial(row: CoefficientRow) -> Polynomial:
    """The row as a polynomial in n, with the implicit zero constant added."""
    return polynomial((ZERO,) + row.coefficients)


def power_sum_polynomial_to_row(f: Polynomial) -> CoefficientRow:
    """Convert a power-sum polynomial to its coefficient row.

    Fails loudly on a nonzero constant coefficient: power sums have none,
    so its presence means the computation that produced f is broken.
    """
    if len(f) < 2:
        raise ValueError(f"not a power-sum polynomial (degree too low): {f!r}")
    if f[0] != 0:
        raise ValueError(
            f"power-sum polynomial has nonzero constant coefficient {f[0]}; "
            "refusing to drop it"
        )
    return CoefficientRow(len(f) - 2, f[1:])

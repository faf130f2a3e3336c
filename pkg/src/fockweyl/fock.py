"""Polynomials as elements of the Segal-Bargmann space A^2(C^n, e^{-|z|^2}).

Monomials are orthogonal with ``||z^alpha||^2 = pi^n alpha!``, so inner
products are computed exactly from coefficients.  Every value returned here
is expressed in units of ``pi^n``: the true inner product is
``value * pi**n``.
"""

from __future__ import annotations

import math

from .poly import SparsePoly, check_dims
from .scalar import ZERO, GaussianRational, multiindex_factorial

UNIT = "pi^n"


class FockPoly(SparsePoly):
    """Polynomial in z_1..z_n viewed as an element of the Fock space."""

    __slots__ = ()
    var = "z"


def fock_inner(u: FockPoly, v: FockPoly) -> GaussianRational:
    """(u, v) / pi^n, linear in u and conjugate-linear in v."""
    check_dims(u, v)
    small, large = (u, v) if len(u) <= len(v) else (v, u)
    total = ZERO
    for alpha in small.coeffs:
        if alpha in large.coeffs:
            total += u.coeffs[alpha] * v.coeffs[alpha].conj() * multiindex_factorial(alpha)
    return total


def norm_sq(u: FockPoly) -> GaussianRational:
    """||u||^2 / pi^n; always real and nonnegative."""
    return GaussianRational(sum((c.abs2() * multiindex_factorial(a) for a, c in u.coeffs.items()),
                                start=ZERO.re))


def to_physical(value: GaussianRational, n: int) -> complex:
    """Convert a value in units of pi^n back to an ordinary complex number."""
    return complex(value) * math.pi ** n

"""Independent reference computations built on sympy.

Nothing here goes through the package's operator or inner-product code:
polynomials become sympy expressions, derivatives come from ``sympy.diff``
and Gaussian integrals from an explicit polar-coordinate integration.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import sympy as sp

from fockweyl.scalar import GaussianRational

Z = sp.symbols("z1:5")


def scalar(c: GaussianRational) -> sp.Expr:
    return sp.Rational(c.re.numerator, c.re.denominator) + sp.I * sp.Rational(
        c.im.numerator, c.im.denominator)


def from_sympy(x) -> GaussianRational:
    re, im = (sp.Rational(part) for part in sp.expand(x).as_real_imag())
    return GaussianRational(Fraction(re.p, re.q), Fraction(im.p, im.q))


def expr(poly) -> sp.Expr:
    """SparsePoly -> sympy expression in z1..zn (symbols use the same letters)."""
    out = sp.Integer(0)
    for alpha, c in poly:
        term = scalar(c)
        for j, a in enumerate(alpha):
            term *= Z[j] ** a
        out += term
    return sp.expand(out)


def apply_weyl(op, f: sp.Expr) -> sp.Expr:
    """Apply sum c z^a d^b termwise with sympy differentiation."""
    out = sp.Integer(0)
    for (alpha, beta), c in op:
        g = f
        for j, b in enumerate(beta):
            if b:
                g = sp.diff(g, Z[j], b)
        for j, a in enumerate(alpha):
            g *= Z[j] ** a
        out += scalar(c) * g
    return sp.expand(out)


def apply_symbol(sym, f: sp.Expr) -> sp.Expr:
    """p(d) f for a symbol given as a SparsePoly in w."""
    out = sp.Integer(0)
    for beta, c in sym:
        g = f
        for j, b in enumerate(beta):
            if b:
                g = sp.diff(g, Z[j], b)
        out += scalar(c) * g
    return sp.expand(out)


def mult_star(sym, f: sp.Expr) -> sp.Expr:
    """p*(z) f: multiplication by the symbol with conjugated coefficients."""
    out = sp.Integer(0)
    for alpha, c in sym:
        g = scalar(c.conj())
        for j, a in enumerate(alpha):
            g *= Z[j] ** a
        out += g * f
    return sp.expand(out)


@lru_cache(maxsize=None)
def _moment(a: int, b: int) -> sp.Expr:
    """(1/pi) * integral over C of z^a conj(z)^b e^{-|z|^2}, by polar coordinates."""
    r, t = sp.symbols("r t", positive=True)
    angular = sp.integrate(sp.exp(sp.I * (a - b) * t), (t, 0, 2 * sp.pi))
    if angular == 0:
        return sp.Integer(0)
    radial = sp.integrate(r ** (a + b + 1) * sp.exp(-r ** 2), (r, 0, sp.oo))
    return sp.simplify(angular * radial / sp.pi)


def gaussian_inner(f: sp.Expr, g: sp.Expr, n: int) -> sp.Expr:
    """(f, g) in units of pi^n via termwise Gaussian moments."""
    zs = Z[:n]
    pf = sp.Poly(sp.expand(f), *zs) if f != 0 else None
    pg = sp.Poly(sp.expand(g), *zs) if g != 0 else None
    if pf is None or pg is None:
        return sp.Integer(0)
    total = sp.Integer(0)
    for ma, ca in pf.terms():
        for mb, cb in pg.terms():
            m = sp.Integer(1)
            for a, b in zip(ma, mb):
                m *= _moment(a, b)
                if m == 0:
                    break
            total += ca * sp.conjugate(cb) * m
    return sp.expand(total)


def gaussian_norm_sq(f: sp.Expr, n: int) -> sp.Expr:
    return gaussian_inner(f, f, n)


def quadratic_form(symbols, comps, n: int) -> sp.Expr:
    """sum_{j,k} ([p_k, p_j*] u_j, u_k) from the definition of the commutator."""
    total = sp.Integer(0)
    for j, uj in enumerate(comps):
        for k, uk in enumerate(comps):
            comm = apply_symbol(symbols[k], mult_star(symbols[j], uj)) - \
                mult_star(symbols[j], apply_symbol(symbols[k], uj))
            total += gaussian_inner(comm, uk, n)
    return sp.expand(total)

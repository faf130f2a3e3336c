"""The Weyl algebra in n variables, kept in normal order.

An operator is a finite sum of terms ``c * z^alpha d^beta`` with every
multiplication to the left of every derivative.  Products are brought back
to normal order by repeatedly rewriting ``d_j z_j -> z_j d_j + 1``;
:func:`hamil_expansion` computes the same products from symbol derivatives
and serves as an independent check on that rewriting.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, Mapping, Tuple

from .fock import FockPoly
from .poly import DimensionError, SparsePoly, check_dims, format_monomial, format_term, join_terms
from .scalar import (ZERO, GaussianRational, MultiIndex, factorial, mi_add, mi_le,
                     mi_sub, multiindex_factorial, multiindices)

Key = Tuple[MultiIndex, MultiIndex]


class SymbolPoly(SparsePoly):
    """Polynomial symbol p(w); ``diff_op(p)`` is the operator p(d/dz)."""

    __slots__ = ()
    var = "w"


class WeylOp:
    """Normal-ordered element of the Weyl algebra."""

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Key, object] = None):
        clean: Dict[Key, GaussianRational] = {}
        for (alpha, beta), c in (terms or {}).items():
            alpha, beta = tuple(alpha), tuple(beta)
            if len(alpha) != n or len(beta) != n or min(alpha + beta, default=0) < 0:
                raise ValueError(f"bad term key {(alpha, beta)} for n={n}")
            c = GaussianRational.coerce(c)
            clean[(alpha, beta)] = clean.get((alpha, beta), ZERO) + c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", {k: c for k, c in clean.items() if c})
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("WeylOp is immutable")

    # constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "WeylOp":
        return cls(n)

    @classmethod
    def identity(cls, n: int, c=1) -> "WeylOp":
        return cls(n, {((0,) * n, (0,) * n): c})

    @classmethod
    def z(cls, n: int, j: int) -> "WeylOp":
        """Multiplication by z_j (1-based)."""
        if not 1 <= j <= n:
            raise DimensionError(f"variable index {j} outside 1..{n}")
        return cls(n, {(_unit(n, j), (0,) * n): 1})

    @classmethod
    def d(cls, n: int, j: int) -> "WeylOp":
        """Differentiation d/dz_j (1-based)."""
        if not 1 <= j <= n:
            raise DimensionError(f"variable index {j} outside 1..{n}")
        return cls(n, {((0,) * n, _unit(n, j)): 1})

    # queries --------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_diff_only(self) -> bool:
        return all(not any(a) for a, _ in self.terms)

    def is_mult_only(self) -> bool:
        return all(not any(b) for _, b in self.terms)

    def order(self) -> int:
        """Highest derivative order; -1 for the zero operator."""
        return max((sum(b) for _, b in self.terms), default=-1)

    def __iter__(self) -> Iterator[Tuple[Key, GaussianRational]]:
        return iter(sorted(self.terms.items(), key=_print_key))

    def __len__(self):
        return len(self.terms)

    def to_symbol(self) -> SymbolPoly:
        if not self.is_diff_only():
            raise ValueError(f"{self} is not a constant-coefficient differential operator")
        return SymbolPoly(self.n, {b: c for (_, b), c in self.terms.items()})

    def to_poly(self) -> FockPoly:
        if not self.is_mult_only():
            raise ValueError(f"{self} is not a multiplication operator")
        return FockPoly(self.n, {a: c for (a, _), c in self.terms.items()})

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, WeylOp):
            other = WeylOp.identity(self.n, other)
        check_dims(self, other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return WeylOp(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return WeylOp(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "WeylOp":
        c = GaussianRational.coerce(c)
        return WeylOp(self.n, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, WeylOp):
            return multiply(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = WeylOp.identity(self.n)
        for _ in range(k):
            out = multiply(out, self)
        return out

    def __call__(self, f: FockPoly) -> FockPoly:
        return apply(self, f)

    # equality / text ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, WeylOp):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, GaussianRational)):
            return self == WeylOp.identity(self.n, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n, frozenset(self.terms.items()))))
        return self._hash

    def __str__(self):
        return join_terms(format_term(c, _format_key(a, b)) for (a, b), c in self)

    def __repr__(self):
        return f"WeylOp(n={self.n}, '{self}')"

    def to_json(self) -> list:
        return [{"alpha": list(a), "beta": list(b), "re": str(c.re), "im": str(c.im)}
                for (a, b), c in self]


def _unit(n, j):
    return tuple(1 if i == j - 1 else 0 for i in range(n))


def _print_key(item):
    (a, b), _ = item
    return (sum(a) + sum(b), [-x for x in a + b])


def _format_key(alpha, beta) -> str:
    zs = format_monomial(alpha, "z")
    ds = format_monomial(beta, "d")
    return "*".join(s for s in (zs, ds) if s)


# conversions ---------------------------------------------------------------

def diff_op(p: SymbolPoly) -> WeylOp:
    """p(d/dz) as an operator."""
    return WeylOp(p.n, {((0,) * p.n, a): c for a, c in p.coeffs.items()})


def mult_op(f: SparsePoly) -> WeylOp:
    """Multiplication by the polynomial f(z) (coefficients unchanged)."""
    return WeylOp(f.n, {(a, (0,) * f.n): c for a, c in f.coeffs.items()})


def star_op(p: SymbolPoly) -> WeylOp:
    """p*: multiplication by p with conjugated coefficients."""
    return mult_op(p.conj())


# normal ordering -----------------------------------------------------------

@lru_cache(maxsize=None)
def _push_one(c: int) -> Tuple[Tuple[Tuple[int, int], int], ...]:
    """Normal form of d z^c in one variable, via d z -> z d + 1 letter by letter.

    Returns ((z_power, d_power), coefficient) pairs.
    """
    if c == 0:
        return (((0, 1), 1),)
    # d z^c = (z d + 1) z^(c-1) = z (d z^(c-1)) + z^(c-1)
    out: Dict[Tuple[int, int], int] = {(c - 1, 0): 1}
    for (s, t), k in _push_one(c - 1):
        out[(s + 1, t)] = out.get((s + 1, t), 0) + k
    return tuple(out.items())


@lru_cache(maxsize=None)
def _reorder(b: int, c: int) -> Tuple[Tuple[Tuple[int, int], int], ...]:
    """Normal form of d^b z^c in one variable."""
    if b == 0 or c == 0:
        return (((c, b), 1),)
    out: Dict[Tuple[int, int], int] = {}
    # d^b z^c = d^(b-1) (d z^c), then push the remaining derivatives through
    for (s, t), k in _push_one(c):
        for (s2, t2), k2 in _reorder(b - 1, s):
            key = (s2, t2 + t)
            out[key] = out.get(key, 0) + k * k2
    return tuple((key, v) for key, v in out.items() if v)


def multiply(P: WeylOp, Q: WeylOp) -> WeylOp:
    """Normal-ordered composition P o Q."""
    n = check_dims(P, Q)
    out: Dict[Key, GaussianRational] = {}
    for (a, b), cp in P.terms.items():
        for (c, d), cq in Q.terms.items():
            per_var = [_reorder(b[j], c[j]) for j in range(n)]
            for combo in product(*per_var):
                coef = cp * cq
                k = 1
                zs, ds = [], []
                for j, ((s, t), w) in enumerate(combo):
                    k *= w
                    zs.append(a[j] + s)
                    ds.append(t + d[j])
                key = (tuple(zs), tuple(ds))
                out[key] = out.get(key, ZERO) + coef * k
    return WeylOp(n, out)


def commutator(P: WeylOp, Q: WeylOp) -> WeylOp:
    """[P, Q] = PQ - QP."""
    return multiply(P, Q) - multiply(Q, P)


def adjoint(P: WeylOp) -> WeylOp:
    """Formal adjoint in the Fock inner product: z_j <-> d_j, conjugate coefficients.

    (c z^a d^b)* = conj(c) d^b* z^a* = conj(c) z^b d^a, already normal ordered.
    """
    return WeylOp(P.n, {(b, a): c.conj() for (a, b), c in P.terms.items()})


def symbol_derivative(p: SymbolPoly, alpha: MultiIndex) -> SymbolPoly:
    return p.derivative(alpha)


def derivative_sum(Q: SymbolPoly, P: SparsePoly, min_order: int = 0) -> WeylOp:
    """sum_{|alpha| >= min_order} (1/alpha!) P^(alpha)(z) Q^(alpha)(d).

    The mult-then-diff products are already in normal order, so nothing is
    rewritten here.
    """
    n = check_dims(Q, P)
    top = min(Q.degree(), P.degree())
    out: Dict[Key, GaussianRational] = {}
    for alpha in multiindices(n, top, min_order):
        Pa, Qa = P.derivative(alpha), Q.derivative(alpha)
        if Pa.is_zero() or Qa.is_zero():
            continue
        w = GaussianRational(1) / multiindex_factorial(alpha)
        for a, c in Pa.coeffs.items():
            for b, d in Qa.coeffs.items():
                out[(a, b)] = out.get((a, b), ZERO) + w * c * d
    return WeylOp(n, out)


def hamil_expansion(Q: SymbolPoly, P: SparsePoly) -> WeylOp:
    """Q(d) P(z) written as sum_alpha (1/alpha!) P^(alpha)(z) Q^(alpha)(d)."""
    return derivative_sum(Q, P, 0)


def apply(P: WeylOp, f: FockPoly) -> FockPoly:
    """Apply the operator to a polynomial, exactly."""
    n = check_dims(P, f)
    out: Dict[MultiIndex, GaussianRational] = {}
    for (a, b), c in P.terms.items():
        for g, cf in f.coeffs.items():
            if not mi_le(b, g):
                continue
            w = 1
            for gj, bj in zip(g, b):
                w *= factorial(gj) // factorial(gj - bj)
            key = mi_add(mi_sub(g, b), a)
            out[key] = out.get(key, ZERO) + c * cf * w
    return FockPoly(n, out)


def parse_operator(text: str, n: int = None) -> WeylOp:
    from .dsl import parse_operator as _parse
    return _parse(text, n)


__all__ = ["SymbolPoly", "WeylOp", "DimensionError", "multiply", "commutator", "adjoint",
           "symbol_derivative", "hamil_expansion", "derivative_sum", "apply", "diff_op",
           "mult_op", "star_op", "parse_operator"]

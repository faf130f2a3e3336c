"""Sparse polynomials over Q(i) in a fixed number of variables.

:class:`SparsePoly` holds the arithmetic; :class:`~fockweyl.fock.FockPoly`
(functions of z) and :class:`~fockweyl.weyl.SymbolPoly` (symbols in w)
only differ in how they print and what they are used for.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple

from .scalar import (ZERO, GaussianRational, MultiIndex, factorial, format_scalar,
                     mi_add, mi_le, mi_sub)


class DimensionError(ValueError):
    """Objects living in different numbers of variables were combined."""


def check_dims(*objs) -> int:
    ns = {o.n for o in objs}
    if len(ns) != 1:
        raise DimensionError(f"dimension mismatch: {sorted(ns)}")
    return ns.pop()


def _clean(n: int, coeffs: Mapping) -> Dict[MultiIndex, GaussianRational]:
    out = {}
    for alpha, c in coeffs.items():
        alpha = tuple(int(a) for a in alpha)
        if len(alpha) != n or any(a < 0 for a in alpha):
            raise ValueError(f"bad multiindex {alpha} for n={n}")
        c = GaussianRational.coerce(c)
        if c:
            out[alpha] = out.get(alpha, ZERO) + c
    return {a: c for a, c in out.items() if c}


def format_monomial(alpha: MultiIndex, var: str) -> str:
    parts = []
    for j, a in enumerate(alpha, start=1):
        if a == 1:
            parts.append(f"{var}{j}")
        elif a > 1:
            parts.append(f"{var}{j}^{a}")
    return "*".join(parts)


def format_term(c: GaussianRational, mono: str) -> Tuple[str, str]:
    """Split a term into (sign, body) for joining with ' + ' / ' - '."""
    if c.im == 0 or c.re == 0:
        lead = c.re if c.im == 0 else c.im
        sign = "-" if lead < 0 else "+"
        a = -c if lead < 0 else c
        cs = format_scalar(a)
        if not mono:
            return sign, cs
        if cs == "1":
            return sign, mono
        return sign, f"{cs}*{mono}"
    cs = f"({format_scalar(c)})"
    return "+", cs if not mono else f"{cs}*{mono}"


def join_terms(pieces: Iterable[Tuple[str, str]]) -> str:
    out = ""
    for sign, body in pieces:
        if not out:
            out = body if sign == "+" else f"-{body}"
        else:
            out += f" {sign} {body}"
    return out or "0"


class SparsePoly:
    """Polynomial sum_alpha c_alpha x^alpha with no stored zero coefficients."""

    __slots__ = ("n", "coeffs", "_hash")
    var = "x"

    def __init__(self, n: int, coeffs: Mapping = None):
        if n < 0:
            raise ValueError("dimension must be nonnegative")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", _clean(n, coeffs or {}))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    # constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, n: int):
        return cls(n)

    @classmethod
    def constant(cls, n: int, c=1):
        return cls(n, {(0,) * n: c})

    @classmethod
    def monomial(cls, alpha: MultiIndex, c=1):
        return cls(len(alpha), {tuple(alpha): c})

    @classmethod
    def variable(cls, n: int, j: int):
        """The coordinate x_j, ``j`` 1-based."""
        alpha = [0] * n
        alpha[j - 1] = 1
        return cls(n, {tuple(alpha): 1})

    def _new(self, coeffs):
        return type(self)(self.n, coeffs)

    # queries --------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(a) for a in self.coeffs), default=-1)

    def __getitem__(self, alpha: MultiIndex) -> GaussianRational:
        return self.coeffs.get(tuple(alpha), ZERO)

    def __iter__(self) -> Iterator[Tuple[MultiIndex, GaussianRational]]:
        return iter(sorted(self.coeffs.items(), key=lambda t: (-sum(t[0]), [-a for a in t[0]])))

    def __len__(self):
        return len(self.coeffs)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, SparsePoly):
            other = self.constant(self.n, other)
        check_dims(self, other)
        out = dict(self.coeffs)
        for a, c in other.coeffs.items():
            out[a] = out.get(a, ZERO) + c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({a: -c for a, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "SparsePoly":
        c = GaussianRational.coerce(c)
        return self._new({a: c * v for a, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, SparsePoly):
            check_dims(self, other)
            out: Dict[MultiIndex, GaussianRational] = {}
            for a, c in self.coeffs.items():
                for b, d in other.coeffs.items():
                    k = mi_add(a, b)
                    out[k] = out.get(k, ZERO) + c * d
            return self._new(out)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        out = self.constant(self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    def conj(self):
        """Conjugate every coefficient."""
        return self._new({a: c.conj() for a, c in self.coeffs.items()})

    def derivative(self, alpha: MultiIndex):
        """Exact partial derivative d^alpha."""
        alpha = tuple(alpha)
        if len(alpha) != self.n:
            raise DimensionError(f"multiindex {alpha} has wrong length for n={self.n}")
        out = {}
        for g, c in self.coeffs.items():
            if mi_le(alpha, g):
                k = mi_sub(g, alpha)
                w = 1
                for gi, ai in zip(g, alpha):
                    w *= factorial(gi) // factorial(gi - ai)
                out[k] = c * w
        return self._new(out)

    def diff(self, j: int, times: int = 1):
        """Derivative in variable ``j`` (1-based)."""
        alpha = [0] * self.n
        alpha[j - 1] = times
        return self.derivative(tuple(alpha))

    # equality -------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return type(self) is type(other) and self.n == other.n and self.coeffs == other.coeffs
        if isinstance(other, (int, GaussianRational)) or hasattr(other, "numerator"):
            return self.coeffs == _clean(self.n, {(0,) * self.n: other})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((type(self).__name__, self.n,
                                                    frozenset(self.coeffs.items()))))
        return self._hash

    def __str__(self):
        return join_terms(format_term(c, format_monomial(a, self.var)) for a, c in self)

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, '{self}')"

    # serialization --------------------------------------------------------

    def to_json(self) -> list:
        return [{"alpha": list(a), "re": str(c.re), "im": str(c.im)} for a, c in self]

    @classmethod
    def from_json(cls, n: int, data: list):
        return cls(n, {tuple(t["alpha"]): GaussianRational(Fraction(t["re"]), Fraction(t["im"]))
                       for t in data})

"""Exact Gaussian-rational scalars and multiindex helpers.

Every symbolic computation in the package runs over Q(i): complex numbers
whose real and imaginary parts are :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from itertools import product
from typing import Iterator, Tuple, Union

MultiIndex = Tuple[int, ...]
Rational = Union[int, Fraction]


class GaussianRational:
    """Immutable complex number with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Rational = 0, im: Rational = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        if isinstance(x, str):
            return parse_scalar(x)
        raise TypeError(f"cannot convert {type(x).__name__} to GaussianRational")

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        d = o.abs2()
        if d == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        n = self * o.conj()
        return GaussianRational(n.re / d, n.im / d)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (1 / self) ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """|x|^2 as an exact rational."""
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    # comparison / hashing -------------------------------------------------

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        return format_scalar(self)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def _imag_part(im: Fraction) -> str:
    if im == 1:
        return "i"
    if im == -1:
        return "-i"
    return f"{im}*i"


def format_scalar(x: GaussianRational) -> str:
    """Canonical text form, e.g. ``1``, ``-i``, ``3/2*i``, ``1/2 - 3*i``."""
    if x.im == 0:
        return str(x.re)
    if x.re == 0:
        return _imag_part(x.im)
    sign = "+" if x.im > 0 else "-"
    return f"{x.re} {sign} {_imag_part(abs(x.im))}"


_NUM = r"\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^(?P<re>[+-]?{_NUM})?"
    rf"(?P<im>(?(re)[+-]|[+-]?)(?:{_NUM}\*?)?i)?$"
)


def parse_scalar(text: str) -> GaussianRational:
    """Parse the canonical scalar text form (whitespace is ignored)."""
    s = "".join(text.split())
    m = _SCALAR_RE.match(s)
    if not s or m is None:
        raise ValueError(f"invalid scalar literal: {text!r}")
    re_part = Fraction(m.group("re")) if m.group("re") else Fraction(0)
    im_part = Fraction(0)
    if m.group("im"):
        body = m.group("im")[:-1].rstrip("*")
        if body in ("", "+"):
            im_part = Fraction(1)
        elif body == "-":
            im_part = Fraction(-1)
        else:
            im_part = Fraction(body)
    return GaussianRational(re_part, im_part)


def rational_str(q: Fraction) -> str:
    return str(q)


# integers and multiindices --------------------------------------------------

def factorial(k: int) -> int:
    if k < 0:
        raise ValueError("factorial of a negative integer")
    return math.factorial(k)


def binomial(k: int, l: int) -> int:
    """C(k, l), zero when l > k."""
    if l < 0 or l > k:
        return 0
    return math.comb(k, l)


def multiindex_factorial(alpha: MultiIndex) -> int:
    return math.prod(math.factorial(a) for a in alpha)


def mi_degree(alpha: MultiIndex) -> int:
    return sum(alpha)


def mi_le(beta: MultiIndex, alpha: MultiIndex) -> bool:
    return all(b <= a for a, b in zip(alpha, beta))


def mi_add(alpha: MultiIndex, beta: MultiIndex) -> MultiIndex:
    return tuple(a + b for a, b in zip(alpha, beta))


def mi_sub(alpha: MultiIndex, beta: MultiIndex) -> MultiIndex:
    if not mi_le(beta, alpha):
        raise ValueError(f"{beta} is not <= {alpha}")
    return tuple(a - b for a, b in zip(alpha, beta))


def unit(n: int, j: int) -> MultiIndex:
    """Unit multiindex e_j (``j`` is 0-based)."""
    return tuple(1 if i == j else 0 for i in range(n))


def multiindices(n: int, max_degree: int, min_degree: int = 0) -> Iterator[MultiIndex]:
    """All multiindices of length n with min_degree <= |alpha| <= max_degree, graded order."""
    for d in range(min_degree, max_degree + 1):
        for alpha in sorted((a for a in product(range(d + 1), repeat=n) if sum(a) == d),
                            reverse=True):
            yield alpha

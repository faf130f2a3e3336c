"""(p,0)-forms with polynomial coefficients and the operators D, D*, box.

Form indices are 1-based increasing tuples, ``(1, 3)`` meaning dz_1 ^ dz_3.
Moving dz_k into increasing position inside dz_J costs the sign
(-1)^#{j in J : j < k}; D* uses the same sign for v_{kJ}, which makes the
two operators adjoint (checked by :func:`duality_check`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, List, Mapping, Sequence, Tuple

from .fock import FockPoly, fock_inner, norm_sq
from .poly import DimensionError
from .scalar import ZERO, GaussianRational
from .weyl import SymbolPoly, WeylOp, apply, diff_op, star_op

Index = Tuple[int, ...]


def increasing_indices(n: int, p: int) -> List[Index]:
    return list(combinations(range(1, n + 1), p))


def wedge_sign(k: int, J: Index) -> int:
    """Sign of dz_k ^ dz_J relative to dz_{sort(k, J)}; 0 if k is already in J."""
    if k in J:
        return 0
    return -1 if sum(1 for j in J if j < k) % 2 else 1


class PForm:
    """sum'_J u_J dz_J over increasing J with |J| = p."""

    __slots__ = ("n", "p", "components")

    def __init__(self, n: int, p: int, components: Mapping[Index, FockPoly] = None):
        if not 0 <= p <= n:
            raise ValueError(f"form degree p={p} outside 0..{n}")
        comps: Dict[Index, FockPoly] = {}
        for J, u in (components or {}).items():
            J = tuple(J)
            if len(J) != p or list(J) != sorted(set(J)) or (J and not 1 <= J[0] <= J[-1] <= n):
                raise ValueError(f"{J} is not an increasing index of length {p} in 1..{n}")
            if u.n != n:
                raise DimensionError(f"component {J} lives in n={u.n}, form in n={n}")
            if not u.is_zero():
                comps[J] = comps[J] + u if J in comps else u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "components", {J: u for J, u in comps.items() if not u.is_zero()})

    def __setattr__(self, name, value):
        raise AttributeError("PForm is immutable")

    @classmethod
    def from_list(cls, n: int, p: int, polys: Sequence[FockPoly]) -> "PForm":
        """Components listed in lexicographic order of the increasing indices."""
        idx = increasing_indices(n, p)
        if len(polys) != len(idx):
            raise ValueError(f"a ({p},0)-form in n={n} has {len(idx)} components, got {len(polys)}")
        return cls(n, p, dict(zip(idx, polys)))

    @classmethod
    def zero(cls, n: int, p: int) -> "PForm":
        return cls(n, p)

    def __getitem__(self, J) -> FockPoly:
        J = tuple(J) if not isinstance(J, int) else (J,)
        return self.components.get(J, FockPoly(self.n))

    def to_list(self) -> List[FockPoly]:
        return [self[J] for J in increasing_indices(self.n, self.p)]

    def is_zero(self) -> bool:
        return not self.components

    def _check(self, other: "PForm"):
        if (self.n, self.p) != (other.n, other.p):
            raise DimensionError(f"forms of type (n={self.n}, p={self.p}) and "
                                 f"(n={other.n}, p={other.p}) do not match")

    def __add__(self, other: "PForm") -> "PForm":
        self._check(other)
        out = dict(self.components)
        for J, u in other.components.items():
            out[J] = out[J] + u if J in out else u
        return PForm(self.n, self.p, out)

    def __neg__(self):
        return PForm(self.n, self.p, {J: -u for J, u in self.components.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "PForm":
        return PForm(self.n, self.p, {J: u.scale(c) for J, u in self.components.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, PForm):
            return NotImplemented
        return (self.n, self.p, self.components) == (other.n, other.p, other.components)

    def __hash__(self):
        return hash((self.n, self.p, frozenset(self.components.items())))

    def __str__(self):
        if not self.components:
            return "0"
        if self.p == 0:
            return str(self.components[()])
        parts = []
        for J in increasing_indices(self.n, self.p):
            if J in self.components:
                dz = "^".join(f"dz{j}" for j in J)
                parts.append(f"({self.components[J]})*{dz}")
        return " + ".join(parts)

    def __repr__(self):
        return f"PForm(n={self.n}, p={self.p}, {self})"

    def to_json(self) -> dict:
        return {"n": self.n, "p": self.p,
                "components": [{"J": list(J), "poly": self.components[J].to_json()}
                               for J in increasing_indices(self.n, self.p) if J in self.components]}

    @classmethod
    def from_json(cls, data: dict) -> "PForm":
        n, p = int(data["n"]), int(data["p"])
        return cls(n, p, {tuple(c["J"]): FockPoly.from_json(n, c["poly"])
                          for c in data.get("components", [])})


def form_inner(u: PForm, v: PForm) -> GaussianRational:
    """(u, v) = sum'_J (u_J, v_J), in units of pi^n."""
    u._check(v)
    total = ZERO
    for J, uj in u.components.items():
        if J in v.components:
            total += fock_inner(uj, v.components[J])
    return total


def form_norm_sq(u: PForm) -> GaussianRational:
    return sum((norm_sq(c) for c in u.components.values()), ZERO)


@dataclass(frozen=True)
class OperatorFamily:
    """The n constant-coefficient operators p_1(d), ..., p_n(d) defining D."""

    n: int
    symbols: Tuple[SymbolPoly, ...] = field()

    def __post_init__(self):
        syms = tuple(self.symbols)
        object.__setattr__(self, "symbols", syms)
        if len(syms) != self.n:
            raise DimensionError(f"need exactly n={self.n} operators, got {len(syms)}")
        for s in syms:
            if s.n != self.n:
                raise DimensionError(f"symbol {s} lives in n={s.n}, family in n={self.n}")

    @classmethod
    def from_dsl(cls, text: str, n: int = None) -> "OperatorFamily":
        from .dsl import parse_family
        syms = parse_family(text, n)
        return cls(len(syms), tuple(syms))

    @cached_property
    def ops(self) -> Tuple[WeylOp, ...]:
        """p_k(d) as operators."""
        return tuple(diff_op(s) for s in self.symbols)

    @cached_property
    def star_ops(self) -> Tuple[WeylOp, ...]:
        """p_j* as multiplication operators."""
        return tuple(star_op(s) for s in self.symbols)

    def __str__(self):
        return "; ".join(str(op) for op in self.ops)


def _check_family(F: OperatorFamily, u: PForm):
    if F.n != u.n:
        raise DimensionError(f"family in n={F.n} applied to a form in n={u.n}")


def _accumulate(out: Dict[Index, FockPoly], J: Index, f: FockPoly):
    if not f.is_zero():
        out[J] = out[J] + f if J in out else f


def d_apply(F: OperatorFamily, u: PForm) -> PForm:
    """Du = sum'_J sum_k p_k(u_J) dz_k ^ dz_J."""
    _check_family(F, u)
    if u.p >= u.n:
        raise ValueError(f"D is not defined on ({u.p},0)-forms in n={u.n}: no "
                         f"({u.p + 1},0)-forms exist")
    out: Dict[Index, FockPoly] = {}
    for J, uJ in u.components.items():
        for k in range(1, u.n + 1):
            s = wedge_sign(k, J)
            if s:
                K = tuple(sorted(J + (k,)))
                _accumulate(out, K, apply(F.ops[k - 1], uJ).scale(s))
    return PForm(u.n, u.p + 1, out)


def dstar_apply(F: OperatorFamily, v: PForm) -> PForm:
    """D*v = sum'_K sum_j p_j* v_{jK} dz_K."""
    _check_family(F, v)
    if v.p == 0:
        raise ValueError("D* is not defined on (0,0)-forms")
    out: Dict[Index, FockPoly] = {}
    for Jfull, vJ in v.components.items():
        # v_{jK} with j in Jfull, K = Jfull minus j
        for j in Jfull:
            K = tuple(x for x in Jfull if x != j)
            s = wedge_sign(j, K)
            _accumulate(out, K, apply(F.star_ops[j - 1], vJ).scale(s))
    return PForm(v.n, v.p - 1, out)


def box_apply(F: OperatorFamily, u: PForm) -> PForm:
    """(D*D + DD*)u, dropping whichever piece does not exist at p = 0 or p = n."""
    _check_family(F, u)
    result = PForm.zero(u.n, u.p)
    if u.p < u.n:
        result = result + dstar_apply(F, d_apply(F, u))
    if u.p > 0:
        result = result + d_apply(F, dstar_apply(F, u))
    return result


@dataclass(frozen=True)
class DualityResult:
    holds: bool
    lhs: GaussianRational  # (Du, v)
    rhs: GaussianRational  # (u, D*v)


def duality_check(F: OperatorFamily, u: PForm, v: PForm) -> DualityResult:
    """Compare (Du, v) with (u, D*v) exactly."""
    _check_family(F, u)
    if v.n != u.n or v.p != u.p + 1:
        raise DimensionError(f"need v of degree {u.p + 1} in n={u.n}, got p={v.p}, n={v.n}")
    lhs = form_inner(d_apply(F, u), v)
    rhs = form_inner(u, dstar_apply(F, v))
    return DualityResult(lhs == rhs, lhs, rhs)

"""Commutator quadratic form, energy identity and the n=2 coercivity conditions.

The quadratic form of a family p_1..p_n on a (1,0)-form u is

    Q(u) = sum_{j,k} ([p_k, p_j*] u_j, u_k),

evaluated exactly in units of pi^n.  When the hypotheses checked by
:func:`check_conditions` hold, Q(u) >= min(C1, C2) ||u||^2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .fock import UNIT, FockPoly, fock_inner, norm_sq
from .forms import OperatorFamily, PForm, d_apply, dstar_apply, form_norm_sq
from .poly import DimensionError
from .scalar import (ONE, ZERO, GaussianRational, I, binomial, factorial, multiindex_factorial,
                     multiindices, unit)
from .weyl import (SymbolPoly, WeylOp, apply, commutator, derivative_sum, diff_op, multiply,
                   star_op)


def _scalar_json(x: GaussianRational) -> dict:
    return {"re": str(x.re), "im": str(x.im)}


@dataclass
class QuadraticFormReport:
    n: int
    value: GaussianRational
    per_pair: Dict[Tuple[int, int], GaussianRational]
    decomposition: Optional[List[Tuple[str, GaussianRational]]] = None

    @property
    def sign(self) -> int:
        return (self.value.re > 0) - (self.value.re < 0)

    def to_json(self) -> dict:
        out = {"unit": UNIT, "n": self.n, "value": _scalar_json(self.value),
               "per_pair": [{"j": j, "k": k, "value": _scalar_json(v)}
                            for (j, k), v in sorted(self.per_pair.items())]}
        if self.decomposition is not None:
            out["decomposition"] = [{"name": name, "value": _scalar_json(v)}
                                    for name, v in self.decomposition]
        return out


@lru_cache(maxsize=64)
def commutator_table(F: OperatorFamily) -> Tuple[Tuple[WeylOp, ...], ...]:
    """table[j][k] = [p_k, p_j*] (0-based)."""
    return tuple(tuple(commutator(F.ops[k], F.star_ops[j]) for k in range(F.n))
                 for j in range(F.n))


def _one_form(F: OperatorFamily, u: PForm):
    if u.n != F.n:
        raise DimensionError(f"family in n={F.n}, form in n={u.n}")
    if u.p != 1:
        raise ValueError(f"the quadratic form acts on (1,0)-forms, got p={u.p}")


def quadratic_form(F: OperatorFamily, u: PForm) -> QuadraticFormReport:
    _one_form(F, u)
    table = commutator_table(F)
    comps = u.to_list()
    per_pair = {}
    for j in range(F.n):
        if comps[j].is_zero():
            continue
        for k in range(F.n):
            if comps[k].is_zero():
                continue
            per_pair[(j + 1, k + 1)] = fock_inner(apply(table[j][k], comps[j]), comps[k])
    value = sum(per_pair.values(), ZERO)
    if not value.is_real():
        raise ArithmeticError(f"quadratic form is not real: {value}")
    return QuadraticFormReport(F.n, value, per_pair)


# energy identity -------------------------------------------------------------

@dataclass(frozen=True)
class EnergyIdentity:
    holds: bool
    du_sq: GaussianRational       # ||Du||^2
    dstar_sq: GaussianRational    # ||D*u||^2
    grad_sq: GaussianRational     # sum_{j,k} ||p_k(u_j)||^2
    q: GaussianRational           # commutator quadratic form

    @property
    def lhs(self):
        return self.du_sq + self.dstar_sq

    @property
    def rhs(self):
        return self.grad_sq + self.q

    def to_json(self) -> dict:
        return {"unit": UNIT, "holds": self.holds,
                **{k: _scalar_json(getattr(self, k))
                   for k in ("du_sq", "dstar_sq", "grad_sq", "q", "lhs", "rhs")}}


def energy_identity_check(F: OperatorFamily, u: PForm) -> EnergyIdentity:
    """||Du||^2 + ||D*u||^2 against sum ||p_k(u_j)||^2 + Q(u)."""
    _one_form(F, u)
    du_sq = form_norm_sq(d_apply(F, u)) if F.n > 1 else ZERO
    dstar_sq = form_norm_sq(dstar_apply(F, u))
    grad_sq = sum((norm_sq(apply(op, uj)) for uj in u.to_list() for op in F.ops), ZERO)
    q = quadratic_form(F, u).value
    return EnergyIdentity(du_sq + dstar_sq == grad_sq + q, du_sq, dstar_sq, grad_sq, q)


# one variable ------------------------------------------------------------------

@dataclass(frozen=True)
class IdentityCheck:
    holds: bool
    lhs: GaussianRational
    rhs: GaussianRational


def _coeff_symbol(coeffs: Sequence) -> SymbolPoly:
    return SymbolPoly(1, {(k,): GaussianRational.coerce(a) for k, a in enumerate(coeffs)})


def commutator_identity_1d(coeffs: Sequence, u: FockPoly) -> IdentityCheck:
    """([p, p*]u, u) against sum_l l! || sum_{k>=l} C(k,l) a_k u^(k-l) ||^2.

    ``coeffs`` are a_0..a_m of p = sum a_k d^k/dz^k.
    """
    if u.n != 1:
        raise DimensionError("the one-variable identity needs n=1")
    a = [GaussianRational.coerce(c) for c in coeffs]
    p = _coeff_symbol(a)
    lhs = fock_inner(apply(commutator(diff_op(p), star_op(p)), u), u)
    derivs = [u.diff(1, r) if r else u for r in range(len(a))]
    rhs = ZERO
    for l in range(1, len(a)):
        inner = FockPoly(1)
        for k in range(l, len(a)):
            inner = inner + derivs[k - l].scale(a[k] * binomial(k, l))
        rhs += norm_sq(inner) * factorial(l)
    return IdentityCheck(lhs == rhs, lhs, rhs)


def commutator_expansion(p: SymbolPoly, q: SymbolPoly) -> WeylOp:
    """[p(d), q*(z)] assembled as sum_{|alpha|>=1} (1/alpha!) q^(alpha)*(z) p^(alpha)(d)."""
    return derivative_sum(p, q.conj(), 1)


# n = 2 conditions --------------------------------------------------------------

THEOREMS = ("dim2", "dim23")


@dataclass
class ConditionVerdict:
    theorem: str
    sign: Optional[int]
    first_order_ok: bool
    second_order_ok: bool
    C1: Fraction
    C2: Fraction
    estimate_constant: Optional[Fraction]
    failures: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.estimate_constant is not None

    def to_json(self) -> dict:
        return {"theorem": self.theorem, "passed": self.passed, "sign": self.sign,
                "first_order_ok": self.first_order_ok, "second_order_ok": self.second_order_ok,
                "C1": str(self.C1), "C2": str(self.C2),
                "estimate_constant": None if self.estimate_constant is None
                else str(self.estimate_constant),
                "failures": list(self.failures), "notes": list(self.notes)}


def _check_pair(p1: SymbolPoly, p2: SymbolPoly):
    if p1.n != 2 or p2.n != 2:
        raise DimensionError("the two-variable conditions need n = 2")
    for j, p in ((1, p1), (2, p2)):
        if p.degree() > 2:
            raise ValueError(f"p{j} = {p} has degree {p.degree()} > 2")


def _first_derivs(p1, p2) -> Dict[Tuple[int, int], SymbolPoly]:
    """(j, i) -> p_j^(e_i)."""
    return {(j, i): p.derivative(unit(2, i - 1)) for j, p in ((1, p1), (2, p2)) for i in (1, 2)}


def _identity_pairs(theorem: str):
    """Each identity as ((j, k, i), (j', k', i')): p_j^(e_i)* p_k^(e_i) = s p_j'^(e_i')* p_k'^(e_i')."""
    if theorem == "dim2":
        return [((2, 1, 1), (1, 2, 2)), ((1, 2, 1), (2, 1, 2))]
    if theorem == "dim23":
        return [((2, 1, 1), (1, 2, 1)), ((1, 2, 2), (2, 1, 2))]
    raise ValueError(f"unknown theorem {theorem!r}; expected one of {THEOREMS}")


def _label(j, k, i):
    return f"p{j}^(e{i})* p{k}^(e{i})"


def check_conditions(p1: SymbolPoly, p2: SymbolPoly, theorem: str = "dim2") -> ConditionVerdict:
    """Check the first- and second-order hypotheses of the two-variable estimate."""
    _check_pair(p1, p2)
    d1 = _first_derivs(p1, p2)

    def prod(j, k, i):
        return multiply(star_op(d1[(j, i)]), diff_op(d1[(k, i)]))

    pairs = [(prod(*l), prod(*r), l, r) for l, r in _identity_pairs(theorem)]
    failures, notes = [], []
    sign = None
    for s in (1, -1):
        if all(L == R.scale(s) for L, R, _, _ in pairs):
            sign = s
            break
    if sign is None:
        per_identity = []
        for L, R, l, r in pairs:
            ok = [s for s in (1, -1) if L == R.scale(s)]
            per_identity.append(ok)
            if not ok:
                failures.append(f"{_label(*l)} = {L}  is not  +/- {_label(*r)} = {R}")
        if all(per_identity):
            failures.append("identities hold only with different signs "
                            f"{[ok[0] for ok in per_identity]}; one common sign is required")

    C = [Fraction(0), Fraction(0)]
    second_ok = True
    syms = (p1, p2)
    for alpha in multiindices(2, 2, 2):
        a = [p.derivative(alpha) for p in syms]
        w = Fraction(1, multiindex_factorial(alpha))
        for j in range(2):
            for k in range(2):
                c = multiply(star_op(a[j]), diff_op(a[k]))
                if j != k:
                    if not c.is_zero():
                        second_ok = False
                        failures.append(f"p{j + 1}^{alpha}* p{k + 1}^{alpha} = {c} != 0")
                else:
                    # |a_j|^2, a real nonnegative constant
                    C[j] += w * c.terms.get(((0, 0), (0, 0)), ZERO).re
    for j in range(2):
        if C[j] == 0:
            second_ok = False
            notes.append(f"second order degenerate: C{j + 1} = 0 (p{j + 1} has no degree-2 part)")

    first_ok = sign is not None
    constant = 1 / min(C) if first_ok and second_ok else None
    return ConditionVerdict(theorem, sign, first_ok, second_ok, C[0], C[1], constant,
                            failures, notes)


def check_conditions_dim2(p1: SymbolPoly, p2: SymbolPoly) -> List[ConditionVerdict]:
    """Verdicts for both sets of hypotheses, ``[dim2, dim23]``."""
    return [check_conditions(p1, p2, t) for t in THEOREMS]


def decompose_quadratic_form(p1: SymbolPoly, p2: SymbolPoly, u: PForm,
                             verdict: ConditionVerdict) -> QuadraticFormReport:
    """Split Q(u) into C1||u1||^2 + C2||u2||^2 + two first-order squares."""
    if not verdict.passed:
        raise ValueError(f"conditions for {verdict.theorem} do not hold; no decomposition")
    F = OperatorFamily(2, (p1, p2))
    report = quadratic_form(F, u)
    u1, u2 = u.to_list()
    d1 = _first_derivs(p1, p2)
    s = verdict.sign
    sgn = "+" if s > 0 else "-"
    pieces = [("C1*|u1|^2", norm_sq(u1) * verdict.C1),
              ("C2*|u2|^2", norm_sq(u2) * verdict.C2)]
    for i in (1, 2):
        w = apply(diff_op(d1[(1, i)]), u1) + apply(diff_op(d1[(2, i)]), u2).scale(s)
        pieces.append((f"|p1^(e{i}) u1 {sgn} p2^(e{i}) u2|^2", norm_sq(w)))
    total = sum((v for _, v in pieces), ZERO)
    if total != report.value:
        raise ArithmeticError(f"decomposition sums to {total}, quadratic form is {report.value}")
    report.decomposition = pieces
    return report


# counterexample search ---------------------------------------------------------

FOURTH_ROOTS = (ONE, -ONE, I, -I)


def coefficient_grid(kind: str = "units") -> Tuple[GaussianRational, ...]:
    """``units``: fourth roots of unity; ``rational``: {1, 2, 1/2} times the units."""
    if kind == "units":
        return FOURTH_ROOTS
    if kind == "rational":
        return tuple(u * r for r in (1, 2, Fraction(1, 2)) for u in FOURTH_ROOTS)
    raise ValueError(f"unknown coefficient grid {kind!r}")


@dataclass(frozen=True)
class Counterexample:
    u: PForm
    value: GaussianRational

    def to_json(self) -> dict:
        return {"form": self.u.to_json(), "value": _scalar_json(self.value), "unit": UNIT}


def scan_counterexample(p1: SymbolPoly, p2: SymbolPoly, max_degree: int,
                        coefficients: Sequence = FOURTH_ROOTS) -> List[Counterexample]:
    """All forms c1 z^a dz1 + c2 z^b dz2 (|a|, |b| <= max_degree) with Q < 0, most negative first.

    Forms differing only by a global unimodular factor give the same Q and
    are reported once.
    """
    F = OperatorFamily(2, (p1, p2))
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    table = commutator_table(F)
    monos = list(multiindices(2, max_degree))
    images = [[{m: apply(table[j][k], FockPoly.monomial(m)) for m in monos} for k in range(2)]
              for j in range(2)]

    def A(j, k, mu, nu):
        return images[j][k][mu][nu] * multiindex_factorial(nu)

    coeffs = [GaussianRational.coerce(c) for c in coefficients]
    combos = []
    seen_ratio = set()
    for c1 in coeffs:
        for c2 in coeffs:
            key = (c1.abs2(), c2 / c1) if c1 else (0, c2.abs2())
            if key not in seen_ratio:
                seen_ratio.add(key)
                combos.append((c1, c2, c1.abs2(), c2.abs2(), c1 * c2.conj()))
    hits = []
    for alpha in monos:
        a11 = A(0, 0, alpha, alpha)
        for beta in monos:
            a22 = A(1, 1, beta, beta)
            a12 = A(0, 1, alpha, beta)
            a21 = A(1, 0, beta, alpha)
            for c1, c2, n1, n2, c12 in combos:
                q = a11 * n1 + a22 * n2
                if a12 or a21:
                    q = q + c12 * a12 + c12.conj() * a21
                if q.re < 0:
                    u = PForm.from_list(2, 1, [FockPoly.monomial(alpha, c1),
                                               FockPoly.monomial(beta, c2)])
                    hits.append((q.re, alpha, beta, str(c1), str(c2), Counterexample(u, q)))
    hits.sort(key=lambda h: h[:5])
    return [h[-1] for h in hits]

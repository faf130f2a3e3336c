"""Acceptance criteria, one marked group per criterion.

Run with ``pytest tests/test_acceptance.py``; the terminal summary lists one
PASS/FAIL line per criterion.  Tolerances are pinned as module constants.
"""

import math
import random
import time
from fractions import Fraction

import numpy as np
import pytest

from displays import DISPLAYS, FAMILIES
from fockweyl import sampling
from fockweyl.dsl import parse_poly
from fockweyl.estimates import (check_conditions, commutator_expansion, commutator_identity_1d,
                                energy_identity_check, quadratic_form, scan_counterexample)
from fockweyl.forms import OperatorFamily, PForm, d_apply, duality_check, form_norm_sq
from fockweyl.scalar import GaussianRational
from fockweyl.spectral import coercivity_bound_1d, solve_canonical_1d, to_monomial
from fockweyl.weyl import commutator, diff_op, hamil_expansion, mult_op, multiply, star_op

SEED = 20240601
EXAMPLE_D_RUNTIME = 1.0            # seconds, all three values together
SPECTRAL_RUNTIME = 10.0            # seconds, criterion 9 in total
SPECTRAL_TOL = 1e-9                # lambda_min slack against m!|a_m|^2
CANONICAL_TOL = 1e-9               # residual and orthogonality defect
CANONICAL_CUTOFF = 16


def criterion(number, title):
    return pytest.mark.criterion(number, title)


def fam(key):
    return OperatorFamily.from_dsl(FAMILIES[key])


def rng(offset):
    return random.Random(SEED + offset)


# 1 ----------------------------------------------------------------------------------

@criterion(1, "example (d) values (n-1)!(7-n) at n = 8, 9, 10, exact, < 1 s")
def test_example_d_values():
    F = fam("d")
    start = time.perf_counter()
    got = {}
    for n in (8, 9, 10):
        u = PForm.from_list(2, 1, [parse_poly(f"z2^{n}", 2), parse_poly(f"-z2^{n - 1}", 2)])
        got[n] = quadratic_form(F, u).value
    elapsed = time.perf_counter() - start
    assert elapsed < EXAMPLE_D_RUNTIME
    expected = {n: GaussianRational(math.factorial(n - 1) * (7 - n)) for n in (8, 9, 10)}
    assert got == expected, f"computed {[str(v) for v in got.values()]}"


# 2 ----------------------------------------------------------------------------------

@criterion(2, "closed forms for (a), (b), (c) on 50 random forms of degree <= 4, exact")
@pytest.mark.parametrize("key", ["a", "b", "c"])
def test_closed_forms(key):
    F, display, r = fam(key), DISPLAYS[key], rng(2)
    for _ in range(50):
        u = sampling.form(r, 2, 1, 4)
        assert quadratic_form(F, u).value == display(*u.to_list()), str(u)


# 3 ----------------------------------------------------------------------------------

@criterion(3, "condition checkers: (a),(b) dim2 (1,4); (c) dim23 (2,2); (d) fails both")
def test_conditions():
    for key in ("a", "b"):
        v = check_conditions(*fam(key).symbols, "dim2")
        assert v.passed and (v.C1, v.C2) == (1, 4)
    v = check_conditions(*fam("c").symbols, "dim23")
    assert v.passed and (v.C1, v.C2) == (2, 2)
    for theorem in ("dim2", "dim23"):
        assert not check_conditions(*fam("d").symbols, theorem).passed


# 4 ----------------------------------------------------------------------------------

@criterion(4, "one-variable commutator identity, 200 trials, m <= 4, deg u <= 6, exact")
def test_commutator_identity_1d():
    r = rng(4)
    for _ in range(200):
        m = r.randint(0, 4)
        coeffs = [sampling.gaussian_rational(r) for _ in range(m + 1)]
        u = sampling.poly(r, 1, 6, density=0.6)
        res = commutator_identity_1d(coeffs, u)
        assert res.holds, (coeffs, str(u), str(res.lhs), str(res.rhs))


# 5 ----------------------------------------------------------------------------------

@criterion(5, "product and commutator expansions, 200 trials each, n <= 3, deg <= 3")
def test_hamil_expansion():
    r = rng(5)
    for _ in range(200):
        n = r.randint(1, 3)
        Q, P = sampling.symbol(r, n, 3), sampling.symbol(r, n, 3)
        assert hamil_expansion(Q, P) == multiply(diff_op(Q), mult_op(P)), (str(Q), str(P))


@criterion(5, "product and commutator expansions, 200 trials each, n <= 3, deg <= 3")
def test_commutator_expansion():
    r = rng(55)
    for _ in range(200):
        n = r.randint(1, 3)
        p, q = sampling.symbol(r, n, 3), sampling.symbol(r, n, 3)
        assert commutator_expansion(p, q) == commutator(diff_op(p), star_op(q)), (str(p), str(q))


# 6 ----------------------------------------------------------------------------------

@criterion(6, "D^2 = 0 and (Du, v) = (u, D*v), 200 trials, n <= 3, all p, exact")
def test_d_squared():
    r = rng(6)
    for _ in range(200):
        n = r.randint(2, 3)
        F = sampling.family(r, n, 3)
        u = sampling.form(r, n, r.randint(0, n - 2), 4)
        assert d_apply(F, d_apply(F, u)).is_zero(), (str(F), str(u))


@criterion(6, "D^2 = 0 and (Du, v) = (u, D*v), 200 trials, n <= 3, all p, exact")
def test_duality():
    r = rng(66)
    for _ in range(200):
        n = r.randint(1, 3)
        F = sampling.family(r, n, 3)
        p = r.randint(0, n - 1)
        u, v = sampling.form(r, n, p, 4), sampling.form(r, n, p + 1, 4)
        assert duality_check(F, u, v).holds, (str(F), str(u), str(v))


# 7 ----------------------------------------------------------------------------------

@criterion(7, "energy identity, 200 trials, n <= 3, exact")
def test_energy_identity():
    r = rng(7)
    for _ in range(200):
        n = r.randint(1, 3)
        F = sampling.family(r, n, 3)
        u = sampling.form(r, n, 1, 4)
        res = energy_identity_check(F, u)
        assert res.holds, (str(F), str(u), str(res.lhs), str(res.rhs))


# 8 ----------------------------------------------------------------------------------

CONSTANTS = {"a": Fraction(1), "b": Fraction(1), "c": Fraction(2)}


@criterion(8, "coercivity for (a),(b),(c) on 100 random forms; scan to degree 6 is empty")
@pytest.mark.parametrize("key", ["a", "b", "c"])
def test_coercivity(key):
    F, c, r = fam(key), CONSTANTS[key], rng(8)
    for _ in range(100):
        u = sampling.form(r, 2, 1, 4)
        q = quadratic_form(F, u).value
        assert q.is_real() and q.re >= c * form_norm_sq(u).re, str(u)


@criterion(8, "coercivity for (a),(b),(c) on 100 random forms; scan to degree 6 is empty")
@pytest.mark.parametrize("key", ["a", "b", "c"])
def test_scan_empty(key):
    assert scan_counterexample(*fam(key).symbols, 6) == []


# 9 ----------------------------------------------------------------------------------

@criterion(9, "lambda_min >= m!|a_m|^2 - 1e-9, 20 vectors, m <= 3, N in {8,16,24}, < 10 s")
def test_spectral_bound():
    g = np.random.default_rng(SEED)
    start = time.perf_counter()
    for _ in range(20):
        m = int(g.integers(1, 4))
        a = g.normal(size=m + 1) + 1j * g.normal(size=m + 1)
        for N in (8, 16, 24):
            res = coercivity_bound_1d(a, N, tol=SPECTRAL_TOL)
            assert res.lambda_min >= res.bound - SPECTRAL_TOL, (a, N, res.lambda_min, res.bound)
    assert time.perf_counter() - start < SPECTRAL_RUNTIME


# 10 ---------------------------------------------------------------------------------

@criterion(10, "canonical solutions z and z^2/2 exact at cutoff 16; bound on 50 random data")
@pytest.mark.parametrize("coeffs, expected", [([0, 1], [0, 1, 0]), ([0, 0, 1], [0, 0, 0.5])])
def test_canonical_exact(coeffs, expected):
    s = solve_canonical_1d(coeffs, [1], CANONICAL_CUTOFF)
    assert s.residual_norm < CANONICAL_TOL and s.orthogonality_defect < CANONICAL_TOL
    np.testing.assert_allclose(s.u0_monomial()[:3], expected, atol=CANONICAL_TOL)


@criterion(10, "canonical solutions z and z^2/2 exact at cutoff 16; bound on 50 random data")
def test_canonical_bound():
    g = np.random.default_rng(SEED + 10)
    for _ in range(50):
        m = int(g.integers(1, 4))
        a = g.normal(size=m + 1) + 1j * g.normal(size=m + 1)
        alpha = g.normal(size=5) + 1j * g.normal(size=5)
        s = solve_canonical_1d(a, list(to_monomial(alpha)), CANONICAL_CUTOFF)
        assert s.bound_ok, (a, s.norm_ratio, s.constant)

"""Seeded random objects for randomized identity checks."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .fock import FockPoly
from .forms import OperatorFamily, PForm, increasing_indices
from .scalar import GaussianRational, multiindices
from .weyl import SymbolPoly, WeylOp


def rational(rng: random.Random, bound: int = 5) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, 3))


def gaussian_rational(rng: random.Random, bound: int = 5) -> GaussianRational:
    if rng.random() < 0.5:
        return GaussianRational(rational(rng, bound))
    return GaussianRational(rational(rng, bound), rational(rng, bound))


def _sparse(rng, keys, density):
    keys = list(keys)
    k = max(1, int(len(keys) * density))
    return rng.sample(keys, min(k, len(keys)))


def poly(rng: random.Random, n: int, max_degree: int, density: float = 0.4,
         cls=FockPoly) -> FockPoly:
    keys = _sparse(rng, multiindices(n, max_degree), density)
    return cls(n, {a: gaussian_rational(rng) for a in keys})


def symbol(rng: random.Random, n: int, max_degree: int, density: float = 0.5) -> SymbolPoly:
    return poly(rng, n, max_degree, density, SymbolPoly)


def weyl_op(rng: random.Random, n: int, max_degree: int, max_terms: int = 4) -> WeylOp:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        total = rng.randint(0, max_degree)
        split = [rng.randint(0, total) for _ in range(2 * n)]
        scale = sum(split) or 1
        exps = [s * total // scale for s in split]
        terms[(tuple(exps[:n]), tuple(exps[n:]))] = gaussian_rational(rng)
    return WeylOp(n, terms)


def family(rng: random.Random, n: int, max_degree: int) -> OperatorFamily:
    return OperatorFamily(n, tuple(symbol(rng, n, max_degree) for _ in range(n)))


def form(rng: random.Random, n: int, p: int, max_degree: int,
         density: float = 0.4) -> PForm:
    return PForm(n, p, {J: poly(rng, n, max_degree, density)
                        for J in increasing_indices(n, p) if rng.random() < 0.8})


def make_rng(seed: Optional[int]) -> random.Random:
    return random.Random(seed)


__all__ = ["rational", "gaussian_rational", "poly", "symbol", "weyl_op", "family", "form",
           "make_rng"]

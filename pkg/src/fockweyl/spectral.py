"""Truncated-basis realization of D and D* in one variable.

Everything is expressed in the orthonormal basis phi_k = z^k / sqrt(k!)
(the common factor sqrt(pi) is dropped; it cancels in every quantity below).
Multiplication by z^k sends degree j to j + k, so D* is assembled from
degrees <= N into degrees <= N + m and the Gram matrix (D*)^H D* is exact on
the trial space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Sequence

import numpy as np
import scipy.linalg

from .fock import FockPoly
from .scalar import GaussianRational

SVD_RCOND = 1e-12


def _coeff_array(coeffs: Sequence) -> np.ndarray:
    return np.array([complex(GaussianRational.coerce(c)) if not isinstance(c, (complex, float))
                     else complex(c) for c in coeffs], dtype=complex)


def _order(a: np.ndarray) -> int:
    nz = np.flatnonzero(a)
    return int(nz[-1]) if nz.size else -1


def _falling_sqrt(top: int, k: int) -> float:
    """sqrt(top! / (top - k)!)."""
    return math.sqrt(math.prod(range(top - k + 1, top + 1)))


@dataclass
class TruncatedOperator:
    """Dense matrix of an operator from degrees 0..source_max to 0..target_max."""

    cutoff: int
    source_max: int
    target_max: int
    matrix: np.ndarray

    def __post_init__(self):
        if self.matrix.shape != (self.target_max + 1, self.source_max + 1):
            raise ValueError(f"matrix shape {self.matrix.shape} does not match degrees "
                             f"0..{self.source_max} -> 0..{self.target_max}")

    @property
    def H(self) -> np.ndarray:
        return self.matrix.conj().T


def assemble_dstar_1d(coeffs: Sequence, N: int) -> TruncatedOperator:
    """Multiplication by p*(z) = sum conj(a_k) z^k, degrees <= N into degrees <= N + m."""
    a = _coeff_array(coeffs)
    if N < 0:
        raise ValueError("cutoff must be nonnegative")
    m = max(_order(a), 0)
    M = np.zeros((N + m + 1, N + 1), dtype=complex)
    for k, ak in enumerate(a):
        if ak == 0:
            continue
        for j in range(N + 1):
            M[j + k, j] += np.conj(ak) * _falling_sqrt(j + k, k)
    return TruncatedOperator(N, N, N + m, M)


def assemble_d_1d(coeffs: Sequence, N: int) -> TruncatedOperator:
    """p(d/dz) = sum a_k d^k/dz^k on degrees <= N (degree never increases)."""
    a = _coeff_array(coeffs)
    if N < 0:
        raise ValueError("cutoff must be nonnegative")
    M = np.zeros((N + 1, N + 1), dtype=complex)
    for k, ak in enumerate(a):
        if ak == 0:
            continue
        for j in range(k, N + 1):
            M[j - k, j] += ak * _falling_sqrt(j, k)
    return TruncatedOperator(N, N, N, M)


def _require_leading(a: np.ndarray) -> int:
    m = _order(a)
    if m < 0 or a[m] == 0:
        raise ValueError("the leading coefficient a_m must be nonzero")
    return m


@dataclass
class CoercivityBound:
    lambda_min: float
    bound: float
    verdict: bool
    cutoff: int
    tolerance: float
    note: str = ("checks ||u||^2 <= C ||D*u||^2 with C = 1/(m!|a_m|^2), the squared form "
                 "established by the proof")


def coercivity_bound_1d(coeffs: Sequence, N: int, tol: float = 1e-9) -> CoercivityBound:
    """Smallest eigenvalue of (D*)^H D* on degrees <= N against m!|a_m|^2."""
    a = _coeff_array(coeffs)
    m = _require_leading(a)
    if N < m:
        raise ValueError(f"cutoff N={N} must be at least the order m={m}")
    Ds = assemble_dstar_1d(coeffs, N).matrix
    # sigma_min^2 is better conditioned than eigvalsh of the Gram matrix
    s = scipy.linalg.svdvals(Ds)
    lam = float(s[-1] ** 2)
    bound = float(math.factorial(m) * abs(a[m]) ** 2)
    return CoercivityBound(lam, bound, bool(lam >= bound - tol), N, tol)


@dataclass
class CanonicalSolution:
    """u0 = D* v with DD* v = alpha, in the orthonormal basis."""

    alpha: np.ndarray
    u0: np.ndarray
    residual_norm: float
    orthogonality_defect: float
    cutoff: int
    convergence_estimate: float
    norm_ratio: float            # ||u0||^2 / ||alpha||^2
    constant: float              # C = 1/(m!|a_m|^2)
    bound_ok: bool               # ||u0||^2 <= C ||alpha||^2 (up to tolerance)
    notes: List[str] = field(default_factory=list)

    def u0_monomial(self) -> np.ndarray:
        """Coefficients of u0 in the monomial basis z^k."""
        return to_monomial(self.u0)

    def to_json(self) -> dict:
        def vec(x, basis):
            return {"basis": basis, "re": [float(v.real) for v in x],
                    "im": [float(v.imag) for v in x]}
        return {"cutoff": self.cutoff,
                "alpha": vec(self.alpha, "orthonormal"),
                "u0": vec(self.u0, "orthonormal"),
                "u0_monomial": vec(self.u0_monomial(), "monomial"),
                "residual_norm": self.residual_norm,
                "orthogonality_defect": self.orthogonality_defect,
                "convergence_estimate": self.convergence_estimate,
                "norm_ratio": self.norm_ratio, "constant": self.constant,
                "bound_ok": self.bound_ok, "notes": list(self.notes)}


def to_orthonormal(mono: Sequence[complex]) -> np.ndarray:
    """Monomial coefficients c_k of sum c_k z^k -> coefficients on phi_k."""
    return np.array([complex(c) * math.sqrt(math.factorial(k)) for k, c in enumerate(mono)],
                    dtype=complex)


def to_monomial(orth: Sequence[complex]) -> np.ndarray:
    return np.array([complex(c) / math.sqrt(math.factorial(k)) for k, c in enumerate(orth)],
                    dtype=complex)


def _alpha_vector(alpha) -> np.ndarray:
    if isinstance(alpha, FockPoly):
        if alpha.n != 1:
            raise ValueError("alpha must be a polynomial in one variable")
        deg = max(alpha.degree(), 0)
        mono = [complex(alpha[(k,)]) for k in range(deg + 1)]
        return to_orthonormal(mono)
    return to_orthonormal(alpha)


def _solve(a: np.ndarray, m: int, alpha_orth: np.ndarray, N: int):
    Ds = assemble_dstar_1d(a, N)
    D = assemble_d_1d(a, N + m)
    box = D.matrix @ Ds.matrix                      # (N+m+1) x (N+1), exact on the trial space
    rhs = np.zeros(N + m + 1, dtype=complex)
    rhs[:alpha_orth.size] = alpha_orth
    v, *_ = scipy.linalg.lstsq(box, rhs, cond=SVD_RCOND)
    u0 = Ds.matrix @ v
    residual = float(np.linalg.norm(D.matrix @ u0 - rhs))
    return u0, residual, D


def solve_canonical_1d(coeffs: Sequence, alpha, N: int, tol: float = 1e-9) -> CanonicalSolution:
    """Canonical solution of Du = alpha dz on the truncated space of degree <= N.

    ``alpha`` is a one-variable :class:`FockPoly` or a list of monomial
    coefficients.
    """
    a = _coeff_array(coeffs)
    m = _require_leading(a)
    alpha_orth = _alpha_vector(alpha)
    nz = np.flatnonzero(alpha_orth)
    deg_alpha = int(nz[-1]) if nz.size else 0
    if deg_alpha > N - m:
        raise ValueError(f"cutoff N={N} too small for deg(alpha)={deg_alpha} and m={m}")
    alpha_orth = alpha_orth[:deg_alpha + 1]

    u0, residual, D = _solve(a, m, alpha_orth, N)

    kernel = scipy.linalg.null_space(D.matrix, rcond=SVD_RCOND)
    defect = float(np.linalg.norm(kernel.conj().T @ u0)) if kernel.size else 0.0

    notes = []
    if np.count_nonzero(a[:m]):
        notes.append("p has lower-order terms: ker D then contains exponentials e^(lambda z) "
                     "that no polynomial truncation sees, so the orthogonality defect is "
                     "measured against the truncated kernel only")
    half = N // 2
    if deg_alpha <= half - m:
        u_half, *_ = _solve(a, m, alpha_orth, half)
        padded = np.zeros_like(u0)
        padded[:u_half.size] = u_half
        convergence = float(np.linalg.norm(u0 - padded))
    else:
        convergence = float("nan")
        notes.append(f"cutoff N/2={half} too small for alpha; no convergence estimate")

    C = float(1.0 / (math.factorial(m) * abs(a[m]) ** 2))
    a2 = float(np.vdot(alpha_orth, alpha_orth).real)
    u2 = float(np.vdot(u0, u0).real)
    ratio = u2 / a2 if a2 else 0.0
    bound_ok = bool(u2 <= C * a2 * (1 + tol) + tol)
    notes.append("bound checked in squared form ||u0||^2 <= C ||alpha||^2")
    return CanonicalSolution(alpha_orth, u0, residual, defect, N, convergence, ratio, C,
                             bound_ok, notes)

"""
Canonical solutions in one variable
===================================

For p(d/dz) = a_0 + ... + a_m d^m/dz^m, D* is multiplication by the
conjugate polynomial.  On the Fock space its smallest singular value squared
is at least m!|a_m|^2, which bounds the minimal solution of p(d)u = alpha.
"""

import numpy as np

from fockweyl.spectral import coercivity_bound_1d, solve_canonical_1d

np.set_printoptions(precision=4, suppress=True)

for coeffs in ([0, 1], [0, 0, 1], [2, -1j, 0.5]):
    for N in (8, 16, 24):
        r = coercivity_bound_1d(coeffs, N)
        print(f"p={coeffs} N={N:2d}  lambda_min={r.lambda_min:.6f}  bound={r.bound:.6f}")

# d/dz u = 1 is solved by u = z, d^2/dz^2 u = 1 by u = z^2/2
for coeffs in ([0, 1], [0, 0, 1]):
    s = solve_canonical_1d(coeffs, [1], 16)
    print(coeffs, s.u0_monomial()[:4], f"residual={s.residual_norm:.1e}")

# lower-order terms: the cutoff matters, and the report says so
for N in (8, 16, 32):
    s = solve_canonical_1d([1, 1], [1, 2], N)
    print(f"N={N:2d}  |u0|^2/|alpha|^2={s.norm_ratio:.6f}  C={s.constant:.6f}  "
          f"N/2 vs N change={s.convergence_estimate:.2e}")
print(s.notes[0])

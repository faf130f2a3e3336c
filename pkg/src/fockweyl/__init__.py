"""Exact Weyl-algebra and Fock-space tools for a constant-coefficient D-complex.

Exact objects (scalars, polynomials, operators, forms) live in Q(i); inner
products are reported in units of pi^n.  The ``spectral`` module is the only
floating-point part.
"""

from .scalar import GaussianRational, format_scalar, parse_scalar
from .poly import DimensionError
from .fock import FockPoly, fock_inner, norm_sq
from .weyl import (SymbolPoly, WeylOp, adjoint, apply, commutator, derivative_sum, diff_op,
                   hamil_expansion, mult_op, multiply, star_op, symbol_derivative)
from .dsl import DSLSyntaxError, parse_family, parse_operator, parse_poly, parse_symbol
from .forms import (OperatorFamily, PForm, box_apply, d_apply, dstar_apply, duality_check,
                    form_inner, form_norm_sq)
from .estimates import (check_conditions, check_conditions_dim2, commutator_expansion,
                        commutator_identity_1d, decompose_quadratic_form, energy_identity_check,
                        quadratic_form, scan_counterexample)
from .spectral import coercivity_bound_1d, solve_canonical_1d

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

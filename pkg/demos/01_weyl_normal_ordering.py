"""
Normal ordering in the Weyl algebra
===================================

Operators are stored as sums of c * z^a d^b with every derivative pushed to
the right.  Products are reordered with d z = z d + 1.
"""

from fockweyl.dsl import parse_operator, parse_poly, parse_symbol
from fockweyl.weyl import (adjoint, apply, commutator, diff_op, hamil_expansion, mult_op,
                           multiply)

# d1 z1 is not normal ordered; the parser multiplies it out
print(parse_operator("d1*z1"))

# the canonical commutator
z, d = parse_operator("z1"), parse_operator("d1")
print("[d, z] =", commutator(d, z))

# a second-order product, computed by reordering and by symbol derivatives
Q, P = parse_symbol("d1^2", 1), parse_poly("z1^2", 1)
print(multiply(diff_op(Q), mult_op(P)))
print(hamil_expansion(Q, P))

# the Fock adjoint swaps z and d and conjugates coefficients
print(adjoint(parse_operator("i*z1^2*d1")))

# operators act on polynomials
print(apply(parse_operator("d1*d2"), parse_poly("z1^2*z2^3")))

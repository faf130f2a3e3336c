"""
The complex D of a family of constant-coefficient operators
===========================================================

A family (p_1, ..., p_n) defines D on (p,0)-forms with polynomial
coefficients.  D* uses the Fock adjoints p_j*, which are multiplication
operators.
"""

from fockweyl.dsl import parse_poly
from fockweyl.forms import (OperatorFamily, PForm, box_apply, d_apply, dstar_apply,
                            duality_check, form_inner)

F = OperatorFamily.from_dsl("d1*d2; d1^2 + d2^2")
f = PForm.from_list(2, 0, [parse_poly("z1^3*z2^2 + i*z2", 2)])

Df = d_apply(F, f)
print("Df     =", Df)
print("DDf    =", d_apply(F, Df))

u = PForm.from_list(2, 1, [parse_poly("z1^2*z2^2", 2), parse_poly("i*z2", 2)])
print("D*u    =", dstar_apply(F, u))
print("box u  =", box_apply(F, u))

# (Du, v) = (u, D*v) holds exactly; inner products are in units of pi^n
v = PForm.from_list(2, 2, [parse_poly("z1^2 + 2*z2^2", 2)])
r = duality_check(F, u, v)
print("duality", r.holds, r.lhs)
print("(box u, u) =", form_inner(box_apply(F, u), u))

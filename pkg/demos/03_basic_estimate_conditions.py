"""
When is the commutator form coercive?
=====================================

For two variables, first- and second-order conditions on (p_1, p_2) split
the commutator quadratic form into C1|u1|^2 + C2|u2|^2 plus two squares.
A family that fails them can still be coercive, so a grid scan looks for
explicit negative values.
"""

from fockweyl.dsl import parse_poly
from fockweyl.estimates import (check_conditions_dim2, decompose_quadratic_form,
                                energy_identity_check, quadratic_form, scan_counterexample)
from fockweyl.forms import OperatorFamily, PForm

families = {"a": "d1*d2; d1^2 + d2^2", "c": "d1^2; d2^2", "d": "d1^2 + d2; d1 + d2^2"}

for key, text in families.items():
    F = OperatorFamily.from_dsl(text)
    for v in check_conditions_dim2(*F.symbols):
        state = "pass" if v.passed else "fail"
        print(f"({key}) {v.theorem}: {state}  C1={v.C1} C2={v.C2}")

# a split of Q(u) into named nonnegative pieces
F = OperatorFamily.from_dsl(families["a"])
u = PForm.from_list(2, 1, [parse_poly("z1*z2", 2), parse_poly("z2^2 - i", 2)])
verdict = check_conditions_dim2(*F.symbols)[0]
report = decompose_quadratic_form(*F.symbols, u, verdict)
for name, value in report.decomposition:
    print(f"  {name:28s} {value}")
print("  Q(u) =", report.value)

# family (d) fails the conditions, yet z2^k dz1 - z2^(k-1) dz2 gives positive values
F = OperatorFamily.from_dsl(families["d"])
for k in (8, 9, 10):
    u = PForm.from_list(2, 1, [parse_poly(f"z2^{k}", 2), parse_poly(f"-z2^{k - 1}", 2)])
    e = energy_identity_check(F, u)
    print(f"k={k}: Q = {quadratic_form(F, u).value}  energy identity holds: {e.holds}")
print("scan (d), degree 6:", scan_counterexample(*F.symbols, 6))

# a family with genuine negative values
F = OperatorFamily.from_dsl("d1^2; d1")
for hit in scan_counterexample(*F.symbols, 2)[:3]:
    print(f"  Q({hit.u}) = {hit.value}")

"""
Inside the sigma3 and sigma4 computations
=========================================

Three pieces of the cyclic-group argument checked numerically on C_8:

1. x x^sigma4 has a closed form in the coefficients of x;
2. S_H built from its generators equals the image of x -> x x^sigma3 on the
   preimage of the quotient's unitary group;
3. |V_sigma3| = |I(H)| |V_*(F(G/H))| / |S_H|.
"""

import numpy as np

from gfunitary import FieldSpec, GroupAlgebra, GroupSpec, cyclic_table
from gfunitary.cyclic import odd_pairing_batch, s_h_subgroup, sigma3_decomposition, sigma4_closed_form_batch

F4 = FieldSpec.from_order(4)
A = GroupAlgebra(GroupSpec.cyclic(3), F4)
x = A.random_units(np.random.default_rng(1), 10_000)
direct = A.star_product_batch(cyclic_table(3)["sigma4"], x)
closed = sigma4_closed_form_batch(A, x)
print("closed form agrees on", int((direct == closed).all(axis=1).sum()), "of", len(x))
print("odd coefficients pair up and cancel:", bool(odd_pairing_batch(A, direct).all()))

for q in (2, 4):
    s_h = s_h_subgroup(3, FieldSpec.from_order(q))
    print(f"\nq={q}: |S_H| = {s_h.order}, both constructions agree: {s_h.agree}")
    d = sigma3_decomposition(3, FieldSpec.from_order(q))
    print(f"  |I(H)| = {d.ideal_size}, |V_*(F(G/H))| = {d.quotient_unitary_order}")
    print(f"  {d.ideal_size} * {d.quotient_unitary_order} / {d.s_h_order} = {d.predicted}"
          f"  vs enumerated |V_sigma3| = {d.unitary_order}")

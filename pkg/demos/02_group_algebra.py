"""
The group algebra F C_8
=======================

Algebra elements are dense coefficient vectors indexed by group elements.
Single elements print and parse as polynomials in the generators.
"""

import numpy as np

from gfunitary import FieldSpec, GroupAlgebra, GroupSpec, apply_involution, cyclic_table

A = GroupAlgebra(GroupSpec.cyclic(3), FieldSpec.from_order(2))

x = A.parse("1 + a")
y = A.parse("1 + a^5")
print(f"({x})({y}) = {x * y}")
print("(1 + a)^8 =", x ** 8)  # nilpotent augmentation-ideal element

sigma = cyclic_table(3)
for name, s in sigma.items():
    print(f"{name}: {s.describe():10s}  (1 + a + a^3)^* = {apply_involution(s, A.parse('1 + a + a^3'))}")

# Normalized units: augmentation 1.  There are q^(|G|-1) of them.
print("|V(F_2 C_8)| =", A.unit_count)
units = np.concatenate(list(A.iter_unit_chunks()))
inv = A.inverse_batch(units)
assert A.is_one_batch(A.mul_batch(units, inv)).all()
print("inverse of 1 + a + a^2 =", A.element(inv[A.unit_index(A.parse("1 + a + a^2").coeffs[None])[0]]))

# Coefficients can live in a bigger field
B = GroupAlgebra(GroupSpec.cyclic(3), FieldSpec.from_order(4))
z = B.parse("x + (x+1)*a^2 + a^7")
print("z * z =", z * z)

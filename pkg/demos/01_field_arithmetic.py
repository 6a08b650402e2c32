"""
Arithmetic in GF(2^k)
=====================

Elements are integers whose bits are polynomial coefficients in x.  Products
go through lookup tables built once per field.
"""

import numpy as np

from gfunitary import FieldSpec, ff_inv, ff_sqrt

# GF(4) with modulus x^2 + x + 1 (the default)
F4 = FieldSpec.from_order(4)
x = F4(0b10)
print("x * x     =", x * x)            # x + 1
print("1 / x     =", ff_inv(x))        # x + 1
print("sqrt(x+1) =", ff_sqrt(F4(0b11)))  # x

# GF(8) with x^3 + x + 1
F8 = FieldSpec.from_order(8)
print("x^2 * x^2 in GF(8) =", F8(0b100) * F8(0b100))

# Squaring is a bijection in characteristic two, so every element has one root.
a = np.arange(8, dtype=np.uint8)
print("squares:", F8.square(a))
print("roots  :", F8.sqrt_table[a])
assert (F8.square(F8.sqrt_table[a]) == a).all()

# Vectorised products over whole arrays
rng = np.random.default_rng(0)
u, v = rng.integers(0, 256, size=(2, 5), dtype=np.uint8)
print("GF(256) products:", FieldSpec.from_order(256).mul(u, v))

"""
F_2(C_8 x C_2)
==============

Brute force finds every automorphism of order at most two, and the unitary
subgroup of each named one is enumerated over all 2^15 normalized units.
"""

from gfunitary import FieldSpec, GroupAlgebra, GroupSpec, c8xc2_table, compute_unitary_subgroup
from gfunitary import enumerate_involutive_automorphisms

G = GroupSpec((3, 1))
found = enumerate_involutive_automorphisms(G)
print(f"{len(found)} involutive automorphisms of {G}:")
for s in found:
    print(f"  {s.name or '':7s} {s.describe()}")

A = GroupAlgebra(G, FieldSpec.from_order(2))
print()
for name, sigma in c8xc2_table().items():
    _, rep = compute_unitary_subgroup(A, sigma)
    print(f"{name} {sigma.describe():16s} order {rep.order:5d}  invariants {rep.invariants}")
# sigma2 and sigma4 share invariants; neither is a Klein four-group.

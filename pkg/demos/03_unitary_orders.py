"""
Orders of unitary subgroups
===========================

For each involution of C_8 the unitary subgroup is collected by sweeping all
normalized units, and compared with the closed-form predictions where one
exists.  The image-count route gives the same order from |V| / |{x x^*}|.
"""

from gfunitary import FieldSpec, GroupAlgebra, GroupSpec, compute_unitary_subgroup, cyclic_table, predict

G = GroupSpec.cyclic(3)
for q in (2, 4, 8):
    A = GroupAlgebra(G, FieldSpec.from_order(q))
    print(f"\nF = GF({q}), |V| = {A.unit_count}")
    for name, sigma in cyclic_table(3).items():
        _, rep = compute_unitary_subgroup(A, sigma)
        _, img = compute_unitary_subgroup(A, sigma, "image-count")
        p = predict(G, q, sigma)
        formula = f"{p.value} [{p.source}]" if p else "-"
        print(f"  {name}: order {rep.order:5d} (image-count {img.order:5d}, formula {formula})"
              f"  exponent {rep.exponent}  invariants {rep.invariants}")

# sigma2, sigma3 and sigma4 give pairwise non-isomorphic groups: compare the invariant lists above.

"""Unitary subgroups of modular group algebras of finite abelian 2-groups."""

from .algebra import (
    AlgebraElement,
    CapacityError,
    GroupAlgebra,
    alg_add,
    alg_inv,
    alg_mul,
    apply_involution,
    augmentation,
    enumerate_normalized_units,
    hat_sum,
    ideal,
    in_ideal,
    is_unit,
    quotient_map,
)
from .cyclic import check_corollary1, s_h_subgroup, sigma3_decomposition, sigma4_product_closed_form
from .field import FieldElement, FieldSpec, ff_add, ff_enumerate, ff_inv, ff_mul, ff_sqrt
from .formulas import order_canonical, order_sigma3, order_sigma4, predict
from .group import (
    GroupElement,
    GroupSpec,
    element_index,
    enumerate_elements,
    g_inv,
    g_mul,
    g_order,
    g_pow,
    power_subgroup,
    torsion_subgroup,
)
from .involutions import (
    InvolutionSpec,
    apply_automorphism,
    aut_group_order,
    c8xc2_table,
    cyclic_table,
    enumerate_involutive_automorphisms,
    symmetric_group_elements,
)
from .unitary import (
    SubgroupReport,
    UnitarySubgroup,
    abelian_invariants,
    compute_star_image,
    compute_unitary_subgroup,
    is_unitary,
    subgroup_exponent,
)

__version__ = "0.1.0"

import numpy as np
import pytest

from gfunitary.algebra import CapacityError, GroupAlgebra
from gfunitary.field import FieldSpec
from gfunitary.group import GroupSpec
from gfunitary.involutions import c8xc2_table, cyclic_table, enumerate_involutive_automorphisms
from gfunitary.unitary import (
    abelian_invariants,
    check_closed,
    compute_star_image,
    compute_unitary_subgroup,
    element_orders,
    generated_subgroup,
    is_unitary,
    subgroup_exponent,
)

from oracle import apply_images, conv, is_one, normalized_units

F2, F4 = FieldSpec.from_order(2), FieldSpec.from_order(4)
C8 = GroupSpec.cyclic(3)
A = GroupAlgebra(C8, F2)
T = cyclic_table(3)


def oracle_unitary_count(group, field, sigma):
    count = 0
    for u in normalized_units(group.moduli, field.order):
        star = apply_images(u, sigma.images, group.moduli)
        if is_one(conv(u, star, group.moduli, field.modulus), group.moduli):
            count += 1
    return count


# frozen from the pure-Python oracle
@pytest.mark.parametrize("name, expected", [("sigma1", 16), ("sigma2", 32), ("sigma3", 16), ("sigma4", 16)])
def test_c8_f2_orders_frozen(name, expected):
    _, report = compute_unitary_subgroup(A, T[name])
    assert report.order == expected


def test_frozen_values_match_oracle():
    for name, expected in [("sigma1", 16), ("sigma2", 32), ("sigma3", 16), ("sigma4", 16)]:
        assert oracle_unitary_count(C8, F2, T[name]) == expected


@pytest.mark.parametrize("sigma", enumerate_involutive_automorphisms(GroupSpec((2, 1))), ids=str)
def test_orders_match_oracle_c4xc2_f2(sigma):
    algebra = GroupAlgebra(sigma.group, F2)
    _, report = compute_unitary_subgroup(algebra, sigma)
    assert report.order == oracle_unitary_count(sigma.group, F2, sigma)


@pytest.mark.parametrize("name", ["sigma2", "sigma3", "sigma4"])
def test_enumeration_matches_image_count(name):
    b = GroupAlgebra(C8, F4)
    _, e = compute_unitary_subgroup(b, T[name], "enumeration")
    _, i = compute_unitary_subgroup(b, T[name], "image-count")
    assert e.order == i.order
    assert i.exponent is None and i.method == "image-count"


def test_is_unitary_examples():
    assert is_unitary(A.one(), T["sigma3"])
    assert is_unitary(A.parse("a"), T["sigma2"])
    assert not is_unitary(A.parse("a"), T["sigma4"])
    with pytest.raises(ValueError):
        is_unitary(A.parse("1 + a"), T["sigma2"])


def test_star_image_sizes():
    assert compute_star_image(A, T["sigma4"]).order == 8
    assert compute_star_image(A, T["sigma2"]).order == 4
    assert compute_star_image(A, T["sigma1"]).order == 128 // 16


@pytest.mark.parametrize("sigma", list(c8xc2_table().values()) + list(T.values()), ids=lambda s: f"{s.group}-{s}")
def test_kernel_image_identity(sigma):
    algebra = GroupAlgebra(sigma.group, F2)
    _, report = compute_unitary_subgroup(algebra, sigma)
    assert report.order * compute_star_image(algebra, sigma).order == algebra.unit_count


def test_subgroup_contents():
    sub, report = compute_unitary_subgroup(A, T["sigma4"])
    assert A.parse("a^4") in sub and A.parse("1 + a + a^2") not in sub
    assert all(is_unitary(u, T["sigma4"]) for u in sub)
    # exhaustive pairwise closure for small subgroups
    prod = A.mul_batch(np.repeat(sub.elements, len(sub), 0), np.tile(sub.elements, (len(sub), 1)))
    keys = set(map(bytes, sub.elements))
    assert all(bytes(r) in keys for r in prod)
    assert report.to_dict(timings=False)["elapsed_ms"] is None
    assert set(report.to_dict()) >= {"group", "field", "sigma", "order", "exponent", "invariants", "method", "elapsed_ms"}


def test_report_invariants_consistent():
    for name in T:
        _, r = compute_unitary_subgroup(GroupAlgebra(C8, F4), T[name])
        assert int(np.prod(r.invariants)) == r.order
        assert max(r.invariants) == r.exponent
        assert all(v & (v - 1) == 0 for v in r.invariants)
        assert r.invariants == sorted(r.invariants)


def test_known_structures():
    expected = {"sigma1": [2, 2, 2, 2], "sigma2": [2, 2, 8], "sigma3": [2, 2, 4], "sigma4": [2, 2, 2, 2]}
    for name, inv in expected.items():
        _, r = compute_unitary_subgroup(A, T[name])
        assert r.invariants == inv


def test_abelian_invariants_examples():
    assert abelian_invariants(A, np.array([A.one().coeffs, A.parse("a^4").coeffs])) == [2]
    units = np.concatenate(list(GroupAlgebra(GroupSpec.cyclic(2), F2).iter_unit_chunks()))
    b = GroupAlgebra(GroupSpec.cyclic(2), F2)
    # brute-force census: 1 identity, 3 involutions, 4 elements of order 4
    orders = element_orders(b, units)
    assert sorted(np.bincount(orders)[[1, 2, 4]]) == [1, 3, 4]
    assert abelian_invariants(b, units) == [2, 4]
    assert subgroup_exponent(A, A.one().coeffs[None, :]) == 1


def test_exponent_of_sigma3_subgroup():
    sub, r = compute_unitary_subgroup(A, T["sigma3"])
    assert A.parse("a^2") in sub
    assert r.exponent >= 4
    assert subgroup_exponent(A, sub.elements) == r.exponent


def test_closure_rejection():
    with pytest.raises(ValueError):
        check_closed(A, np.array([A.one().coeffs, A.parse("a").coeffs]))
    with pytest.raises(ValueError):
        check_closed(A, np.array([A.one().coeffs, A.one().coeffs]))
    with pytest.raises(ValueError):
        abelian_invariants(A, np.array([A.one().coeffs, A.parse("a^2").coeffs]))


def test_generated_subgroup():
    cyc = generated_subgroup(A, A.parse("a").coeffs[None, :])
    assert len(cyc) == 8
    with pytest.raises(ValueError):
        generated_subgroup(A, A.parse("a").coeffs[None, :], limit=4)


def test_capacity_and_method_errors():
    b = GroupAlgebra(GroupSpec.cyclic(4), F4)
    with pytest.raises(CapacityError):
        compute_unitary_subgroup(b, cyclic_table(4)["sigma2"])
    with pytest.raises(ValueError):
        compute_unitary_subgroup(A, T["sigma2"], "guess")


def test_parallel_enumeration_matches(monkeypatch):
    monkeypatch.setenv("GFUNITARY_WORKERS", "2")
    b = GroupAlgebra(GroupSpec.cyclic(4), F2)
    sub2, _ = compute_unitary_subgroup(b, cyclic_table(4)["sigma3"])
    monkeypatch.setenv("GFUNITARY_WORKERS", "1")
    sub1, _ = compute_unitary_subgroup(b, cyclic_table(4)["sigma3"])
    assert np.array_equal(sub1.elements, sub2.elements)

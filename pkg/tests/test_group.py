import itertools

import pytest

from gfunitary.group import (
    GroupSpec,
    element_index,
    enumerate_elements,
    g_inv,
    g_order,
    g_pow,
    generated_by_order,
    invariants_from_census,
    is_subgroup,
    power_subgroup,
    torsion_subgroup,
)

C8 = GroupSpec.cyclic(3)
C8xC2 = GroupSpec((3, 1))
MATRIX = [GroupSpec(e) for e in [(1,), (2,), (3,), (4,), (5,), (1, 1), (2, 1), (3, 1), (2, 2), (3, 2), (1, 1, 1), (2, 2, 1)]]


def test_arithmetic_examples():
    assert C8(3) * C8(6) == C8(1)
    for g in C8xC2:
        assert (g * g_inv(g)).is_identity
    assert C8xC2(1, 1) * C8xC2(1, 1) == C8xC2(2, 0)
    assert g_pow(C8(3), 5) == C8(7)


def test_order_examples():
    assert g_order(C8(2)) == 4
    assert g_order(C8.identity) == 1
    assert g_order(C8xC2(4, 1)) == 2


def test_torsion_examples():
    assert torsion_subgroup(C8, 1) == {C8(0), C8(4)}
    assert len(torsion_subgroup(C8xC2, 1)) == sum(1 for g in C8xC2 if (g * g).is_identity) == 4
    assert torsion_subgroup(C8, 3) == set(C8)


def test_power_examples():
    assert power_subgroup(C8, 1) == {C8(0), C8(2), C8(4), C8(6)}
    squares_2 = power_subgroup(C8, 1) & torsion_subgroup(C8, 1)
    assert len(squares_2) == 2
    assert power_subgroup(C8xC2, 3) == {C8xC2.identity}


def test_index_convention():
    assert element_index(C8(3)) == 3
    assert element_index(C8xC2(3, 1)) == 7  # last factor fastest
    assert [element_index(g) for g in enumerate_elements(C8xC2)] == list(range(16))


def test_parse():
    assert GroupSpec.parse("c8") == C8
    assert GroupSpec.parse("c8xc2") == C8xC2
    assert GroupSpec.parse("8,2") == C8xC2
    for bad in ["c6", "c1", "", "d8"]:
        with pytest.raises(ValueError):
            GroupSpec.parse(bad)


def test_mixed_groups_rejected():
    with pytest.raises(ValueError):
        C8(1) * C8xC2(1, 0)


@pytest.mark.parametrize("g", MATRIX, ids=str)
def test_subgroup_counts(g):
    for i in range(max(g.exponents) + 2):
        t = torsion_subgroup(g, i)
        p = power_subgroup(g, i)
        assert is_subgroup(t) and is_subgroup(p)
        assert len(t) == 2 ** sum(min(i, n) for n in g.exponents)
        assert len(t) * len(p) == g.order


@pytest.mark.parametrize("g", MATRIX, ids=str)
def test_kernel_form_matches_generated_form(g):
    # G[2^i] is defined via elements of order exactly 2^i
    for i in range(1, max(g.exponents) + 1):
        assert generated_by_order(g, i) == torsion_subgroup(g, i)


def test_invariants_from_census():
    # C4 x C2: 1 element of order 1, 3 of order 2, 4 of order 4
    assert invariants_from_census([1, 4, 8]) == [2, 4]
    assert invariants_from_census([1]) == []
    with pytest.raises(ValueError):
        invariants_from_census([1, 3])


@pytest.mark.parametrize("g", MATRIX, ids=str)
def test_invariants_from_census_on_known_groups(g):
    census = [len(torsion_subgroup(g, k)) for k in range(max(g.exponents) + 1)]
    assert invariants_from_census(census) == sorted(g.moduli)

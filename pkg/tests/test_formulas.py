import pytest

from gfunitary.formulas import (
    order_canonical,
    order_canonical_cyclic,
    order_sigma3,
    order_sigma4,
    predict,
    star_image_sigma4,
)
from gfunitary.group import GroupSpec
from gfunitary.involutions import c8xc2_table, cyclic_table


def test_canonical_examples():
    assert order_canonical(GroupSpec.cyclic(3), 2).value == 32
    assert order_canonical(GroupSpec.cyclic(3), 4).value == 512
    assert order_canonical(GroupSpec((3, 1)), 2).value == 2 ** 10
    assert order_canonical(GroupSpec.cyclic(3), 2).source == "L1"


def test_sigma3_sigma4_examples():
    assert [order_sigma3(n, q).value for n, q in [(3, 2), (4, 2), (3, 8)]] == [16, 256, 4096]
    p = order_sigma4(3, 2)
    assert (p.value, p.invariants, p.source) == (16, [2] * 4, "L6")
    assert order_sigma4(4, 2).invariants == [2] * 8
    assert order_sigma4(3, 4).value == 256
    assert star_image_sigma4(3, 2) == 8


@pytest.mark.parametrize("fn", [order_sigma3, order_sigma4, order_canonical_cyclic])
def test_small_n_rejected(fn):
    with pytest.raises(ValueError):
        fn(2, 2)


def test_q_must_be_power_of_two():
    with pytest.raises(ValueError):
        order_sigma3(3, 3)
    with pytest.raises(ValueError):
        order_canonical(GroupSpec.cyclic(3), 6)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
@pytest.mark.parametrize("q", [2, 4, 8])
def test_canonical_specialises_to_cyclic(n, q):
    assert order_canonical(GroupSpec.cyclic(n), q).value == order_canonical_cyclic(n, q).value


def test_predict_dispatch():
    t = cyclic_table(3)
    g = GroupSpec.cyclic(3)
    assert predict(g, 2, t["sigma1"]) is None
    assert predict(g, 2, t["sigma2"]).source == "L1"
    assert predict(g, 2, t["sigma3"]).source == "L3"
    assert predict(g, 2, t["sigma4"]).source == "L6"
    assert predict(GroupSpec((3, 1)), 2, c8xc2_table()["sigma2"]) is None

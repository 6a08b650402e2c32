import numpy as np
import pytest

from gfunitary.algebra import (
    CapacityError,
    GroupAlgebra,
    alg_inv,
    apply_involution,
    augmentation,
    coset_transversal,
    enumerate_normalized_units,
    gf_rank,
    hat_sum,
    ideal,
    in_ideal,
    is_unit,
    quotient_algebra,
    quotient_map,
)
from gfunitary.field import FieldSpec
from gfunitary.group import GroupSpec
from gfunitary.involutions import c8xc2_table, cyclic_table, enumerate_involutive_automorphisms

from oracle import apply_images, conv

F2, F4, F8 = (FieldSpec.from_order(q) for q in (2, 4, 8))
C8 = GroupSpec.cyclic(3)
A = GroupAlgebra(C8, F2)
CONFIGS = [(C8, F2), (C8, F4), (C8, F8), (GroupSpec.cyclic(4), F4), (GroupSpec((3, 1)), F2), (GroupSpec((2, 2)), F4)]


def as_dict(algebra, v):
    return {algebra.group.element(i).exps: int(c) for i, c in enumerate(v) if c}


def test_product_examples():
    assert A.parse("1 + a") * A.parse("1 + a") == A.parse("1 + a^2")
    assert A.parse("1 + a") * A.parse("1 + a^5") == A.parse("1 + a + a^5 + a^6")
    x = A.parse("a^3 + a^7")
    assert x * A.one() == x


def test_augmentation_examples():
    assert augmentation(A.parse("1 + a + a^2")) == F2.one
    assert augmentation(A.parse("1 + a")) == F2.zero
    B = GroupAlgebra(C8, F4)
    assert augmentation(B.parse("x + x*a")) == F4.zero


def test_units_and_inverse():
    assert alg_inv(A.one()) == A.one()
    x = A.parse("1 + a + a^2")
    assert x * alg_inv(x) == A.one()
    assert not is_unit(A.parse("1 + a"))
    with pytest.raises(ZeroDivisionError):
        alg_inv(A.parse("1 + a"))


@pytest.mark.parametrize("group, field", CONFIGS, ids=lambda v: str(v))
def test_batch_product_matches_reference(group, field):
    algebra = GroupAlgebra(group, field)
    rng = np.random.default_rng(7)
    x = rng.integers(0, field.order, size=(40, algebra.size), dtype=np.uint8)
    y = rng.integers(0, field.order, size=(40, algebra.size), dtype=np.uint8)
    got = algebra.mul_batch(x, y)
    for xi, yi, zi in zip(x, y, got):
        assert as_dict(algebra, zi) == conv(as_dict(algebra, xi), as_dict(algebra, yi), group.moduli, field.modulus)


@pytest.mark.parametrize("group, field", CONFIGS, ids=lambda v: str(v))
def test_random_ring_properties(group, field):
    algebra = GroupAlgebra(group, field)
    rng = np.random.default_rng(11)
    x, y, z = (rng.integers(0, field.order, size=(10_000, algebra.size), dtype=np.uint8) for _ in range(3))
    xy = algebra.mul_batch(x, y)
    assert (xy == algebra.mul_batch(y, x)).all()
    assert (algebra.mul_batch(xy, z) == algebra.mul_batch(x, algebra.mul_batch(y, z))).all()
    assert (algebra.mul_batch(x, y ^ z) == xy ^ algebra.mul_batch(x, z)).all()
    aug = algebra.augmentation_batch
    assert (aug(xy) == field.mul(aug(x), aug(y))).all()
    assert (algebra.square_batch(x) == algebra.mul_batch(x, x)).all()


@pytest.mark.parametrize("group, field", CONFIGS, ids=lambda v: str(v))
def test_inverse_batch(group, field):
    algebra = GroupAlgebra(group, field)
    rng = np.random.default_rng(3)
    x = rng.integers(0, field.order, size=(5000, algebra.size), dtype=np.uint8)
    x = x[algebra.augmentation_batch(x) != 0]
    assert algebra.is_one_batch(algebra.mul_batch(x, algebra.inverse_batch(x))).all()


@pytest.mark.parametrize("group, field", CONFIGS, ids=lambda v: str(v))
def test_involution_is_algebra_involution(group, field):
    algebra = GroupAlgebra(group, field)
    rng = np.random.default_rng(5)
    x, y = (rng.integers(0, field.order, size=(10_000, algebra.size), dtype=np.uint8) for _ in range(2))
    for s in enumerate_involutive_automorphisms(group):
        inv = lambda v: algebra.involution_batch(s, v)  # noqa: E731
        assert (inv(inv(x)) == x).all()
        assert (inv(x ^ y) == inv(x) ^ inv(y)).all()
        assert (inv(algebra.mul_batch(x, y)) == algebra.mul_batch(inv(x), inv(y))).all()
        c = rng.integers(0, field.order, dtype=np.uint8)
        assert (inv(field.mul(x, c)) == field.mul(inv(x), c)).all()


def test_involution_exhaustive_c8_f2():
    units = np.concatenate(list(A.iter_unit_chunks()))
    everything = np.array(np.meshgrid(*[[0, 1]] * 8, indexing="ij")).reshape(8, -1).T.astype(np.uint8)
    for s in cyclic_table(3).values():
        inv = lambda v: A.involution_batch(s, v)  # noqa: E731
        assert (inv(inv(everything)) == everything).all()
        for u in units[::7]:
            assert (inv(A.mul_batch(u, everything)) == A.mul_batch(inv(u), inv(everything))).all()


def test_involution_matches_reference():
    for s in c8xc2_table().values():
        algebra = GroupAlgebra(s.group, F2)
        x = algebra.parse("1 + a + a^3*b + b")
        assert as_dict(algebra, apply_involution(s, x).coeffs) == apply_images(as_dict(algebra, x.coeffs), s.images, s.group.moduli)


def test_involution_examples():
    table = cyclic_table(3)
    assert apply_involution(table["sigma4"], A.parse("1 + a")) == A.parse("1 + a^5")
    x = A.parse("1 + a^2 + a^3")
    assert apply_involution(table["sigma1"], x) == x
    assert apply_involution(table["sigma2"], A.parse("a^3")) == A.parse("a^5")


def test_hat_sum():
    h = [C8(0), C8(4)]
    assert hat_sum(A, h) == A.parse("1 + a^4")
    assert hat_sum(A, [C8(0)]) == A.one()
    assert hat_sum(A, h) * A.parse("a^4") == hat_sum(A, h)


def test_ideal_examples():
    h = [C8(0), C8(4)]
    i = ideal(A, h)
    assert i.size == 16
    assert in_ideal(A.parse("1 + a^4"), i)
    assert not in_ideal(A.one(), i)
    assert [t.exps[0] for t in coset_transversal(C8, h)] == [0, 1, 2, 3]


@pytest.mark.parametrize("group, field", CONFIGS, ids=lambda v: str(v))
def test_ideal_is_kernel_of_quotient(group, field):
    algebra = GroupAlgebra(group, field)
    h = [g for g in group if (g * g).is_identity]  # G[2] is a product of coordinate subgroups
    target, cq = quotient_algebra(algebra, h)
    i = ideal(algebra, h)
    assert i.size * target.q ** target.size == field.order ** algebra.size
    rng = np.random.default_rng(2)
    for v in rng.integers(0, field.order, size=(60, algebra.size), dtype=np.uint8):
        x = algebra.element(v)
        psi = quotient_map(x, h)
        assert in_ideal(x, i) == (psi == target.zero())
    for row in i.basis[:5]:
        assert quotient_map(algebra.element(row), h) == target.zero()


def test_quotient_map_examples():
    h = [C8(0), C8(4)]
    target, _ = quotient_algebra(A, h)
    assert target.group == GroupSpec.cyclic(2)
    assert quotient_map(A.parse("1 + a^4"), h) == target.zero()
    assert quotient_map(A.parse("a"), h) == target.parse("a")


@pytest.mark.parametrize("group, field", CONFIGS, ids=lambda v: str(v))
def test_quotient_is_homomorphism(group, field):
    algebra = GroupAlgebra(group, field)
    h = [g for g in group if (g * g).is_identity]
    rng = np.random.default_rng(9)
    # surjective onto F(G/H): the images of the group basis cover every coset
    target, cq = quotient_algebra(algebra, h)
    assert set(cq.project_index()) == set(range(target.size))
    for _ in range(200):
        x, y = (algebra.element(rng.integers(0, field.order, algebra.size, dtype=np.uint8)) for _ in range(2))
        assert quotient_map(x * y, h) == quotient_map(x, h) * quotient_map(y, h)
        assert quotient_map(x + y, h) == quotient_map(x, h) + quotient_map(y, h)


def test_quotient_rejects_non_coordinate_subgroup():
    g = GroupSpec((1, 1))
    with pytest.raises(ValueError):
        quotient_algebra(GroupAlgebra(g, F2), [g(0, 0), g(1, 1)])


@pytest.mark.parametrize("group, field, expected", [(C8, F2, 2 ** 7), (GroupSpec((3, 1)), F2, 2 ** 15), (C8, F4, 4 ** 7)])
def test_normalized_unit_counts(group, field, expected):
    algebra = GroupAlgebra(group, field)
    assert algebra.unit_count == expected
    keys = np.concatenate([GroupAlgebra.keys(b) for b in algebra.iter_unit_chunks()])
    assert len(np.unique(keys)) == expected


def test_normalized_units_match_filter():
    everything = np.array(np.meshgrid(*[[0, 1]] * 8, indexing="ij")).reshape(8, -1).T.astype(np.uint8)
    filtered = everything[A.augmentation_batch(everything) == 1]
    listed = np.array([u.coeffs for u in enumerate_normalized_units(A)])
    assert sorted(map(bytes, filtered)) == sorted(map(bytes, listed))
    assert (A.unit_index(listed) == np.arange(len(listed))).all()


def test_capacity_error():
    algebra = GroupAlgebra(GroupSpec.cyclic(4), F4)
    with pytest.raises(CapacityError) as exc:
        next(algebra.iter_unit_chunks(budget=1 << 20))
    assert exc.value.required == 4 ** 15


def test_support_and_trace_of_z_times_canonical_image():
    # coefficient of a^4 in z z^* vanishes; the identity coefficient is aug(z)^2
    s2 = cyclic_table(3)["sigma2"]
    units = np.concatenate(list(A.iter_unit_chunks()))
    prod = A.star_product_batch(s2, units)
    assert (prod[:, 4] == 0).all() and (prod[:, 0] == 1).all()
    b = GroupAlgebra(C8, F4)
    rng = np.random.default_rng(0)
    z = rng.integers(0, 4, size=(100_000, 8), dtype=np.uint8)
    prod = b.star_product_batch(cyclic_table(3)["sigma2"], z)
    assert (prod[:, 4] == 0).all()
    assert (prod[:, 0] == F4.square(b.augmentation_batch(z))).all()


def test_format_roundtrip():
    b = GroupAlgebra(GroupSpec((3, 1)), F4)
    rng = np.random.default_rng(4)
    for v in rng.integers(0, 4, size=(50, 16), dtype=np.uint8):
        x = b.element(v)
        assert b.parse(str(x)) == x
    assert str(GroupAlgebra(C8, F4).parse("1 + a^2 + (x+1)*a^5")) == "1 + a^2 + (x+1)*a^5"
    assert str(A.zero()) == "0"


def test_parallel_chunks_match_serial():
    algebra = GroupAlgebra(GroupSpec.cyclic(4), F2)
    serial = algebra.map_unit_chunks(_count_ones, chunk=1 << 12, workers=1)
    parallel = algebra.map_unit_chunks(_count_ones, chunk=1 << 12, workers=2)
    assert serial == parallel


def _count_ones(algebra, x):
    return int(x.sum())

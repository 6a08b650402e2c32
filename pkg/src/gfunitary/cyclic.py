"""Machinery specific to cyclic groups ``C_{2^n}`` with n > 2.

* :func:`sigma4_product_closed_form` evaluates ``x * x^sigma4`` from the
  coefficient vector without a convolution.
* :func:`s_h_subgroup` builds ``S_H`` for ``H = <a^(2^(n-1))>`` twice, from an
  explicit generating list and as the image of ``x -> x * x^sigma3`` on
  ``N = {x in V(FG) : Psi(x) is unitary in F(G/H)}``.
* :func:`sigma3_decomposition` assembles the order identity
  ``|V_sigma3| = |I(H)| * |V_*(F(G/H))| / |S_H|``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    DEFAULT_BUDGET,
    AlgebraElement,
    GroupAlgebra,
    hat_sum,
    ideal,
    induced_involution,
    quotient_algebra,
    quotient_batch,
)
from .field import FieldSpec
from .group import GroupSpec
from .involutions import cyclic_table, symmetric_group_elements
from .unitary import enumerate_unitary, generated_subgroup, unique_rows


def _cyclic_n(algebra: GroupAlgebra) -> int:
    g = algebra.group
    if not g.is_cyclic or g.exponents[0] <= 2:
        raise ValueError(f"expected C_(2^n) with n > 2, got {g}")
    return g.exponents[0]


def sigma4_closed_form_batch(algebra: GroupAlgebra, alpha: np.ndarray) -> np.ndarray:
    n = _cyclic_n(algebra)
    f = algebra.field
    alpha = np.atleast_2d(alpha)
    size, half, quarter, eighth = 1 << n, 1 << (n - 1), 1 << (n - 2), 1 << (n - 3)

    def a(i):
        return alpha[:, i % size]

    out = np.zeros_like(alpha)
    # sums alpha_{2i} + alpha_{2i+half}, i < quarter
    even_pairs = np.stack([a(2 * i) ^ a(2 * i + half) for i in range(quarter)], axis=1)
    for i in range(quarter):
        out[:, 4 * i] ^= f.square(even_pairs[:, i])
        j = 2 * (i + eighth) + 1
        out[:, 4 * i + 2] ^= f.square(a(j) ^ a(j + half))
    for j in range(quarter):
        l = 2 * j + 1
        odd_pairs = np.stack([a(l - 2 * i + half) ^ a(l - 2 * i) for i in range(quarter)], axis=1)
        c = np.bitwise_xor.reduce(f.mul(even_pairs, odd_pairs), axis=1)
        out[:, l] ^= c
        out[:, l + half] ^= c
    return out


def sigma4_product_closed_form(x: AlgebraElement) -> AlgebraElement:
    """``x * x^sigma4`` over ``F C_{2^n}``, sigma4: a -> a^(2^(n-1)+1).

    Even positions are squares of pair sums: ``a^(4i)`` gets
    ``(c_{2i} + c_{2i+h})^2`` and ``a^(4i+2)`` gets
    ``(c_{2(i+e)+1} + c_{2(i+e)+1+h})^2``; odd positions ``a^l`` and
    ``a^(l+h)`` (l = 1, 3, ..., h-1) share
    ``sum_{i<h/2} (c_{2i} + c_{2i+h}) (c_{l-2i+h} + c_{l-2i})``, where
    ``h = 2^(n-1)``, ``e = 2^(n-3)`` and indices are taken mod ``2^n``.
    """
    return AlgebraElement(x.algebra, sigma4_closed_form_batch(x.algebra, x.coeffs)[0])


def odd_pairing_batch(algebra: GroupAlgebra, y: np.ndarray) -> np.ndarray:
    """Row-wise check on ``y = x * x^sigma4``: odd coefficients sum to zero and
    ``a^l``, ``a^(l+2^(n-1))`` carry equal coefficients for odd ``l``."""
    n = _cyclic_n(algebra)
    half = 1 << (n - 1)
    y = np.atleast_2d(y)
    odd = y[:, 1::2]
    paired = (y[:, 1:half:2] == y[:, half + 1 :: 2]).all(axis=1)
    return paired & (np.bitwise_xor.reduce(odd, axis=1) == 0)


def check_corollary1(x: AlgebraElement) -> bool:
    algebra = x.algebra
    sigma4 = cyclic_table(_cyclic_n(algebra))["sigma4"]
    return bool(odd_pairing_batch(algebra, algebra.star_product_batch(sigma4, x.coeffs))[0])


# S_H and the sigma3 order decomposition


@dataclass(frozen=True, eq=False)
class SHResult:
    algebra: GroupAlgebra
    from_generators: np.ndarray
    from_image: np.ndarray
    preimage_order: int  # |N|

    @property
    def order(self) -> int:
        return len(self.from_generators)

    @property
    def agree(self) -> bool:
        a = np.sort(GroupAlgebra.keys(self.from_generators))
        b = np.sort(GroupAlgebra.keys(self.from_image))
        return len(a) == len(b) and bool((a == b).all())

    def contains(self, x: AlgebraElement) -> bool:
        keys = GroupAlgebra.keys(self.from_generators)
        return bool(np.isin(GroupAlgebra.keys(x.coeffs), keys)[0])


def s_h_generators(algebra: GroupAlgebra) -> np.ndarray:
    """``a^h``, ``1 + b a^(h/2) H^`` and ``1 + c (a^i + a^(h-i)) H^`` for
    ``b, c`` in F and ``0 < i < h/2``; ``h = 2^(n-1)``, ``H^ = 1 + a^h``."""
    n = _cyclic_n(algebra)
    g = algebra.group
    half, quarter = 1 << (n - 1), 1 << (n - 2)
    hat = hat_sum(algebra, [g(0), g(half)])
    one = algebra.one()
    gens = [algebra.basis(g(half)).coeffs]
    for c in range(1, algebra.q):
        gens.append((one + algebra.basis(g(quarter), c) * hat).coeffs)
        for i in range(1, quarter):
            term = algebra.basis(g(i), c) + algebra.basis(g(half - i), c)
            gens.append((one + term * hat).coeffs)
    return np.array(gens, dtype=np.uint8)


def _image_on_preimage(algebra, x, sigma3, quotient, proj, induced):
    psi = quotient_batch(x, proj, quotient.size)
    in_n = quotient.is_one_batch(quotient.star_product_batch(induced, psi))
    return unique_rows(algebra.star_product_batch(sigma3, x[in_n])), int(in_n.sum())


def s_h_subgroup(n: int, field: FieldSpec, budget: int = DEFAULT_BUDGET) -> SHResult:
    algebra = GroupAlgebra(GroupSpec.cyclic(n), field)
    sigma3 = cyclic_table(n)["sigma3"]
    h = symmetric_group_elements(sigma3)
    quotient, cq = quotient_algebra(algebra, h)
    proj = cq.project_index()
    induced = induced_involution(sigma3, cq)
    gens = s_h_generators(algebra)
    closed = generated_subgroup(algebra, gens)
    parts = algebra.map_unit_chunks(
        _image_on_preimage, sigma3, quotient, proj, induced, budget=budget
    )
    image = unique_rows(np.concatenate([p[0] for p in parts]))
    return SHResult(algebra, closed, image, sum(p[1] for p in parts))


@dataclass(frozen=True)
class Sigma3Decomposition:
    n: int
    q: int
    ideal_size: int
    quotient_unitary_order: int
    s_h_order: int
    preimage_order: int
    unitary_order: int

    @property
    def predicted(self) -> int:
        value, rem = divmod(self.ideal_size * self.quotient_unitary_order, self.s_h_order)
        return value if rem == 0 else -1

    @property
    def holds(self) -> bool:
        return self.predicted == self.unitary_order


def sigma3_decomposition(n: int, field: FieldSpec, budget: int = DEFAULT_BUDGET) -> Sigma3Decomposition:
    algebra = GroupAlgebra(GroupSpec.cyclic(n), field)
    sigma3 = cyclic_table(n)["sigma3"]
    h = symmetric_group_elements(sigma3)
    quotient, cq = quotient_algebra(algebra, h)
    induced = induced_involution(sigma3, cq)
    s_h = s_h_subgroup(n, field, budget)
    return Sigma3Decomposition(
        n=n,
        q=field.order,
        ideal_size=ideal(algebra, h).size,
        quotient_unitary_order=len(enumerate_unitary(quotient, induced, budget)),
        s_h_order=s_h.order,
        preimage_order=s_h.preimage_order,
        unitary_order=len(enumerate_unitary(algebra, sigma3, budget)),
    )

"""Unitary subgroups ``V_sigma(FG) = {u in V(FG) : u * u^sigma = 1}``.

Two routes to the order are provided.  ``enumeration`` sweeps every normalized
unit and keeps the unitary ones.  ``image-count`` uses that for abelian ``G``
the map ``phi(x) = x * x^sigma`` is a homomorphism of ``V(FG)`` whose kernel is
``V_sigma``, so ``|V_sigma| = |V| / |phi(V)|``.

Structure (exponent and abelian invariants) is read off the element-order
census of an explicitly collected subgroup.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field

import numpy as np

from .algebra import DEFAULT_BUDGET, AlgebraElement, CapacityError, GroupAlgebra, augmentation
from .group import invariants_from_census
from .involutions import InvolutionSpec

METHODS = ("auto", "enumeration", "image-count")


def is_unitary(u: AlgebraElement, sigma: InvolutionSpec) -> bool:
    """``u^sigma = u^-1``, tested as ``u * u^sigma = 1``."""
    if augmentation(u).value != 1:
        raise ValueError(f"{u} is not a normalized unit")
    algebra = u.algebra
    return bool(algebra.is_one_batch(algebra.star_product_batch(sigma, u.coeffs))[0])


@dataclass(frozen=True, eq=False)
class UnitarySubgroup:
    algebra: GroupAlgebra
    sigma: InvolutionSpec
    elements: np.ndarray  # (order, |G|), sorted by unit index

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        for row in self.elements:
            yield AlgebraElement(self.algebra, row)

    def __contains__(self, x: AlgebraElement) -> bool:
        return bool(np.isin(GroupAlgebra.keys(x.coeffs), GroupAlgebra.keys(self.elements))[0])


@dataclass
class SubgroupReport:
    group: str
    field: str
    sigma: str
    order: int
    exponent: int | None
    invariants: list[int]
    method: str
    elapsed_ms: float | None = None
    extra: dict = field(default_factory=dict)

    def to_dict(self, timings: bool = True) -> dict:
        d = asdict(self)
        extra = d.pop("extra")
        if not timings:
            d["elapsed_ms"] = None
        d.update(extra)
        return d


def _unitary_chunk(algebra: GroupAlgebra, x: np.ndarray, sigma: InvolutionSpec) -> np.ndarray:
    return x[algebra.is_one_batch(algebra.star_product_batch(sigma, x))]


def _image_chunk(algebra: GroupAlgebra, x: np.ndarray, sigma: InvolutionSpec) -> np.ndarray:
    return unique_rows(algebra.star_product_batch(sigma, x))


def unique_rows(x: np.ndarray) -> np.ndarray:
    width = x.shape[1]
    keys = np.unique(GroupAlgebra.keys(x))
    return keys.view(np.uint8).reshape(-1, width)


def enumerate_unitary(algebra: GroupAlgebra, sigma: InvolutionSpec, budget: int = DEFAULT_BUDGET) -> np.ndarray:
    parts = algebra.map_unit_chunks(_unitary_chunk, sigma, budget=budget)
    return np.concatenate(parts) if parts else np.zeros((0, algebra.size), dtype=np.uint8)


@dataclass(frozen=True, eq=False)
class StarImage:
    """``S_sigma = {x * x^sigma : x in V(FG)}``."""

    algebra: GroupAlgebra
    sigma: InvolutionSpec
    elements: np.ndarray

    @property
    def order(self) -> int:
        return len(self.elements)


def compute_star_image(algebra: GroupAlgebra, sigma: InvolutionSpec, budget: int = DEFAULT_BUDGET) -> StarImage:
    parts = algebra.map_unit_chunks(_image_chunk, sigma, budget=budget)
    return StarImage(algebra, sigma, unique_rows(np.concatenate(parts)))


def compute_unitary_subgroup(
    algebra: GroupAlgebra,
    sigma: InvolutionSpec,
    method: str = "auto",
    budget: int = DEFAULT_BUDGET,
) -> tuple[UnitarySubgroup | None, SubgroupReport]:
    """Collect ``V_sigma(FG)`` (``enumeration``) or count it (``image-count``).

    ``auto`` resolves to ``enumeration``.  Both routes sweep ``V(FG)``, so both
    raise :class:`CapacityError` when ``|V(FG)|`` exceeds ``budget``.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if algebra.unit_count > budget:
        raise CapacityError(algebra.unit_count, budget)
    start = time.perf_counter()
    if method == "image-count":
        image = compute_star_image(algebra, sigma, budget)
        order, rem = divmod(algebra.unit_count, image.order)
        assert rem == 0, "image order does not divide |V(FG)|"
        report = SubgroupReport(
            algebra.group.name, f"GF({algebra.q})", sigma.label, order, None, [], "image-count"
        )
        report.elapsed_ms = round((time.perf_counter() - start) * 1000, 3)
        return None, report
    elements = enumerate_unitary(algebra, sigma, budget)
    subgroup = UnitarySubgroup(algebra, sigma, elements)
    structure = analyse_subgroup(algebra, elements)
    report = SubgroupReport(
        algebra.group.name,
        f"GF({algebra.q})",
        sigma.label,
        len(elements),
        structure.exponent,
        structure.invariants,
        "enumeration",
    )
    report.elapsed_ms = round((time.perf_counter() - start) * 1000, 3)
    return subgroup, report


# structure of finite abelian 2-subgroups of V(FG)


def element_orders(algebra: GroupAlgebra, x: np.ndarray) -> np.ndarray:
    """Orders by repeated squaring; every unit of ``FG`` has 2-power order."""
    x = np.atleast_2d(x)
    orders = np.ones(len(x), dtype=np.int64)
    live = np.flatnonzero(~algebra.is_one_batch(x))
    cur = x[live]
    while len(live):
        orders[live] *= 2
        cur = algebra.square_batch(cur)
        keep = ~algebra.is_one_batch(cur)
        live, cur = live[keep], cur[keep]
    return orders


def order_census(orders: np.ndarray) -> list[int]:
    """``census[k] = #{u : u^(2^k) = 1}`` up to the exponent."""
    census = [int((orders <= 1).sum())]
    k = 0
    while census[-1] < len(orders):
        k += 1
        census.append(int((orders <= 1 << k).sum()))
    return census


def generated_subgroup(algebra: GroupAlgebra, gens: np.ndarray, limit: int | None = None) -> np.ndarray:
    """Subgroup of ``V(FG)`` generated by the rows of ``gens``.

    Grows coset by coset: adjoining ``g`` to ``K`` gives the disjoint union
    of ``K g^j`` for ``j`` below the index.
    """
    one = np.zeros((1, algebra.size), dtype=np.uint8)
    one[0, 0] = 1
    members = one
    for g in np.atleast_2d(gens):
        members = _adjoin(algebra, members, g[None, :], limit)
    return members


def _adjoin(algebra: GroupAlgebra, members: np.ndarray, g: np.ndarray, limit: int | None) -> np.ndarray:
    keys = np.sort(GroupAlgebra.keys(members))
    blocks = [members]
    p = g
    while not _contains_sorted(keys, GroupAlgebra.keys(p))[0]:
        blocks.append(algebra.mul_batch(members, p))
        if limit is not None and len(blocks) * len(members) > limit:
            raise ValueError(f"generated subgroup exceeds {limit} elements")
        p = algebra.mul_batch(p, g)
    return np.concatenate(blocks)


def _contains_sorted(sorted_keys: np.ndarray, keys: np.ndarray) -> np.ndarray:
    pos = np.searchsorted(sorted_keys, keys)
    pos = np.minimum(pos, len(sorted_keys) - 1)
    return sorted_keys[pos] == keys


def check_closed(algebra: GroupAlgebra, elements: np.ndarray) -> None:
    """Raise ``ValueError`` unless the rows form a subgroup of ``V(FG)``.

    A generating set is picked greedily from the rows; the set is a group
    exactly when the subgroup it generates has the same members.
    """
    elements = np.atleast_2d(elements)
    keys = GroupAlgebra.keys(elements)
    skeys = np.sort(keys)
    if len(np.unique(skeys)) != len(skeys):
        raise ValueError("element list contains duplicates")
    if (algebra.augmentation_batch(elements) == 0).any():
        raise ValueError("element list contains non-units")
    members = generated_subgroup(algebra, elements[:0])
    while True:
        covered = _contains_sorted(np.sort(GroupAlgebra.keys(members)), keys)
        missing = np.flatnonzero(~covered)
        if not len(missing):
            break
        members = _adjoin(algebra, members, elements[missing[0]][None, :], limit=len(elements))
    if len(members) != len(elements):
        raise ValueError(f"set of {len(elements)} elements is not closed under multiplication")


@dataclass(frozen=True)
class Structure:
    order: int
    exponent: int
    invariants: list[int]
    census: list[int]


def analyse_subgroup(algebra: GroupAlgebra, elements: np.ndarray, check: bool = True) -> Structure:
    if check:
        check_closed(algebra, elements)
    orders = element_orders(algebra, elements)
    census = order_census(orders)
    invariants = invariants_from_census(census)
    return Structure(len(elements), int(orders.max()), invariants, census)


def abelian_invariants(algebra: GroupAlgebra, elements: np.ndarray) -> list[int]:
    """Cyclic orders (ascending) of a subgroup of ``V(FG)``."""
    return analyse_subgroup(algebra, elements).invariants


def subgroup_exponent(algebra: GroupAlgebra, elements: np.ndarray) -> int:
    return analyse_subgroup(algebra, elements).exponent

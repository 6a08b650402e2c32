"""Automorphisms of order at most two of a finite abelian 2-group.

An automorphism is stored by the images of the standard generators.  Named
tables reproduce the conventional numbering: ``sigma1..sigma4`` on a cyclic
group ``C_{2^n}`` (n > 2) and ``sigma1..sigma6`` on ``C_8 x C_2``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

import numpy as np

from .group import GENERATOR_NAMES, GroupElement, GroupSpec, invariants_from_census


@dataclass(frozen=True)
class InvolutionSpec:
    group: GroupSpec
    images: tuple[tuple[int, ...], ...]
    name: str | None = field(default=None, compare=False)
    _perm: np.ndarray = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        g = self.group
        images = tuple(GroupElement(g, tuple(im)).exps for im in self.images)
        if len(images) != g.rank:
            raise ValueError(f"need one image per generator of {g}, got {len(images)}")
        object.__setattr__(self, "images", images)
        perm = _image_map(g, images)
        if not _is_homomorphism(g, images):
            raise ValueError(f"{self.describe()} does not define a homomorphism of {g}")
        if len(np.unique(perm)) != g.order:
            raise ValueError(f"{self.describe()} is not bijective on {g}")
        if not np.array_equal(perm[perm], np.arange(g.order)):
            raise ValueError(f"{self.describe()} does not square to the identity")
        perm.setflags(write=False)
        object.__setattr__(self, "_perm", perm)

    @property
    def perm(self) -> np.ndarray:
        """``perm[i]`` is the index of ``sigma(g_i)``."""
        return self._perm

    @property
    def is_identity(self) -> bool:
        return bool(np.array_equal(self._perm, np.arange(self.group.order)))

    @property
    def is_canonical(self) -> bool:
        return bool(np.array_equal(self._perm, self.group.inv_index))

    @property
    def label(self) -> str:
        return self.name or self.describe()

    def describe(self) -> str:
        parts = []
        for gen, im in zip(GENERATOR_NAMES, self.images):
            parts.append(f"{gen}->{GroupElement(self.group, im)}")
        return ",".join(parts)

    def __call__(self, g: GroupElement) -> GroupElement:
        return apply_automorphism(self, g)

    def __str__(self) -> str:
        return self.label


def _image_map(g: GroupSpec, images) -> np.ndarray:
    # sigma(prod gen_i^e_i) = prod image_i^e_i
    exps = g.exps_array @ np.array(images, dtype=np.int64).reshape(g.rank, g.rank)
    return g.index_of_exps(exps)


def _is_homomorphism(g: GroupSpec, images) -> bool:
    # each relation gen_i^(2^n_i) = 1 must map to the identity
    for im, m in zip(images, g.moduli):
        if any((e * m) % mod for e, mod in zip(im, g.moduli)):
            return False
    return True


def apply_automorphism(sigma: InvolutionSpec, g: GroupElement) -> GroupElement:
    if g.spec != sigma.group:
        raise ValueError(f"automorphism of {sigma.group} applied to element of {g.spec}")
    return g.spec.element(int(sigma.perm[g.index]))


def symmetric_group_elements(sigma: InvolutionSpec) -> frozenset[GroupElement]:
    """Fixed points ``{g : sigma(g) = g}``."""
    g = sigma.group
    fixed = np.flatnonzero(sigma.perm == np.arange(g.order))
    return frozenset(g.element(int(i)) for i in fixed)


def _candidate_images(g: GroupSpec, i: int) -> list[tuple[int, ...]]:
    """Elements whose order divides the order of generator ``i``."""
    m = g.moduli[i]
    return [tuple(int(v) for v in g.exps_array[j]) for j in np.flatnonzero(g.pow_index(m) == 0)]


def enumerate_automorphisms(g: GroupSpec) -> list[tuple[tuple[int, ...], ...]]:
    """Brute force over generator images; returns image tuples of all automorphisms."""
    pools = [_candidate_images(g, i) for i in range(g.rank)]
    autos = []
    for images in itertools.product(*pools):
        if not _is_homomorphism(g, images):
            continue
        perm = _image_map(g, images)
        if len(np.unique(perm)) == g.order:
            autos.append(tuple(images))
    return autos


def enumerate_involutive_automorphisms(g: GroupSpec) -> list[InvolutionSpec]:
    """All automorphisms with ``sigma^2 = id``, identity included.

    Ordered lexicographically by the vector of generator-image indices.  When
    ``g`` has a named table the entries carry those names.
    """
    found = []
    for images in enumerate_automorphisms(g):
        perm = _image_map(g, images)
        if np.array_equal(perm[perm], np.arange(g.order)):
            key = tuple(int(v) for v in g.index_of_exps(np.array(images)))
            found.append((key, images))
    found.sort()
    names = {s.images: s.name for s in named_involutions(g).values()}
    return [InvolutionSpec(g, images, names.get(images)) for _, images in found]


def aut_group_order(g: GroupSpec) -> tuple[int, tuple[int, ...]]:
    """Order and abelian invariants (descending) of ``Aut(C_{2^n})``, n > 2.

    Both are computed by brute force: the automorphisms ``a -> a^u`` are
    enumerated and the structure is read off their order census.
    """
    if not g.is_cyclic:
        raise ValueError(f"aut_group_order expects a cyclic group, got {g}")
    n = g.exponents[0]
    if n <= 2:
        raise ValueError(f"aut_group_order needs C_(2^n) with n > 2, got {g}")
    mod = 1 << n
    units = [images[0][0] for images in enumerate_automorphisms(g)]
    census = []
    k = 0
    while True:
        c = sum(1 for u in units if pow(u, 1 << k, mod) == 1)
        census.append(c)
        if c == len(units):
            break
        k += 1
    return len(units), tuple(sorted(invariants_from_census(census), reverse=True))


def cyclic_table(n: int) -> dict[str, InvolutionSpec]:
    """sigma1: identity, sigma2: a -> a^-1, sigma3: a -> a^(2^(n-1)-1), sigma4: a -> a^(2^(n-1)+1)."""
    if n <= 2:
        raise ValueError(f"the sigma table needs n > 2, got {n}")
    g = GroupSpec.cyclic(n)
    half = 1 << (n - 1)
    exps = {"sigma1": 1, "sigma2": -1, "sigma3": half - 1, "sigma4": half + 1}
    return {name: InvolutionSpec(g, ((e,),), name) for name, e in exps.items()}


def c8xc2_table() -> dict[str, InvolutionSpec]:
    g = GroupSpec((3, 1))
    images = {
        "sigma1": ((1, 0), (0, 1)),
        "sigma2": ((3, 1), (0, 1)),
        "sigma3": ((1, 1), (0, 1)),
        "sigma4": ((1, 0), (4, 1)),
        "sigma5": ((3, 0), (4, 1)),
        "sigma6": ((3, 0), (0, 1)),
    }
    return {name: InvolutionSpec(g, im, name) for name, im in images.items()}


def named_involutions(g: GroupSpec) -> dict[str, InvolutionSpec]:
    if g.is_cyclic and g.exponents[0] > 2:
        return cyclic_table(g.exponents[0])
    if g.exponents == (3, 1):
        return c8xc2_table()
    return {}


def parse_involution(g: GroupSpec, text: str) -> InvolutionSpec:
    """``sigma3`` (named table) or an image list such as ``a->a^3*b,b->b``."""
    text = text.strip()
    table = named_involutions(g)
    if text.lower() in table:
        return table[text.lower()]
    if re.fullmatch(r"sigma\d+", text.lower()):
        raise ValueError(f"no involution named {text!r} for {g}")
    images: dict[int, tuple[int, ...]] = {}
    for part in text.split(","):
        lhs, sep, rhs = part.partition("->")
        lhs = lhs.strip()
        if not sep or lhs not in GENERATOR_NAMES[: g.rank]:
            raise ValueError(f"cannot parse generator image {part!r}")
        images[GENERATOR_NAMES.index(lhs)] = parse_group_word(g, rhs)
    for i in range(g.rank):
        images.setdefault(i, g.generators[i].exps)
    return InvolutionSpec(g, tuple(images[i] for i in range(g.rank)))


def parse_group_word(g: GroupSpec, text: str) -> tuple[int, ...]:
    exps = [0] * g.rank
    text = text.replace(" ", "")
    if text in ("", "1"):
        return tuple(exps)
    for factor in text.split("*"):
        m = re.fullmatch(r"([a-h])(?:\^(-?\d+))?", factor)
        if not m or m.group(1) not in GENERATOR_NAMES[: g.rank]:
            raise ValueError(f"cannot parse group word {text!r} for {g}")
        exps[GENERATOR_NAMES.index(m.group(1))] += int(m.group(2) or 1)
    return GroupElement(g, tuple(exps)).exps

"""Finite abelian 2-groups ``C_{2^n_1} x ... x C_{2^n_r}``.

Elements are exponent vectors.  The index of an element is its mixed-radix
value with the *last* factor varying fastest, so in ``C_8 x C_2`` the element
``a^i b^j`` has index ``2*i + j``.  The group algebra stores coefficient
vectors in this order.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

GENERATOR_NAMES = "abcdefgh"
DEFAULT_GROUP_BUDGET = 1 << 10


@dataclass(frozen=True)
class GroupSpec:
    exponents: tuple[int, ...]
    _tables: "_GroupTables" = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 1 for e in exps):
            raise ValueError(f"every cyclic factor needs exponent >= 1, got {exps}")
        if len(exps) > len(GENERATOR_NAMES):
            raise ValueError(f"at most {len(GENERATOR_NAMES)} cyclic factors supported")
        if sum(exps) > DEFAULT_GROUP_BUDGET.bit_length() - 1:
            raise ValueError(f"group of order 2^{sum(exps)} exceeds budget {DEFAULT_GROUP_BUDGET}")
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "_tables", _build_tables(exps))

    @classmethod
    def cyclic(cls, n: int) -> GroupSpec:
        """``C_{2^n}``."""
        return cls((n,))

    @classmethod
    def parse(cls, text: str) -> GroupSpec:
        """Parse ``c8``, ``c8xc2`` or ``8,2``."""
        parts = [p for p in re.split(r"[x,*]", text.strip().lower()) if p]
        if not parts:
            raise ValueError(f"empty group description {text!r}")
        exps = []
        for p in parts:
            m = re.fullmatch(r"c?(\d+)", p.strip())
            if not m:
                raise ValueError(f"cannot parse cyclic factor {p!r} in {text!r}")
            order = int(m.group(1))
            if order < 2 or order & (order - 1):
                raise ValueError(f"cyclic factor order must be a power of two >= 2, got {order}")
            exps.append(order.bit_length() - 1)
        return cls(tuple(exps))

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(1 << e for e in self.exponents)

    @property
    def order(self) -> int:
        return 1 << sum(self.exponents)

    @property
    def rank(self) -> int:
        return len(self.exponents)

    @property
    def is_cyclic(self) -> bool:
        return self.rank == 1

    @property
    def exponent(self) -> int:
        return 1 << max(self.exponents)

    @property
    def identity(self) -> GroupElement:
        return GroupElement(self, (0,) * self.rank)

    @property
    def generators(self) -> list[GroupElement]:
        gens = []
        for i in range(self.rank):
            e = [0] * self.rank
            e[i] = 1
            gens.append(GroupElement(self, tuple(e)))
        return gens

    def __call__(self, *exps: int) -> GroupElement:
        return GroupElement(self, tuple(exps))

    def __iter__(self) -> Iterator[GroupElement]:
        return enumerate_elements(self)

    def __len__(self) -> int:
        return self.order

    def __str__(self) -> str:
        return "x".join(f"C{m}" for m in self.moduli)

    @property
    def name(self) -> str:
        return "x".join(f"c{m}" for m in self.moduli)

    def element(self, index: int) -> GroupElement:
        return GroupElement(self, tuple(int(v) for v in self._tables.exps[index]))

    @property
    def mul_index(self) -> np.ndarray:
        """``mul_index[i, j]`` is the index of ``g_i * g_j``."""
        return self._tables.mul

    @property
    def inv_index(self) -> np.ndarray:
        return self._tables.inv

    @property
    def exps_array(self) -> np.ndarray:
        return self._tables.exps

    def pow_index(self, m: int) -> np.ndarray:
        return self.index_of_exps(self._tables.exps * m)

    def index_of_exps(self, exps: np.ndarray) -> np.ndarray:
        exps = np.asarray(exps, dtype=np.int64) % np.array(self.moduli)
        idx = np.zeros(exps.shape[:-1], dtype=np.int64)
        for i, n in enumerate(self.exponents):
            idx = (idx << n) | exps[..., i]
        return idx


@dataclass(frozen=True)
class _GroupTables:
    exps: np.ndarray
    mul: np.ndarray
    inv: np.ndarray


@functools.lru_cache(maxsize=None)
def _build_tables(exponents: tuple[int, ...]) -> _GroupTables:
    moduli = np.array([1 << e for e in exponents])
    grids = np.meshgrid(*[np.arange(m) for m in moduli], indexing="ij")
    exps = np.stack([g.ravel() for g in grids], axis=-1).astype(np.int64)

    def index(e):
        e = e % moduli
        idx = np.zeros(e.shape[:-1], dtype=np.int64)
        for i, n in enumerate(exponents):
            idx = (idx << n) | e[..., i]
        return idx

    mul = index(exps[:, None, :] + exps[None, :, :])
    inv = index(-exps)
    for arr in (exps, mul, inv):
        arr.setflags(write=False)
    return _GroupTables(exps, mul, inv)


@dataclass(frozen=True)
class GroupElement:
    spec: GroupSpec
    exps: tuple[int, ...]

    def __post_init__(self):
        if len(self.exps) != self.spec.rank:
            raise ValueError(f"{self.spec} needs {self.spec.rank} exponents, got {self.exps}")
        object.__setattr__(
            self, "exps", tuple(int(e) % m for e, m in zip(self.exps, self.spec.moduli))
        )

    def _check(self, other: GroupElement) -> None:
        if not isinstance(other, GroupElement):
            raise TypeError(f"expected GroupElement, got {type(other).__name__}")
        if other.spec != self.spec:
            raise ValueError(f"mixed-group operands: {self.spec} and {other.spec}")

    def __mul__(self, other: GroupElement) -> GroupElement:
        return g_mul(self, other)

    def __pow__(self, m: int) -> GroupElement:
        return g_pow(self, m)

    def __invert__(self) -> GroupElement:
        return g_inv(self)

    @property
    def index(self) -> int:
        return element_index(self)

    @property
    def is_identity(self) -> bool:
        return not any(self.exps)

    def __str__(self) -> str:
        parts = []
        for name, e in zip(GENERATOR_NAMES, self.exps):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def __repr__(self) -> str:
        return f"GroupElement({self} in {self.spec})"


def g_mul(g: GroupElement, h: GroupElement) -> GroupElement:
    g._check(h)
    return GroupElement(g.spec, tuple(x + y for x, y in zip(g.exps, h.exps)))


def g_inv(g: GroupElement) -> GroupElement:
    return GroupElement(g.spec, tuple(-x for x in g.exps))


def g_pow(g: GroupElement, m: int) -> GroupElement:
    return GroupElement(g.spec, tuple(x * m for x in g.exps))


def g_order(g: GroupElement) -> int:
    order = 1
    for e, n in zip(g.exps, g.spec.exponents):
        if e:
            # order of e in Z/2^n is 2^n / 2^v(e)
            v = (e & -e).bit_length() - 1
            order = max(order, 1 << (n - v))
    return order


def enumerate_elements(spec: GroupSpec) -> Iterator[GroupElement]:
    for i in range(spec.order):
        yield spec.element(i)


def element_index(g: GroupElement) -> int:
    idx = 0
    for e, n in zip(g.exps, g.spec.exponents):
        idx = (idx << n) | e
    return idx


def torsion_subgroup(spec: GroupSpec, i: int) -> frozenset[GroupElement]:
    """``G[2^i]``, computed as the kernel of ``g -> g^(2^i)``."""
    if i < 0:
        raise ValueError("i must be non-negative")
    kernel = np.flatnonzero(spec.pow_index(1 << i) == 0)
    return frozenset(spec.element(int(j)) for j in kernel)


def generated_by_order(spec: GroupSpec, i: int) -> frozenset[GroupElement]:
    """Subgroup generated by the elements of order exactly ``2^i``."""
    gens = [g for g in spec if g_order(g) == 1 << i]
    return closure(spec, gens)


def power_subgroup(spec: GroupSpec, i: int) -> frozenset[GroupElement]:
    """``G^{2^i} = {g^(2^i)}``; already a subgroup since ``G`` is abelian."""
    if i < 0:
        raise ValueError("i must be non-negative")
    image = np.unique(spec.pow_index(1 << i))
    return frozenset(spec.element(int(j)) for j in image)


def closure(spec: GroupSpec, gens: Iterable[GroupElement]) -> frozenset[GroupElement]:
    members = {spec.identity}
    frontier = list(members)
    gens = list(gens)
    while frontier:
        new = []
        for g in frontier:
            for s in gens:
                h = g * s
                if h not in members:
                    members.add(h)
                    new.append(h)
        frontier = new
    return frozenset(members)


def is_subgroup(elements: Iterable[GroupElement]) -> bool:
    elements = set(elements)
    if not elements:
        return False
    return all(g * h in elements for g in elements for h in elements) and all(
        ~g in elements for g in elements
    )


def invariants_from_census(census: Sequence[int]) -> list[int]:
    """Abelian invariants of a finite abelian 2-group from its order census.

    ``census[k]`` is the number of elements ``u`` with ``u^(2^k) = 1``, for
    ``k = 0, 1, ...`` until it reaches the group order.  Since
    ``log2 census[k] = sum_i min(k, e_i)``, the first differences count the
    cyclic factors of order at least ``2^k``.  Returns the cyclic orders in
    ascending order.
    """
    logs = []
    for c in census:
        if c < 1 or c & (c - 1):
            raise ValueError(f"census entry {c} is not a power of two; not a 2-group")
        logs.append(c.bit_length() - 1)
    if logs[0] != 0:
        raise ValueError("census must start with the trivial count 1")
    at_least = [logs[k] - logs[k - 1] for k in range(1, len(logs))] + [0]
    invariants: list[int] = []
    for k in range(1, len(logs)):
        count = at_least[k - 1] - at_least[k]
        if count < 0:
            raise ValueError(f"census {list(census)} is not consistent with an abelian group")
        invariants.extend([1 << k] * count)
    return sorted(invariants)


def abelian_invariants_of(spec: GroupSpec) -> list[int]:
    return sorted(spec.moduli)

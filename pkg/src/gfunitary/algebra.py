"""The group algebra ``FG`` of a finite abelian 2-group over GF(2^k).

Elements are dense coefficient vectors indexed by group-element index.  Most
routines come in two flavours: methods on :class:`GroupAlgebra` operating on
``(N, |G|)`` uint8 batches, and the :class:`AlgebraElement` value type that
wraps a single vector for interactive use.

Normalized units are enumerated by a mixed-radix index over the coefficients
of the non-identity group elements (last group element fastest); the identity
coefficient is then forced so that the augmentation is 1.
"""

from __future__ import annotations

import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .field import FieldElement, FieldSpec
from .group import GroupElement, GroupSpec
from .involutions import InvolutionSpec, parse_group_word

DEFAULT_BUDGET = 1 << 24
CHUNK = 1 << 16
WORKERS_ENV = "GFUNITARY_WORKERS"


class CapacityError(RuntimeError):
    """An enumeration would exceed the configured budget."""

    def __init__(self, required: int, budget: int, what: str = "normalized units"):
        super().__init__(f"{what}: {required} required, budget is {budget}")
        self.required = required
        self.budget = budget


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class GroupAlgebra:
    group: GroupSpec
    field: FieldSpec
    _conv: np.ndarray = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        # _conv[h, g] = index of h^-1 g, so (xy)_g = sum_h x_h y_{h^-1 g}
        g = self.group
        conv = g.mul_index[g.inv_index]
        conv.setflags(write=False)
        object.__setattr__(self, "_conv", conv)

    @property
    def size(self) -> int:
        return self.group.order

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def unit_count(self) -> int:
        """``|V(FG)| = q^(|G|-1)``."""
        return self.q ** (self.size - 1)

    def __str__(self) -> str:
        return f"F{self.q}[{self.group}]"

    # element construction

    def element(self, coeffs) -> AlgebraElement:
        return AlgebraElement(self, coeffs)

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, np.zeros(self.size, dtype=np.uint8))

    def one(self) -> AlgebraElement:
        return self.basis(self.group.identity)

    def basis(self, g: GroupElement, c: int | FieldElement = 1) -> AlgebraElement:
        v = np.zeros(self.size, dtype=np.uint8)
        v[g.index] = int(c)
        return AlgebraElement(self, v)

    def scalar(self, c: int | FieldElement) -> AlgebraElement:
        return self.basis(self.group.identity, c)

    def from_terms(self, terms: dict[GroupElement, int]) -> AlgebraElement:
        v = np.zeros(self.size, dtype=np.uint8)
        for g, c in terms.items():
            v[g.index] ^= int(c)
        return AlgebraElement(self, v)

    def parse(self, text: str) -> AlgebraElement:
        return parse_element(self, text)

    # batch arithmetic on (N, |G|) uint8 arrays

    def mul_batch(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        x = np.atleast_2d(x)
        y = np.atleast_2d(y)
        n = max(len(x), len(y))
        out = np.zeros((n, self.size), dtype=np.uint8)
        mul = self.field.mul
        for h in range(self.size):
            xh = x[:, h : h + 1]
            if not xh.any():
                continue
            out ^= mul(xh, y[:, self._conv[h]])
        return out

    def square_batch(self, x: np.ndarray) -> np.ndarray:
        """Frobenius: ``(sum c_g g)^2 = sum c_g^2 g^2``."""
        x = np.atleast_2d(x)
        sq = self.field.square(x)
        out = np.zeros_like(sq)
        target = self.group.pow_index(2)
        for g in range(self.size):
            out[:, target[g]] ^= sq[:, g]
        return out

    def involution_batch(self, sigma: InvolutionSpec, x: np.ndarray) -> np.ndarray:
        # coefficient of sigma(g) in x^sigma is x_g; sigma is its own inverse
        self._check_involution(sigma)
        return np.atleast_2d(x)[:, sigma.perm]

    def augmentation_batch(self, x: np.ndarray) -> np.ndarray:
        return np.bitwise_xor.reduce(np.atleast_2d(x), axis=1)

    def is_one_batch(self, x: np.ndarray) -> np.ndarray:
        x = np.atleast_2d(x)
        return (x[:, 0] == 1) & ~x[:, 1:].any(axis=1)

    def star_product_batch(self, sigma: InvolutionSpec, x: np.ndarray) -> np.ndarray:
        """``x * x^sigma`` for every row."""
        return self.mul_batch(x, self.involution_batch(sigma, x))

    def _check_involution(self, sigma: InvolutionSpec) -> None:
        if sigma.group != self.group:
            raise ValueError(f"involution of {sigma.group} used on {self}")

    # normalized units

    def units_batch(self, start: int, stop: int) -> np.ndarray:
        """Normalized units with enumeration index in ``[start, stop)``."""
        idx = np.arange(start, stop, dtype=np.int64)
        k, m = self.field.k, self.size
        out = np.empty((len(idx), m), dtype=np.uint8)
        mask = self.q - 1
        for pos in range(m - 1, 0, -1):
            out[:, pos] = idx & mask
            idx >>= k
        out[:, 0] = 1 ^ np.bitwise_xor.reduce(out[:, 1:], axis=1) if m > 1 else 1
        return out

    def unit_index(self, x: np.ndarray) -> np.ndarray:
        x = np.atleast_2d(x).astype(np.int64)
        idx = np.zeros(len(x), dtype=np.int64)
        for pos in range(1, self.size):
            idx = (idx << self.field.k) | x[:, pos]
        return idx

    def iter_unit_chunks(self, budget: int = DEFAULT_BUDGET, chunk: int = CHUNK) -> Iterator[np.ndarray]:
        total = self.unit_count
        if total > budget:
            raise CapacityError(total, budget)
        for start in range(0, total, chunk):
            yield self.units_batch(start, min(start + chunk, total))

    def map_unit_chunks(
        self,
        func: Callable,
        *args,
        budget: int = DEFAULT_BUDGET,
        chunk: int = CHUNK,
        workers: int | None = None,
    ) -> list:
        """Apply ``func(algebra, units, *args)`` to consecutive chunks of ``V(FG)``.

        ``func`` must be a module-level function when ``workers > 1``.  The
        results come back in chunk order regardless of the worker count.
        """
        total = self.unit_count
        if total > budget:
            raise CapacityError(total, budget)
        ranges = [(s, min(s + chunk, total)) for s in range(0, total, chunk)]
        workers = worker_count() if workers is None else workers
        if workers <= 1 or len(ranges) == 1:
            return [func(self, self.units_batch(s, e), *args) for s, e in ranges]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_run_chunk, self, func, s, e, args) for s, e in ranges]
            return [f.result() for f in futures]

    def random_units(self, rng: np.random.Generator, count: int) -> np.ndarray:
        x = rng.integers(0, self.q, size=(count, self.size), dtype=np.uint8)
        x[:, 0] ^= 1 ^ self.augmentation_batch(x)
        return x

    # inversion

    def inverse_batch(self, x: np.ndarray) -> np.ndarray:
        """Invert units via ``x = a(1+w)`` with ``w`` nilpotent.

        ``w^(2^m) = aug(w)^(2^m) = 0`` once ``2^m`` reaches the group
        exponent, so ``(1+w)^-1 = prod_{j<m} (1 + w^(2^j))``.
        """
        x = np.atleast_2d(x)
        aug = self.augmentation_batch(x)
        if not aug.all():
            raise ZeroDivisionError("element with augmentation 0 is not a unit")
        a_inv = self.field.inv_table[aug][:, None]
        u = self.field.mul(x, a_inv)  # normalized: 1 + w
        w = u.copy()
        w[:, 0] ^= 1
        result = np.zeros_like(u)
        result[:, 0] = 1
        for _ in range(self.group.exponent.bit_length() - 1):
            factor = w.copy()
            factor[:, 0] ^= 1
            result = self.mul_batch(result, factor)
            w = self.square_batch(w)
        return self.field.mul(result, a_inv)

    # keys

    @staticmethod
    def keys(x: np.ndarray) -> np.ndarray:
        """Row-wise hashable keys (raw coefficient bytes) for set operations."""
        x = np.ascontiguousarray(np.atleast_2d(x), dtype=np.uint8)
        return x.view(np.dtype((np.void, x.shape[1]))).ravel()


def _run_chunk(algebra: GroupAlgebra, func, start, stop, args):
    return func(algebra, algebra.units_batch(start, stop), *args)


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    algebra: GroupAlgebra
    coeffs: np.ndarray

    def __post_init__(self):
        v = np.array(self.coeffs, dtype=np.uint8).reshape(-1)
        if len(v) != self.algebra.size:
            raise ValueError(f"{self.algebra} needs {self.algebra.size} coefficients, got {len(v)}")
        if (v >= self.algebra.q).any():
            raise ValueError(f"coefficient out of range for {self.algebra.field}")
        v.setflags(write=False)
        object.__setattr__(self, "coeffs", v)

    def _check(self, other: AlgebraElement) -> None:
        if not isinstance(other, AlgebraElement):
            raise TypeError(f"expected AlgebraElement, got {type(other).__name__}")
        if other.algebra != self.algebra:
            raise ValueError(f"mismatched algebras {self.algebra} and {other.algebra}")

    def _wrap(self, v: np.ndarray) -> AlgebraElement:
        return AlgebraElement(self.algebra, v.reshape(-1))

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        return alg_add(self, other)

    __sub__ = __add__

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        return alg_mul(self, other)

    def __pow__(self, e: int) -> AlgebraElement:
        if e < 0:
            return alg_inv(self) ** -e
        result, base = self.algebra.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra == other.algebra and bytes(self.coeffs) == bytes(other.coeffs)

    def __hash__(self) -> int:
        return hash((self.algebra.group, self.algebra.field, bytes(self.coeffs)))

    def coefficient(self, g: GroupElement) -> FieldElement:
        return FieldElement(self.algebra.field, int(self.coeffs[g.index]))

    @property
    def support(self) -> list[GroupElement]:
        return [self.algebra.group.element(int(i)) for i in np.flatnonzero(self.coeffs)]

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"AlgebraElement({self} in {self.algebra})"


def alg_add(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    x._check(y)
    return x._wrap(x.coeffs ^ y.coeffs)


def alg_mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    x._check(y)
    return x._wrap(x.algebra.mul_batch(x.coeffs, y.coeffs))


def augmentation(x: AlgebraElement) -> FieldElement:
    return FieldElement(x.algebra.field, int(np.bitwise_xor.reduce(x.coeffs)))


def is_unit(x: AlgebraElement) -> bool:
    """Units of ``FG`` are exactly the elements of nonzero augmentation."""
    return bool(augmentation(x))


def alg_inv(x: AlgebraElement) -> AlgebraElement:
    return x._wrap(x.algebra.inverse_batch(x.coeffs))


def apply_involution(sigma: InvolutionSpec, x: AlgebraElement) -> AlgebraElement:
    return x._wrap(x.algebra.involution_batch(sigma, x.coeffs))


def hat_sum(algebra: GroupAlgebra, subgroup: Iterable[GroupElement]) -> AlgebraElement:
    """Sum of all elements of ``subgroup``."""
    v = np.zeros(algebra.size, dtype=np.uint8)
    for h in subgroup:
        v[h.index] = 1
    return AlgebraElement(algebra, v)


def enumerate_normalized_units(
    algebra: GroupAlgebra, budget: int = DEFAULT_BUDGET
) -> Iterator[AlgebraElement]:
    for batch in algebra.iter_unit_chunks(budget):
        for row in batch:
            yield AlgebraElement(algebra, row)


# textual form: 1 + a^2 + (x+1)*a^5


def format_element(x: AlgebraElement) -> str:
    algebra = x.algebra
    terms = []
    for i in np.flatnonzero(x.coeffs):
        g = str(algebra.group.element(int(i)))
        c = algebra.field.format(int(x.coeffs[i]))
        if c == "1":
            terms.append(g)
        else:
            c = c if "+" not in c else f"({c})"
            terms.append(c if g == "1" else f"{c}*{g}")
    return " + ".join(terms) if terms else "0"


def _split_top_level(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_element(algebra: GroupAlgebra, text: str) -> AlgebraElement:
    text = text.replace(" ", "")
    v = np.zeros(algebra.size, dtype=np.uint8)
    if text == "0":
        return AlgebraElement(algebra, v)
    for term in _split_top_level(text):
        if not term:
            raise ValueError(f"empty term in {text!r}")
        m = re.fullmatch(r"(\([^)]*\)|x(?:\^\d+)?)(?:\*(.*))?", term)
        if m:
            coeff, word = algebra.field.parse(m.group(1)), m.group(2) or "1"
        else:
            coeff, word = 1, term
        g = GroupElement(algebra.group, parse_group_word(algebra.group, word))
        v[g.index] ^= coeff
    return AlgebraElement(algebra, v)


# ideals and quotients


@dataclass(frozen=True)
class CoordinateQuotient:
    """``G/H`` for ``H = prod_i <gen_i^(m_i)>``, presented as ``prod_{m_i > 1} C_{m_i}``."""

    group: GroupSpec
    quotient: GroupSpec | None
    moduli: tuple[int, ...]

    @property
    def kept(self) -> list[int]:
        """Factors of ``G`` that survive in the quotient."""
        return [i for i, m in enumerate(self.moduli) if m > 1]

    def project_index(self) -> np.ndarray:
        """Quotient index of each element of ``group``."""
        if self.quotient is None:
            return np.zeros(self.group.order, dtype=np.int64)
        keep = self.kept
        exps = self.group.exps_array[:, keep] % np.array([self.moduli[i] for i in keep])
        return self.quotient.index_of_exps(exps)


def coordinate_quotient(group: GroupSpec, subgroup: Iterable[GroupElement]) -> CoordinateQuotient:
    """Recognise ``subgroup`` as a product of cyclic subgroups of the factors."""
    members = {h.exps for h in subgroup}
    moduli = []
    for i, m in enumerate(group.moduli):
        moduli.append(min((h[i] for h in members if h[i]), default=m))
    expected = set()
    for exps in np.ndindex(*[m // s for m, s in zip(group.moduli, moduli)]):
        expected.add(tuple(e * s for e, s in zip(exps, moduli)))
    if expected != members:
        raise ValueError("only subgroups of the form prod <gen_i^m_i> are supported for quotients")
    kept = [m for m in moduli if m > 1]
    quotient = GroupSpec(tuple(m.bit_length() - 1 for m in kept)) if kept else None
    return CoordinateQuotient(group, quotient, tuple(moduli))


def quotient_algebra(
    algebra: GroupAlgebra, subgroup: Iterable[GroupElement]
) -> tuple[GroupAlgebra, CoordinateQuotient]:
    """``F(G/H)`` together with the coset projection."""
    cq = coordinate_quotient(algebra.group, subgroup)
    if cq.quotient is None:
        raise ValueError("quotient by the whole group is trivial; not supported")
    return GroupAlgebra(cq.quotient, algebra.field), cq


def quotient_map(x: AlgebraElement, subgroup: Iterable[GroupElement]) -> AlgebraElement:
    """Natural homomorphism ``FG -> F(G/H)``: sum coefficients within cosets."""
    target, cq = quotient_algebra(x.algebra, subgroup)
    return AlgebraElement(target, quotient_batch(x.coeffs, cq.project_index(), target.size)[0])


def quotient_batch(x: np.ndarray, proj: np.ndarray, size: int) -> np.ndarray:
    x = np.atleast_2d(x)
    out = np.zeros((len(x), size), dtype=np.uint8)
    for g, c in enumerate(proj):
        out[:, c] ^= x[:, g]
    return out


def induced_involution(sigma: InvolutionSpec, cq: CoordinateQuotient) -> InvolutionSpec:
    """Action of ``sigma`` on ``G/H``; fails unless ``sigma(H) = H``."""
    g, target = sigma.group, cq.quotient
    proj = cq.project_index()
    images = [target.element(int(proj[sigma.perm[g.generators[i].index]])).exps for i in cq.kept]
    induced = InvolutionSpec(target, tuple(images))
    if not np.array_equal(induced.perm[proj], proj[sigma.perm]):
        raise ValueError("involution does not preserve the subgroup")
    return induced


@dataclass(frozen=True)
class IdealElementSet:
    """The ideal ``I(H)`` of ``FG`` generated by ``{1 + h : h in H}``."""

    algebra: GroupAlgebra
    subgroup: frozenset
    basis: np.ndarray

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return self.algebra.q ** self.dimension


def coset_transversal(group: GroupSpec, subgroup: Iterable[GroupElement]) -> list[GroupElement]:
    """Smallest-index representative of each coset."""
    sub = [h.index for h in subgroup]
    seen = np.zeros(group.order, dtype=bool)
    reps = []
    for i in range(group.order):
        if not seen[i]:
            reps.append(group.element(i))
            seen[group.mul_index[i, sub]] = True
    return reps


def ideal(algebra: GroupAlgebra, subgroup: Iterable[GroupElement]) -> IdealElementSet:
    """Basis ``t(1+h)`` over a transversal ``t`` and ``h != 1`` in ``H``."""
    subgroup = frozenset(subgroup)
    rows = []
    for t in coset_transversal(algebra.group, subgroup):
        for h in sorted(subgroup, key=lambda e: e.index):
            if h.is_identity:
                continue
            v = np.zeros(algebra.size, dtype=np.uint8)
            v[t.index] ^= 1
            v[(t * h).index] ^= 1
            rows.append(v)
    basis = np.array(rows, dtype=np.uint8).reshape(-1, algebra.size)
    if gf_rank(algebra.field, basis) != len(basis):
        raise AssertionError("ideal basis is not linearly independent")
    return IdealElementSet(algebra, subgroup, basis)


def in_ideal(x: AlgebraElement, ideal_set: IdealElementSet) -> bool:
    """Membership by comparing ranks over F."""
    f = x.algebra.field
    extended = np.vstack([ideal_set.basis, x.coeffs[None, :]])
    return gf_rank(f, extended) == ideal_set.dimension


def gf_rank(field: FieldSpec, rows: np.ndarray) -> int:
    """Rank over GF(2^k) by Gaussian elimination."""
    m = np.array(rows, dtype=np.uint8, copy=True)
    if m.size == 0:
        return 0
    rank = 0
    for col in range(m.shape[1]):
        pivots = np.flatnonzero(m[rank:, col]) + rank
        if len(pivots) == 0:
            continue
        p = pivots[0]
        m[[rank, p]] = m[[p, rank]]
        m[rank] = field.mul(m[rank], field.inv_table[m[rank, col]])
        others = np.flatnonzero(m[:, col])
        others = others[others != rank]
        if len(others):
            m[others] ^= field.mul(m[others, col][:, None], m[rank][None, :])
        rank += 1
        if rank == m.shape[0]:
            break
    return rank

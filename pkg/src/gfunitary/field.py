"""Arithmetic in GF(2^k) for k <= 8.

Elements are stored as integers in ``[0, 2^k)`` holding polynomial-basis
coordinates (bit ``i`` is the coefficient of ``x^i``).  Every field carries
precomputed multiplication, inverse and square-root tables so that the
group-algebra code can do its arithmetic with numpy fancy indexing.

>>> F = FieldSpec.from_order(4)
>>> x = F(0b10)
>>> x * x
FieldElement(0b11 in GF(4))
>>> ff_sqrt(F(0b11)) == x
True
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

MAX_DEGREE = 8

DEFAULT_MODULI = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011011,
}


def _poly_mulmod(a: int, b: int, modulus: int, k: int) -> int:
    """Carry-less product of ``a`` and ``b`` reduced modulo ``modulus``."""
    result = 0
    while b:
        if b & 1:
            result ^= a
        b >>= 1
        a <<= 1
        if a >> k & 1:
            a ^= modulus
    return result


def _poly_mod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def is_irreducible(modulus: int) -> bool:
    """Trial division by every polynomial of degree 1 .. deg/2."""
    k = modulus.bit_length() - 1
    if k < 1:
        return False
    for d in range(2, 1 << (k // 2 + 1)):
        if _poly_mod(modulus, d) == 0:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """GF(2^k) defined by an irreducible ``modulus`` of degree ``k``."""

    k: int
    modulus: int
    _tables: "_Tables" = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not 1 <= self.k <= MAX_DEGREE:
            raise ValueError(f"extension degree must be in 1..{MAX_DEGREE}, got {self.k}")
        if self.modulus.bit_length() - 1 != self.k:
            raise ValueError(f"modulus {self.modulus:#b} does not have degree {self.k}")
        if not is_irreducible(self.modulus):
            raise ValueError(f"modulus {self.modulus:#b} is reducible over GF(2)")
        object.__setattr__(self, "_tables", _build_tables(self.k, self.modulus))

    @classmethod
    def from_order(cls, q: int, modulus: int | None = None) -> FieldSpec:
        if q < 2 or q & (q - 1):
            raise ValueError(f"field order must be a power of two, got {q}")
        k = q.bit_length() - 1
        if k not in DEFAULT_MODULI:
            raise ValueError(f"GF({q}) is not supported (k <= {MAX_DEGREE})")
        return cls(k, DEFAULT_MODULI[k] if modulus is None else modulus)

    @property
    def order(self) -> int:
        return 1 << self.k

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def mul_table(self) -> np.ndarray:
        return self._tables.mul

    @property
    def inv_table(self) -> np.ndarray:
        return self._tables.inv

    @property
    def sqr_table(self) -> np.ndarray:
        return self._tables.sqr

    @property
    def sqrt_table(self) -> np.ndarray:
        return self._tables.sqrt

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(self, value)

    def __iter__(self) -> Iterator[FieldElement]:
        return ff_enumerate(self)

    def __str__(self) -> str:
        return f"GF({self.order})"

    # vectorised helpers on raw uint8 arrays

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.k == 1:
            return a & b
        return self._tables.mul[a, b]

    def square(self, a: np.ndarray) -> np.ndarray:
        if self.k == 1:
            return a
        return self._tables.sqr[a]

    def format(self, value: int) -> str:
        """Polynomial in ``x``, e.g. ``x^2+1``."""
        if value == 0:
            return "0"
        terms = []
        for i in reversed(range(self.k)):
            if value >> i & 1:
                terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
        return "+".join(terms)

    def parse(self, text: str) -> int:
        text = text.replace(" ", "").strip("()")
        value = 0
        for term in text.split("+"):
            if term == "0":
                continue
            if term == "1":
                value ^= 1
            elif term == "x":
                value ^= 2
            elif term.startswith("x^"):
                value ^= 1 << int(term[2:])
            else:
                raise ValueError(f"cannot parse field element {text!r}")
        if value >> self.k:
            raise ValueError(f"{text!r} is not reduced for {self}")
        return value


@dataclass(frozen=True)
class _Tables:
    mul: np.ndarray
    inv: np.ndarray
    sqr: np.ndarray
    sqrt: np.ndarray


@functools.lru_cache(maxsize=None)
def _build_tables(k: int, modulus: int) -> _Tables:
    q = 1 << k
    mul = np.zeros((q, q), dtype=np.uint8)
    for a in range(q):
        for b in range(a, q):
            mul[a, b] = mul[b, a] = _poly_mulmod(a, b, modulus, k)
    inv = np.zeros(q, dtype=np.uint8)
    for a in range(1, q):
        inv[a] = int(np.flatnonzero(mul[a] == 1)[0])
    sqr = mul[np.arange(q), np.arange(q)].copy()
    sqrt = np.zeros(q, dtype=np.uint8)
    sqrt[sqr] = np.arange(q, dtype=np.uint8)
    for arr in (mul, inv, sqr, sqrt):
        arr.setflags(write=False)
    return _Tables(mul, inv, sqr, sqrt)


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.spec.order:
            raise ValueError(f"{self.value} is not an element of {self.spec}")

    def _check(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.spec != self.spec:
            raise ValueError(f"mixed-field operands: {self.spec} and {other.spec}")

    def __add__(self, other: FieldElement) -> FieldElement:
        return ff_add(self, other)

    __sub__ = __add__

    def __mul__(self, other: FieldElement) -> FieldElement:
        return ff_mul(self, other)

    def __truediv__(self, other: FieldElement) -> FieldElement:
        return ff_mul(self, ff_inv(other))

    def __pow__(self, e: int) -> FieldElement:
        if e < 0:
            return ff_inv(self) ** -e
        result, base = self.spec.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"FieldElement({self.value:#b} in {self.spec})"

    def __str__(self) -> str:
        return self.spec.format(self.value)


def ff_add(a: FieldElement, b: FieldElement) -> FieldElement:
    a._check(b)
    return FieldElement(a.spec, a.value ^ b.value)


def ff_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    a._check(b)
    return FieldElement(a.spec, int(a.spec.mul_table[a.value, b.value]))


def ff_inv(a: FieldElement) -> FieldElement:
    if a.value == 0:
        raise ZeroDivisionError(f"0 has no inverse in {a.spec}")
    return FieldElement(a.spec, int(a.spec.inv_table[a.value]))


def ff_sqrt(a: FieldElement) -> FieldElement:
    """The unique ``b`` with ``b*b == a``, namely ``a^(2^(k-1))``."""
    b = a
    for _ in range(a.spec.k - 1):
        b = b * b
    return b


def ff_enumerate(spec: FieldSpec) -> Iterator[FieldElement]:
    """All elements in increasing order of their coordinate word."""
    for v in range(spec.order):
        yield FieldElement(spec, v)


def multiplicative_order(a: FieldElement) -> int:
    if not a:
        raise ZeroDivisionError("0 has no multiplicative order")
    e, x = 1, a
    while x.value != 1:
        x = x * a
        e += 1
    return e

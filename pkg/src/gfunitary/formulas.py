"""Closed-form order predictors.

These deliberately share no code with the enumeration routines beyond the
subgroup counts of :mod:`gfunitary.group`, so agreement between the two is a
real cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .group import GroupSpec, power_subgroup, torsion_subgroup
from .involutions import InvolutionSpec, cyclic_table


@dataclass(frozen=True)
class OrderPrediction:
    value: int
    source: str  # L1 | L3 | L6 | SIGMA2-CYCLIC
    invariants: list[int] | None = field(default=None)


def _check_q(q: int) -> None:
    if q < 2 or q & (q - 1):
        raise ValueError(f"q must be a power of two, got {q}")


def order_canonical(group: GroupSpec, q: int) -> OrderPrediction:
    """``|G^2[2]| * q^((|G| + |G[2]|)/2 - 1)`` for ``g -> g^-1``."""
    _check_q(q)
    g2 = power_subgroup(group, 1)
    g2_involutions = sum(1 for g in g2 if (g * g).is_identity)
    t2 = len(torsion_subgroup(group, 1))
    exponent2 = group.order + t2 - 2
    assert exponent2 % 2 == 0
    return OrderPrediction(g2_involutions * q ** (exponent2 // 2), "L1")


def order_canonical_cyclic(n: int, q: int) -> OrderPrediction:
    """``2 * q^(2^(n-1))``, the cyclic specialisation of :func:`order_canonical`."""
    _check_q(q)
    if n <= 2:
        raise ValueError(f"n must be greater than 2, got {n}")
    return OrderPrediction(2 * q ** (1 << (n - 1)), "SIGMA2-CYCLIC")


def order_sigma3(n: int, q: int) -> OrderPrediction:
    _check_q(q)
    if n <= 2:
        raise ValueError(f"n must be greater than 2, got {n}")
    return OrderPrediction(q ** (1 << (n - 1)), "L3")


def order_sigma4(n: int, q: int) -> OrderPrediction:
    """Elementary abelian of order ``q^(2^(n-1))``."""
    _check_q(q)
    if n <= 2:
        raise ValueError(f"n must be greater than 2, got {n}")
    value = q ** (1 << (n - 1))
    return OrderPrediction(value, "L6", [2] * (value.bit_length() - 1))


def star_image_sigma4(n: int, q: int) -> int:
    """``|{x x^sigma4}| = q^(2^(n-1) - 1)``."""
    _check_q(q)
    return q ** ((1 << (n - 1)) - 1)


def predict(group: GroupSpec, q: int, sigma: InvolutionSpec) -> OrderPrediction | None:
    """The applicable prediction for ``sigma``, or ``None`` if no formula covers it."""
    if sigma.is_canonical:
        return order_canonical(group, q)
    if group.is_cyclic and group.exponents[0] > 2:
        n = group.exponents[0]
        table = cyclic_table(n)
        if sigma == table["sigma3"]:
            return order_sigma3(n, q)
        if sigma == table["sigma4"]:
            return order_sigma4(n, q)
    return None

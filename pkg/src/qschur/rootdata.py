"""Cartan data of the irreducible finite types and the combinatorics of shifted weights.

A shifted weight is stored by its coroot pairings ``m = (m_1, ..., m_d)`` with
``m_k = <i, alpha_k^vee>``.  Simple indices are 1-based in the public API, as in
the usual ``s_1, ..., s_d`` notation.

Cartan matrices follow the convention ``a[j][k] = <alpha_k, alpha_j^vee>`` so that
reflecting in ``alpha_k`` changes the pairings by ``m_j -> m_j - m_k * a[j][k]``.
Node numbering is Bourbaki's.  For G2, node 1 is the short root.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple

import sympy

__all__ = [
    "CartanDatum",
    "Order",
    "Descent",
    "cartan_datum",
    "parse_type",
    "reflect",
    "compare",
    "descent_sign",
    "to_antidominant",
    "is_antidominant",
    "apply_word",
    "g2_delta_to_pairing",
    "g2_pairing_to_delta",
    "g2_reflect_delta",
]

Weight = Tuple[int, ...]


class Order(str, enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


class Descent(str, enum.Enum):
    FIXED = "fixed"
    UP = "up"
    DOWN = "down"


_COXETER_FROM_PRODUCT = {0: 2, 1: 3, 2: 4, 3: 6}


def _half(x) -> Fraction:
    return Fraction(x, 2)


def _unit(n: int, i: int, scale=1) -> List[Fraction]:
    v = [Fraction(0)] * n
    v[i] = Fraction(scale)
    return v


def _diff(n: int, i: int, j: int) -> List[Fraction]:
    v = [Fraction(0)] * n
    v[i] += 1
    v[j] -= 1
    return v


def _simple_roots(family: str, rank: int) -> List[List[Fraction]]:
    """Euclidean simple roots, coordinates in an orthonormal basis."""
    if family == "A":
        return [_diff(rank + 1, i, i + 1) for i in range(rank)]
    if family in "BC":
        roots = [_diff(rank, i, i + 1) for i in range(rank - 1)]
        roots.append(_unit(rank, rank - 1, 1 if family == "B" else 2))
        return roots
    if family == "D":
        roots = [_diff(rank, i, i + 1) for i in range(rank - 1)]
        last = [Fraction(0)] * rank
        last[rank - 2] = last[rank - 1] = Fraction(1)
        roots.append(last)
        return roots
    if family == "E":
        a1 = [_half(1)] + [_half(-1)] * 6 + [_half(1)]
        a2 = [Fraction(1), Fraction(1)] + [Fraction(0)] * 6
        roots = [a1, a2] + [_diff(8, i - 2, i - 3) for i in range(3, 9)]
        return roots[:rank]
    if family == "F":
        return [
            _diff(4, 1, 2),
            _diff(4, 2, 3),
            _unit(4, 3),
            [_half(1), _half(-1), _half(-1), _half(-1)],
        ]
    if family == "G":
        # coordinates in the basis delta_1, delta_2, delta_3 (with sum zero)
        return [
            [Fraction(1), Fraction(-1), Fraction(0)],
            [Fraction(-2), Fraction(1), Fraction(1)],
        ]
    raise ValueError(f"unknown family {family!r}")


_VALID_RANKS = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 4,
    "E": lambda r: 6 <= r <= 8,
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


def parse_type(label: str) -> Tuple[str, int]:
    """Parse ``"G2"``, ``"B_3"`` or ``"a3"`` into ``("G", 2)`` etc."""
    m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", label)
    if not m:
        raise ValueError(f"cannot parse Cartan type {label!r}")
    family, rank = m.group(1).upper(), int(m.group(2))
    if not _VALID_RANKS[family](rank):
        raise ValueError(f"no finite irreducible type {family}{rank}")
    return family, rank


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


@dataclass(frozen=True)
class CartanDatum:
    """Cartan matrix, Coxeter matrix and inverse Cartan matrix of one type."""

    family: str
    rank: int
    cartan_matrix: Tuple[Tuple[int, ...], ...]
    coxeter_orders: Tuple[Tuple[int, ...], ...]
    _inverse: Tuple[Tuple[Fraction, ...], ...] = field(repr=False, compare=False)

    @property
    def type_label(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def simple_indices(self) -> range:
        return range(1, self.rank + 1)

    def a(self, j: int, k: int) -> int:
        """Entry ``<alpha_k, alpha_j^vee>`` with 1-based indices."""
        return self.cartan_matrix[j - 1][k - 1]

    def root_coordinates(self, delta: Sequence[int]) -> Tuple[Fraction, ...]:
        """Coordinates ``c`` with ``sum c_k alpha_k`` having pairing vector ``delta``."""
        inv = self._inverse
        return tuple(
            sum((inv[r][s] * delta[s] for s in range(self.rank)), Fraction(0))
            for r in range(self.rank)
        )

    def __str__(self) -> str:
        return self.type_label


def cartan_datum(label: str) -> CartanDatum:
    family, rank = parse_type(label)
    roots = _simple_roots(family, rank)
    cartan = []
    for j in range(rank):
        row = []
        for k in range(rank):
            val = 2 * _dot(roots[k], roots[j]) / _dot(roots[j], roots[j])
            assert val.denominator == 1
            row.append(int(val))
        cartan.append(tuple(row))
    cox = tuple(
        tuple(1 if i == j else _COXETER_FROM_PRODUCT[cartan[i][j] * cartan[j][i]] for j in range(rank))
        for i in range(rank)
    )
    inv = sympy.Matrix(cartan).inv()
    inverse = tuple(
        tuple(Fraction(int(inv[r, s].p), int(inv[r, s].q)) for s in range(rank)) for r in range(rank)
    )
    return CartanDatum(family, rank, tuple(cartan), cox, inverse)


def _check_index(datum: CartanDatum, k: int) -> None:
    if not 1 <= k <= datum.rank:
        raise IndexError(f"simple index {k} out of range 1..{datum.rank}")


def reflect(datum: CartanDatum, k: int, m: Sequence[int]) -> Weight:
    """Right action of ``s_k``: ``m_j -> m_j - m_k * a_jk``."""
    _check_index(datum, k)
    mk = m[k - 1]
    if not mk:
        return tuple(m)
    col = k - 1
    return tuple(m[j] - mk * datum.cartan_matrix[j][col] for j in range(datum.rank))


def apply_word(datum: CartanDatum, m: Sequence[int], word: Sequence[int]) -> Weight:
    """Apply ``s_{word[0]}`` first, then ``s_{word[1]}``, and so on."""
    out = tuple(m)
    for k in word:
        out = reflect(datum, k, out)
    return out


def compare(datum: CartanDatum, i: Sequence[int], j: Sequence[int]) -> Order:
    """Dominance comparison: ``LESS`` iff ``j - i`` is a nonzero sum of simple roots."""
    delta = [b - a for a, b in zip(i, j)]
    if not any(delta):
        return Order.EQUAL
    coords = datum.root_coordinates(delta)
    if any(c.denominator != 1 for c in coords):
        return Order.INCOMPARABLE
    if all(c >= 0 for c in coords):
        return Order.LESS
    if all(c <= 0 for c in coords):
        return Order.GREATER
    return Order.INCOMPARABLE


def descent_sign(m: Sequence[int], k: int) -> Descent:
    """How ``s_k`` moves ``m``: ``m s_k - m = -m_k alpha_k``."""
    mk = m[k - 1]
    if mk == 0:
        return Descent.FIXED
    return Descent.UP if mk < 0 else Descent.DOWN


def is_antidominant(m: Sequence[int]) -> bool:
    return all(x <= 0 for x in m)


def to_antidominant(datum: CartanDatum, m: Sequence[int]) -> Tuple[Weight, Tuple[int, ...]]:
    """Return ``(rep, word)`` with ``rep`` antidominant and ``rep . s_word = m``."""
    cur = tuple(m)
    steps: List[int] = []
    while True:
        for k in datum.simple_indices:
            if cur[k - 1] > 0:
                cur = reflect(datum, k, cur)
                steps.append(k)
                break
        else:
            return cur, tuple(reversed(steps))


# -- G2 presentation in delta coordinates (a, b, c), a + b + c = 0 ------------

def g2_delta_to_pairing(abc: Sequence[int]) -> Weight:
    a, b, c = abc
    if a + b + c != 0:
        raise ValueError(f"delta coordinates must sum to zero, got {tuple(abc)}")
    return (a - b, -a)


def g2_pairing_to_delta(m: Sequence[int]) -> Tuple[int, int, int]:
    m1, m2 = m
    a = -m2
    b = a - m1
    return (a, b, -a - b)


def g2_reflect_delta(k: int, abc: Sequence[int]) -> Tuple[int, int, int]:
    """The same right action written on delta coordinates."""
    a, b, c = abc
    if k == 1:
        return (b, a, c)
    if k == 2:
        return (-a, -c, -b)
    raise IndexError(f"simple index {k} out of range 1..2")

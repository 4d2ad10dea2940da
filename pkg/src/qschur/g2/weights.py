"""The G2 weight sets X_n, written in delta coordinates ``(a, b, c)`` with ``a + b + c = 0``."""
from __future__ import annotations

from functools import lru_cache
from typing import Optional, Sequence, Tuple

from ..rootdata import g2_delta_to_pairing, g2_pairing_to_delta, g2_reflect_delta
from ..weightsets import WeightSet, close_under_W
from ..weylgroup import WeylGroup

__all__ = ["g2_group", "build_Xn", "delta", "eps_orbit", "eps_label", "index_of", "act_delta", "format_vector"]


@lru_cache(maxsize=None)
def g2_group() -> WeylGroup:
    return WeylGroup("G2")


@lru_cache(maxsize=None)
def build_Xn(n: int) -> WeightSet:
    """Union of the orbits with antidominant rep ``(a, b, -a-b)``, ``0 <= a <= b <= n``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    seeds = [g2_delta_to_pairing((a, b, -a - b)) for b in range(n + 1) for a in range(b + 1)]
    return close_under_W(g2_group(), seeds)


def delta(ws: WeightSet, i: int) -> Tuple[int, int, int]:
    return g2_pairing_to_delta(ws.elements[i])


def index_of(ws: WeightSet, abc: Sequence[int]) -> int:
    return ws.weight_index(g2_delta_to_pairing(abc))


def eps_label(ws: WeightSet, gamma: int) -> Tuple[int, int]:
    """``(a, b)`` with the orbit labelled ``eps_a + eps_b``."""
    a, b, _ = g2_pairing_to_delta(ws.orbits[gamma].rep)
    return a, b


def eps_orbit(ws: WeightSet, x: int, y: int) -> Optional[int]:
    """Orbit labelled ``eps_x + eps_y`` (order-insensitive), or None when absent."""
    a, b = min(x, y), max(x, y)
    if a < 0:
        return None
    return ws.orbit_of_rep(g2_delta_to_pairing((a, b, -a - b)))


def act_delta(abc: Sequence[int], word: Sequence[int]) -> Tuple[int, int, int]:
    """Right action ``abc . s_{k1} s_{k2} ...``: the letters are applied left to right."""
    out = tuple(abc)
    for k in word:
        out = g2_reflect_delta(k, out)
    return out


def format_vector(ws: WeightSet, v) -> str:
    """A T-vector written in delta coordinates, terms in basis order."""
    if not v:
        return "0"
    parts = []
    for i in sorted(v.support()):
        a, b, c = delta(ws, i)
        parts.append(f"({v.coeff(i)})*v({a},{b},{c})")
    return " + ".join(parts)

"""Finite W-invariant sets of shifted weights and their orbit bookkeeping.

Each orbit ("linkage class") has a unique antidominant element ``rep``.  Its
members are listed as ``rep . w`` for ``w`` in ``^J W`` (``J`` the stabilizer),
in ShortLex order of ``w``; every matrix downstream is indexed that way.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .rootdata import CartanDatum, reflect, to_antidominant
from .weylgroup import DoubleCoset, Parabolic, WeylGroup

__all__ = [
    "WeightSet",
    "LinkageClass",
    "XiTriple",
    "close_under_W",
    "transversal",
    "xi_set",
    "xi_to_pair",
    "pair_to_xi",
    "orbit_dimension",
]

Weight = Tuple[int, ...]


@dataclass(frozen=True)
class LinkageClass:
    index: int
    rep: Weight
    J: frozenset
    parabolic: Parabolic = field(repr=False)
    members: Tuple[Weight, ...] = field(repr=False)
    offset: int = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def is_regular(self) -> bool:
        return not self.J

    @property
    def min_reps(self) -> Tuple[int, ...]:
        return self.parabolic.min_reps


@dataclass(frozen=True, order=True)
class XiTriple:
    """``(gamma, g, nu)``: row orbit, minimal double coset representative, column orbit."""

    gamma: int
    g: int
    nu: int


class WeightSet:
    def __init__(self, W: WeylGroup, reps: Iterable[Weight]):
        self.W = W
        self.datum: CartanDatum = W.datum
        reps = sorted(set(reps), key=lambda m: (sum(-x for x in m), tuple(-x for x in m)))
        self.orbits: List[LinkageClass] = []
        self.elements: List[Weight] = []
        self._orbit_of: List[int] = []
        self._coset_rep: List[int] = []
        self._pos: Dict[Tuple[int, int], int] = {}
        for idx, rep in enumerate(reps):
            J = frozenset(k for k in W.datum.simple_indices if rep[k - 1] == 0)
            par = W.parabolic(J)
            members: Dict[int, Weight] = {0: rep}
            for w in par.min_reps[1:]:
                # prefixes of a minimal coset representative are minimal representatives
                members[w] = reflect(self.datum, W.word(w)[-1], members[W.parent(w)])
            ordered = tuple(members[w] for w in par.min_reps)
            self.orbits.append(LinkageClass(idx, rep, J, par, ordered, len(self.elements)))
            for n, w in enumerate(par.min_reps):
                self._pos[idx, w] = len(self.elements) + n
            self.elements.extend(ordered)
            self._orbit_of.extend([idx] * len(ordered))
            self._coset_rep.extend(par.min_reps)
        self.index: Dict[Weight, int] = {m: i for i, m in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("orbits overlap; seeds were not reduced to distinct antidominant reps")
        # step[i][k-1] = (kind, target) with kind -1 fixed, 0 up, 1 down
        self._step = []
        for m in self.elements:
            row = []
            for k in self.datum.simple_indices:
                mk = m[k - 1]
                if mk == 0:
                    row.append((-1, self.index[m]))
                else:
                    row.append((0 if mk < 0 else 1, self.index[reflect(self.datum, k, m)]))
            self._step.append(tuple(row))
        self._xi: Optional[List[XiTriple]] = None
        self._xi_index: Optional[Dict[XiTriple, int]] = None

    # -- lookups ----------------------------------------------------------
    def __len__(self) -> int:
        return len(self.elements)

    def orbit_of(self, i: int) -> int:
        return self._orbit_of[i]

    def coset_rep(self, i: int) -> int:
        """The ``w`` in ``^J W`` with ``elements[i] = rep . w``."""
        return self._coset_rep[i]

    def locate(self, i: int) -> Tuple[int, int]:
        return self._orbit_of[i], self._coset_rep[i]

    def element_index(self, gamma: int, w: int) -> int:
        """Index of ``rep_gamma . w`` for any ``w`` in W."""
        pos = self._pos.get((gamma, w))
        if pos is None:
            _, v = self.W.factor(self.orbits[gamma].J, w)
            pos = self._pos[gamma, v]
        return pos

    def rep_index(self, gamma: int) -> int:
        return self.orbits[gamma].offset

    def step(self, i: int, k: int) -> Tuple[int, int]:
        return self._step[i][k - 1]

    def weight_index(self, m: Sequence[int]) -> int:
        try:
            return self.index[tuple(m)]
        except KeyError:
            raise KeyError(f"weight {tuple(m)} is not in the set") from None

    @property
    def has_regular_orbit(self) -> bool:
        return any(o.is_regular for o in self.orbits)

    def orbit_of_rep(self, rep: Sequence[int]) -> Optional[int]:
        for o in self.orbits:
            if o.rep == tuple(rep):
                return o.index
        return None

    # -- Xi and the transversal -------------------------------------------
    def double_cosets(self, gamma: int, nu: int) -> Tuple[DoubleCoset, ...]:
        return self.W.double_cosets(self.orbits[gamma].J, self.orbits[nu].J)

    def double_coset(self, xi: XiTriple) -> DoubleCoset:
        for dc in self.double_cosets(xi.gamma, xi.nu):
            if dc.rep == xi.g:
                return dc
        raise ValueError(f"{xi} does not have a minimal double coset representative as g")

    def g_plus(self, xi: XiTriple) -> int:
        return self.double_coset(xi).longest

    def xi(self) -> List[XiTriple]:
        if self._xi is None:
            out = []
            for gamma in range(len(self.orbits)):
                for nu in range(len(self.orbits)):
                    out.extend(XiTriple(gamma, dc.rep, nu) for dc in self.double_cosets(gamma, nu))
            self._xi = out
            self._xi_index = {x: n for n, x in enumerate(out)}
        return self._xi

    def xi_position(self, xi: XiTriple) -> int:
        self.xi()
        return self._xi_index[xi]

    def __repr__(self) -> str:
        return f"WeightSet({self.datum.type_label}, size={len(self)}, orbits={len(self.orbits)})"


def close_under_W(W: WeylGroup | CartanDatum | str, seeds: Iterable[Sequence[int]]) -> WeightSet:
    """Union of the W-orbits of ``seeds`` (given as pairing vectors)."""
    if not isinstance(W, WeylGroup):
        W = WeylGroup(W)
    seeds = [tuple(int(x) for x in s) for s in seeds]
    if not seeds:
        raise ValueError("at least one seed weight is required")
    for s in seeds:
        if len(s) != W.rank:
            raise ValueError(f"seed {s} has length {len(s)}, expected rank {W.rank}")
    return WeightSet(W, {to_antidominant(W.datum, s)[0] for s in seeds})


def transversal(ws: WeightSet) -> List[Tuple[int, int]]:
    """Pairs ``(i, j)``: ``j`` antidominant and ``i s_k`` not below ``i`` whenever ``j s_k = j``."""
    out = []
    for orb in ws.orbits:
        j = orb.offset
        for i, m in enumerate(ws.elements):
            if all(m[k - 1] <= 0 for k in orb.J):
                out.append((i, j))
    return out


def xi_set(ws: WeightSet) -> List[XiTriple]:
    return list(ws.xi())


def xi_to_pair(ws: WeightSet, xi: XiTriple) -> Tuple[int, int]:
    return ws.element_index(xi.gamma, xi.g), ws.rep_index(xi.nu)


def pair_to_xi(ws: WeightSet, i: int, j: int) -> XiTriple:
    nu, wj = ws.locate(j)
    if wj != 0:
        raise ValueError("second entry of a transversal pair must be antidominant")
    gamma, g = ws.locate(i)
    if any(ws.W.is_right_descent(g, k) for k in ws.orbits[nu].J):
        raise ValueError("pair is not in the transversal")
    return XiTriple(gamma, g, nu)


def orbit_dimension(ws: WeightSet, xi: XiTriple) -> int:
    """``l(g+) + l(w0) - l(w0^gamma) - l(w0^nu)``."""
    W = ws.W
    lg = W.length
    return (
        lg(ws.g_plus(xi))
        + lg(W.longest)
        - lg(ws.orbits[xi.gamma].parabolic.longest)
        - lg(ws.orbits[xi.nu].parabolic.longest)
    )


def diagonal_dimension(ws: WeightSet, xi: XiTriple) -> int:
    """Orbit dimension of the diagonal triple ``(gamma, 1, gamma)``."""
    return orbit_dimension(ws, XiTriple(xi.gamma, 0, xi.gamma))

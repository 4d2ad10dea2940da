"""Flat JSON tables of every basis, and the inverse that rebuilds the objects."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional

from .hecke import HeckeElement
from .schur import SchurAlgebra, SchurElement
from .tmodule import TElement
from .weightsets import WeightSet, XiTriple
from .weylgroup import DEFAULT_CAP, WeylGroup

__all__ = ["Tables", "dump_tables", "load_tables", "same_tables", "xi_to_json", "xi_from_json"]

FORMAT = "qschur-tables/1"


def xi_to_json(ws: WeightSet, xi: XiTriple) -> dict:
    return {
        "gamma": list(ws.orbits[xi.gamma].rep),
        "g": ws.W.format(xi.g),
        "nu": list(ws.orbits[xi.nu].rep),
    }


def xi_from_json(ws: WeightSet, data: Mapping) -> XiTriple:
    gamma = ws.orbit_of_rep(data["gamma"])
    nu = ws.orbit_of_rep(data["nu"])
    if gamma is None or nu is None:
        raise KeyError(f"no orbit with representative {data['gamma']} or {data['nu']}")
    xi = XiTriple(gamma, ws.W.parse(data["g"]), nu)
    ws.double_coset(xi)  # rejects g that is not a minimal double coset representative
    return xi


@dataclass
class Tables:
    S: SchurAlgebra
    hecke_canonical: Dict[int, HeckeElement]
    t_canonical: Dict[int, TElement]
    t_bar: Dict[int, TElement]
    schur_canonical: Dict[XiTriple, SchurElement]

    @classmethod
    def compute(cls, S: SchurAlgebra) -> "Tables":
        T = S.T
        n = len(S.ws)
        return cls(
            S,
            {w: S.hecke.kl_elt(w) for w in S.W},
            {i: T.canonical(i) for i in range(n)},
            {i: T.bar_basis(i) for i in range(n)},
            {xi: S.canonical(xi) for xi in S.xi()},
        )


def dump_tables(S: SchurAlgebra) -> dict:
    tab = Tables.compute(S)
    ws, W = S.ws, S.W
    return {
        "format": FORMAT,
        "type": ws.datum.type_label,
        "group_order": len(W),
        "seeds": [list(o.rep) for o in ws.orbits],
        "hecke_canonical": [{"w": W.format(w), "element": h.to_json()} for w, h in sorted(tab.hecke_canonical.items())],
        "t_canonical": [{"v": list(ws.elements[i]), "element": v.to_json()} for i, v in sorted(tab.t_canonical.items())],
        "t_bar": [{"v": list(ws.elements[i]), "element": v.to_json()} for i, v in sorted(tab.t_bar.items())],
        "schur_canonical": [
            {
                "xi": xi_to_json(ws, xi),
                "std_coords": [
                    {"xi": xi_to_json(ws, y), "poly": c.to_json()} for y, c in sorted(S.canonical_std_coords(xi).items())
                ],
                "element": a.to_json(),
            }
            for xi, a in sorted(tab.schur_canonical.items())
        ],
    }


def load_tables(data: Mapping, cap: int = DEFAULT_CAP, S: Optional[SchurAlgebra] = None) -> Tables:
    """Rebuild the tables from :func:`dump_tables` output without recomputing them."""
    if data.get("format") != FORMAT:
        raise ValueError(f"unsupported table format {data.get('format')!r}")
    if S is None:
        W = WeylGroup(data["type"], cap=cap)
        S = SchurAlgebra(WeightSet(W, [tuple(s) for s in data["seeds"]]))
    ws, W, T = S.ws, S.W, S.T
    return Tables(
        S,
        {W.parse(r["w"]): S.hecke.from_json(r["element"]) for r in data["hecke_canonical"]},
        {ws.weight_index(r["v"]): T.from_json(r["element"]) for r in data["t_canonical"]},
        {ws.weight_index(r["v"]): T.from_json(r["element"]) for r in data["t_bar"]},
        {xi_from_json(ws, r["xi"]): S.from_json(r["element"]) for r in data["schur_canonical"]},
    )


def same_tables(a: Tables, b: Tables) -> List[str]:
    """Names of the tables that differ (empty when identical)."""
    out = []
    for name in ("hecke_canonical", "t_canonical", "t_bar", "schur_canonical"):
        if getattr(a, name) != getattr(b, name):
            out.append(name)
    return out

"""Closed formulas for the bar involution on the G2 module T, checked against the general construction.

Each family is a function of its parameters returning ``[(coefficient, weight)]``
for ``bar(v_x)``, weights in delta coordinates.  ``D`` stands for ``q^-1 - q``.
"""
from __future__ import annotations

from typing import Callable, Dict, List, Sequence, Tuple

from ..laurent import ONE, QDIFF, LaurentPoly
from ..tmodule import TElement
from .generators import schur_n
from .report import FormulaCheck, SuiteReport
from .weights import format_vector, index_of

__all__ = ["FAMILIES", "appendix_A_suite", "instances"]

D = QDIFF
D2 = D * D
E2 = LaurentPoly({-2: 1, 0: -1, 2: 1})
F2 = LaurentPoly({-2: 1, 2: 1})
E4 = LaurentPoly({-4: 1, -2: -1, 0: 1, 2: -1, 4: 1})
F4 = LaurentPoly({-4: 1, 0: 1, 4: 1})

Delta = Tuple[int, int, int]
Terms = List[Tuple[LaurentPoly, Delta]]


def _q(k: int) -> LaurentPoly:
    return LaurentPoly.monomial(k)


def _chain(top: Delta, below: Sequence[Delta]) -> Terms:
    """``v_top - D v_below[0] - D q v_below[1] - D q^2 v_below[2] ...`` (a path in a one-parameter orbit)."""
    out: Terms = [(ONE, top)]
    for k, w in enumerate(below):
        out.append((-(D * _q(k)), w))
    return out


def _zero_orbit(a: int) -> List[Delta]:
    """Orbit of ``(0, a, -a)`` from the antidominant element upward."""
    return [(0, a, -a), (a, 0, -a), (-a, a, 0), (a, -a, 0), (-a, 0, a), (0, -a, a)]


def _double_orbit(a: int) -> List[Delta]:
    return [(a, a, -2 * a), (-a, 2 * a, -a), (2 * a, -a, -a), (-2 * a, a, a), (a, -2 * a, a), (-a, -a, 2 * a)]


def _generic_levels(a: int, b: int) -> List[List[Delta]]:
    """Orbit of ``(a, b, -a-b)`` grouped by length of the coset representative."""
    return [
        [(a, b, -b - a)],
        [(b, a, -b - a), (-a, b + a, -b)],
        [(-b, b + a, -a), (b + a, -a, -b)],
        [(b + a, -b, -a), (-b - a, b, a)],
        [(-b - a, a, b), (b, -b - a, a)],
        [(-b, -a, b + a), (a, -b - a, b)],
        [(-a, -b, b + a)],
    ]


# coefficients of the level sums below the top, nearest level first
_GENERIC_COEFFS = [
    [],
    [-D],
    [-D, D2],
    [-D, D2, -(D * E2)],
    [-D, D2, -(D * E2), D2 * F2],
    [-D, D2, -(D * E2), D2 * F2, -(D * E4)],
    [-D, D2, -(D * E2), D2 * F2, -(D * E4), D2 * F4],
]


def _generic(level: int, which: int) -> Callable[[int, int], Terms]:
    def formula(a: int, b: int) -> Terms:
        levels = _generic_levels(a, b)
        out: Terms = [(ONE, levels[level][which])]
        for dist, c in enumerate(_GENERIC_COEFFS[level], start=1):
            for w in levels[level - dist]:
                out.append((c, w))
        return out

    return formula


def _orbit_family(orbit: Callable[[int], List[Delta]], pos: int) -> Callable[[int], Terms]:
    def formula(a: int) -> Terms:
        elems = orbit(a)
        return _chain(elems[pos], elems[pos - 1 :: -1] if pos else [])

    return formula


FAMILIES: Dict[str, Tuple[str, Callable]] = {"A1": ("none", lambda: [(ONE, (0, 0, 0))])}
for _p in range(6):
    FAMILIES[f"A{2 + _p}"] = ("a", _orbit_family(_zero_orbit, _p))
for _p in range(6):
    FAMILIES[f"A{8 + _p}"] = ("a", _orbit_family(_double_orbit, _p))
_n = 14
for _lvl, _row in enumerate(_generic_levels(1, 2)):
    for _w in range(len(_row)):
        FAMILIES[f"A{_n}"] = ("ab", _generic(_lvl, _w))
        _n += 1
del _n, _lvl, _row, _w, _p


def instances(n: int):
    """``(formula_id, params)`` for every family and every admissible parameter within X_n."""
    for fid, (kind, _) in FAMILIES.items():
        if kind == "none":
            yield fid, ()
        elif kind == "a":
            for a in range(1, n + 1):
                yield fid, (a,)
        else:
            for b in range(2, n + 1):
                for a in range(1, b):
                    yield fid, (a, b)


def _vector(T, terms: Terms) -> TElement:
    acc = T.zero()
    for c, w in terms:
        acc = acc + T.basis(index_of(T.ws, w)).scale(c)
    return acc


def appendix_A_suite(n: int = 3) -> SuiteReport:
    if n < 2:
        raise ValueError("the generic two-parameter formulas need n >= 2")
    S = schur_n(n)
    T = S.T
    report = SuiteReport("A")
    for fid, params in instances(n):
        terms = FAMILIES[fid][1](*params)
        src = terms[0][1]
        lhs = T.bar(_vector(T, [(ONE, src)]))
        rhs = _vector(T, terms)
        report.checks.append(
            FormulaCheck(
                fid,
                ",".join(f"{k}={v}" for k, v in zip("ab", params)) or "-",
                "pass" if lhs == rhs else "fail",
                format_vector(T.ws, lhs),
                format_vector(T.ws, rhs),
            )
        )
    report.notes["families"] = len(FAMILIES)
    return report

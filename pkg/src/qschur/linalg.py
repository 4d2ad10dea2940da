"""Exact linear algebra over the rationals, backed by sympy's sparse DomainMatrix."""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

__all__ = ["to_qq", "sparse_matrix", "rank", "nullity", "solve_unique", "InconsistentSystem"]


class InconsistentSystem(ValueError):
    pass


def to_qq(x):
    if isinstance(x, Fraction):
        return QQ(x.numerator, x.denominator)
    if isinstance(x, int):
        return QQ(x)
    return QQ.convert(x)


def sparse_matrix(rows: Iterable[Mapping[int, object]], ncols: int) -> DomainMatrix:
    """Build a DomainMatrix from a sequence of ``{column: value}`` rows."""
    data: Dict[int, Dict[int, object]] = {}
    nrows = 0
    for r, row in enumerate(rows):
        nrows = r + 1
        conv = {c: to_qq(v) for c, v in row.items() if v}
        if conv:
            data[r] = conv
    return DomainMatrix(data, (nrows, ncols), QQ)


def rank(rows: Sequence[Mapping[int, object]], ncols: int) -> int:
    if not rows or not ncols:
        return 0
    return sparse_matrix(rows, ncols).rank()


def nullity(rows: Sequence[Mapping[int, object]], ncols: int) -> int:
    return ncols - rank(rows, ncols)


def solve_unique(rows: Sequence[Mapping[int, object]], rhs: Sequence[object], ncols: int) -> List[Fraction]:
    """Solve ``A x = b`` exactly; raise unless the solution exists and is unique."""
    aug = [dict(row) for row in rows]
    for r, b in enumerate(rhs):
        if b:
            aug[r][ncols] = b
    M = sparse_matrix(aug, ncols + 1)
    rref, pivots = M.rref()
    if ncols in pivots:
        raise InconsistentSystem("linear system has no solution")
    if len(pivots) != ncols:
        raise InconsistentSystem(f"solution is not unique ({ncols - len(pivots)} free parameters)")
    sol = [Fraction(0)] * ncols
    rep = rref.to_sdm()
    for r, p in enumerate(pivots):
        v = rep.get(r, {}).get(ncols, QQ(0))
        sol[p] = Fraction(int(v.numerator), int(v.denominator))
    return sol

"""The bar-invariant generators ``e_a``, ``f_a`` (``0 <= a < n``) and ``t`` of the G2 q-Schur algebra."""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Optional, Tuple

from ..laurent import LaurentPoly
from ..schur import SchurAlgebra, SchurElement
from ..weightsets import XiTriple
from .weights import build_Xn, eps_orbit

__all__ = ["schur_n", "gen_e", "gen_f", "gen_t", "gen_t_standard", "e_terms", "f_terms", "t_terms"]


@lru_cache(maxsize=None)
def schur_n(n: int) -> SchurAlgebra:
    return SchurAlgebra(build_Xn(n))


def _check(a: int, n: int) -> None:
    if not 0 <= a < n:
        raise IndexError(f"generator index a={a} outside 0 <= a < {n}")


def _triple(S: SchurAlgebra, row: Tuple[int, int], col: Tuple[int, int], g: int) -> Optional[XiTriple]:
    gamma = eps_orbit(S.ws, *row)
    nu = eps_orbit(S.ws, *col)
    if gamma is None or nu is None:
        return None
    return XiTriple(gamma, g, nu)


def e_terms(S: SchurAlgebra, a: int, n: int) -> Iterable[XiTriple]:
    for k in range(n + 1):
        xi = _triple(S, (a, k), (a + 1, k), 0)
        if xi is not None:
            yield xi


def f_terms(S: SchurAlgebra, a: int, n: int) -> Iterable[XiTriple]:
    for k in range(n + 1):
        xi = _triple(S, (a + 1, k), (a, k), 0)
        if xi is not None:
            yield xi


def t_terms(S: SchurAlgebra, n: int) -> Iterable[XiTriple]:
    """Diagonal identities on ``eps_k + eps_l`` (``l > k + 1``) and the ``s1`` terms on ``eps_k + eps_(k+1)``."""
    for l in range(n + 1):
        for k in range(l - 1):
            xi = _triple(S, (k, l), (k, l), 0)
            if xi is not None:
                yield xi
    s1 = S.W.gen(1)
    for k in range(n):
        xi = _triple(S, (k, k + 1), (k, k + 1), s1)
        if xi is not None:
            yield xi


def _sum(S: SchurAlgebra, xis: Iterable[XiTriple]) -> SchurElement:
    acc = S.zero()
    for xi in xis:
        acc = acc + S.canonical(xi)
    return acc


def gen_e(a: int, n: int) -> SchurElement:
    _check(a, n)
    S = schur_n(n)
    return _sum(S, e_terms(S, a, n))


def gen_f(a: int, n: int) -> SchurElement:
    _check(a, n)
    S = schur_n(n)
    return _sum(S, f_terms(S, a, n))


def gen_t(n: int) -> SchurElement:
    if n < 1:
        raise IndexError("t needs n >= 1")
    S = schur_n(n)
    return _sum(S, t_terms(S, n))


def gen_t_standard(n: int) -> SchurElement:
    """``t`` assembled from standard basis elements with explicit q-power corrections."""
    if n < 1:
        raise IndexError("t needs n >= 1")
    S = schur_n(n)
    s1 = S.W.gen(1)
    acc = S.zero()
    for l in range(n + 1):
        for k in range(l - 1):
            xi = _triple(S, (k, l), (k, l), 0)
            if xi is not None:
                acc = acc + S.std(xi)
    for k in range(n):
        gamma = eps_orbit(S.ws, k, k + 1)
        if gamma is None:
            continue
        # eps_0 + eps_1 has stabilizer {s2}: the lower double coset has length 2 less
        shift = 2 if k == 0 else 1
        acc = acc + S.std(XiTriple(gamma, s1, gamma))
        acc = acc + S.std(XiTriple(gamma, 0, gamma)).scale(LaurentPoly.monomial(shift))
    return acc

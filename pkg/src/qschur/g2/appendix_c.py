"""Relations expressing every ``eta_{i,j}`` of the G2 Schur algebra (n = 2) through ``e_a``, ``f_a``, ``t``.

Everything is evaluated at a rational value of q as exact matrices over QQ;
products are compositions (the right factor acts first).  Two weights in the
corpus are written with sign slips and are read as ``(1, 2, -3)`` and
``(0, 0, 0)``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..linalg import to_qq
from ..schur import SchurElement
from ..weightsets import pair_to_xi, transversal
from .generators import gen_e, gen_f, gen_t, schur_n
from .report import FormulaCheck, SuiteReport
from .weights import act_delta, g2_group, index_of

__all__ = ["appendix_C_suite", "generation_rank", "relations", "Ctx"]

N = 2
Delta = Tuple[int, int, int]


class Ctx:
    """Generators, identity and transversal ``eta`` elements as QQ matrices at ``q = x``."""

    def __init__(self, x=1):
        self.x = Fraction(x)
        self.S = schur_n(N)
        self.ws = self.S.ws
        self.size = len(self.ws)
        self.e0 = self.mat(gen_e(0, N))
        self.e1 = self.mat(gen_e(1, N))
        self.f0 = self.mat(gen_f(0, N))
        self.f1 = self.mat(gen_f(1, N))
        self.t = self.mat(gen_t(N))
        self.one = DomainMatrix.eye(self.size, QQ)

    def mat(self, a: SchurElement) -> DomainMatrix:
        rows: Dict[int, Dict[int, object]] = {}
        for (i, j), v in a.evaluate(self.x).items():
            rows.setdefault(i, {})[j] = to_qq(v)
        return DomainMatrix(rows, (self.size, self.size), QQ)

    def has_pair(self, i: Delta, j: Delta) -> bool:
        try:
            pair_to_xi(self.ws, index_of(self.ws, i), index_of(self.ws, j))
        except (ValueError, KeyError):
            return False
        return True

    def eta(self, i: Delta, j: Delta) -> DomainMatrix:
        return self.mat(self.S.eta(index_of(self.ws, i), index_of(self.ws, j)))

    def c(self, num: int, den: int = 1):
        return QQ(num, den)

    def vector(self, M: DomainMatrix) -> Dict[int, object]:
        """Coordinates at the transversal pairs; they determine an element of the algebra."""
        sdm = M.to_sdm()
        out = {}
        for n, (i, j) in enumerate(transversal(self.ws)):
            v = sdm.get(i, {}).get(j)
            if v:
                out[n] = v
        return out


Relation = Tuple[str, str, Callable[[Ctx], DomainMatrix], Callable[[Ctx], DomainMatrix]]

R12 = (1, 2, -3)
DIAG = [(0, 0, 0), (0, 1, -1), (1, 1, -2), (0, 2, -2), (2, 2, -4)]


def _fixed() -> List[Relation]:
    E = lambda i, j: (lambda c: c.eta(i, j))
    A, B, C, D2, R = (0, 0, 0), (0, 1, -1), (1, 1, -2), (0, 2, -2), (2, 2, -4)
    rels: List[Relation] = [
        ("C1", f"eta{A}{A}", E(A, A), lambda c: c.e0 * c.e0 * c.f0 * c.f0 * c.c(1, 24)),
        ("C2", f"eta{B}{B}", E(B, B), lambda c: c.e1 * c.e0 * c.f0 * c.f1 * c.c(1, 2)),
        ("C3", f"eta{(1, 0, -1)}{B}", E((1, 0, -1), B), lambda c: (c.t - c.one) * c.eta(B, B)),
        ("C4", f"eta{(1, -1, 0)}{B}", E((1, -1, 0), B), lambda c: (c.t * c.t - c.t * c.c(2) - c.one) * c.eta(B, B)),
        (
            "C5",
            f"eta{(0, -1, 1)}{B}",
            E((0, -1, 1), B),
            lambda c: (c.t - c.one) * (c.t * c.t - c.t * c.c(2) - c.one * c.c(2)) * c.eta(B, B) * c.c(1, 2),
        ),
        ("C6", f"eta{B}{A}", E(B, A), lambda c: c.f0 * c.eta(A, A)),
        ("C7", f"eta{A}{B}", E(A, B), lambda c: c.e0 * c.eta(B, B)),
        ("C8", f"eta{C}{C}", E(C, C), lambda c: c.e1 * c.e1 * c.f1 * c.f1 * c.c(1, 4)),
        ("C9", f"eta{(-1, 2, -1)}{C}", E((-1, 2, -1), C), lambda c: (c.f0 * c.e0 - c.one * c.c(2)) * c.eta(C, C)),
        (
            "C10",
            f"eta{(-2, 1, 1)}{C}",
            E((-2, 1, 1), C),
            lambda c: ((c.f0 * c.e0 - c.one * c.c(2)) ** 2 - c.one * c.c(2)) * c.eta(C, C),
        ),
        (
            "C11",
            f"eta{(-1, -1, 2)}{C}",
            E((-1, -1, 2), C),
            lambda c: (c.f0 * c.eta((0, -1, 1), B) * c.e0 * c.eta(C, C) - c.eta((-2, 1, 1), C)) * c.c(1, 2),
        ),
        ("C12", f"eta{C}{A}", E(C, A), lambda c: c.f0 * c.f0 * c.c(1, 2)),
        ("C13", f"eta{A}{C}", E(A, C), lambda c: c.e0 * c.e0 * c.c(1, 2)),
        ("C14", f"eta{C}{B}", E(C, B), lambda c: c.f0 * c.eta(B, B)),
        (
            "C15",
            f"eta{(2, -1, -1)}{B}",
            E((2, -1, -1), B),
            lambda c: c.f0 * (c.e0 * c.f0 - c.one * c.c(3)) * c.eta(B, B),
        ),
        (
            "C16",
            f"eta{(1, -2, 1)}{B}",
            E((1, -2, 1), B),
            lambda c: (c.f0 * c.e0 - c.one) * c.eta((2, -1, -1), B)
            - c.f0 * (c.e0 * c.f0 - c.one * c.c(2)) * c.eta(B, B),
        ),
        ("C17", f"eta{B}{C}", E(B, C), lambda c: c.e0 * c.eta(C, C)),
        (
            "C18",
            f"eta{(-1, 1, 0)}{C}",
            E((-1, 1, 0), C),
            lambda c: c.e0 * (c.f0 * c.e0 - c.one * c.c(3)) * c.eta(C, C),
        ),
        (
            "C19",
            f"eta{(-1, 0, 1)}{C}",
            E((-1, 0, 1), C),
            lambda c: (c.e0 * c.f0 - c.one) * c.eta((-1, 1, 0), C)
            - c.e0 * (c.f0 * c.e0 - c.one * c.c(2)) * c.eta(C, C),
        ),
        ("C20", f"eta{D2}{D2}", E(D2, D2), lambda c: c.e0 * c.f0 * c.f1 * c.e1 * c.c(1, 2)),
        ("C21", f"eta{(2, 0, -2)}{D2}", E((2, 0, -2), D2), lambda c: c.f1 * c.eta((1, 0, -1), B) * c.e1),
        ("C22", f"eta{(2, -2, 0)}{D2}", E((2, -2, 0), D2), lambda c: c.f1 * c.eta((1, -1, 0), B) * c.e1),
        ("C23", f"eta{(0, -2, 2)}{D2}", E((0, -2, 2), D2), lambda c: c.f1 * c.eta((0, -1, 1), B) * c.e1),
        (
            "C26",
            f"eta{R12}{R12}",
            E(R12, R12),
            lambda c: c.one - c.eta(A, A) - c.eta(B, B) - c.eta(C, C) - c.eta(D2, D2) - c.eta(R, R),
        ),
        ("C27", f"eta{(2, 1, -3)}{R12}", E((2, 1, -3), R12), lambda c: (c.t - c.one) * c.eta(R12, R12)),
        (
            "C28",
            f"eta{(-1, 3, -2)}{R12}",
            E((-1, 3, -2), R12),
            lambda c: (c.f0 * c.f1 * c.e1 * c.e0 - c.one) * c.eta(R12, R12),
        ),
        ("C29", f"eta{(-2, 3, -1)}{R12}", E((-2, 3, -1), R12), lambda c: (c.t - c.one) * c.eta((-1, 3, -2), R12)),
        (
            "C30",
            f"eta{(3, -1, -2)}{R12}",
            E((3, -1, -2), R12),
            lambda c: c.eta((-1, 3, -2), R12) * c.eta((2, 1, -3), R12),
        ),
        ("C31", f"eta{(3, -2, -1)}{R12}", E((3, -2, -1), R12), lambda c: (c.t - c.one) * c.eta((3, -1, -2), R12)),
        (
            "C32",
            f"eta{(1, -3, 2)}{R12}",
            E((1, -3, 2), R12),
            lambda c: c.eta((-2, 3, -1), R12) * c.eta((3, -2, -1), R12),
        ),
        ("C33", f"eta{(2, -3, 1)}{R12}", E((2, -3, 1), R12), lambda c: (c.t - c.one) * c.eta((1, -3, 2), R12)),
        (
            "C34",
            f"eta{(-3, 2, 1)}{R12}",
            E((-3, 2, 1), R12),
            lambda c: c.eta((-1, 3, -2), R12) * c.eta((-2, 3, -1), R12),
        ),
        ("C35", f"eta{(-3, 1, 2)}{R12}", E((-3, 1, 2), R12), lambda c: (c.t - c.one) * c.eta((-3, 2, 1), R12)),
        (
            "C36",
            f"eta{(-1, -2, 3)}{R12}",
            E((-1, -2, 3), R12),
            lambda c: c.eta((1, -3, 2), R12) * c.eta((-1, 3, -2), R12),
        ),
        ("C37", f"eta{(-2, -1, 3)}{R12}", E((-2, -1, 3), R12), lambda c: (c.t - c.one) * c.eta((-1, -2, 3), R12)),
        ("C38", f"eta{A}{R12}", E(A, R12), lambda c: c.e0 * c.e1 * c.e0),
        ("C42", f"eta{R12}{A}", E(R12, A), lambda c: c.f0 * c.f1 * c.f0),
        ("C46", f"eta{R}{R}", E(R, R), lambda c: c.f1 * c.f1 * c.e1 * c.e1 * c.c(1, 4)),
        (
            "C47",
            f"eta{(-2, 4, -2)}{R}",
            E((-2, 4, -2), R),
            lambda c: c.f1 * c.f1 * c.eta((-1, 2, -1), C) * c.e1 * c.e1 * c.c(1, 4),
        ),
        (
            "C48",
            f"eta{(-4, 2, 2)}{R}",
            E((-4, 2, 2), R),
            lambda c: c.f1 * c.f1 * c.eta((-2, 1, 1), C) * c.e1 * c.e1 * c.c(1, 4),
        ),
        (
            "C49",
            f"eta{(-2, -2, 4)}{R}",
            E((-2, -2, 4), R),
            lambda c: c.f1 * c.f1 * c.eta((-1, -1, 2), C) * c.e1 * c.e1 * c.c(1, 4),
        ),
    ]
    return rels


def _moved(x: Delta, w: int) -> Delta:
    return act_delta(x, g2_group().word(w))


def _families(c: Ctx) -> Iterator[Tuple[str, str, Tuple, Tuple, Callable]]:
    """``(id, instance, lhs_pair, rhs_pair, combine)``; ``combine(c, eta_rhs)`` builds the right side."""
    W = g2_group()
    A, B, C, D2, R = DIAG
    for w in W:
        for abc in (A, B, C):
            yield "C24", f"w={W.format(w)},j={abc}", (_moved(D2, w), abc), (_moved(B, w), abc), lambda c, m: c.f1 * m
            yield "C25", f"w={W.format(w)},i={abc}", (_moved(abc, w), D2), (_moved(abc, w), B), lambda c, m: m * c.e1
        yield "C39", f"w={W.format(w)}", (_moved(B, w), R12), (_moved(R12, w), R12), lambda c, m: c.e1 * c.e0 * m
        yield "C40", f"w={W.format(w)}", (_moved(C, w), R12), (_moved(R12, w), R12), lambda c, m: c.e1 * m
        yield "C41", f"w={W.format(w)}", (_moved(D2, w), R12), (_moved(R12, w), R12), lambda c, m: c.e0 * m
        yield "C43", f"w={W.format(w)}", (_moved(R12, w), B), (_moved(R12, w), R12), lambda c, m: m * c.f0 * c.f1
        yield "C44", f"w={W.format(w)}", (_moved(R12, w), C), (_moved(R12, w), R12), lambda c, m: m * c.f1
        yield "C45", f"w={W.format(w)}", (_moved(R12, w), D2), (_moved(R12, w), R12), lambda c, m: m * c.f0
        for abc in (A, B, D2, C, R12):
            half = c.c(1, 2)
            yield "C50", f"w={W.format(w)},j={abc}", (_moved(R, w), abc), (_moved(C, w), abc), (
                lambda c, m, h=half: c.f1 * c.f1 * m * h
            )
            yield "C51", f"w={W.format(w)},i={abc}", (_moved(abc, w), R), (_moved(abc, w), C), (
                lambda c, m, h=half: m * c.e1 * c.e1 * h
            )


def relations(c: Ctx) -> Iterator[Tuple[str, str, DomainMatrix, DomainMatrix]]:
    """Every relation instance as ``(id, instance, lhs, rhs)``; family members off the transversal are skipped."""
    for fid, label, lhs, rhs in _fixed():
        yield fid, label, lhs(c), rhs(c)
    seen = set()
    for fid, label, lp, rp, combine in _families(c):
        if (fid, lp, rp) in seen:
            continue
        seen.add((fid, lp, rp))
        if not (c.has_pair(*lp) and c.has_pair(*rp)):
            continue
        yield fid, f"{label}: eta{lp[0]}{lp[1]}", c.eta(*lp), combine(c, c.eta(*rp))


def _column_basis(c: Ctx, vectors: Sequence[Dict[int, object]]) -> List[int]:
    """Indices of a maximal independent subset, in order."""
    ncols = len(transversal(c.ws))
    cols: Dict[int, Dict[int, object]] = {}
    for k, v in enumerate(vectors):
        for r, x in v.items():
            cols.setdefault(r, {})[k] = x
    M = DomainMatrix(cols, (ncols, len(vectors)), QQ)
    _, pivots = M.rref()
    return list(pivots)


def generation_rank(x=1) -> Tuple[int, int]:
    """Dimension of the span of all monomials in ``e0, e1, f0, f1, t`` at ``q = x``, and the word length reached.

    The span is the closure of the identity under left multiplication by the
    generators; the search stops when a level adds nothing new.
    """
    c = Ctx(x)
    gens = [c.e0, c.e1, c.f0, c.f1, c.t]
    basis = [c.one]
    vecs = [c.vector(c.one)]
    frontier = [c.one]
    depth = 0
    while frontier:
        cands = [g * m for m in frontier for g in gens]
        keep = _column_basis(c, vecs + [c.vector(m) for m in cands])
        fresh = [cands[k - len(vecs)] for k in keep if k >= len(vecs)]
        if not fresh:
            break
        depth += 1
        basis.extend(fresh)
        vecs.extend(c.vector(m) for m in fresh)
        frontier = fresh
    return len(basis), depth


def _show(M: DomainMatrix) -> str:
    nz = sum(len(r) for r in M.to_sdm().values())
    return f"matrix(nnz={nz})"


def appendix_C_suite(generation_samples: Sequence = (1, 2, Fraction(3, 2), Fraction(5, 3))) -> SuiteReport:
    c = Ctx(1)
    report = SuiteReport("C")
    for fid, label, lhs, rhs in relations(c):
        ok = lhs == rhs
        report.checks.append(FormulaCheck(fid, label, "pass" if ok else "fail", _show(lhs), _show(rhs)))
    target = len(transversal(c.ws))
    for x in generation_samples:
        dim, depth = generation_rank(x)
        report.checks.append(
            FormulaCheck(
                "generation",
                f"q={x}",
                "pass" if dim == target else "fail",
                f"span dimension {dim} (word length {depth})",
                f"algebra dimension {target}",
            )
        )
    return report

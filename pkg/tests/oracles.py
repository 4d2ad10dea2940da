"""Independent reference computations used to cross-check the library."""
from qschur.hecke import HeckeAlgebra
from qschur.laurent import LaurentPoly
from qschur.linalg import solve_unique

# covering relations of the G2 Bruhat graph, one pair per drawn edge
TOP = ["s1", "s1s2", "s1s2s1", "s1s2s1s2", "s1s2s1s2s1"]
BOTTOM = ["s2", "s2s1", "s2s1s2", "s2s1s2s1", "s2s1s2s1s2"]
G2_DRAWN_BRUHAT_EDGES = (
    [("e", "s1"), ("e", "s2")]
    + [(TOP[k], TOP[k + 1]) for k in range(4)]
    + [(TOP[k], BOTTOM[k + 1]) for k in range(4)]
    + [(BOTTOM[k], BOTTOM[k + 1]) for k in range(4)]
    + [(BOTTOM[k], TOP[k + 1]) for k in range(4)]
    + [(TOP[4], "s1s2s1s2s1s2"), (BOTTOM[4], "s1s2s1s2s1s2")]
)


def parse_compact(W, text):
    """Words written as ``s2s1s2``; ``e`` is the identity."""
    return W.identity if text == "e" else W.from_word([int(c) for c in text[1::2]])


def bar_H_by_words(hk: HeckeAlgebra, w):
    """``bar(H_w)`` as the product of ``bar(H_k) = H_k + q - q^-1`` along a reduced word."""
    out = hk.one()
    shift = LaurentPoly({1: 1, -1: -1})
    for k in hk.W.word(w):
        out = out * (hk.gen(k) + shift)
    return out


def bar_invariant_solve(bar_of, top, lower, bound):
    """The unique ``b_top + sum_{y in lower} p_y b_y`` fixed by an antilinear involution.

    ``bar_of(y)`` gives the image of basis element ``y`` as ``{z: LaurentPoly}``.
    Each ``p_y`` is sought in ``q Z[q]`` with degree at most ``bound(y)``.
    Returns ``{y: p_y}`` including ``top``; raises unless the solution is unique.
    """
    unknowns = [(y, d) for y in lower for d in range(1, bound(y) + 1)]
    keys, rows, const = {}, {}, {}

    def row(key):
        return rows.setdefault(keys.setdefault(key, len(keys)), {})

    for col, (y, d) in enumerate(unknowns):
        for z, c in bar_of(y).items():
            for e, x in c.items():
                r = row((z, e - d))
                r[col] = r.get(col, 0) + x
        r = row((y, d))
        r[col] = r.get(col, 0) - 1
    for z, c in bar_of(top).items():
        for e, x in c.items():
            const[z, e] = const.get((z, e), 0) + x
    const[top, 0] = const.get((top, 0), 0) - 1
    for key in const:
        row(key)
    out = {top: LaurentPoly(1)}
    if not unknowns:
        if any(const.values()):
            raise AssertionError("the top element alone is not invariant")
        return out
    n = len(keys)
    rhs = [0] * n
    for key, x in const.items():
        rhs[keys[key]] = -x
    sol = solve_unique([rows.get(r, {}) for r in range(n)], rhs, len(unknowns))
    for (y, d), x in zip(unknowns, sol):
        assert x.denominator == 1
        if x:
            out[y] = out.get(y, LaurentPoly()) + LaurentPoly({d: int(x)})
    return {y: p for y, p in out.items() if p}


def kl_by_linear_solve(hk: HeckeAlgebra, w):
    """``{y: p_y}`` of the bar-invariant ``H_w + sum_{y < w} qZ[q] H_y``."""
    W = hk.W
    return bar_invariant_solve(
        lambda y: dict(bar_H_by_words(hk, y).items()),
        w,
        [y for y in W.below(w) if y != w],
        lambda y: W.length(w) - W.length(y),
    )

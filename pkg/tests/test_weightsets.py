from itertools import product

import pytest

from qschur.g2 import build_Xn, delta, g2_group
from qschur.rootdata import g2_delta_to_pairing
from qschur.weightsets import (
    XiTriple,
    close_under_W,
    diagonal_dimension,
    orbit_dimension,
    pair_to_xi,
    transversal,
    xi_set,
    xi_to_pair,
)

G2 = g2_group()


def seed(abc):
    return close_under_W(G2, [g2_delta_to_pairing(abc)])


def brute_double_coset_count(W, J1, J2):
    """Orbits of W_J1 x W_J2 acting on W by left and right multiplication."""
    left, right = W.parabolic(J1).elements, W.parabolic(J2).elements
    seen, count = set(), 0
    for w in W:
        if w not in seen:
            count += 1
            seen |= {W.mul(W.mul(u, w), v) for u in left for v in right}
    return count


def transversal_by_delta(ws):
    """Pairs (i, rep_nu) under the wall conditions written in delta coordinates."""
    out = []
    for orb in ws.orbits:
        a, b, _ = delta(ws, orb.offset)
        for i in range(len(ws)):
            x, y, _ = delta(ws, i)
            if (a == b and x > y) or (a == 0 and x < 0):
                continue
            out.append((i, orb.offset))
    return out


def test_seed_examples():
    ws = seed((0, 1, -1))
    assert len(ws) == 6 and ws.orbits[0].J == {2}
    ws = seed((0, 0, 0))
    assert len(ws) == 1 and ws.orbits[0].J == {1, 2}
    ws = seed((1, 2, -3))
    assert len(ws) == 12 and ws.orbits[0].is_regular


def test_seeds_are_validated():
    with pytest.raises(ValueError):
        close_under_W(G2, [])
    with pytest.raises(ValueError):
        close_under_W(G2, [(1, 2, 3)])


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_cardinality(n):
    assert len(build_Xn(n)) == 6 * n * n + 6 * n + 1


def test_orbit_census_n2():
    ws = build_Xn(2)
    sizes = sorted(o.size for o in ws.orbits)
    assert sizes == [1, 6, 6, 6, 6, 12]
    assert sorted(len(o.J) for o in ws.orbits) == [0, 1, 1, 1, 1, 2]
    assert sum(1 for o in ws.orbits if o.J == {1}) == 2
    assert sum(1 for o in ws.orbits if o.J == {2}) == 2


@pytest.mark.parametrize("n", [1, 2])
def test_linkage_is_absolute_value_multiset(n):
    ws = build_Xn(n)
    key = [tuple(sorted(map(abs, delta(ws, i)))) for i in range(len(ws))]
    for i, j in product(range(len(ws)), repeat=2):
        assert (ws.orbit_of(i) == ws.orbit_of(j)) == (key[i] == key[j])


def test_every_element_is_rep_times_coset_rep():
    ws = build_Xn(3)
    for i, m in enumerate(ws.elements):
        gamma, w = ws.locate(i)
        assert ws.element_index(gamma, w) == i
        assert w in ws.orbits[gamma].min_reps


@pytest.mark.parametrize("n,expected", [(1, 19), (2, 127), (3, 469)])
def test_xi_count_and_bijection(n, expected):
    ws = build_Xn(n)
    assert expected == 3 * n ** 4 + 6 * n ** 3 + 6 * n ** 2 + 3 * n + 1
    xis = xi_set(ws)
    assert len(xis) == expected
    brute = sum(
        brute_double_coset_count(G2, a.J, b.J) for a in ws.orbits for b in ws.orbits
    )
    assert brute == expected
    pairs = transversal(ws)
    assert sorted(pairs) == sorted(transversal_by_delta(ws))
    assert len(pairs) == expected
    assert sorted(xi_to_pair(ws, xi) for xi in xis) == sorted(pairs)
    for xi in xis:
        assert pair_to_xi(ws, *xi_to_pair(ws, xi)) == xi
    for p in pairs:
        assert xi_to_pair(ws, pair_to_xi(ws, *p)) == p


def test_pair_to_xi_rejects_pairs_off_the_transversal():
    ws = build_Xn(1)
    on = set(transversal(ws))
    bad = next((i, o.offset) for o in ws.orbits for i in range(len(ws)) if (i, o.offset) not in on)
    with pytest.raises(ValueError):
        pair_to_xi(ws, *bad)
    with pytest.raises(ValueError):
        pair_to_xi(ws, 0, ws.orbits[-1].offset + 1)


def test_orbit_dimension_examples():
    ws = build_Xn(2)
    reg = next(o.index for o in ws.orbits if o.is_regular)
    single = next(o.index for o in ws.orbits if len(o.J) == 2)
    xi = XiTriple(reg, 0, reg)
    assert orbit_dimension(ws, xi) == 6
    xi = XiTriple(single, 0, single)
    assert orbit_dimension(ws, xi) - diagonal_dimension(ws, xi) == 0
    for xi in xi_set(ws):
        d = orbit_dimension(ws, xi) - diagonal_dimension(ws, xi)
        W = ws.W
        assert d == W.length(ws.g_plus(xi)) - W.length(ws.orbits[xi.nu].parabolic.longest)


def test_other_types():
    ws = close_under_W("B2", [(0, 0), (-1, -1)])
    assert len(ws) == 9 and ws.has_regular_orbit
    assert len(xi_set(ws)) == len(transversal(ws)) == 1 + 1 + 1 + 8
    ws = close_under_W("A2", [(0, 0), (-1, -1), (-1, 0)])
    assert sorted(o.size for o in ws.orbits) == [1, 3, 6]
    assert len(ws) == 10

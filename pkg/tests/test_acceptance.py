"""The twelve acceptance criteria, one test each; every test records a PASS/FAIL line."""
import random
from fractions import Fraction

import pytest

from qschur.duality import DEFAULT_SAMPLES, verify_duality
from qschur.g2 import appendix_A_suite, appendix_B_suite, appendix_C_suite, build_Xn, g2_group, schur_n
from qschur.g2.appendix_b import ADOPTED_READINGS
from qschur.hecke import HeckeAlgebra
from qschur.laurent import ONE, LaurentPoly
from qschur.schur import SchurAlgebra
from qschur.weightsets import (
    close_under_W,
    diagonal_dimension,
    orbit_dimension,
    pair_to_xi,
    transversal,
    xi_to_pair,
)

from oracles import G2_DRAWN_BRUHAT_EDGES, kl_by_linear_solve, parse_compact


def b2_set():
    return SchurAlgebra(close_under_W("B2", [(0, 0), (-1, 0), (0, -1), (-1, -1)]))


def a2_set():
    return SchurAlgebra(close_under_W("A2", [(0, 0), (-1, 0), (-1, -1)]))


def test_criterion_01_cardinalities(record_acceptance):
    got = [len(build_Xn(n)) for n in range(1, 6)]
    ok = got == [13, 37, 73, 121, 181] == [6 * n * n + 6 * n + 1 for n in range(1, 6)]
    record_acceptance(1, "|X_n| for n = 1..5", ok, f"{got}")
    assert ok


def test_criterion_02_schur_dimension_and_bijection(record_acceptance):
    dims, round_trips = [], True
    for n in (1, 2, 3):
        ws = build_Xn(n)
        xis, pairs = ws.xi(), transversal(ws)
        dims.append((len(xis), len(pairs)))
        images = sorted(xi_to_pair(ws, xi) for xi in xis)
        round_trips &= images == sorted(pairs)
        round_trips &= all(pair_to_xi(ws, *xi_to_pair(ws, xi)) == xi for xi in xis)
        round_trips &= all(xi_to_pair(ws, pair_to_xi(ws, *p)) == p for p in pairs)
    expected = [(d, d) for d in (19, 127, 469)]
    ok = dims == expected and round_trips
    record_acceptance(2, "dim S_q(n) = |Xi| = |transversal| with bijection round trip", ok, f"{[d for d, _ in dims]}")
    assert ok


def test_criterion_03_bruhat_graph(record_acceptance):
    W = g2_group()
    drawn = {(parse_compact(W, a), parse_compact(W, b)) for a, b in G2_DRAWN_BRUHAT_EDGES}
    covers = set(W.bruhat_covers())
    ok = len(W) == 12 and covers == drawn and len(drawn) == 20
    record_acceptance(3, "G2 Bruhat graph equals the drawn graph", ok, f"{len(W)} vertices, {len(covers)} covering edges")
    assert ok


def test_criterion_04_g2_kl_polynomials(record_acceptance):
    W = g2_group()
    hk = HeckeAlgebra(W)
    bad = []
    comparable = 0
    for w in W:
        oracle = kl_by_linear_solve(hk, w)
        if dict(hk.kl_elt(w).items()) != oracle:
            bad.append(("oracle", w))
        for y in W:
            expected = LaurentPoly.monomial(W.length(w) - W.length(y)) if W.bruhat_leq(y, w) else LaurentPoly()
            comparable += W.bruhat_leq(y, w)
            if hk.kl_poly(y, w) != expected or oracle.get(y, LaurentPoly()) != expected:
                bad.append((y, w))
    ok = not bad
    record_acceptance(4, "G2 KL polynomials are q^(l(w)-l(y)), linear-solve oracle agrees", ok, f"144 ordered pairs, {comparable} comparable")
    assert ok, bad


def test_criterion_05_appendix_a(record_acceptance):
    report = appendix_A_suite(3)
    ok = report.passed
    record_acceptance(5, "bar-involution formula corpus on X_3", ok, f"{len(report.checks)} instances, {len(report.mismatches)} mismatches")
    assert ok, [c.to_json() for c in report.mismatches]


def test_criterion_06_appendix_b(record_acceptance):
    report = appendix_B_suite(3)
    ok = report.passed and report.notes["adopted_readings"] == ADOPTED_READINGS
    readings = "; ".join(f"{k}: {v}" for k, v in sorted(ADOPTED_READINGS.items()))
    record_acceptance(
        6,
        "e_a, f_a, t action corpus on X_3",
        ok,
        f"{len(report.checks)} instances, {len(report.mismatches)} mismatches; readings {readings}; matches {report.notes['reading_matches']}",
    )
    assert ok, [c.to_json() for c in report.mismatches]


def test_criterion_07_appendix_c(record_acceptance):
    report = appendix_C_suite(generation_samples=DEFAULT_SAMPLES)
    gen = [c for c in report.checks if c.formula_id == "generation"]
    ok = report.passed and len(gen) == 4 and {c.instance for c in gen} >= {"q=1"}
    record_acceptance(7, "S(2) relations at q=1 and generation at 4 values of q", ok, f"{len(report.checks)} checks, {len(report.mismatches)} mismatches")
    assert ok, [c.to_json() for c in report.mismatches]


DUALITY_CASES = {
    "G2 X_2": lambda: schur_n(2),
    "B2": b2_set,
    "A2": a2_set,
}


def test_criterion_08_double_centralizer(record_acceptance):
    results = {}
    for name, make in DUALITY_CASES.items():
        r = verify_duality(make(), samples=DEFAULT_SAMPLES)
        results[name] = r
    attainable = all(r.passed for r in results.values())
    x1 = verify_duality(schur_n(1), samples=DEFAULT_SAMPLES, require_regular=False)
    x1_dims = sorted({s.centralizer_dim for s in x1.samples})
    detail = ", ".join(f"{k}: dim {sorted({s.centralizer_dim for s in r.samples})}" for k, r in results.items())
    detail += f"; G2 X_1 has no regular orbit: centralizer dim {x1_dims} equals the Hecke image but not |W| = 12 (see xfail)"
    record_acceptance(8, "double centralizer", attainable and x1.passed, detail)
    assert attainable
    assert all(s.equal for s in x1.samples)


@pytest.mark.xfail(strict=True, reason="G2 X_1 has no regular orbit; the Hecke action there has rank 11, not 12")
def test_criterion_08_x1_clause():
    r = verify_duality(schur_n(1), samples=DEFAULT_SAMPLES, require_regular=False)
    assert r.passed


def test_criterion_09_canonical_basis(record_acceptance):
    bad, total = [], 0
    for name, S in (("G2 X_2", schur_n(2)), ("B2", b2_set()), ("A2", a2_set())):
        W, T, hk = S.W, S.T, S.hecke
        for xi in S.xi():
            total += 1
            c = S.canonical(xi)
            coords = S.coords(c)
            triangular = coords.get(xi) == ONE and all(
                y == xi or ((y.gamma, y.nu) == (xi.gamma, xi.nu) and W.bruhat_leq(y.g, xi.g) and p.in_qZq())
                for y, p in coords.items()
            )
            image = T.omega(c.apply(T.basis(S.ws.rep_index(xi.nu))))
            if not (S.bar(c) == c and triangular and image == {xi.gamma: hk.kl_elt(S.ws.g_plus(xi))}):
                bad.append((name, xi))
    ok = not bad
    record_acceptance(9, "canonical basis is bar invariant, unitriangular and sends x_nu to C_g+", ok, f"{total} elements")
    assert ok, bad


def test_criterion_10_positivity(record_acceptance):
    S = schur_n(1)
    xis = S.xi()
    bad, products, actions = [], 0, 0
    for b in xis:
        for b2 in xis:
            products += 1
            if not all(c.in_Nqq() for c in S.structure_constants(b, b2).values()):
                bad.append(("product", b, b2))
        for i in range(len(S.ws)):
            actions += 1
            if not all(c.in_Nqq() for c in S.action_constants(b, i).values()):
                bad.append(("action", b, i))
    ok = not bad and products == 19 * 19
    record_acceptance(10, "positivity of structure and action constants on X_1", ok, f"{products} products, {actions} actions")
    assert ok, bad


def test_criterion_11_exponent_is_dimension_difference(record_acceptance):
    bad, total = [], 0
    for n in (1, 2, 3):
        S = schur_n(n)
        ws = S.ws
        for xi in S.xi():
            total += 1
            if S.std_exponent(xi) != orbit_dimension(ws, xi) - diagonal_dimension(ws, xi):
                bad.append((n, xi))
    ok = not bad
    record_acceptance(11, "standard-basis rescaling exponent equals d(xi) - d(xi diagonal)", ok, f"{total} triples")
    assert ok, bad


def test_criterion_12_phi_eta_and_bar_compatibility(record_acceptance):
    S = schur_n(2)
    T, hk, W = S.T, S.hecke, S.W
    bad = []
    for xi in S.xi():
        i, j = xi_to_pair(S.ws, xi)
        if S.phi_via_hecke(xi) != S.eta(i, j).scale(LaurentPoly.monomial(S.phi_exponent(xi))):
            bad.append(xi)
    rng = random.Random(20240917)
    triples = 0
    for _ in range(1000):
        eta = S.random_element(rng, terms=rng.randint(1, 3))
        v = T.element({rng.randrange(len(S.ws)): LaurentPoly({rng.randint(-2, 2): rng.choice([-1, 1, 2])}) for _ in range(3)})
        h = hk.element({rng.randrange(len(W)): LaurentPoly({rng.randint(-2, 2): rng.choice([-1, 1, 3])}) for _ in range(2)})
        lhs = T.bar(T.act(eta.apply(v), h))
        rhs = T.act(S.bar(eta).apply(T.bar(v)), hk.bar(h))
        triples += 1
        if lhs != rhs:
            bad.append(("bar", eta, v, h))
    ok = not bad
    record_acceptance(12, "phi/eta identity for every xi and bar compatibility", ok, f"{len(S.xi())} triples xi, {triples} random (eta, v, h)")
    assert ok, bad[:3]

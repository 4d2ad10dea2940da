import pytest

from qschur.g2 import (
    act_delta,
    appendix_A_suite,
    appendix_B_suite,
    appendix_C_suite,
    build_Xn,
    eps_orbit,
    gen_e,
    gen_f,
    gen_t,
    gen_t_standard,
    index_of,
    schur_n,
)
from qschur.g2.appendix_a import FAMILIES, instances
from qschur.laurent import ONE, LaurentPoly

S2 = schur_n(2)


def v(S, abc, coeff=ONE):
    return S.T.basis(index_of(S.ws, abc)).scale(coeff)


def q(k):
    return LaurentPoly.monomial(k)


def test_act_delta_applies_letters_left_to_right():
    assert act_delta((0, 1, -1), [1]) == (1, 0, -1)
    assert act_delta((1, 2, -3), [1, 2]) == (-2, 3, -1)
    assert act_delta((1, 2, -3), []) == (1, 2, -3)


def test_eps_orbit_normalizes_labels():
    ws = build_Xn(2)
    assert eps_orbit(ws, 1, 0) == eps_orbit(ws, 0, 1) is not None
    assert eps_orbit(ws, -1, 1) is None
    assert eps_orbit(ws, 0, 3) is None


def test_generator_examples():
    S = S2
    assert gen_e(0, 2).apply(v(S, (0, 1, -1))) == v(S, (0, 0, 0))
    expected = S.T.zero()
    for k, w in enumerate([(0, -1, 1), (-1, 0, 1), (1, -1, 0), (-1, 1, 0), (1, 0, -1), (0, 1, -1)]):
        expected = expected + v(S, w, q(k))
    assert gen_f(0, 2).apply(v(S, (0, 0, 0))) == expected
    got = gen_t(2).apply(v(S, (0, -1, 1)))
    assert got == v(S, (0, -1, 1), q(-2)) + v(S, (-1, 0, 1), q(-1)) + v(S, (1, -1, 0))


def test_generator_index_errors():
    with pytest.raises(IndexError):
        gen_e(2, 2)
    with pytest.raises(IndexError):
        gen_f(-1, 2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_two_forms_of_t_agree(n):
    assert gen_t(n) == gen_t_standard(n)


@pytest.mark.parametrize("n", [1, 2])
def test_generators_are_bar_invariant_members(n):
    S = schur_n(n)
    gens = [gen_t(n)] + [g(a, n) for a in range(n) for g in (gen_e, gen_f)]
    for x in gens:
        assert S.is_member(x)
        assert S.bar(x) == x


def test_idempotent_refinement():
    S = S2
    gens = [gen_t(2)] + [g(a, 2) for a in range(2) for g in (gen_e, gen_f)]
    for x in gens:
        for gamma in range(len(S.ws.orbits)):
            part = S.to_canonical_coords(S.compose(x, S.idempotent(gamma)))
            assert len(part) <= 1 and all(c == ONE for c in part.values())


@pytest.mark.parametrize("n,dim", [(1, 19), (2, 127), (3, 469)])
def test_schur_algebra_dimension(n, dim):
    assert len(schur_n(n).xi()) == dim


def test_appendix_a_families_and_instances():
    assert len(FAMILIES) == 25
    assert sum(1 for _ in instances(2)) == 1 + 12 * 2 + 12
    report = appendix_A_suite(2)
    assert report.passed and report.to_json()["mismatches"] == 0
    with pytest.raises(ValueError):
        appendix_A_suite(1)


def test_appendix_a_examples():
    S = schur_n(3)
    T = S.T
    D = LaurentPoly({-1: 1, 1: -1})
    for a in (1, 2, 3):
        lhs = T.bar(v(S, (-a, a, 0)))
        rhs = v(S, (-a, a, 0)) - v(S, (a, 0, -a), D) - v(S, (0, a, -a), D * q(1))
        assert lhs == rhs
    assert T.bar(v(S, (1, 2, -3))) == v(S, (1, 2, -3))


def test_appendix_b_on_n2_logs_the_readings():
    report = appendix_B_suite(2)
    assert report.passed
    notes = report.notes
    assert notes["adopted_readings"] == {"bare q v in a chain": "operator", "t identity line": "moved"}
    assert notes["reading_matches"]["e8"]["literal"] == 0
    for row in report.to_json()["results"]:
        assert set(row) >= {"formula_id", "instance", "status", "lhs", "rhs"}


def test_appendix_c_passes():
    report = appendix_C_suite(generation_samples=(1,))
    assert report.passed
    ids = report.formula_ids()
    assert "C1" in ids and "generation" in " ".join(ids)

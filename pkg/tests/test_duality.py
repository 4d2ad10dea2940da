from fractions import Fraction

import pytest

from qschur.duality import DEFAULT_SAMPLES, MissingRegularOrbit, parse_q, verify_duality
from qschur.g2.generators import schur_n
from qschur.schur import SchurAlgebra
from qschur.weightsets import close_under_W


def test_parse_q():
    assert parse_q("5/3") == Fraction(5, 3)
    with pytest.raises(ValueError):
        parse_q("0")


def test_a1_regular_orbit():
    r = verify_duality(SchurAlgebra(close_under_W("A1", [(-1,)])))
    assert r.passed
    assert [s.centralizer_dim for s in r.samples] == [2] * len(DEFAULT_SAMPLES)


def test_b2_regular_and_singleton():
    r = verify_duality(SchurAlgebra(close_under_W("B2", [(0, 0), (-1, -1)])))
    assert r.passed and r.faithful
    assert {s.centralizer_dim for s in r.samples} == {8}


def test_g2_n2():
    r = verify_duality(schur_n(2), samples=(1, Fraction(5, 3)))
    assert r.passed
    assert {s.centralizer_dim for s in r.samples} == {12}
    assert r.to_json()["passed"] is True


def test_refuses_without_a_regular_orbit():
    with pytest.raises(MissingRegularOrbit):
        verify_duality(schur_n(1))


def test_g2_n1_centralizer_is_the_hecke_image():
    """Without a regular orbit the centralizer still equals the Hecke image, of rank 11."""
    r = verify_duality(schur_n(1), require_regular=False)
    for s in r.samples:
        assert s.equal
        assert (s.hecke_rank, s.centralizer_dim) == (11, 11)
    assert not r.faithful and not r.passed


@pytest.mark.xfail(strict=True, reason="X_1 has no regular orbit, so the Hecke action is not faithful there")
def test_g2_n1_centralizer_has_group_order():
    r = verify_duality(schur_n(1), require_regular=False, samples=(1,))
    assert r.samples[0].centralizer_dim == 12

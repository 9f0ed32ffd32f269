import dataclasses
from fractions import Fraction

import pytest

from abmod.constructors import e_lambda, pham
from abmod.core import BernsteinPoly, bernstein, biggest_simple_pole_sub, dual_bernstein, saturate
from abmod.duality import (
    bidual_map,
    checks,
    discover_delta,
    find_self_duality,
    reflection_check,
    verify_bidual,
    verify_pole_reflection,
    verify_prop_dual,
    verify_simple_pole_hom,
)
from abmod.errors import NotFound
from abmod.linalg import RationalPolynomial, SeriesMatrix

half = Fraction(1, 2)


def from_roots(roots):
    return BernsteinPoly.from_polynomial(RationalPolynomial.from_roots(roots))


def test_bidual_map_is_identity():
    e2 = pytest.e2
    assert bidual_map(e2, 0) == SeriesMatrix.identity(2, e2.trunc)


def test_verify_bidual():
    assert verify_bidual(pytest.e2, 0)
    assert verify_bidual(pytest.jordan_half_2, 1)
    assert verify_bidual(e_lambda(Fraction(-1, 3)), half)


def test_self_duality_rank_one():
    certificate = find_self_duality(e_lambda(half, trunc=12), 1)
    assert certificate.delta == 1
    assert certificate.kappa.shape == (1, 1)
    assert str(certificate.kappa[0, 0]) == "1"
    assert all(certificate.checks.values())

    with pytest.raises(NotFound):
        find_self_duality(e_lambda(1, trunc=12), 1)


def test_self_duality_e2():
    certificate = find_self_duality(pytest.e2, 0)
    assert certificate.delta == 0
    assert certificate.kappa.constant_term().det() != 0


def test_self_duality_direct_sum():
    # every morphism E_1+E_2 -> Hom(E_1+E_2, E_1) vanishes modulo b
    with pytest.raises(NotFound):
        find_self_duality(pytest.e1_e2, 1)
    assert find_self_duality(pytest.e1_e2, 3).delta == 3


def test_self_duality_pham():
    certificate = find_self_duality(pytest.pham_3_3, 2)
    assert certificate.kappa.shape == (4, 4)
    assert certificate.precision == pytest.pham_3_3.trunc


def test_reflection_e2():
    b_poly = bernstein(pytest.e2)
    b_dual = dual_bernstein(pytest.e2)
    assert discover_delta(b_poly, b_dual) == 0
    assert reflection_check(b_poly, b_dual, 0)
    assert not reflection_check(b_poly, b_dual, 1)


def test_reflection_of_roots():
    b_poly = from_roots([Fraction(-1, 3), Fraction(-1)])
    b_dual = from_roots([Fraction(-5, 3), Fraction(-1)])
    assert discover_delta(b_poly, b_dual) == 2
    assert reflection_check(b_poly, b_dual, 2)

    odd = from_roots([-half])
    assert reflection_check(odd, from_roots([-half]), 1)
    assert discover_delta(odd, b_dual) is None


def test_pole_reflection_pham():
    b_poly = bernstein(pytest.pham_3_3)
    b_dual = dual_bernstein(pytest.pham_3_3)
    assert discover_delta(b_poly, b_dual) == 2
    assert verify_pole_reflection(b_poly, b_dual, 2)
    assert not verify_pole_reflection(b_poly, b_dual, 1)


def test_pole_reflection_ignores_symbolic_classes():
    assert verify_pole_reflection(bernstein(pytest.e2), dual_bernstein(pytest.e2), 2)


def test_prop_dual_e2():
    report = verify_prop_dual(pytest.e2, 0)
    assert report
    assert report.delta == 0
    assert report.saturation_map.shape == (2, 2)
    assert report.submodule_map.shape == (2, 2)
    assert report.reflection


@pytest.fixture
def unsettled_morphism_spaces(monkeypatch):
    # every morphism space reports that it was still changing at the last order
    space = checks.morphism_space

    def unsettled(*args, **kwargs):
        return dataclasses.replace(space(*args, **kwargs), precision_caveat=True)

    monkeypatch.setattr(checks, "morphism_space", unsettled)


def test_precision_caveat_is_carried(unsettled_morphism_spaces):
    certificate = find_self_duality(pytest.e2, 0)
    assert certificate.precision_caveat
    assert verify_prop_dual(pytest.e2, 0, certificate=certificate).precision_caveat
    with pytest.raises(NotFound) as excinfo:
        find_self_duality(e_lambda(1, trunc=12), 1)
    assert excinfo.value.precision_caveat


def test_prop_dual_certificate_mismatch():
    certificate = find_self_duality(pytest.e2, 0)
    with pytest.raises(ValueError):
        verify_prop_dual(pytest.e2, 1, certificate=certificate)


def test_simple_pole_hom():
    e2 = pytest.e2
    sat = saturate(e2).module
    sub = biggest_simple_pole_sub(e2).module
    assert verify_simple_pole_hom(sat, sub)
    assert verify_simple_pole_hom(pham([2, 3]), pytest.jordan_half_2)
    assert not verify_simple_pole_hom(e2, sat)

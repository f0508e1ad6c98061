import math
from fractions import Fraction as F

import pytest

from pspin import specfun as sf
from pspin.errors import InvalidArgument
from pspin.oracle import CLOSED_FORMS, compare_series, eval_closed_form, series_value

# reference values from scipy.special, frozen
SCIPY = {
    ("iv", 0.25, 1.5): 1.549913748324419,
    ("jv", 1 / 3, 2.0): 0.44293981814857647,
    ("airy", -2.0): 0.22740742820168564,
    ("airy", 1.5): 0.07174949700810529,
}


def test_bessel_and_airy_against_frozen_scipy():
    assert math.isclose(sf.besseli(0.25, 1.5), SCIPY["iv", 0.25, 1.5], rel_tol=1e-14)
    assert math.isclose(sf.besselj(1 / 3, 2.0), SCIPY["jv", 1 / 3, 2.0], rel_tol=1e-14)
    assert math.isclose(sf.airy_ai(-2.0), SCIPY["airy", -2.0], rel_tol=1e-13)
    assert math.isclose(sf.airy_ai(1.5), SCIPY["airy", 1.5], rel_tol=1e-13)


@pytest.mark.parametrize("x", [-3.0, -0.7, 0.4, 2.5])
def test_airy_two_ways(x):
    assert math.isclose(sf.airy_ai(x), sf.airy_ai_bessel(x), rel_tol=1e-12)


def test_airy_integral_by_quadrature():
    x = -2.2
    assert math.isclose(sf.airy_ai_integral(x), sf.integrate(sf.airy_ai, 0.0, x), rel_tol=1e-13)


@pytest.mark.parametrize("x", [0.05, 0.5, 1.3])
def test_erf_routes(x):
    assert math.isclose(sf.erf_maclaurin(x), math.erf(x), rel_tol=1e-14)
    assert math.isclose(sf.erf_kummer(x), math.erf(x), rel_tol=1e-14)


def test_k_half_elementary():
    z = 0.7
    assert math.isclose(sf.besselk_half(z), math.sqrt(math.pi / (2 * z)) * math.exp(-z), rel_tol=1e-14)


def test_gauss_legendre_exact_on_polynomials():
    xs, ws = sf.gauss_legendre(8)
    assert math.isclose(sum(ws), 2.0)
    assert math.isclose(sum(w * x ** 14 for x, w in zip(xs, ws)), 2 / 15, rel_tol=1e-13)


def test_ranges():
    with pytest.raises(sf.RangeError):
        sf.airy_ai(9.0)
    with pytest.raises(sf.RangeError):
        sf.besselj(0.5, 25.0)
    with pytest.raises(sf.RangeError):
        eval_closed_form("p3-airy", 3)


@pytest.mark.parametrize("cid", sorted(CLOSED_FORMS))
def test_two_routes_agree(cid):
    for i in range(1, 11):
        s = F(i, 5)
        a, b = eval_closed_form(cid, s, 1), eval_closed_form(cid, s, 2)
        assert abs(a - b) <= 1e-13 * abs(a)


def test_p2_value_at_one():
    # K_{1/2}(1/12)/(2 pi sqrt 6) = sqrt(12 pi/2) e^{-1/12}/(2 pi sqrt 6)
    assert math.isclose(eval_closed_form("p2-bessel", 1), 0.25953973756757, rel_tol=1e-12)


LIMITS = {"p2-bessel": 1e-8, "p3-airy": 1e-6, "p4-bessel": 1e-5, "o2n-p3-airy": 1e-5, "kp-erf-k1": 1e-8}


@pytest.mark.parametrize("cid", sorted(LIMITS))
@pytest.mark.parametrize("sigma", ["1/5", "2/5", "3/5", "1"])
def test_series_against_closed_forms(cid, sigma):
    from pspin.oracle import _SERIES_OF
    rep = compare_series(cid, _SERIES_OF[cid][1], sigma, 12)
    assert rep.relative_error <= LIMITS[cid]


def test_error_shrinks_with_truncation():
    errs = [compare_series("p3-airy", 3, 1, g).relative_error for g in (1, 3, 4, 6, 8)]
    assert errs == sorted(errs, reverse=True) and errs[-1] < 1e-10
    # at small sigma the error sits at float noise, so only demand no growth beyond it
    small = [compare_series("p3-airy", 3, "1/5", g).relative_error for g in (4, 8, 12)]
    assert all(b <= a + 1e-15 for a, b in zip(small, small[1:]))


def test_engine_model_lookup():
    rep = compare_series("o2n", 3, "2/5", 12)
    assert rep.model == "o2n-p3-airy"
    assert set(rep.as_dict()) == {"model", "p", "sigma", "g_max", "closed", "series", "rel_error"}
    with pytest.raises(InvalidArgument):
        compare_series("p3-airy", 4, 1, 4)
    with pytest.raises(InvalidArgument):
        compare_series("gue-open", 3, 1, 4)


def test_series_value_includes_leading_term():
    assert series_value("gue-closed", 3, F(1, 5), 1) > 2

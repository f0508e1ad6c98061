from fractions import Fraction as F
from math import factorial

import pytest

from pspin.errors import InvalidArgument, UnsupportedSector
from pspin.gw import gw_closed_form, gw_one_point, gw_table, sinh_power_coefficients

# sympy series of (2N sinh(s/2N))^(2d'-1)/(s d'!(d'-1)!), independent of the package
SYMPY = {(3, 2): F(13, 7680), (5, 3): F(227, 6967296), (7, 4): F(4681, 12740198400),
         (12, 4): F(156383, 2265349965742080000), (6, 1): F(11, 12441600), (2, 0): F(1, 36)}


@pytest.mark.parametrize("dg", sorted(SYMPY))
def test_frozen_values(dg):
    assert gw_one_point(*dg) == SYMPY[dg]


def test_engine_equals_closed_form_everywhere():
    pairs = [(d, g) for d in range(1, 13) for g in range(0, min(4, d) + 1)]
    assert len(pairs) == 54
    for d, g in pairs:
        assert gw_one_point(d, g) == gw_closed_form(d, g), (d, g)


def test_genus_zero_and_one():
    for d in range(1, 10):
        assert gw_one_point(d, 0) == F(1, factorial(d + 1) ** 2)
        assert gw_one_point(d, 1) == F(2 * d - 1, 24 * factorial(d) ** 2)


def test_single_degree_source():
    for d in range(1, 8):
        for g in range(0, min(4, d) + 1):
            _, src = gw_one_point(d, g, track_q=True)
            assert src == d + 1 - g


def test_sinh_power_leading():
    c = sinh_power_coefficients(2, 2)
    assert c[0] == 1 and c[1] == F(3, 24)     # 3 * (1/6) / 4


def test_errors():
    with pytest.raises(UnsupportedSector):
        gw_one_point(2, 3)
    with pytest.raises(InvalidArgument):
        gw_one_point(0, 0)
    with pytest.raises(UnsupportedSector):
        gw_closed_form(6, 5)


def test_table_shape():
    t = gw_table(12, 4)
    assert len(t) == 54 and t[0].as_dict() == {"d": 1, "g": 0, "value": "1/4"}

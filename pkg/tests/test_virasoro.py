from fractions import Fraction as F

import pytest
from hypothesis import HealthCheck, assume, given, settings, strategies as st

from pspin.algebra import KPoly
from pspin.errors import ParseError
from pspin.virasoro import (
    Correlator, Evaluator, apply_dilaton, apply_string, load_golden, parse_golden,
    selection_rule, verify_golden,
)

HEADER = "model\tp\tinsertions\tgenus\tvalue\n"


def test_selection_rule():
    assert selection_rule(3, [(6, 1)]) is None or selection_rule(3, [(6, 1)]) == 3
    assert selection_rule(3, [(9, 0)]) == 4
    assert selection_rule(2, [0, 0, 0]) == 0
    assert selection_rule(2, [F(1, 2)] * 3) == F(1, 2)
    assert selection_rule(2, [2]) is None


def test_golden_table_verifies():
    rows = load_golden()
    assert len(rows) == 13
    rep = verify_golden(rows)
    assert rep.ok, [r.as_dict() for r in rep.failures]
    assert sum(r.value_checked for r in rep.results) == 12


def test_string_and_dilaton_rewrites():
    c = Correlator.make(2, [0, F(1, 2), 1])
    assert all(x.genus == c.genus for x in apply_string(c))
    f, rest = apply_dilaton(c)
    assert f == 2 * c.genus - 2 + 2 and len(rest.insertions) == 2


def test_ghost_insertion_survives_string():
    c = Correlator.make(2, [0, F(1, 2)])
    out = apply_string(c)
    assert [str(x) for x in out] == ["<tau_-1/2>_1/2"]


@st.composite
def kp_correlators(draw):
    # tau_0 tau_1 X with the last index of X solved from the selection rule
    g = F(draw(st.integers(0, 5)), 2)
    rest = draw(st.lists(st.sampled_from([F(n) for n in range(0, 4)]), max_size=2))
    s = len(rest) + 3
    last = (3 * (2 * g - 2 + s) - s) / 2 - 1 - sum(rest)
    assume(last >= 0)
    return Correlator.make(2, [0, 1, last] + rest)


@settings(max_examples=200, suppress_health_check=[HealthCheck.filter_too_much])
@given(kp_correlators())
def test_string_and_dilaton_commute(c):
    assert c.valid
    a = Evaluator(order="string").try_evaluate(c)
    b = Evaluator(order="dilaton").try_evaluate(c)
    assume(a is not None and b is not None)
    assert a == b


@given(st.lists(st.sampled_from([F(n, 2) for n in range(-1, 10)]), min_size=1, max_size=4))
def test_selection_genus_is_half_integer(ins):
    g = selection_rule(2, ins)
    if g is not None:
        assert (2 * g).denominator == 1 and g >= 0


def test_corrupted_value_is_caught():
    text = HEADER + "kp\t2\t1:\t1\t1/24 + 1/3*k^2\n"
    rep = verify_golden(parse_golden(text))
    assert not rep.ok and rep.failures[0].row == 2


def test_parse_errors_name_the_row():
    with pytest.raises(ParseError, match="row 2"):
        parse_golden(HEADER + "kp\t2\t1\t1\t1\n")
    with pytest.raises(ParseError, match="row 3"):
        parse_golden(HEADER + "kp\t2\t1:\t1\t1\nkp\t2\t1:\t1\n")
    with pytest.raises(ParseError):
        parse_golden(HEADER + "gue-open\t3\t1:\t1\t1\n")


def test_empty_value_is_rejected():
    with pytest.raises(ParseError):
        parse_golden(HEADER + "kp\t2\t1:\t1\t \n")


def test_w_values_reachable():
    ev = Evaluator()
    assert ev.evaluate(Correlator.make(2, [F(1, 2), 0])) == KPoly.k()

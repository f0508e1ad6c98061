from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from pspin.algebra import KPoly
from pspin.errors import InvalidArgument, MalformedSeries, UseKpRoute
from pspin.series import (
    MODELS, assemble_series, boundary_coeff, extract_intersections, floor_genus, half_integer,
    model_atoms, potential_coeff, solve_selection,
)


def test_half_integer_and_floor():
    assert half_integer("7/2") == F(7, 2)
    assert floor_genus(F(5, 2)) == 2
    with pytest.raises(InvalidArgument):
        half_integer("1/3")


def test_atom_coefficients():
    # p = 3: C(4,3)/(4*4) = 1/4
    assert potential_coeff(3, 3) == F(1, 4)
    assert potential_coeff(4, 5) == F(1, 80)
    assert potential_coeff(3, 5) == 0
    assert boundary_coeff(3) == KPoly({1: F(1, 12)})
    with pytest.raises(InvalidArgument):
        potential_coeff(3, 4)


def test_model_atoms_kinds():
    kinds = {a.kind for a in model_atoms(3, "o2n-open", 5)}
    assert kinds == {"potential", "boundary", "linear"}
    assert all(a.kind == "potential" for a in model_atoms(3, "gue-closed", 5))
    lin, = [a for a in model_atoms(5, "sp", 3) if a.kind == "linear"]
    assert lin.max_multiplicity == 1 and lin.coefficient == KPoly.const(F(1, 2))


@pytest.mark.parametrize("p, g, want", [
    (3, 1, (1, 0)), (3, 4, (9, 0)), (3, "3/2", (2, 1)), (2, 3, (7, None)), (2, "5/2", (F(11, 2), None)),
    (5, 2, (3, 2)),
])
def test_solve_selection(p, g, want):
    assert solve_selection(p, g) == want


@given(st.integers(2, 9), st.integers(2, 16))
def test_selection_rule_identity(p, two_g):
    g = F(two_g, 2)
    n, j = solve_selection(p, g)
    assert (p + 1) * (2 * g - 1) == p * n + (j or 0) + 1
    if j is not None:
        assert 0 <= j < p


def test_closed_p3_values():
    recs = extract_intersections(assemble_series(3, "gue-closed", 4))
    assert [str(r.value) for r in recs] == ["1/12", "0", "1/31104", "1/746496"]
    assert recs[-1].label() == "<tau_{9,0}>_{g=4}"


def test_series_term_structure():
    s = assemble_series(4, "gue-closed", 2)
    t = s.term_for_genus(2)
    assert t.sigma_exponent == 3 * F(5, 4)
    assert t.crosscap == KPoly()
    assert s.exponents() == sorted(s.terms)
    assert s.scale == 1


def test_open_p3_three_halves():
    recs = {r.g: r.value for r in extract_intersections(assemble_series(3, "gue-open", 2))}
    assert str(recs[F(3, 2)]) == "1/8*k + 1/12*k^3"


def test_p2_open_needs_the_gaussian_route():
    with pytest.raises(UseKpRoute):
        assemble_series(2, "gue-open", 2)


def test_argument_validation():
    with pytest.raises(InvalidArgument):
        assemble_series(1, "gue-closed", 2)
    with pytest.raises(InvalidArgument):
        assemble_series(3, "nope", 2)


def test_series_merge_rejects_mismatched_p():
    with pytest.raises(InvalidArgument):
        assemble_series(3, "gue-closed", 2) + assemble_series(4, "gue-closed", 2)


def test_series_merge_adds_coefficients():
    a = assemble_series(3, "gue-closed", 2)
    b = a + a
    assert b.terms[a.exponents()[0]].coefficient == a.terms[a.exponents()[0]].coefficient * 2


def test_malformed_exponent_rejected():
    s = assemble_series(3, "gue-closed", 1)
    e = s.exponents()[0]
    s.terms[e + F(1, 7)] = s.terms.pop(e)
    with pytest.raises(MalformedSeries):
        extract_intersections(s)


def test_models_table():
    assert set(MODELS) == {"gue-closed", "gue-open", "o2n", "o2n-open", "sp", "o2n1"}
    assert MODELS["o2n"].scale == F(1, 2)

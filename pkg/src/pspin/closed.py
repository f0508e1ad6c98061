"""
Closed-surface (GUE) p-spin numbers and their continuations to p = -1, -2.

The exact tables come from the series engine; the helpers below are the
independent closed forms used to cross-check them.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from .algebra import bernoulli_paper, bernoulli_signed, gamma_ratio
from .errors import InvalidArgument
from .series import assemble_series, extract_intersections, half_integer, solve_selection

__all__ = [
    "closed_one_point", "closed_form_p2", "closed_form_p3", "euler_orientable",
    "gross_witten_cm", "GROSS_WITTEN_PRINTED", "UNITARY_CM_N", "golden_pexpression",
]


def closed_one_point(p: int, g_max) -> list:
    """Integer-genus records of the GUE one-point function up to ``g_max``."""
    g_max = half_integer(g_max)
    if g_max < 1:
        raise InvalidArgument("g_max must be at least 1")
    recs = extract_intersections(assemble_series(p, "gue-closed", g_max))
    return [r for r in recs if r.g.denominator == 1]


def closed_form_p2(g: int) -> Fraction:
    if g < 1:
        raise InvalidArgument("g >= 1 required")
    return Fraction(1, 24 ** g * factorial(g))


def closed_form_p3(g: int) -> Fraction:
    """1/(12^g g!) * Gamma((g+1)/3)/Gamma((2-j)/3); the j = 2 sectors vanish."""
    if g < 1:
        raise InvalidArgument("g >= 1 required")
    _, j = solve_selection(3, g)
    if j == 2:
        return Fraction(0)
    return Fraction(1, 12 ** g * factorial(g)) * gamma_ratio(Fraction(g + 1, 3), Fraction(2 - j, 3))


def euler_orientable(g: int, convention: str = "zeta") -> Fraction:
    """chi(M_{g,1}): ``zeta`` gives zeta(1-2g), ``paper`` the all-positive -B_g/(2g)."""
    if g < 1:
        raise InvalidArgument("g >= 1 required")
    if convention == "zeta":
        return -bernoulli_signed(2 * g) / (2 * g)
    if convention == "paper":
        return -bernoulli_paper(g) / (2 * g)
    raise InvalidArgument("convention must be 'zeta' or 'paper'")


def gross_witten_cm(m: int) -> Fraction:
    """(2m-1)!/(m! prod_{l<m} (-l^2)), taken literally."""
    if m < 1:
        raise InvalidArgument("m >= 1 required")
    den = Fraction(factorial(m))
    for l in range(1, m):
        den *= -l * l
    return factorial(2 * m - 1) / den


# bracket coefficients of (c/t)^m in the printed strong-coupling expansion
GROSS_WITTEN_PRINTED = {
    1: Fraction(-1), 2: Fraction(1), 3: Fraction(-1), 4: Fraction(5, 6), 5: Fraction(-7, 12),
}

# finite-N unitary coefficients, reference data only
UNITARY_CM_N = {
    1: "1",
    2: "-1/(N^2-1)",
    3: "4/((N^2-1)(N^2-4))",
    4: "-30/((N^2-1)(N^2-4)(N^2-9))",
}


def _ratio_to_spin_sector(p: int, g: Fraction, top: Fraction) -> Fraction:
    tot = int((p + 1) * (2 * g - 1) - 1)
    return gamma_ratio(top, 1 - Fraction(1 + tot % p, p))


def golden_pexpression(p: int, g: int) -> Fraction:
    """
    The printed general-p closed forms for g = 1..4, instantiated at integer p.

    A vanishing rational prefactor wins over a Gamma pole.
    """
    P = Fraction(p)
    if g == 1:
        return (P - 1) / 24
    if g == 2:
        pre = (P - 1) * (P - 3) * (1 + 2 * P) / (P * 120 * 16 * 3)
    elif g == 3:
        pre = ((P - 5) * (P - 1) * (1 + 2 * P) * (8 * P ** 2 - 13 * P - 13)
               / (P ** 2 * 5040 * 64 * 9))
    elif g == 4:
        pre = ((P - 1) * (P - 7) * (1 + 2 * P)
               * (72 * P ** 4 - 298 * P ** 3 - 17 * P ** 2 + 562 * P + 281)
               / (P ** 3 * 362880 * 256 * 15))
    else:
        raise InvalidArgument("closed forms are printed for g = 1..4 only")
    if pre == 0:
        return pre
    g = Fraction(g)
    return pre * _ratio_to_spin_sector(p, g, 1 - (2 * g - 1) / P)

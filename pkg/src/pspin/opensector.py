r"""
Open intersection numbers.

For p = 2 (Kontsevich-Penner) the one-point function is

    U = 1/(2 s) e^{-s^2/12} \oint du/(2 pi i) e^{-u^2/4} ((u + s)/(u - s))^k

with s = sigma^(3/2). Expanding the k-log in powers of s/u, even powers of
1/u are Gaussian inverse moments (a single sqrt(pi) which the overall
normalization cancels) and odd powers are residues at u = 0. For p >= 3 the
series engine does the work.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from .algebra import KPoly, gamma_ratio
from .errors import InvalidArgument, MalformedSeries, UseKpRoute
from .series import (
    IntersectionRecord, assemble_series, extract_intersections, floor_genus,
    half_integer, solve_selection,
)

__all__ = [
    "gaussian_inverse_even_moment", "odd_k_tower", "kp_one_point", "open_p_one_point",
    "open_o2n_one_point", "golden_open_p", "golden_open_o2n", "appendix_p_to_2_limit",
]


def _double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def _squarefree_split(q: Fraction):
    """q = c^2 * r with r a squarefree rational 'radicand' (numerator and denominator)."""
    def split(n):
        c, f = 1, 2
        while f * f <= n:
            while n % (f * f) == 0:
                n //= f * f
                c *= f
            f += 1
        return c, n
    cn, rn = split(q.numerator)
    cd, rd = split(q.denominator)
    # r = rn/rd; move rd into the numerator: rn/rd = rn*rd/rd^2
    return Fraction(cn, cd * rd), Fraction(rn * rd)


def gaussian_inverse_even_moment(n: int, a) -> tuple:
    r"""
    \int e^{-a u^2} u^{-2n} du = (-1)^n 2^n sqrt(pi) a^((2n-1)/2) / (2n-1)!!

    Returned as ``(coefficient, radicand)`` meaning coefficient * sqrt(pi * radicand)
    with an integer squarefree radicand.

        >>> gaussian_inverse_even_moment(1, Fraction(1, 4))
        (Fraction(-1, 1), Fraction(1, 1))
        >>> gaussian_inverse_even_moment(2, 1)
        (Fraction(4, 3), Fraction(1, 1))
    """
    a = Fraction(a)
    if n < 0 or a <= 0:
        raise InvalidArgument("need n >= 0 and a > 0")
    # a^((2n-1)/2) = a^n / sqrt(a)
    c, r = _squarefree_split(1 / a)
    coeff = Fraction((-1) ** n * 2 ** n, _double_factorial(2 * n - 1)) * a ** n * c
    return coeff, r


def _log_atoms(order: int) -> list:
    # k * log((1 + w)/(1 - w)) = k * sum 2 w^m / m over odd m
    return [Fraction(2, m) if m % 2 else Fraction(0) for m in range(order + 1)]


def _exp_k_log(order: int) -> list:
    """Coefficients C_m(k) of w^m in ((1 + w)/(1 - w))^k, via m C_m = k sum i l_i C_{m-i}."""
    l = _log_atoms(order)
    C = [KPoly.const(1)]
    k = KPoly.k()
    for m in range(1, order + 1):
        acc = KPoly()
        for i in range(1, m + 1):
            if l[i]:
                acc = acc + C[m - i] * (i * l[i])
        C.append(acc * k / m)
    return C


def odd_k_tower(g_max) -> list:
    """
    Coefficients of t^n (t = sigma^3) in e^{-t/12} sum (-t/4)^n/(n!(2n+1)),
    the k-linear sector of the Kontsevich-Penner one-point function.

        >>> [str(c) for c in odd_k_tower(2)[:2]]
        ['1', '-1/6']
    """
    g_max = half_integer(g_max)
    order = max(int(g_max), 0) + 1
    a = [Fraction(-1, 12) ** n / factorial(n) for n in range(order)]
    b = [Fraction(-1, 4) ** n / (factorial(n) * (2 * n + 1)) for n in range(order)]
    return [sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(order)]


def _kp_sector(g: Fraction) -> KPoly:
    """Raw coefficient of s^(2g-1) in U, with the sqrt(pi) stripped for integer g."""
    two_g = int(2 * g)
    C = _exp_k_log(two_g)
    total = KPoly()
    for m in range(two_g % 2, two_g + 1, 2):
        e = (two_g - m) // 2                                    # from e^{-s^2/12}
        damp = Fraction(-1, 12) ** e / factorial(e)
        if m % 2:
            nn = (m - 1) // 2
            integral = Fraction(-1, 4) ** nn / factorial(nn)    # residue at u = 0
        else:
            coeff, rad = gaussian_inverse_even_moment(m // 2, Fraction(1, 4))
            if rad != 1:
                raise MalformedSeries("sqrt(pi) bookkeeping failed in the Gaussian route")
            # (1/2pi) coeff sqrt(pi), times the 2 sqrt(pi) normalization
            integral = coeff
        total = total + C[m] * (damp * integral / 2)
    return total


def kp_one_point(g_max) -> list:
    """
    Records of the p = 2 Kontsevich-Penner model from g = 1/2 up to g_max.

    The g = 1/2 record is the boundary value <tau_{-1/2}> = k.
    """
    g_max = half_integer(g_max)
    if g_max < Fraction(1, 2):
        raise InvalidArgument("g_max must be at least 1/2")
    out = []
    g = Fraction(1, 2)
    while g <= g_max:
        raw = _kp_sector(g)
        value = raw * Fraction(-1, 2) ** floor_genus(g)
        n, j = solve_selection(2, g)
        out.append(IntersectionRecord("kp", 2, g, n, j, value))
        g += Fraction(1, 2)
    return out


def open_p_one_point(p: int, g_max) -> list:
    if p == 2:
        raise UseKpRoute("use kp_one_point for p = 2")
    if p < 3:
        raise InvalidArgument("p >= 3 required")
    return extract_intersections(assemble_series(p, "gue-open", g_max))


def open_o2n_one_point(p: int, g_max) -> list:
    if p == 2:
        raise UseKpRoute("p = 2 open O(2N) sectors are not covered by the p-spin engine")
    if p < 3:
        raise InvalidArgument("p >= 3 required")
    return extract_intersections(assemble_series(p, "o2n-open", g_max))


def _spin_ratio(p: int, g: Fraction, top: Fraction) -> Fraction:
    _, j = solve_selection(p, g)
    if j is None:
        j = int((p + 1) * (2 * g - 1) - 1) % p
    return gamma_ratio(top, 1 - Fraction(1 + j, p))


def _poly(*coeffs) -> KPoly:
    return KPoly({i: c for i, c in enumerate(coeffs)})


def golden_open_p(p: int, g) -> KPoly:
    """The printed open p-spin one-point formulas (g = 1, 3/2, 2, 5/2, 3)."""
    g = half_integer(g)
    P = Fraction(p)
    if g == 1:
        return _poly((P - 1) / 24, 0, Fraction(1, 2))
    if g == Fraction(3, 2):
        body = _poly(0, P / 24, 0, Fraction(1, 12))
    elif g == 2:
        body = _poly((P - 1) * (P - 3) * (1 + 2 * P) / 40, 0, -(1 + 3 * P), 0, -2) / (144 * P)
    elif g == Fraction(5, 2):
        body = _poly(0, (18 - 25 * P + 30 * P ** 2 - 5 * P ** 3) / 5760, 0, (P - 1) / 144)
    elif g == 3:
        body = _poly((P - 1) * (P - 5) * (1 + 2 * P) * (8 * P ** 2 - 13 * P - 13) / 2903040, 0,
                     (-10 * P ** 3 + 85 * P ** 2 + 90 * P + 19) / 57600, 0,
                     (5 * P + 3) / 2880, 0, Fraction(1, 3600)) / P ** 2
    else:
        raise InvalidArgument("open formulas are printed for g in {1, 3/2, 2, 5/2, 3}")
    top = 1 - (2 * g - 1) / P
    if body.is_zero():
        return body
    return body * _spin_ratio(p, g, top)


def golden_open_o2n(p: int, g) -> KPoly:
    """The printed open O(2N) one-point formulas (g = 1, 3/2, 2)."""
    g = half_integer(g)
    P = Fraction(p)
    if g == 1:
        return _poly((P - 1) / 24, Fraction(1, 2), Fraction(1, 2))
    if g == Fraction(3, 2):
        return _poly((P - 1) / 48, P / 24, Fraction(1, 8), Fraction(1, 12))
    if g == 2:
        body = _poly((P - 1) * (P - 3) * (1 + 2 * P) / 40, 2, -(1 + 3 * P), 4, -2) / (144 * P)
        return body * _spin_ratio(p, g, 1 - 3 / P)
    raise InvalidArgument("open O(2N) formulas are printed for g in {1, 3/2, 2}")


def appendix_p_to_2_limit() -> KPoly:
    """(pk + 2k^3)/24 * Gamma(1 - 2/p)/Gamma(1 - (1+j)/p) at p = 2, j = 1."""
    # both Gamma arguments reach 0 together, so the ratio tends to 1
    return golden_open_p(2, Fraction(3, 2))

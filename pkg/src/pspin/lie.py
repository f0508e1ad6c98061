"""
O(2N), O(2N+1) and Sp(N) one-point functions.

The (1 - sigma/4u) factor of the O(2N) integrand is the linear-boundary
atom. Integer-genus sectors reproduce half the GUE series at sigma/2; the
half-integer ones are the non-orientable (crosscap) numbers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .algebra import bernoulli_paper, gamma_ratio
from .errors import InvalidArgument
from .series import (
    PuiseuxSeries, assemble_series, extract_intersections,
)

__all__ = [
    "SplitSeries", "O2nResult", "o2n_one_point", "uuno_coefficients", "uuno_from_engine",
    "euler_nonorientable", "euler_nonorientable_bf", "euler_nonorientable_s",
    "euler_orientable_chi", "sp_one_point", "o2n1_one_point", "LieComparison",
]


@dataclass
class SplitSeries:
    orientable: PuiseuxSeries
    nonorientable: PuiseuxSeries


@dataclass
class O2nResult:
    split: SplitSeries
    records: list
    extrapolated: bool      # even p sits outside the odd-p tuning


def _split(series: PuiseuxSeries) -> SplitSeries:
    orient = PuiseuxSeries(series.p, series.model, series.g_max)
    non = PuiseuxSeries(series.p, series.model, series.g_max)
    for e, t in series.terms.items():
        (orient if t.genus.denominator == 1 else non).terms[e] = t
    return SplitSeries(orient, non)


def o2n_one_point(p: int, g_max) -> O2nResult:
    series = assemble_series(p, "o2n", g_max)
    return O2nResult(_split(series), extract_intersections(series), p % 2 == 0)


def uuno_coefficients(p: int, order: int):
    """
    Printed y^order coefficient of the non-orientable series, returned as
    ``(rational, gamma_arg)`` meaning rational * Gamma(gamma_arg).
    """
    P = Fraction(p)
    if order == 2:
        c = (P - 1) / 24
    elif order == 4:
        c = (P - 1) * (P ** 2 - 5 * P + 1) / 720
    elif order == 6:
        c = (P - 1) * (P - 3) * (4 * P ** 3 - 23 * P ** 2 - 2 * P - 6) / (5040 * 9)
    elif order == 8:
        c = ((P - 1) * (9 * P ** 6 - 121 * P ** 5 + 435 * P ** 4 - 317 * P ** 3
                        - 167 * P ** 2 - 471 * P - 43) / (5040 * 27 * 10))
    else:
        raise InvalidArgument("order must be one of 2, 4, 6, 8")
    return c, 1 - Fraction(order, p)


def uuno_from_engine(p: int, order: int) -> Fraction:
    """
    Engine value of the y^order coefficient, expressed relative to
    Gamma(1 - order/p) so it compares directly with :func:`uuno_coefficients`.

    Sectors whose printed Gamma sits on a pole are returned relative to the
    limiting reference; the printed prefactor vanishes there.
    """
    if order not in (2, 4, 6, 8):
        raise InvalidArgument("order must be one of 2, 4, 6, 8")
    g = Fraction(order + 1, 2)
    series = assemble_series(p, "o2n", g)
    term = series.term_for_genus(g)
    t_prime = -term.crosscap          # (1 - s/2 x^(-1/p)) orientation
    gh = order // 2
    c = (-1) ** gh * 2 ** order * t_prime
    target = 1 - Fraction(order, p)
    if target.denominator == 1 and target <= 0:
        return c
    return c * gamma_ratio(term.gamma_arg, target)


def euler_nonorientable(g_hat: int) -> Fraction:
    """-(1/(2g))(2^(2g-2) - 1/2) B_g, all-positive Bernoulli convention."""
    if g_hat < 1:
        raise InvalidArgument("g_hat >= 1 required")
    return -(Fraction(2) ** (2 * g_hat - 2) - Fraction(1, 2)) * bernoulli_paper(g_hat) / (2 * g_hat)


def _exp_neg_series(n: int, sign: int) -> list:
    # coefficients of 1 - e^{-y} (sign=-1) or 1 + e^{-y} (sign=+1) up to y^n
    out = [Fraction(1 + sign)]
    for i in range(1, n + 1):
        out.append(sign * Fraction((-1) ** i, factorial(i)))
    return out


def _invert(a: list, n: int) -> list:
    b = [1 / a[0]]
    for i in range(1, n + 1):
        s = sum(a[j] * b[i - j] for j in range(1, min(i, len(a) - 1) + 1))
        b.append(-s / a[0])
    return b


def euler_nonorientable_bf(g_hat: int) -> Fraction:
    """
    Second route: 1/(1 - e^{-y}) - 1/(1 + e^{-y}) expanded by exact series
    inversion. The y^(2g-1) coefficient times (2g-1)!/4 with the alternating
    sign absorbed gives the non-orientable Euler characteristic.
    """
    if g_hat < 1:
        raise InvalidArgument("g_hat >= 1 required")
    n = 2 * g_hat
    # 1/(1 - e^{-y}) = (1/y) * 1/((1 - e^{-y})/y)
    boson_den = _exp_neg_series(n + 1, -1)[1:]          # (1 - e^{-y})/y
    boson = _invert(boson_den, n + 1)                   # coefficient i <-> y^(i-1)
    fermion = _invert(_exp_neg_series(n, 1), n)
    coeff = boson[n] - fermion[n - 1]                   # y^(2g-1)
    return (-1) ** (g_hat - 1) * coeff * factorial(n - 1) / 4


def euler_nonorientable_s(g: int, s: int) -> Fraction:
    """(-1)^s (1/2) (2g+s-2)! (2^(2g-1) - 1) B_g / ((2g)! s!)."""
    if g < 1 or s < 1:
        raise InvalidArgument("g >= 1 and s >= 1 required")
    return (Fraction((-1) ** s * factorial(2 * g + s - 2) * (2 ** (2 * g - 1) - 1),
                     2 * factorial(2 * g) * factorial(s)) * bernoulli_paper(g))


def euler_orientable_chi(g: int) -> Fraction:
    """Orientable line as rendered next to the non-orientable one: -(1/2)(-1)^g B_g/(2g)."""
    if g < 1:
        raise InvalidArgument("g >= 1 required")
    return -Fraction((-1) ** g, 2) * bernoulli_paper(g) / (2 * g)


@dataclass
class LieComparison:
    model: str
    p: int
    records: list
    reference: list                          # o2n records at the same (p, g)
    mismatches: list = field(default_factory=list)

    @property
    def agrees(self) -> bool:
        return not self.mismatches


def _normalized(p, model, g_max):
    # the (1 + sigma/2u) integrand in sigma counts every sector twice
    recs = extract_intersections(assemble_series(p, model, g_max))
    return [r.with_value(r.value / 2) for r in recs]


def _compare(model, p, g_max):
    recs = _normalized(p, model, g_max)
    ref = o2n_one_point(p, g_max).records
    by_g = {r.g: r for r in ref}
    bad = [(r.g, str(r.value), str(by_g[r.g].value) if r.g in by_g else None)
           for r in recs if r.g not in by_g or by_g[r.g].value != r.value]
    return LieComparison(model, p, recs, ref, bad)


def sp_one_point(p: int, g_max) -> LieComparison:
    return _compare("sp", p, g_max)


def o2n1_one_point(p: int, g_max) -> LieComparison:
    return _compare("o2n1", p, g_max)

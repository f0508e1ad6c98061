"""
Stationary one-point Gromov-Witten invariants of CP^1.

The degree-d residue contributes (1/(d!(d-1)!)) (1/sigma)(2N sinh(sigma/2N))^(2d-1).
Collecting sigma^(2d) N^(-2g) and dividing by (d + 1 - g) gives <tau_{2d}>_g.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import InvalidArgument, UnsupportedSector

__all__ = ["GwRecord", "sinh_power_coefficients", "gw_one_point", "gw_closed_form", "gw_table"]


@dataclass(frozen=True)
class GwRecord:
    d: int
    g: int
    value: Fraction

    def as_dict(self) -> dict:
        v = self.value
        return {"d": self.d, "g": self.g,
                "value": str(v.numerator) if v.denominator == 1 else "%d/%d" % (v.numerator, v.denominator)}


@lru_cache(maxsize=None)
def _sinhc(order: int) -> tuple:
    # sinh(x)/x = sum x^(2i)/(2i+1)!
    return tuple(Fraction(1, factorial(2 * i + 1)) for i in range(order + 1))


def _power(series: tuple, n: int, order: int) -> list:
    out = [Fraction(1)] + [Fraction(0)] * order
    for _ in range(n):
        out = [sum(out[i] * series[t - i] for i in range(t + 1)) for t in range(order + 1)]
    return out


def sinh_power_coefficients(d: int, g_order: int) -> list:
    """
    Coefficients of N^(-2t) sigma^(2d-2+2t), t = 0..g_order, in
    (1/sigma)(2N sinh(sigma/2N))^(2d-1).
    """
    if d < 1 or g_order < 0:
        raise InvalidArgument("need d >= 1 and g_order >= 0")
    pw = _power(_sinhc(g_order), 2 * d - 1, g_order)
    return [c / 4 ** t for t, c in enumerate(pw)]


def gw_one_point(d: int, g: int, track_q: bool = False):
    """
    <tau_{2d}(omega)>_g. With ``track_q`` the source degree is returned as
    well, as a check that one output coefficient never mixes degrees.
    """
    if d < 1 or g < 0:
        raise InvalidArgument("need d >= 1 and g >= 0")
    if g > d:
        raise UnsupportedSector("g > d: the divisor d + 1 - g leaves the printed range")
    # sigma^(2d) N^(-2g) comes from degree d' with 2d' - 2 + 2g = 2d
    src = d + 1 - g
    coeff = sinh_power_coefficients(src, g)[g] / (factorial(src) * factorial(src - 1))
    value = coeff / (d + 1 - g)
    if track_q:
        return value, src
    return value


def gw_closed_form(d: int, g: int) -> Fraction:
    if d < 1:
        raise InvalidArgument("d >= 1 required")
    f2 = Fraction(factorial(d)) ** 2
    if g == 0:
        return Fraction(1, factorial(d + 1) ** 2)
    if g == 1:
        return (2 * d - 1) / (24 * f2)
    if g == 2:
        return d ** 2 * (2 * d - 3) * (10 * d - 17) / (2 ** 7 * 3 ** 2 * 5 * f2)
    if g == 3:
        return (d ** 2 * (d - 1) ** 2 * (2 * d - 5) * (140 * d ** 2 - 784 * d + 1101)
                / (2 ** 10 * 3 ** 4 * 5 * 7 * f2))
    if g == 4:
        return (d ** 2 * (d - 1) ** 2 * (d - 2) ** 2 * (2 * d - 7) * (10 * d - 39)
                * (140 * d ** 2 - 1092 * d + 2143) / (f2 * 2 ** 15 * 3 ** 5 * 5 ** 2 * 7))
    raise UnsupportedSector("closed forms exist for g <= 4 only")


def gw_table(d_max: int, g_max: int) -> list:
    return [GwRecord(d, g, gw_one_point(d, g))
            for d in range(1, d_max + 1) for g in range(0, min(g_max, d) + 1)]

"""
Small-argument special functions from their defining power series.

Each series is summed until two consecutive terms fall below ``TOL``
relative to the partial sum. On the validated range the term ratio is far
below 1/2 by then, so the tail is bounded by twice the last term.
"""
from __future__ import annotations

from math import cos, exp, gamma, pi, sin, sqrt

__all__ = [
    "besseli", "besselj", "besselk_half", "airy_ai", "airy_ai_integral",
    "airy_ai_bessel", "erf_maclaurin", "erf_kummer", "gauss_legendre", "integrate",
    "RangeError", "TOL",
]

TOL = 1e-17
MAX_TERMS = 400


class RangeError(ValueError):
    pass


def _sum(terms):
    s = 0.0
    small = 0
    for i, t in enumerate(terms):
        s += t
        small = small + 1 if abs(t) <= TOL * abs(s) else 0
        if small >= 2:
            return s
        if i > MAX_TERMS:
            raise RangeError("series did not converge in %d terms" % MAX_TERMS)
    return s


def _bessel_terms(nu, z, sign):
    h = z / 2
    m = 0
    t = h ** nu / gamma(nu + 1)
    while True:
        yield t
        m += 1
        t *= sign * h * h / (m * (m + nu))


def besseli(nu: float, z: float) -> float:
    if z <= 0:
        raise RangeError("z > 0 required")
    return _sum(_bessel_terms(nu, z, 1.0))


def besselj(nu: float, z: float) -> float:
    if z <= 0:
        raise RangeError("z > 0 required")
    if z > 20:
        raise RangeError("power series only trusted for z <= 20")
    return _sum(_bessel_terms(nu, z, -1.0))


def besselk_half(z: float) -> float:
    """K_{1/2} through (pi/2)(I_{-1/2} - I_{1/2})/sin(pi/2)."""
    return (pi / 2) * (besseli(-0.5, z) - besseli(0.5, z)) / sin(pi / 2)


_AI0 = 1 / (3 ** (2 / 3) * gamma(2 / 3))
_AIP0 = 1 / (3 ** (1 / 3) * gamma(1 / 3))


def _airy_fg(x, integrate_once=False):
    # f = sum 3^k (1/3)_k x^(3k)/(3k)!, g = sum 3^k (2/3)_k x^(3k+1)/(3k+1)!
    def fterms():
        t = 1.0
        k = 0
        while True:
            yield t * (x / (3 * k + 1) if integrate_once else 1.0)
            t *= x ** 3 / ((3 * k + 1) * (3 * k + 2) * (3 * k + 3)) * (3 * k + 1)
            k += 1

    def gterms():
        t = x
        k = 0
        while True:
            yield t * (x / (3 * k + 2) if integrate_once else 1.0)
            t *= x ** 3 / ((3 * k + 2) * (3 * k + 3) * (3 * k + 4)) * (3 * k + 2)
            k += 1
    return _sum(fterms()), _sum(gterms())


def airy_ai(x: float) -> float:
    """Maclaurin series Ai(x) = Ai(0) f(x) + Ai'(0) g(x)."""
    if abs(x) > 8:
        raise RangeError("|x| <= 8 required")
    f, g = _airy_fg(x)
    return _AI0 * f - _AIP0 * g


def airy_ai_integral(x: float) -> float:
    """int_0^x Ai(t) dt, integrating the Maclaurin series term by term."""
    if abs(x) > 8:
        raise RangeError("|x| <= 8 required")
    f, g = _airy_fg(x, integrate_once=True)
    return _AI0 * f - _AIP0 * g


def airy_ai_bessel(x: float) -> float:
    """Ai through Bessel functions: J_{+-1/3} for x < 0, I_{+-1/3} for x > 0."""
    if x == 0:
        return _AI0
    z = abs(x)
    zeta = 2 / 3 * z ** 1.5
    if x < 0:
        return sqrt(z) / 3 * (besselj(1 / 3, zeta) + besselj(-1 / 3, zeta))
    return sqrt(z) / 3 * (besseli(-1 / 3, zeta) - besseli(1 / 3, zeta))


def erf_maclaurin(x: float) -> float:
    def terms():
        n = 0
        t = x
        while True:
            yield t / (2 * n + 1)
            n += 1
            t *= -x * x / n
    return 2 / sqrt(pi) * _sum(terms())


def erf_kummer(x: float) -> float:
    """(2x/sqrt(pi)) e^{-x^2} sum (2x^2)^n/(2n+1)!!."""
    def terms():
        n = 0
        t = 1.0
        while True:
            yield t
            n += 1
            t *= 2 * x * x / (2 * n + 1)
    return 2 * x / sqrt(pi) * exp(-x * x) * _sum(terms())


def gauss_legendre(n: int):
    """Nodes and weights on [-1, 1] by Newton iteration on P_n."""
    nodes, weights = [], []
    for i in range(1, n + 1):
        x = cos(pi * (i - 0.25) / (n + 0.5))
        for _ in range(100):
            p0, p1 = 1.0, x
            for k in range(2, n + 1):
                p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
            dp = n * (x * p1 - p0) / (x * x - 1)
            dx = p1 / dp
            x -= dx
            if abs(dx) < 1e-16:
                break
        nodes.append(x)
        weights.append(2 / ((1 - x * x) * dp * dp))
    return nodes, weights


def integrate(f, a: float, b: float, n: int = 30) -> float:
    xs, ws = gauss_legendre(n)
    h, m = (b - a) / 2, (b + a) / 2
    return h * sum(w * f(m + h * x) for x, w in zip(xs, ws))

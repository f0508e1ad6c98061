"""
Floating-point oracle: closed forms of the one-point functions, each by two
independent routes, and comparison with the truncated exact series.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import cos, exp, gamma, pi, sin, sqrt

from . import specfun as sf
from .algebra import as_rational, format_rational
from .errors import InvalidArgument
from .series import MODELS, assemble_series

__all__ = [
    "CLOSED_FORMS", "eval_closed_form", "series_value", "compare_series",
    "ComparisonReport", "SIGMA_MAX",
]

SIGMA_MAX = 2


def _p2(s, route):
    if route == 1:
        return sf.besselk_half(s ** 3 / 12) / (2 * pi * sqrt(6))
    return sqrt(pi / s) * exp(-s ** 3 / 12) / (2 * pi * s)


def _gue3_bessel(s):
    z = s ** 4 / (12 * sqrt(3))
    return (sf.besselj(1 / 3, z) + sf.besselj(-1 / 3, z)) / (6 * sqrt(3))


def _gue3_airy(s):
    return sf.airy_ai(-s ** (8 / 3) / (4 * 3 ** (1 / 3))) / (3 ** (1 / 3) * s ** (4 / 3))


def _p3(s, route):
    return _gue3_bessel(s) if route == 1 else _gue3_airy(s)


def _p4(s, route):
    if route == 1:
        z = s ** 5 / 32
        return (exp(3 * s ** 5 / 160) / (2 * sqrt(8) * 2 * sin(pi / 4))
                * (sf.besseli(-0.25, z) + sf.besseli(0.25, z)))
    w = s ** 2.5 / 2

    def terms():
        n, t = 0, 1.0
        while True:
            yield t * gamma(n / 2 + 0.25)
            n += 1
            t *= w / n
    return s ** -1.25 * exp(-s ** 5 / 80) * sf._sum(terms()) / (4 * pi)


def _o2n3(sigma, route):
    s = sigma / 2
    x = -s ** (8 / 3) / (4 * 3 ** (1 / 3))
    if route == 1:
        return sf.airy_ai(x) / (2 * 3 ** (1 / 3) * s ** (4 / 3)) - sf.airy_ai_integral(x) / 4
    return _gue3_bessel(s) / 2 - sf.integrate(sf.airy_ai_bessel, 0.0, x) / 4


def _kp_erf(s, route):
    x = s ** 1.5 / 2
    erf = sf.erf_maclaurin(x) if route == 1 else sf.erf_kummer(x)
    return s ** -1.5 * sqrt(pi) * exp(-s ** 3 / 12) * erf


CLOSED_FORMS = {
    "p2-bessel": _p2,
    "p3-airy": _p3,
    "p4-bessel": _p4,
    "o2n-p3-airy": _o2n3,
    "kp-erf-k1": _kp_erf,
}

# closed-form id -> (engine model, p)
_SERIES_OF = {
    "p2-bessel": ("gue-closed", 2),
    "p3-airy": ("gue-closed", 3),
    "p4-bessel": ("gue-closed", 4),
    "o2n-p3-airy": ("o2n", 3),
    "kp-erf-k1": ("kp-k1", 2),
}


def eval_closed_form(model: str, sigma, route: int = 1) -> float:
    if model not in CLOSED_FORMS:
        raise InvalidArgument("unknown closed form %r" % (model,))
    if route not in (1, 2):
        raise InvalidArgument("route is 1 or 2")
    s = float(as_rational(sigma)) if not isinstance(sigma, float) else sigma
    if not 0 < s <= SIGMA_MAX:
        raise sf.RangeError("sigma must lie in (0, %d]" % SIGMA_MAX)
    return CLOSED_FORMS[model](s, route)


def _weight(p: int, r: Fraction) -> float:
    # Gamma(r) times the phase left after the contour is closed
    if p == 2:
        return gamma(float(r)) / pi
    return 2 * cos(pi * float(r)) / gamma(1 - float(r))


def series_value(model: str, p: int, sigma, g_max) -> float:
    """Evaluate the exact truncated series, including the divergent leading term."""
    s = float(as_rational(sigma)) if not isinstance(sigma, float) else sigma
    if model == "kp-k1":
        from .opensector import odd_k_tower
        return sum(float(c) * s ** (3 * n) for n, c in enumerate(odd_k_tower(g_max)))
    spec = MODELS[model]
    x = float(spec.scale) * s
    series = assemble_series(p, model, g_max)
    lead = float(spec.prefactor) / p * _weight(p, Fraction(1, p)) * x ** -(1 + 1 / p)
    tot = lead
    for e in series.exponents():
        t = series.terms[e]
        tot += float(t.total(0)) * _weight(p, t.gamma_arg) * x ** float(e)
    return tot


@dataclass(frozen=True)
class ComparisonReport:
    model: str
    p: int
    sigma: Fraction
    g_max: Fraction
    closed_value: float
    series_value: float

    @property
    def relative_error(self) -> float:
        return abs(self.series_value - self.closed_value) / abs(self.closed_value)

    def as_dict(self) -> dict:
        return {"model": self.model, "p": self.p, "sigma": format_rational(self.sigma),
                "g_max": format_rational(self.g_max), "closed": repr(self.closed_value),
                "series": repr(self.series_value), "rel_error": "%.3e" % self.relative_error}


def compare_series(model: str, p: int, sigma, g_max) -> ComparisonReport:
    """
    ``model`` is a closed-form id ("p3-airy") or an engine model
    ("gue-closed", "o2n", "kp-k1") paired with ``p``.
    """
    if model in _SERIES_OF:
        closed_id = model
        if _SERIES_OF[model][1] != p:
            raise InvalidArgument("%s is a p=%d closed form" % (model, _SERIES_OF[model][1]))
    else:
        hits = [cid for cid, key in _SERIES_OF.items() if key == (model, p)]
        if not hits:
            raise InvalidArgument("no closed form for model %r at p=%d" % (model, p))
        closed_id = hits[0]
    engine, _ = _SERIES_OF[closed_id]
    sigma, g_max = as_rational(sigma), as_rational(g_max)
    closed = eval_closed_form(closed_id, sigma)
    return ComparisonReport(closed_id, p, sigma, g_max, closed, series_value(engine, p, sigma, g_max))

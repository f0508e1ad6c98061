r"""
Exact Puiseux-series engine for one-point functions.

After the substitution ``x = sigma u^p`` the one-point function becomes

    U = 1/(p s) * int x^(1/p - 1) e^(-x) * prod(atoms),   s = sigma^(1 + 1/p)

and each atom multiplies the integrand by ``coefficient * s^steps *
x^delta``. A multiset of atoms with ``steps = 2g`` lands on the exponent
``(2g - 1)(1 + 1/p)`` with the Gamma argument ``a = 1/p + n_pot - 2g/p``.
Aggregates are kept relative to ``Gamma(r)`` where ``r`` is the
representative of ``a`` modulo 1 in ``[0, 1)``; ``r = 0`` is the limiting
reference of the spin-(p-1) sector and is only ever used inside ratios.

EXAMPLES::

    >>> from pspin.series import assemble_series, extract_intersections
    >>> recs = extract_intersections(assemble_series(4, "gue-closed", 3))
    >>> [str(r.value) for r in recs]
    ['1/8', '3/2560', '3/20480']
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .algebra import KPoly, GammaSymbol, as_rational, format_rational, gamma_ratio, gamma_reduce
from .errors import InvalidArgument, MalformedSeries, UseKpRoute

__all__ = [
    "Atom", "ModelSpec", "MODELS", "SeriesTerm", "PuiseuxSeries", "IntersectionRecord",
    "potential_coeff", "boundary_coeff", "model_atoms", "assemble_series",
    "extract_intersections", "solve_selection", "half_integer", "floor_genus",
]


def half_integer(g) -> Fraction:
    g = as_rational(g)
    if (2 * g).denominator != 1:
        raise InvalidArgument("genus must be a half-integer, got %s" % format_rational(g))
    return g


def floor_genus(g: Fraction) -> int:
    return g.numerator // g.denominator


def potential_coeff(p: int, m: int) -> Fraction:
    """Magnitude C(p+1, m)/((p+1) 2^(m-1)) of the potential atom; 0 once m > p+1."""
    if m % 2 == 0:
        raise InvalidArgument("potential atoms have odd m")
    if m < 3:
        raise InvalidArgument("potential atoms start at m = 3")
    return Fraction(comb(p + 1, m), (p + 1) * 2 ** (m - 1))


def boundary_coeff(m: int) -> KPoly:
    """k/(m 2^(m-1)), from expanding k log((u + s/2)/(u - s/2))."""
    if m % 2 == 0 or m < 1:
        raise InvalidArgument("boundary atoms have odd m >= 1")
    return KPoly({1: Fraction(1, m * 2 ** (m - 1))})


@dataclass(frozen=True)
class Atom:
    kind: str            # "potential", "boundary" or "linear"
    m: int
    steps: int           # sigma_step / (1 + 1/p)
    sigma_step: Fraction
    x_power_delta: Fraction
    coefficient: KPoly

    @property
    def max_multiplicity(self):
        return 1 if self.kind == "linear" else None

    @property
    def potential_count(self) -> int:
        return 1 if self.kind == "potential" else 0


def _atom(p, kind, m, steps, delta, coeff):
    return Atom(kind, m, steps, steps * (1 + Fraction(1, p)), delta, KPoly.coerce(coeff))


@dataclass(frozen=True)
class ModelSpec:
    name: str
    boundary: bool
    linear: Fraction | None      # coefficient of the linear-boundary atom
    prefactor: Fraction          # overall constant in front of the integral
    scale: Fraction              # series variable = scale * sigma
    crosscap_contract: bool      # half-integer sectors use the non-orientable contract


MODELS = {
    "gue-closed": ModelSpec("gue-closed", False, None, Fraction(1), Fraction(1), False),
    "gue-open": ModelSpec("gue-open", True, None, Fraction(1), Fraction(1), False),
    # (1 - sigma/4u) with sigma = 2s and the 1/(N sigma) = 1/(2 N s) prefactor
    "o2n": ModelSpec("o2n", False, Fraction(-1, 2), Fraction(1, 2), Fraction(1, 2), True),
    "o2n-open": ModelSpec("o2n-open", True, Fraction(-1, 2), Fraction(1), Fraction(1, 2), False),
    # (1 + sigma/2u) in the variable sigma itself
    "sp": ModelSpec("sp", False, Fraction(1, 2), Fraction(1), Fraction(1), True),
    "o2n1": ModelSpec("o2n1", False, Fraction(1, 2), Fraction(1), Fraction(1), True),
}


def model_atoms(p: int, model: str, max_steps: int) -> list:
    """Atoms that fit into ``max_steps``, in canonical order (kind, then m)."""
    spec = MODELS[model]
    atoms = []
    for m in range(3, max_steps + 2, 2):
        c = potential_coeff(p, m)
        if c:
            atoms.append(_atom(p, "potential", m, m - 1, 1 - Fraction(m - 1, p), -c))
    if spec.boundary:
        for m in range(1, max_steps + 1, 2):
            atoms.append(_atom(p, "boundary", m, m, Fraction(-m, p), boundary_coeff(m)))
    if spec.linear is not None and max_steps >= 1:
        atoms.append(_atom(p, "linear", 1, 1, Fraction(-1, p), spec.linear))
    return atoms


@dataclass(frozen=True)
class SeriesTerm:
    """
    One exponent of U. The Gamma aggregate is

        (coefficient + crosscap) * Gamma(gamma_arg)

    where ``crosscap`` collects the multisets holding the linear-boundary atom.
    """
    sigma_exponent: Fraction
    genus: Fraction
    coefficient: KPoly
    crosscap: KPoly
    gamma_arg: Fraction

    @property
    def total(self) -> KPoly:
        return self.coefficient + self.crosscap

    @property
    def gamma(self) -> GammaSymbol | None:
        """The reference Gamma as a symbol; None for the limiting r = 0 sector."""
        if self.gamma_arg == 0:
            return None
        return gamma_reduce(self.gamma_arg)


@dataclass
class PuiseuxSeries:
    p: int
    model: str
    g_max: Fraction
    terms: dict = field(default_factory=dict)   # sigma_exponent -> SeriesTerm

    @property
    def scale(self) -> Fraction:
        return MODELS[self.model].scale

    def exponents(self):
        return sorted(self.terms)

    def term_for_genus(self, g) -> SeriesTerm | None:
        g = half_integer(g)
        return self.terms.get((2 * g - 1) * (1 + Fraction(1, self.p)))

    def __add__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        if other.p != self.p:
            raise InvalidArgument("cannot merge series with different p")
        out = dict(self.terms)
        for e, t in other.terms.items():
            if e in out:
                u = out[e]
                if u.gamma_arg != t.gamma_arg:
                    raise MalformedSeries("Gamma references disagree at exponent %s" % e)
                out[e] = SeriesTerm(e, u.genus, u.coefficient + t.coefficient,
                                    u.crosscap + t.crosscap, u.gamma_arg)
            else:
                out[e] = t
        return PuiseuxSeries(self.p, self.model, max(self.g_max, other.g_max), out)


@dataclass(frozen=True)
class IntersectionRecord:
    model: str
    p: int
    g: Fraction
    n: Fraction
    j: int | None
    value: KPoly

    def as_dict(self) -> dict:
        return {
            "model": self.model,
            "p": self.p,
            "g": format_rational(self.g),
            "n": format_rational(self.n),
            "j": self.j,
            "value": str(self.value),
        }

    def sort_key(self):
        return (self.model, self.p, self.g, self.n)

    def with_value(self, value) -> "IntersectionRecord":
        return IntersectionRecord(self.model, self.p, self.g, self.n, self.j, KPoly.coerce(value))

    def label(self) -> str:
        idx = format_rational(self.n) if self.j is None else "%s,%d" % (format_rational(self.n), self.j)
        return "<tau_{%s}>_{g=%s}" % (idx, format_rational(self.g))


def solve_selection(p: int, g) -> tuple:
    """Solve (p+1)(2g-1) = p n + j + 1; for p = 2 the index j is absent."""
    g = half_integer(g)
    tot = (p + 1) * (2 * g - 1) - 1
    if tot.denominator != 1:
        raise MalformedSeries("no solution of the selection rule")
    tot = int(tot)
    if p == 2:
        return Fraction(tot, 2), None
    j = tot % p
    return Fraction(tot - j, p), j


def _spin_reference(p: int, g: Fraction) -> Fraction:
    tot = int((p + 1) * (2 * g - 1) - 1)
    return 1 - Fraction(1 + tot % p, p)


def assemble_series(p: int, model: str, g_max) -> PuiseuxSeries:
    """
    Enumerate every multiset of atoms with at most ``2 g_max`` steps.

    Exponent-0 and negative-exponent pieces (the divergent leading term and
    the g = 1/2 constant) are dropped.
    """
    if not isinstance(p, int) or p < 2:
        raise InvalidArgument("p must be an integer >= 2")
    if model not in MODELS:
        raise InvalidArgument("unknown model %r" % (model,))
    g_max = half_integer(g_max)
    if g_max < Fraction(1, 2):
        raise InvalidArgument("g_max must be at least 1/2")
    spec = MODELS[model]
    if p == 2 and spec.boundary:
        raise UseKpRoute("p = 2 open sectors have Gamma(1 - m/2) poles; use the Kontsevich-Penner route")
    max_steps = int(2 * g_max)
    atoms = model_atoms(p, model, max_steps)

    # dynamic programme over atoms: (steps, n_pot, linear) -> KPoly
    states = {(0, 0, 0): KPoly.const(1)}
    for atom in atoms:
        nxt = {}
        for (st, npot, lin), c in states.items():
            power = KPoly.const(1)
            cnt = 0
            while st + cnt * atom.steps <= max_steps:
                if atom.kind == "linear" and lin + cnt > 1:
                    break
                key = (st + cnt * atom.steps, npot + cnt * atom.potential_count,
                       lin + (cnt if atom.kind == "linear" else 0))
                nxt[key] = nxt.get(key, KPoly()) + c * power / factorial(cnt)
                cnt += 1
                power = power * atom.coefficient
        states = nxt

    sectors = {}
    for (st, npot, lin), c in sorted(states.items()):
        if st < 2:
            continue
        a = Fraction(1, p) + npot - Fraction(st, p)
        g = Fraction(st, 2)
        r = _spin_reference(p, g)
        if (a - r).denominator != 1:
            raise MalformedSeries("Gamma argument %s not congruent to %s" % (a, r))
        contrib = c * (spec.prefactor / p) * gamma_ratio(a, r)
        main, cross = sectors.get(st, (KPoly(), KPoly()))
        if lin:
            cross = cross + contrib
        else:
            main = main + contrib
        sectors[st] = (main, cross)

    series = PuiseuxSeries(p, model, g_max)
    for st, (main, cross) in sorted(sectors.items()):
        g = Fraction(st, 2)
        e = (2 * g - 1) * (1 + Fraction(1, p))
        series.terms[e] = SeriesTerm(e, g, main, cross, _spin_reference(p, g))
    return series


def _genus_of(series: PuiseuxSeries, e: Fraction) -> Fraction:
    g = (e / (1 + Fraction(1, series.p)) + 1) / 2
    if (2 * g).denominator != 1 or g < 1:
        raise MalformedSeries("exponent %s is not of the form (2g-1)(1+1/p)" % format_rational(e))
    return g


def extract_intersections(series: PuiseuxSeries) -> list:
    r"""
    Apply the extraction contract to every term.

    Orientable and open sectors use ``(-1)^floor(g) p^(1-floor(g)) T``.
    Half-integer sectors of the closed O(2N)/Sp family use
    ``(-1)^floor(g) T / (2 p^(2g-1))``. Linear-atom aggregates are read in
    the (1 + sigma/2u) orientation, so models written with (1 - sigma/4u)
    flip them.
    """
    p = series.p
    spec = MODELS[series.model]
    orient = 1 if spec.linear is None or spec.linear > 0 else -1
    out = []
    for e in series.exponents():
        term = series.terms[e]
        g = _genus_of(series, e)
        if g != term.genus:
            raise MalformedSeries("stored genus disagrees with the exponent")
        n, j = solve_selection(p, g)
        ratio = gamma_ratio(term.gamma_arg, _spin_reference(p, g))
        fg = floor_genus(g)
        sign = -1 if fg % 2 else 1
        if spec.crosscap_contract and g.denominator == 2:
            value = term.crosscap * orient * sign / (2 * Fraction(p) ** int(2 * g - 1))
        else:
            value = (term.coefficient + term.crosscap * orient) * sign * Fraction(p) ** (1 - fg)
        out.append(IntersectionRecord(series.model, p, g, n, j, value * ratio))
    return out

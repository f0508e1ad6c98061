r"""
Exact scalars, polynomials in the boundary parameter k, Bernoulli numbers
and Gamma-at-rational bookkeeping.

Everything here is exact. Rationals are :class:`fractions.Fraction`; the
alias :data:`Rational` exists only so signatures read naturally.

EXAMPLES::

    >>> from pspin.algebra import KPoly, gamma_reduce, gamma_ratio
    >>> KPoly({0: Rational(1, 24), 2: Rational(1, 2)})
    KPoly('1/24 + 1/2*k^2')
    >>> gamma_reduce(Rational(7, 3))
    GammaSymbol(4/9 * Gamma(1/3))
    >>> gamma_ratio(Rational(-3, 2), Rational(1, 2))
    Fraction(4, 3)
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import GammaPoleError, InvalidArgument, ParseError

Rational = Fraction

__all__ = [
    "Rational", "as_rational", "format_rational", "KPoly", "GammaSymbol",
    "bernoulli_signed", "bernoulli_paper", "zeta_negative_odd",
    "gamma_reduce", "gamma_ratio", "is_pole",
]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and strings such as ``"7/2"`` or ``"-3"``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not re.fullmatch(r"[+-]?\d+(/\d+)?", s):
            raise InvalidArgument("not an exact rational: %r" % x)
        return Fraction(s)
    raise InvalidArgument("cannot coerce %r to an exact rational" % (x,))


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def is_pole(a: Fraction) -> bool:
    return a.denominator == 1 and a <= 0


class KPoly:
    r"""
    Polynomial in k with rational coefficients; immutable and hashable.

    The canonical text form lists terms by ascending power::

        >>> KPoly.parse("1/12*k + 1/12*k^3") * 12
        KPoly('k + k^3')
        >>> str(KPoly.parse("1/24 - 1/2*k^2"))
        '1/24 - 1/2*k^2'
    """
    __slots__ = ("_c", "_hash")

    def __init__(self, coefficients=None):
        c = {}
        if coefficients:
            for e, v in dict(coefficients).items():
                if not isinstance(e, int) or e < 0:
                    raise InvalidArgument("k-exponent must be a non-negative int: %r" % (e,))
                v = Fraction(v)
                if v:
                    c[e] = v
        self._c = dict(sorted(c.items()))
        self._hash = None

    # -- constructors
    @classmethod
    def const(cls, q) -> "KPoly":
        return cls({0: q})

    @classmethod
    def k(cls) -> "KPoly":
        return cls({1: 1})

    @classmethod
    def coerce(cls, x) -> "KPoly":
        if isinstance(x, KPoly):
            return x
        return cls.const(x)

    # -- accessors
    @property
    def coefficients(self) -> dict:
        return dict(self._c)

    def coefficient(self, e: int) -> Fraction:
        return self._c.get(e, Fraction(0))

    def degree(self) -> int:
        return max(self._c) if self._c else -1

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return all(e == 0 for e in self._c)

    def exponents(self):
        return list(self._c)

    def __call__(self, k) -> Fraction:
        k = Fraction(k)
        return sum((v * k ** e for e, v in self._c.items()), Fraction(0))

    evaluate = __call__

    # -- ring structure
    def __add__(self, other):
        other = KPoly.coerce(other)
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return KPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return KPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        return self + (-KPoly.coerce(other))

    def __rsub__(self, other):
        return KPoly.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, KPoly):
            q = Fraction(other)
            return KPoly({e: v * q for e, v in self._c.items()})
        c = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return KPoly(c)

    __rmul__ = __mul__

    def __truediv__(self, q):
        q = Fraction(q)
        if not q:
            raise ZeroDivisionError("KPoly division by zero")
        return self * (1 / q)

    def __pow__(self, n: int):
        if n < 0:
            raise InvalidArgument("negative power of a KPoly")
        out, base = KPoly.const(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, KPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == KPoly.const(other)._c
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._c.items()))
        return self._hash

    # -- text form
    def __str__(self):
        if not self._c:
            return "0"
        out = []
        for i, (e, v) in enumerate(self._c.items()):
            neg = v < 0
            a = -v if neg else v
            if e == 0:
                body = format_rational(a)
            else:
                mono = "k" if e == 1 else "k^%d" % e
                body = mono if a == 1 else "%s*%s" % (format_rational(a), mono)
            if i == 0:
                out.append("-" + body if neg else body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return "KPoly(%r)" % str(self)

    _TERM = re.compile(r"^(?:(\d+(?:/\d+)?)(?:\*k(?:\^(\d+))?)?|k(?:\^(\d+))?)$")

    @classmethod
    def parse(cls, text: str) -> "KPoly":
        s = text.strip()
        if not s:
            raise ParseError("empty polynomial")
        s = re.sub(r"\s+", "", s)
        if s[0] not in "+-":
            s = "+" + s
        parts = re.findall(r"([+-])([^+-]+)", s)
        if "".join(a + b for a, b in parts) != s:
            raise ParseError("cannot parse polynomial %r" % text)
        c = {}
        for sign, body in parts:
            m = cls._TERM.match(body)
            if not m:
                raise ParseError("cannot parse term %r in %r" % (body, text))
            if m.group(1) is not None:
                coeff = Fraction(m.group(1))
                if "*k" in body:
                    e = int(m.group(2)) if m.group(2) else 1
                else:
                    e = 0
            else:
                coeff = Fraction(1)
                e = int(m.group(3)) if m.group(3) else 1
            if sign == "-":
                coeff = -coeff
            c[e] = c.get(e, 0) + coeff
        return cls(c)


@dataclass(frozen=True)
class GammaSymbol:
    """``shift_multiplier * Gamma(canonical_arg)`` with canonical_arg in (0, 1]."""
    canonical_arg: Fraction
    shift_multiplier: Fraction

    def __post_init__(self):
        if not (0 < self.canonical_arg <= 1):
            raise InvalidArgument("canonical argument must lie in (0, 1]")

    def __str__(self):
        return "%s * Gamma(%s)" % (format_rational(self.shift_multiplier),
                                   format_rational(self.canonical_arg))

    def __repr__(self):
        return "GammaSymbol(%s)" % self

    def __float__(self):
        from math import gamma
        return float(self.shift_multiplier) * gamma(float(self.canonical_arg))


def gamma_reduce(a) -> GammaSymbol:
    r"""
    Write ``Gamma(a)`` as a rational multiple of ``Gamma(c)`` with c in (0, 1].

        >>> gamma_reduce(Rational(-1, 2))
        GammaSymbol(-2 * Gamma(1/2))
        >>> gamma_reduce(1)
        GammaSymbol(1 * Gamma(1))
    """
    a = as_rational(a)
    if is_pole(a):
        raise GammaPoleError("Gamma(%s) is a pole" % format_rational(a))
    c = a - (a.numerator // a.denominator)
    if c == 0:
        c = Fraction(1)
    return GammaSymbol(c, gamma_ratio(a, c))


def gamma_ratio(a, b) -> Fraction:
    r"""
    Exact ``Gamma(a) / Gamma(b)`` for an integer difference ``a - b``.

    The ratio is read as the telescoping product, so when a and b both sit on
    poles the answer is the limit along a common shift (both arguments moved
    by the same epsilon). A zero factor in the denominator is a genuine pole.

        >>> gamma_ratio(Rational(4, 3), Rational(1, 3))
        Fraction(1, 3)
        >>> gamma_ratio(-1, 0), gamma_ratio(1, 0)
        (Fraction(-1, 1), Fraction(0, 1))
    """
    a, b = as_rational(a), as_rational(b)
    d = a - b
    if d.denominator != 1:
        raise InvalidArgument("Gamma ratio needs an integer argument difference")
    d = int(d)
    r = Fraction(1)
    if d >= 0:
        for i in range(d):
            r *= b + i
        return r
    for i in range(1, -d + 1):
        f = b - i
        if f == 0:
            raise GammaPoleError("Gamma(%s)/Gamma(%s) has a pole in the numerator"
                                 % (format_rational(a), format_rational(b)))
        r /= f
    return r


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple:
    # sum_{j=0}^{m} C(m+1, j) B_j = 0, B_0 = 1 (so B_1 = -1/2)
    B = [Fraction(1)]
    for m in range(1, n + 1):
        s = sum(comb(m + 1, j) * B[j] for j in range(m))
        B.append(-s / (m + 1))
    return tuple(B)


def bernoulli_signed(n: int) -> Fraction:
    """Standard Bernoulli number (B_1 = -1/2, B_2 = 1/6, B_4 = -1/30)."""
    if not isinstance(n, int) or n < 0:
        raise InvalidArgument("Bernoulli index must be a non-negative int")
    if n > 1 and n % 2:
        return Fraction(0)
    return _bernoulli_table(n)[n]


def bernoulli_paper(g: int) -> Fraction:
    """All-positive convention: B_1 = 1/6, B_2 = 1/30, B_3 = 1/42, ..."""
    if not isinstance(g, int) or g <= 0:
        raise InvalidArgument("positive index required")
    return abs(bernoulli_signed(2 * g))


def zeta_negative_odd(g: int) -> Fraction:
    """zeta(1 - 2g) = -B_{2g}/(2g), signed convention."""
    if g < 1:
        raise InvalidArgument("g >= 1 required")
    return -bernoulli_signed(2 * g) / (2 * g)

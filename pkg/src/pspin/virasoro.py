"""
Selection rule, string and dilaton rewrites, and a checker for tables of
multi-point open intersection numbers.

No multi-point value is computed from first principles: a correlator is
evaluated by closure, rewriting with the string and dilaton equations until
it lands on a one-point number from the engine, a seed, or another table
entry.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .algebra import KPoly, as_rational, format_rational
from .errors import InvalidArgument, ParseError

__all__ = [
    "Insertion", "Correlator", "selection_rule", "apply_string", "apply_dilaton",
    "GoldenRow", "RowResult", "VerificationReport", "load_golden", "parse_golden",
    "Evaluator", "verify_golden", "W_VALUES", "SEEDS", "GOLDEN_PATH",
]

GOLDEN_PATH = "data/golden_kp.tsv"

Insertion = tuple          # (n: Fraction, j: int | None)


def _ins(n, j=None) -> Insertion:
    return (as_rational(n), j)


def selection_rule(p: int, insertions) -> Fraction | None:
    """
    Genus from (p+1)(2g-2+s) = p sum n + sum j + s, or None when it is not a
    non-negative half-integer.

        >>> selection_rule(3, [(6, 1)])
        Fraction(3, 1)
    """
    ins = [_ins(*i) if isinstance(i, tuple) else _ins(i) for i in insertions]
    s = len(ins)
    if s < 1:
        raise InvalidArgument("at least one insertion")
    rhs = p * sum(n for n, _ in ins) + sum(j or 0 for _, j in ins) + s
    two_g = rhs / (p + 1) + 2 - s
    if two_g.denominator != 1 or two_g < 0:
        return None
    return two_g / 2


@dataclass(frozen=True)
class Correlator:
    p: int
    insertions: tuple      # sorted tuple of (n, j)

    @classmethod
    def make(cls, p, insertions) -> "Correlator":
        ins = [_ins(*i) if isinstance(i, tuple) else _ins(i) for i in insertions]
        return cls(p, tuple(sorted(ins, key=lambda t: (t[0], -1 if t[1] is None else t[1]))))

    @property
    def genus(self) -> Fraction | None:
        return selection_rule(self.p, self.insertions)

    @property
    def valid(self) -> bool:
        return self.genus is not None

    def _unit(self, n):
        return (Fraction(n), None if self.p == 2 else 0)

    def has(self, n) -> bool:
        return self._unit(n) in self.insertions

    def without(self, item) -> tuple:
        lst = list(self.insertions)
        lst.remove(item)
        return tuple(lst)

    def __str__(self):
        def one(t):
            n, j = t
            return "tau_%s" % format_rational(n) if j is None else "tau_{%s,%d}" % (format_rational(n), j)
        g = self.genus
        return "<%s>_%s" % (" ".join(one(t) for t in self.insertions),
                            "?" if g is None else format_rational(g))


GHOST = Fraction(-1, 2)


def apply_string(c: Correlator) -> list:
    """<tau_0 X> = sum over insertions of X with one index lowered by 1."""
    t0 = c._unit(0)
    if t0 not in c.insertions or len(c.insertions) < 2:
        raise InvalidArgument("string equation needs tau_0 and s >= 2")
    rest = list(c.without(t0))
    out = []
    for i, (n, j) in enumerate(rest):
        m = n - 1
        if m < 0 and m != GHOST:
            continue
        new = Correlator.make(c.p, rest[:i] + [(m, j)] + rest[i + 1:])
        if new.genus != c.genus:
            raise AssertionError("string rewrite changed the genus")
        out.append(new)
    return out


def apply_dilaton(c: Correlator) -> tuple:
    """<tau_1 X>_g = (2g - 2 + s) <X>_g, s = number of insertions in X."""
    t1 = c._unit(1)
    if t1 not in c.insertions or len(c.insertions) < 2:
        raise InvalidArgument("dilaton equation needs tau_1 and s >= 2")
    rest = Correlator.make(c.p, c.without(t1))
    g = c.genus
    if rest.genus != g:
        raise AssertionError("dilaton rewrite changed the genus")
    return 2 * g - 2 + len(rest.insertions), rest


# listed W-constraint values (model kp)
W_VALUES = {
    Correlator.make(2, [(Fraction(1, 2), None), (0, None)]): KPoly.k(),
    Correlator.make(2, [(Fraction(1, 2), None), (Fraction(3, 2), None)]): KPoly({2: 1}),
    Correlator.make(2, [(Fraction(1, 2), None), (3, None)]): KPoly({1: Fraction(1, 2), 3: Fraction(2, 3)}),
}

SEEDS = {
    Correlator.make(2, [(0, None)] * 3): KPoly.const(1),
    Correlator.make(2, [(GHOST, None)]): KPoly.k(),
}


class Unresolved(Exception):
    pass


class Evaluator:
    """
    Closure evaluation. ``order`` picks which rewrite is tried first when a
    correlator carries both tau_0 and tau_1.
    """

    def __init__(self, model="kp", p=2, known=None, order="string", g_max=4):
        self.model, self.p, self.order = model, p, order
        self.known = dict(SEEDS if p == 2 else {
            Correlator.make(p, [(0, 0)] * 3): KPoly.const(1)})
        if known:
            self.known.update(known)
        self._one = None
        self._g_max = g_max

    def one_point(self, c: Correlator) -> KPoly:
        if self._one is None:
            from .opensector import kp_one_point, open_p_one_point
            from .closed import closed_one_point
            if self.model == "kp":
                recs = kp_one_point(self._g_max)
            elif self.model == "gue-open":
                recs = open_p_one_point(self.p, self._g_max)
            else:
                recs = closed_one_point(self.p, self._g_max)
            self._one = {(r.n, r.j): r.value for r in recs}
        (n, j), = c.insertions
        key = (n, j if self.p != 2 else None)
        if key not in self._one:
            raise Unresolved(str(c))
        return self._one[key]

    def evaluate(self, c: Correlator) -> KPoly:
        if not c.valid:
            return KPoly()
        if c in self.known:
            return self.known[c]
        if len(c.insertions) == 1:
            return self.one_point(c)
        rules = ["string", "dilaton"] if self.order == "string" else ["dilaton", "string"]
        for rule in rules:
            if rule == "string" and c.has(0):
                return sum((self.evaluate(x) for x in apply_string(c)), KPoly())
            if rule == "dilaton" and c.has(1):
                f, rest = apply_dilaton(c)
                return self.evaluate(rest) * f
        raise Unresolved(str(c))

    def try_evaluate(self, c: Correlator):
        try:
            return self.evaluate(c)
        except Unresolved:
            return None


@dataclass(frozen=True)
class GoldenRow:
    row: int
    model: str
    p: int
    correlator: Correlator
    genus: Fraction
    value: KPoly


def _parse_insertions(text, p, row):
    out = []
    for part in text.split(";"):
        part = part.strip()
        if ":" not in part:
            raise ParseError("insertion %r lacks ':'" % part, row)
        n, j = part.split(":", 1)
        try:
            n = as_rational(n)
            j = int(j) if j.strip() else None
        except (ValueError, InvalidArgument):
            raise ParseError("bad insertion %r" % part, row) from None
        if p != 2 and j is None:
            raise ParseError("p != 2 insertions need a spin index", row)
        out.append((n, j))
    return out


def parse_golden(text: str) -> list:
    reader = csv.reader(io.StringIO(text), delimiter="\t")
    rows = []
    for i, fields in enumerate(reader, start=1):
        if not fields or fields[0].startswith("#"):
            continue
        if i == 1 and fields[0] == "model":
            continue
        if len(fields) != 5:
            raise ParseError("expected 5 columns, got %d" % len(fields), i)
        model, p, ins, genus, value = fields
        try:
            p = int(p)
            genus = as_rational(genus)
        except (ValueError, InvalidArgument):
            raise ParseError("bad p or genus", i) from None
        val = KPoly.parse(value) if value.strip() else None
        if val is None:
            raise ParseError("empty value", i)
        rows.append(GoldenRow(i, model, p, Correlator.make(p, _parse_insertions(ins, p, i)), genus, val))
    return rows


def load_golden(path=None) -> list:
    if path is None:
        text = resources.files("pspin").joinpath(GOLDEN_PATH).read_text(encoding="utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return parse_golden(text)


@dataclass
class RowResult:
    row: int
    correlator: str
    checks: list = field(default_factory=list)     # (name, ok, detail)

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    @property
    def value_checked(self) -> bool:
        """False when only the selection rule could be applied."""
        return any(name != "selection" for name, _, _ in self.checks)

    def as_dict(self) -> dict:
        return {"row": self.row, "correlator": self.correlator, "ok": self.ok,
                "value_checked": self.value_checked,
                "checks": [{"check": n, "ok": ok, "detail": d} for n, ok, d in self.checks]}


@dataclass
class VerificationReport:
    results: list

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def failures(self) -> list:
        return [r for r in self.results if not r.ok]


def verify_golden(rows) -> VerificationReport:
    results = []
    for r in rows:
        res = RowResult(r.row, str(r.correlator))
        g = r.correlator.genus
        res.checks.append(("selection", g == r.genus,
                           "rule gives g=%s" % (format_rational(g) if g is not None else "invalid")))
        c = r.correlator
        if c in SEEDS:
            res.checks.append(("seed", SEEDS[c] == r.value, "seed %s" % SEEDS[c]))
        if c in W_VALUES:
            res.checks.append(("w-constraint", W_VALUES[c] == r.value, "listed %s" % W_VALUES[c]))
        others = {o.correlator: o.value for o in rows if o.row != r.row and o.correlator != c}
        for order in ("string", "dilaton"):
            ev = Evaluator(r.model, r.p, others, order)
            if len(c.insertions) == 1 and c not in SEEDS:
                got = ev.try_evaluate(c)
                if got is not None:
                    res.checks.append(("one-point", got == r.value, "engine %s" % got))
                break
            if order == "string" and not c.has(0):
                continue
            if order == "dilaton" and not c.has(1):
                continue
            got = ev.try_evaluate(c)
            if got is not None:
                res.checks.append((order, got == r.value, "closure %s" % got))
        results.append(res)
    return VerificationReport(results)

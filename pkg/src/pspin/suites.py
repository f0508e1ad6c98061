"""
Verification suites shared by ``pspin verify`` and the acceptance tests.

Each suite returns a list of :class:`Check`. Expected values are literal
table data; nothing here is derived from the code under test.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction as F
from math import factorial

from .algebra import KPoly, format_rational, gamma_ratio
from .closed import closed_form_p2, closed_form_p3, closed_one_point, euler_orientable, golden_pexpression
from .gw import gw_closed_form, gw_one_point
from .lie import (
    euler_nonorientable, euler_nonorientable_bf, euler_nonorientable_s, o2n_one_point,
    uuno_coefficients, uuno_from_engine,
)
from .opensector import (
    appendix_p_to_2_limit, golden_open_o2n, golden_open_p, kp_one_point, open_o2n_one_point,
    open_p_one_point,
)
from .series import assemble_series, extract_intersections

__all__ = ["Check", "SUITES", "run_suite", "ORDER"]


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    ok: bool
    detail: str = ""

    def as_dict(self):
        return {"suite": self.suite, "check": self.name, "ok": self.ok, "detail": self.detail}


def _eq(suite, name, got, want):
    return Check(suite, name, str(got) == str(want), "got %s, want %s" % (got, want))


CLOSED_TABLES = {
    3: ["1/12", "0", "1/31104", "1/746496"],
    4: ["1/8", "3/2560", "3/20480", "77/39321600", "19/104857600"],
    5: ["1/6", "11/3600", "0", "341/25920000", "161/777600000"],
}


def suite_closed():
    out = []
    recs = closed_one_point(2, 6)
    for r in recs:
        g = int(r.g)
        out.append(_eq("closed", "p=2 g=%d" % g, r.value, format_rational(F(1, 24 ** g * factorial(g)))))
    for p, want in CLOSED_TABLES.items():
        recs = closed_one_point(p, len(want))
        for r, w in zip(recs, want):
            out.append(_eq("closed", "p=%d g=%s %s" % (p, r.g, r.label()), r.value, w))
    for p in range(2, 10):
        recs = {int(r.g): r.value for r in closed_one_point(p, 4)}
        for g in range(1, 5):
            out.append(_eq("closed", "general-p g=%d at p=%d" % (g, p), recs[g], golden_pexpression(p, g)))
    for g in range(1, 7):
        out.append(_eq("closed", "p=2 closed form g=%d" % g, closed_one_point(2, g)[-1].value, closed_form_p2(g)))
    for g in range(1, 5):
        out.append(_eq("closed", "p=3 Gamma form g=%d" % g, closed_one_point(3, g)[-1].value, closed_form_p3(g)))
    return out


KP_VALUES = {
    F(1): "1/24 + 1/2*k^2",
    F(2): "1/1152 + 7/144*k^2 + 1/72*k^4",
    F(3): "1/82944 + 17/6400*k^2 + 13/8640*k^4 + 1/10800*k^6",
    F(3, 2): "1/12*k + 1/12*k^3",
}


def suite_open():
    out = []
    kp = {r.g: r.value for r in kp_one_point(3)}
    # (1+12k^2)/24, (1+56k^2+16k^4)/1152, (25+5508k^2+3120k^4+192k^6)/2073600, (k+k^3)/12
    for g, want in KP_VALUES.items():
        out.append(_eq("open", "KP g=%s" % format_rational(g), kp[g], want))
    for p in range(3, 8):
        recs = {r.g: r.value for r in open_p_one_point(p, 3)}
        for g in (F(1), F(3, 2), F(2), F(5, 2), F(3)):
            out.append(_eq("open", "open p-spin p=%d g=%s" % (p, format_rational(g)), recs[g], golden_open_p(p, g)))
        recs = {r.g: r.value for r in open_o2n_one_point(p, 2)}
        for g in (F(1), F(3, 2), F(2)):
            out.append(_eq("open", "open O(2N) p=%d g=%s" % (p, format_rational(g)), recs[g], golden_open_o2n(p, g)))
    return out


NO_EULER = ["-1/24", "-7/240", "-31/504", "-127/480"]
ZETA = {1: "-1/12", 2: "1/120", 3: "-1/252"}


def _zeta_route2(g):
    # -(2g-1)! [t^(2g-1)] 1/(1 - e^{-t}), via series inversion of (1 - e^{-t})/t
    n = 2 * g
    a = [F((-1) ** i, factorial(i + 1)) for i in range(n + 1)]
    b = [F(1)]
    for i in range(1, n + 1):
        b.append(-sum(a[j] * b[i - j] for j in range(1, i + 1)))
    return -b[n] * factorial(n - 1)


def suite_euler():
    out = []
    for g in range(1, 11):
        out.append(_eq("euler", "zeta(1-2g) g=%d" % g, euler_orientable(g, "zeta"), _zeta_route2(g)))
    for g, want in ZETA.items():
        out.append(_eq("euler", "zeta anchor g=%d" % g, euler_orientable(g, "zeta"), want))
    for gh, want in enumerate(NO_EULER, start=1):
        out.append(_eq("euler", "non-orientable anchor g=%d" % gh, euler_nonorientable(gh), want))
    for gh in range(1, 9):
        out.append(_eq("euler", "Boson/Fermion route g=%d" % gh, euler_nonorientable_bf(gh), euler_nonorientable(gh)))
        out.append(_eq("euler", "(g,s=1) formula g=%d" % gh, euler_nonorientable_s(gh, 1), euler_nonorientable(gh)))
    return out


def suite_lie():
    out = []
    for p in range(2, 8):
        split = o2n_one_point(p, 3).split
        gue = assemble_series(p, "gue-closed", 3)
        for e, t in sorted(split.orientable.terms.items()):
            u = gue.terms[e]
            ok = t.total == u.total / 2 and t.gamma_arg == u.gamma_arg
            out.append(Check("lie", "OR = GUE(sigma/2)/2 p=%d exponent %s" % (p, format_rational(e)), ok,
                             "%s vs half of %s" % (t.total, u.total)))
        odd = [t for t in split.orientable.terms.values() if t.genus.denominator != 1]
        even = [t for t in split.nonorientable.terms.values() if t.genus.denominator == 1]
        out.append(Check("lie", "OR/NO parity p=%d" % p, not odd and not even, ""))
    for p in (3, 5, 7):
        for order in (2, 4, 6, 8):
            out.append(_eq("lie", "UUNO y^%d p=%d" % (order, p), uuno_from_engine(p, order),
                           uuno_coefficients(p, order)[0]))
    recs = {r.g: r.value for r in o2n_one_point(3, F(3, 2)).records}
    out.append(_eq("lie", "NO p=3 <tau_{1,0}>_1", recs[F(1)], "1/24"))
    out.append(_eq("lie", "NO p=3 <tau_{2,1}>_{3/2}", recs[F(3, 2)], "1/864"))
    return out


def suite_gw():
    out = []
    for d in range(1, 13):
        for g in range(0, min(4, d) + 1):
            out.append(_eq("gw", "d=%d g=%d" % (d, g), gw_one_point(d, g), gw_closed_form(d, g)))
    return out


def suite_virasoro(golden=None):
    from .virasoro import GoldenRow, load_golden, verify_golden
    rows = load_golden(golden)
    rep = verify_golden(rows)
    out = []
    for r in rep.results:
        detail = "; ".join("%s:%s" % (n, "ok" if ok else "FAIL " + d) for n, ok, d in r.checks)
        if not r.value_checked:
            detail += " (value not reachable by any rule)"
        out.append(Check("virasoro", "row %d %s" % (r.row, r.correlator), r.ok, detail))
    if golden is None:
        # negative controls: every value-checked row must reject a corrupted value or genus
        checked = {r.row for r in rep.results if r.value_checked}
        missed = []
        for i, row in enumerate(rows):
            for kind in ("value", "genus"):
                bad = GoldenRow(row.row, row.model, row.p, row.correlator,
                                row.genus + (1 if kind == "genus" else 0),
                                row.value + (KPoly.k() if kind == "value" else 0))
                if kind == "value" and row.row not in checked:
                    continue
                res = verify_golden(rows[:i] + [bad] + rows[i + 1:])
                if res.ok:
                    missed.append("%s@row%d" % (kind, row.row))
        out.append(Check("virasoro", "mutations detected", not missed, ", ".join(missed)))
    return out


def suite_oracle():
    from .oracle import compare_series, eval_closed_form
    out = []
    limits = {"p2-bessel": 1e-8, "p3-airy": 1e-6, "p4-bessel": 1e-5, "o2n-p3-airy": 1e-5}
    ps = {"p2-bessel": 2, "p3-airy": 3, "p4-bessel": 4, "o2n-p3-airy": 3, "kp-erf-k1": 2}
    for sig in ("1/5", "2/5", "3/5", "1"):
        for cid, lim in limits.items():
            r = compare_series(cid, ps[cid], sig, 12)
            out.append(Check("oracle", "%s sigma=%s" % (cid, sig), r.relative_error <= lim,
                             "rel error %.2e" % r.relative_error))
    grid = [F(i, 5) for i in range(1, 11)]
    for cid in ps:
        worst = max(abs(eval_closed_form(cid, s, 1) - eval_closed_form(cid, s, 2))
                    / abs(eval_closed_form(cid, s, 1)) for s in grid)
        out.append(Check("oracle", "%s two routes" % cid, worst <= 1e-13, "worst %.2e" % worst))
    return out


def _all_records(p_max=7, g_max=3):
    recs = []
    for p in range(2, p_max + 1):
        recs += extract_intersections(assemble_series(p, "gue-closed", g_max))
        recs += extract_intersections(assemble_series(p, "o2n", g_max))
        if p >= 3:
            recs += open_p_one_point(p, g_max)
            recs += open_o2n_one_point(p, g_max)
    recs += kp_one_point(g_max)
    return recs


def suite_properties(seed=20240601):
    out = []
    recs = _all_records()
    from .virasoro import selection_rule
    bad = [r for r in recs if selection_rule(r.p, [(r.n, r.j)]) != r.g]
    out.append(Check("properties", "selection rule on %d records" % len(recs), not bad,
                     ", ".join(r.label() for r in bad[:5])))
    parity = []
    for r in recs:
        if r.model not in ("gue-open", "kp"):
            continue
        odd_k = any(e % 2 for e in r.value.exponents())
        even_k = any(e % 2 == 0 for e in r.value.exponents())
        if (r.g.denominator == 1 and odd_k) or (r.g.denominator == 2 and even_k):
            parity.append(r.label())
    out.append(Check("properties", "k-parity vs genus parity", not parity, ", ".join(parity[:5])))
    for p in range(2, 8):
        closed = {r.g: r.value for r in closed_one_point(p, 3)}
        opened = kp_one_point(3) if p == 2 else open_p_one_point(p, 3)
        mism = [str(r.g) for r in opened if r.g.denominator == 1 and KPoly.const(r.value(0)) != closed[r.g]]
        out.append(Check("properties", "k=0 reduction p=%d" % p, not mism, ", ".join(mism)))
    kp = {r.g: r.value for r in kp_one_point(F(3, 2))}
    out.append(_eq("properties", "p->2 limit of the g=3/2 formula", appendix_p_to_2_limit(), kp[F(3, 2)]))
    rng = random.Random(seed)
    fails = 0
    for _ in range(1000):
        den = rng.randint(2, 9)
        b = F(rng.randint(1, den - 1), den) + rng.randint(-4, 4)
        a = b + rng.randint(-5, 5)
        c = b + rng.randint(-5, 5)
        try:
            lhs = gamma_ratio(a, b) * gamma_ratio(b, c)
        except ArithmeticError:
            continue
        if lhs != gamma_ratio(a, c):
            fails += 1
    out.append(Check("properties", "Gamma-ratio telescoping (1000 draws)", fails == 0, "%d failures" % fails))
    return out


SUITES = {
    "closed": suite_closed,
    "open": suite_open,
    "euler": suite_euler,
    "lie": suite_lie,
    "gw": suite_gw,
    "virasoro": suite_virasoro,
    "oracle": suite_oracle,
    "properties": suite_properties,
}
ORDER = list(SUITES)


def run_suite(name: str, golden=None):
    """Returns (checks, seconds)."""
    if name not in SUITES:
        raise KeyError(name)
    t0 = time.perf_counter()
    checks = SUITES[name](golden) if name == "virasoro" else SUITES[name]()
    return checks, time.perf_counter() - t0

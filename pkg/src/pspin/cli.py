"""
Command-line front end.

    pspin closed --p 3 --g-max 4 --format json
    pspin open --p 2 --g-max 3 --k 1
    pspin verify --suite all

Exit codes: 0 success, 1 computation error, 2 usage error, 3 failed
verification.
"""
from __future__ import annotations

import argparse
import io
import json
import sys

from .algebra import KPoly, as_rational, format_rational
from .errors import InvalidArgument, PspinError

__all__ = ["main", "run", "substitute_k", "render"]

SCHEMA = 1
EXIT_OK, EXIT_ERROR, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3


def substitute_k(records, k):
    """Evaluate every KPoly value at the rational ``k``.

        >>> from pspin.opensector import kp_one_point
        >>> [str(r.value) for r in substitute_k(kp_one_point(1), 1)][-1]
        '13/24'
    """
    k = as_rational(k)
    return [r.with_value(KPoly.const(r.value(k))) for r in records]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("%s: error: %s\n" % (self.prog, message))
        raise SystemExit(EXIT_USAGE)


def _rational(text):
    try:
        return as_rational(text)
    except (InvalidArgument, ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("not a rational: %r" % text) from None


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv", "pretty"), default="pretty")
    common.add_argument("--out", metavar="PATH")

    ap = _Parser(prog="pspin", description="Exact one-point intersection numbers of p-spin curves.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def spin(name, help_, models, default_g):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--g-max", type=_rational, default=as_rational(default_g))
        sp.add_argument("--model", choices=models, default=models[0])
        return sp

    spin("closed", "closed GUE one-point numbers", ("gue-closed",), 4)
    spin("lie", "O(2N), Sp(2N) and O(2N+1) one-point numbers", ("o2n", "sp", "o2n1"), "7/2")
    op = spin("open", "open one-point numbers, polynomial in k", ("gue-open", "o2n-open"), 3)
    kg = op.add_mutually_exclusive_group()
    kg.add_argument("--k", type=_rational, default=None)
    kg.add_argument("--k-symbolic", action="store_true", default=True)

    eu = sub.add_parser("euler", parents=[common], help="virtual Euler characteristics")
    eu.add_argument("--g-max", type=int, default=8)

    gw = sub.add_parser("gw", parents=[common], help="stationary Gromov-Witten invariants of CP^1")
    gw.add_argument("--d-max", type=int, default=12)
    gw.add_argument("--g-max", type=int, default=4)

    from .oracle import CLOSED_FORMS
    orc = sub.add_parser("oracle", parents=[common], help="floating-point check of the exact series")
    orc.add_argument("--model", choices=sorted(CLOSED_FORMS), default=None)
    orc.add_argument("--sigma", type=_rational, action="append", default=None)
    orc.add_argument("--g-max", type=_rational, default=as_rational(12))

    from .suites import ORDER
    ver = sub.add_parser("verify", parents=[common], help="run verification suites")
    ver.add_argument("--suite", choices=ORDER + ["all"], default="all")
    ver.add_argument("--golden", metavar="PATH", default=None)
    return ap


def _records_closed(a):
    from .closed import closed_one_point
    return {"model": a.model, "p": a.p, "g_max": format_rational(a.g_max)}, \
        [r.as_dict() for r in sorted(closed_one_point(a.p, a.g_max), key=lambda r: r.sort_key())]


def _records_lie(a):
    from .lie import o2n1_one_point, o2n_one_point, sp_one_point
    echo = {"model": a.model, "p": a.p, "g_max": format_rational(a.g_max)}
    if a.model == "o2n":
        res = o2n_one_point(a.p, a.g_max)
        echo["extrapolated"] = res.extrapolated
        recs = res.records
    else:
        cmp = (sp_one_point if a.model == "sp" else o2n1_one_point)(a.p, a.g_max)
        if not cmp.agrees:
            raise PspinError("%s disagrees with o2n at g = %s" % (
                a.model, ", ".join(format_rational(g) for g, _, _ in cmp.mismatches)))
        echo["normalization"] = "1/2"
        recs = cmp.records
    return echo, [r.as_dict() for r in sorted(recs, key=lambda r: r.sort_key())]


def _records_open(a):
    from .opensector import kp_one_point, open_o2n_one_point, open_p_one_point
    if a.model == "gue-open":
        recs = kp_one_point(a.g_max) if a.p == 2 else open_p_one_point(a.p, a.g_max)
    else:
        recs = open_o2n_one_point(a.p, a.g_max)
    echo = {"model": a.model, "p": a.p, "g_max": format_rational(a.g_max),
            "k": "symbolic" if a.k is None else format_rational(a.k)}
    if a.k is not None:
        recs = substitute_k(recs, a.k)
    return echo, [r.as_dict() for r in sorted(recs, key=lambda r: r.sort_key())]


def _records_euler(a):
    from .closed import euler_orientable
    from .lie import euler_nonorientable, euler_nonorientable_bf
    if a.g_max < 1:
        raise InvalidArgument("--g-max must be >= 1")
    out = [{"kind": "orientable", "g": str(g), "value": format_rational(euler_orientable(g, "zeta"))}
           for g in range(1, a.g_max + 1)]
    for g in range(1, a.g_max + 1):
        v = euler_nonorientable(g)
        if euler_nonorientable_bf(g) != v:
            raise PspinError("non-orientable routes disagree at g = %d" % g)
        out.append({"kind": "nonorientable", "g": str(g), "value": format_rational(v)})
    return {"g_max": a.g_max}, out


def _records_gw(a):
    from .gw import gw_table
    if a.d_max < 1 or a.g_max < 0:
        raise InvalidArgument("need --d-max >= 1 and --g-max >= 0")
    return {"d_max": a.d_max, "g_max": a.g_max}, [r.as_dict() for r in gw_table(a.d_max, a.g_max)]


def _records_oracle(a):
    from .oracle import _SERIES_OF, compare_series
    ids = [a.model] if a.model else sorted(_SERIES_OF)
    sigmas = a.sigma or [as_rational(x) for x in ("1/5", "2/5", "3/5", "1")]
    out = [compare_series(cid, _SERIES_OF[cid][1], s, a.g_max).as_dict() for cid in ids for s in sigmas]
    return {"model": a.model or "all", "g_max": format_rational(a.g_max),
            "sigma": [format_rational(s) for s in sigmas]}, out


def _records_verify(a):
    from .suites import ORDER, run_suite
    names = ORDER if a.suite == "all" else [a.suite]
    out = []
    for name in names:
        checks, _ = run_suite(name, a.golden)
        out += [c.as_dict() for c in checks]
    return {"suite": a.suite, "golden": a.golden or "builtin"}, out


_HANDLERS = {
    "closed": _records_closed, "lie": _records_lie, "open": _records_open,
    "euler": _records_euler, "gw": _records_gw, "oracle": _records_oracle,
    "verify": _records_verify,
}


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, list):
        return ",".join(map(str, v))
    return str(v).lower() if isinstance(v, bool) else str(v)


def render(doc: dict, fmt: str) -> str:
    records = doc["records"]
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    fields = list(records[0]) if records else []
    if fmt == "tsv":
        buf = io.StringIO()
        buf.write("\t".join(fields) + "\n")
        for r in records:
            buf.write("\t".join(_cell(r.get(f)) for f in fields) + "\n")
        return buf.getvalue()
    rows = [fields] + [[_cell(r.get(f)) for f in fields] for r in records]
    widths = [max(len(row[i]) for row in rows) for i in range(len(fields))]
    lines = ["# %s  %s" % (doc["command"], " ".join("%s=%s" % (k, _cell(v)) for k, v in doc["invocation"].items()))]
    for n, row in enumerate(rows):
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        if n == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    try:
        echo, records = _HANDLERS[args.command](args)
    except PspinError as e:
        sys.stderr.write("pspin: %s\n" % e)
        return EXIT_ERROR
    doc = {"schema": SCHEMA, "command": args.command, "invocation": echo, "records": records}
    text = render(doc, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.command == "verify":
        failed = [r for r in records if not r["ok"]]
        for r in failed:
            sys.stderr.write("FAIL [%s] %s: %s\n" % (r["suite"], r["check"], r["detail"]))
        sys.stderr.write("%d checks, %d failed\n" % (len(records), len(failed)))
        if failed:
            return EXIT_VERIFY
    return EXIT_OK


def main():
    raise SystemExit(run())

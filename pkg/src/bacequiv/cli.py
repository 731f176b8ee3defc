"""Command line entry point: ``bacequiv <subcommand> [options]``.

Exit status: 0 success, 1 usage error, 2 domain error, 3 verification
failure. Fractions are written as ``"num/den"`` strings; JSON keys are
sorted so identical inputs give byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile
from fractions import Fraction
from xml.sax.saxutils import escape

import numpy as np

from . import criteria, geometry, oracle
from ._errors import DomainError, ResourceLimitError
from .channel_core import ChannelParams, Region, as_fraction, build_matrix
from .ordered_form import equivalent, equivalent_by_families, ordered_form

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        text = self.format_help() if self.prog == "bacequiv" else self.format_usage()
        raise UsageError(f"{text}{self.prog}: error: {message}")


def frac_str(r: Fraction) -> str:
    return f"{r.numerator}/{r.denominator}"


class _Out:
    """Serialises one result in the requested format."""

    def __init__(self, fmt: str, precision: int):
        self.fmt = fmt
        self.precision = precision

    def num(self, x) -> float | None:
        x = float(x)
        if math.isinf(x) or math.isnan(x):
            return None
        return float(f"{x:.{self.precision}g}")

    def json(self, obj) -> str:
        return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"

    @staticmethod
    def csv(header, rows) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()


def _channel(p, q) -> ChannelParams:
    return ChannelParams(as_fraction(p), as_fraction(q))


def _order(value: str):
    if value.lower() in ("inf", "infinity", "∞"):
        return math.inf
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an order: {value!r}")
    return n


def _formats(*allowed):
    def check(args):
        if args.format not in allowed:
            raise UsageError(f"--format {args.format} is not available for {args.command}")
    return check


# -- subcommands -----------------------------------------------------------

def cmd_matrix(args, out):
    ch = _channel(args.p, args.q)
    m = build_matrix(args.n, ch)
    if out.fmt == "csv":
        rows = []
        for x in range(m.size):
            for y in range(m.size):
                e = m.entry(x, y)
                rows.append([x, y, *e, frac_str(m.value(x, y))])
        return out.csv(["x", "y", "a", "b", "c", "d", "value"], rows)
    return out.json({
        "n": args.n, "p": frac_str(ch.p), "q": frac_str(ch.q),
        "entries": [[frac_str(v) for v in row] for row in m.to_fractions()],
    })


def cmd_ordered_form(args, out):
    ch = _channel(args.p, args.q)
    form = ordered_form(build_matrix(args.n, ch))
    if out.fmt == "csv":
        return out.csv(["row"] + [str(j) for j in range(form.shape[1])],
                       [[i, *map(int, r)] for i, r in enumerate(form)])
    return out.json({"n": args.n, "p": frac_str(ch.p), "q": frac_str(ch.q),
                     "entries": form.tolist()})


def cmd_equiv(args, out):
    ch1, ch2 = _channel(args.p1, args.q1), _channel(args.p2, args.q2)
    if args.n == math.inf:
        sep = criteria.separation_order(ch1, ch2, args.horizon)
        result = {"equivalent": sep is None, "horizon": args.horizon, "n": "inf",
                  "separated_at": sep}
    else:
        method = {"matrix": equivalent, "families": equivalent_by_families,
                  "s": criteria.equivalent_by_s}[args.method]
        result = {"equivalent": bool(method(ch1, ch2, args.n)), "method": args.method,
                  "n": args.n}
    if out.fmt == "csv":
        return out.csv(list(sorted(result)), [[result[k] for k in sorted(result)]])
    return out.json(result)


def _criterion_dict(c: criteria.Criterion) -> dict:
    lo, hi = c.bounds()
    if c.stable:
        return {"kind": c.kind, "index": c.index, "interval": [frac_str(lo), frac_str(hi)]}
    return {"kind": c.kind, "index": c.index, "curve": frac_str(lo)}


def cmd_classify(args, out):
    c = criteria.classify(_channel(args.p, args.q), args.n)
    d = _criterion_dict(c)
    if out.fmt == "csv":
        lo, hi = c.bounds()
        return out.csv(["kind", "index", "lower", "upper"],
                       [[c.kind, c.index, frac_str(lo), frac_str(hi)]])
    return out.json(d)


def cmd_criticals(args, out):
    values = criteria.critical_set(args.n).values
    if out.fmt == "csv":
        return out.csv(["index", "value", "weight"],
                       [[i, frac_str(v), criteria.fraction_weight(v)] for i, v in enumerate(values)])
    return out.json({"n": args.n, "values": [frac_str(v) for v in values]})


def cmd_count(args, out):
    t = criteria.stable_count(args.n)
    if args.curves:
        totals = criteria.curve_totals(args.n)
        if out.fmt == "csv":
            return out.csv(["n", "t_n", *sorted(totals)], [[args.n, t, *(totals[k] for k in sorted(totals))]])
        return out.json({"n": args.n, "t_n": t, **totals})
    if out.fmt == "csv":
        return out.csv(["n", "t_n"], [[args.n, t]])
    return out.json(t)


def cmd_s_value(args, out):
    ch = _channel(args.p, args.q)
    if ch.region is Region.TRIANGLE_T:
        s = criteria.bac_s(ch, args.n)
        result = {"p": frac_str(ch.p), "q": frac_str(ch.q), "region": ch.region.value,
                  "display": out.num(s.display), "lower": frac_str(s.lower),
                  "upper": frac_str(s.upper), "n": args.n,
                  "exact": frac_str(s.exact) if s.exact is not None else None}
    else:
        value = criteria.extended_s(ch)
        result = {"p": frac_str(ch.p), "q": frac_str(ch.q), "region": ch.region.value,
                  "display": out.num(value) if not math.isinf(value) else "inf"}
    if out.fmt == "csv":
        keys = sorted(result)
        return out.csv(keys, [[result[k] for k in keys]])
    return out.json(result)


def cmd_distance(args, out):
    d = criteria.channel_distance(_channel(args.p1, args.q1), _channel(args.p2, args.q2))
    if out.fmt == "csv":
        return out.csv(["distance"], [[out.num(d)]])
    return out.json({"distance": out.num(d)})


def cmd_areas(args, out):
    if args.r:
        rs = [as_fraction(r) for r in args.r]
    elif args.n:
        rs = list(criteria.critical_set(args.n).values)
    else:
        raise UsageError("areas needs --r or --n")
    rows = [(r, geometry.area(r)) for r in rs]
    if out.fmt == "csv":
        return out.csv(["r", "area"], [[frac_str(r), out.num(a)] for r, a in rows])
    return out.json({"areas": [{"r": frac_str(r), "area": out.num(a)} for r, a in rows]})


def cmd_percentages(args, out):
    table = geometry.percentages(args.n)
    pct = list(table.rounded()) if args.rounded else [round(v, 2) for v in table.percentages]
    b = table.boundaries.values
    if out.fmt == "csv":
        return out.csv(["region", "lower", "upper", "percentage"],
                       [[i, frac_str(b[i]), frac_str(b[i + 1]), pct[i]] for i in range(len(pct))])
    return out.json({"n": args.n, "boundaries": [frac_str(v) for v in b],
                     "cumulative": [out.num(v) for v in table.cumulative],
                     "percentages": pct})


def cmd_ratios(args, out):
    recs = [geometry.ratios(n) for n in args.n]
    if out.fmt == "csv":
        return out.csv(["n", "R", "r"], [[r.n, round(r.R, 3), round(r.r_small, 3)] for r in recs])
    return out.json({"ratios": [{"n": r.n, "R": out.num(r.R), "r": out.num(r.r_small)} for r in recs]})


def _svg(curves, triangle: bool, size: int = 480) -> str:
    pad = 20
    s = size - 2 * pad

    def xy(p, q):
        return f"{pad + p * s:.3f},{pad + (1 - q) * s:.3f}"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
    ]
    if triangle:
        lines.append(f'<polygon id="frame" points="{xy(0, 0)} {xy(0, 1)} {xy(0.5, 0.5)}" '
                     'fill="none" stroke="#888" stroke-width="1"/>')
    else:
        lines.append(f'<rect id="frame" x="{pad}" y="{pad}" width="{s}" height="{s}" '
                     'fill="none" stroke="#888" stroke-width="1"/>')
    for i, c in enumerate(curves):
        label = escape(c.label)
        dashed = ' stroke-dasharray="4,4"' if c.region == "noisy" else ""
        pts = " L ".join(xy(p, q) for p, q in c.points)
        lines.append(f'<path id="curve-{i}" data-label="{label}" data-region="{escape(c.region)}" '
                     f'd="M {pts}" fill="none" stroke="#000" stroke-width="1"{dashed}>'
                     f'<title>{label}</title></path>')
        mp, mq = c.points[len(c.points) // 2]
        lines.append(f'<text x="{pad + mp * s:.3f}" y="{pad + (1 - mq) * s:.3f}" '
                     f'font-size="9">{label}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _curve_json(c, out):
    return {"label": c.label, "region": c.region,
            "r": frac_str(c.r) if c.r is not None else None,
            "points": [[out.num(p), out.num(q)] for p, q in c.points]}


def cmd_curve(args, out):
    c = geometry.trace_level_curve(as_fraction(args.r), args.samples, args.eps)
    if out.fmt == "svg":
        return _svg([c], triangle=True)
    if out.fmt == "csv":
        return out.csv(["p", "q"], [[out.num(p), out.num(q)] for p, q in c.points])
    return out.json(_curve_json(c, out))


def cmd_square_curves(args, out):
    curves = geometry.square_curves(args.n, args.samples, args.eps)
    if out.fmt == "svg":
        return _svg(curves, triangle=False)
    if out.fmt == "csv":
        rows = [[i, c.label, c.region, out.num(p), out.num(q)]
                for i, c in enumerate(curves) for p, q in c.points]
        return out.csv(["curve", "label", "region", "p", "q"], rows)
    return out.json({"n": args.n, "curves": [_curve_json(c, out) for c in curves]})


def cmd_verify(args, out):
    report = oracle.verify_theorem(args.n, args.reps).to_dict()
    sym = oracle.verify_symmetries(args.n, args.trials) if args.trials else True
    report["symmetries_ok"] = sym
    report["ok"] = report["ok"] and sym
    if out.fmt == "csv":
        keys = [k for k in sorted(report) if k != "mismatches"]
        text = out.csv(keys, [[report[k] for k in keys]])
    else:
        text = out.json(report)
    return text, (EXIT_OK if report["ok"] else EXIT_VERIFY)


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bacequiv", description="MLD equivalence of binary asymmetric channels.")
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    def add(name, func, help, formats=("json", "csv")):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--format", default="json", choices=("json", "csv", "svg"))
        sp.add_argument("--precision", type=int, default=12, help="significant digits for reals")
        sp.add_argument("--output", "-o", help="write to this file instead of stdout")
        sp.set_defaults(func=func, check=_formats(*formats))
        return sp

    def channel(sp, suffix=""):
        sp.add_argument(f"--p{suffix}", required=True, help="Pr(1|0) as a/b or decimal")
        sp.add_argument(f"--q{suffix}", required=True, help="Pr(0|1) as a/b or decimal")

    sp = add("matrix", cmd_matrix, "exact transition matrix")
    sp.add_argument("--n", type=int, required=True)
    channel(sp)
    sp = add("ordered-form", cmd_ordered_form, "ordered form of the transition matrix")
    sp.add_argument("--n", type=int, required=True)
    channel(sp)
    sp = add("equiv", cmd_equiv, "decide n-equivalence of two channels")
    sp.add_argument("--n", type=_order, required=True, help="order, or 'inf'")
    sp.add_argument("--horizon", type=int, default=criteria.DEFAULT_HORIZON)
    sp.add_argument("--method", choices=("matrix", "families", "s"), default="matrix")
    channel(sp, "1")
    channel(sp, "2")
    sp = add("classify", cmd_classify, "decision criterion of a channel")
    sp.add_argument("--n", type=int, required=True)
    channel(sp)
    sp = add("criticals", cmd_criticals, "critical fractions of order n")
    sp.add_argument("--n", type=int, required=True)
    sp = add("count", cmd_count, "number of stable criteria t_n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--curves", action="store_true", help="also report unstable curve totals")
    sp = add("s-value", cmd_s_value, "BAC-function value with exact bracket")
    sp.add_argument("--n", type=int, default=criteria.DEFAULT_HORIZON)
    channel(sp)
    sp = add("distance", cmd_distance, "criteria distance between two channels")
    channel(sp, "1")
    channel(sp, "2")
    sp = add("areas", cmd_areas, "area below level curves")
    sp.add_argument("--r", action="append")
    sp.add_argument("--n", type=int)
    sp = add("percentages", cmd_percentages, "share of each stable region")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--rounded", action="store_true", help="round to integers")
    sp = add("ratios", cmd_ratios, "quasi-symmetric and Z-nearest area ratios")
    sp.add_argument("--n", type=int, nargs="+", required=True)
    for name, func, help in (("curve", cmd_curve, "trace one level curve"),
                             ("square-curves", cmd_square_curves, "all critical curves on the unit square")):
        sp = add(name, func, help, formats=("json", "csv", "svg"))
        sp.add_argument("--samples", type=int, default=256)
        sp.add_argument("--eps", type=float, default=geometry.TAU_EPS)
        if name == "curve":
            sp.add_argument("--r", required=True)
        else:
            sp.add_argument("--n", type=int, required=True)
    sp = add("verify", cmd_verify, "brute-force check of the classification")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--reps", type=int, default=3)
    sp.add_argument("--trials", type=int, default=5, help="random channels for symmetry checks")
    return parser


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".bacequiv-")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.check(args)
        result = args.func(args, _Out(args.format, args.precision))
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        # --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except (DomainError, ResourceLimitError) as exc:
        print(f"bacequiv: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    text, code = result if isinstance(result, tuple) else (result, EXIT_OK)
    _write(text, args.output)
    return code


def main() -> None:
    sys.exit(run())

"""Command line front end: ``fillpairs {count,enumerate,verify,polygon,menage,bound,render}``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from xml.sax.saxutils import escape

from . import __version__
from .bounds import TABLE_COLUMNS, asymptotic_bound, bound_report, bound_table
from .census import (
    MAX_GENUS,
    CensusTooLarge,
    census,
    enumerate_brute,
    enumerate_constructive,
    squares_for,
    verify_one,
)
from .menage import gilbert_classes, is_all_opposite, menage_number
from .origami import GROUPS, Origami
from .perms import PermutationError, cycle_of, format_cycle, parse_cycle, parse_cycles
from .polygon import PolygonError, polygon_lines


class UsageError(Exception):
    """Bad arguments discovered after parsing; exit status 2."""


class CheckFailed(Exception):
    """An internal consistency check failed; exit status 1."""


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _summary(**fields) -> None:
    print(" ".join(f"{k}={v}" for k, v in fields.items()), file=sys.stderr)


def _origami_arg(args) -> Origami:
    try:
        p = parse_cycle(args.perm, args.n)
    except PermutationError as exc:
        raise UsageError(str(exc)) from exc
    return Origami(p)


def _run_census(args):
    g = args.genus
    if g < 2:
        raise UsageError("genus must be at least 2")
    if g >= 7 and not args.allow_long:
        raise UsageError(f"genus {g} scans {2 * g - 2}! cycles; rerun with --allow-long")
    try:
        res = census(g, args.method, args.workers, args.group, allow_long=args.allow_long)
    except CensusTooLarge as exc:
        raise UsageError(str(exc)) from exc
    if args.cross_check and g >= 3:
        other = (
            enumerate_constructive(g, args.group, args.allow_long)
            if args.method == "brute-force"
            else enumerate_brute(g, args.workers, args.group, args.allow_long)
        )
        if other.canonical_set() != res.canonical_set():
            _summary(genus=g, brute_vs_construction="mismatch", a=res.count, b=other.count)
            raise CheckFailed(f"brute force and construction disagree at genus {g}")
    return res


def cmd_count(args) -> None:
    res = _run_census(args)
    if args.format == "csv":
        text = "genus,squares,count,asymptotic_bound\n"
        bound = asymptotic_bound(res.genus) if res.genus >= 3 else ""
        text += f"{res.genus},{squares_for(res.genus)},{res.count},{bound}\n"
    else:
        text = f"{res.count}\n"
    _emit(args, text)
    _summary(genus=res.genus, count=res.count, method=res.method, elapsed=f"{res.elapsed:.2f}s")


def cmd_enumerate(args) -> None:
    res = _run_census(args)
    lines = [json.dumps(c.to_json(), separators=(", ", ": ")) for c in res.classes]
    _emit(args, "".join(line + "\n" for line in lines))
    _summary(genus=res.genus, count=res.count, method=res.method, elapsed=f"{res.elapsed:.2f}s")


def cmd_verify(args) -> None:
    try:
        p = parse_cycles(args.perm, args.n)
    except PermutationError as exc:
        raise UsageError(str(exc)) from exc
    report = verify_one(p, args.n)
    if args.format == "jsonl":
        text = json.dumps(report) + "\n"
    elif not report["is_ncycle"]:
        text = f"{args.perm}: invalid, not a single {p.n}-cycle\n"
    else:
        verdict = "valid" if report["valid"] else "invalid"
        text = f"{report['cycle']}: {verdict}, genus {report['genus']}\n"
        for key in (
            "vertex_count",
            "cone_orders",
            "euler_char",
            "stratum",
            "valid_via_trace",
            "canonical_diffs",
            "orbit_size",
        ):
            text += f"{key}: {report[key]}\n"
    _emit(args, text)
    _summary(valid=report["valid"])


def cmd_polygon(args) -> None:
    o = _origami_arg(args)
    try:
        lines = polygon_lines(o)
    except PolygonError as exc:
        _emit(args, "")
        raise CheckFailed(f"{o} does not fill a single polygon: {exc}") from exc
    _emit(args, "".join(line + "\n" for line in lines))
    _summary(sides=len(lines))


def cmd_menage(args) -> None:
    n = args.n
    if n < 3:
        raise UsageError("--n must be at least 3")
    if args.exclude_opposite and n % 2 == 0:
        raise UsageError("--exclude-opposite needs odd n")
    start = time.perf_counter()
    if args.classes:
        classes = gilbert_classes(n)
        if args.exclude_opposite:
            classes = [c for c in classes if not is_all_opposite(c.representative)]
        text = "".join(
            f"{' '.join(str(v + 1) for v in c.representative)}\tsize={c.size}\n" for c in classes
        )
        count = len(classes)
    else:
        count = menage_number(n)
        if args.exclude_opposite:
            # the opposite seating is a single permutation
            count -= 1
        text = f"{count}\n"
    _emit(args, text)
    _summary(n=n, count=count, elapsed=f"{time.perf_counter() - start:.2f}s")


def cmd_bound(args) -> None:
    if args.table:
        g_max = args.max or args.genus or MAX_GENUS
        if g_max < 3:
            raise UsageError("--max must be at least 3")
        _emit(args, bound_table(g_max))
        _summary(rows=g_max - 2)
        return
    if args.genus is None or args.genus < 3:
        raise UsageError("bound needs --genus >= 3 (or --table)")
    r = bound_report(args.genus)
    header = ",".join(TABLE_COLUMNS[:2] + TABLE_COLUMNS[3:]) + ",classes\n"
    text = header + f"{r.g},{2 * r.g - 1},{r.asymptotic},{r.exact_bound},{r.exact_bound_excl},{r.A}\n"
    _emit(args, text)
    _summary(genus=r.g, exact_bound=r.exact_bound)


def render_text(o: Origami) -> str:
    n = o.n
    w = len(str(n)) + 1
    top = "".join(f"{o.p(i) + 1:>{w}} " for i in range(n))
    rule = "+" + "+".join("-" * w for _ in range(n)) + "+"
    cells = "|" + "|".join(f"{i + 1:>{w}}" for i in range(n)) + "|"
    return f"p = {format_cycle(cycle_of(o.p))}\ntop glues to:\n {top.rstrip()}\n{rule}\n{cells}\n{rule}\n"


def render_svg(o: Origami, cell: int = 40) -> str:
    n = o.n
    width, height = cell * n + 20, cell + 70
    y0 = 50
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        "<defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"4\" refY=\"4\" "
        "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\"/></marker></defs>",
        f"<title>{escape(format_cycle(cycle_of(o.p)))}</title>",
    ]
    for i in range(n):
        x = 10 + cell * i
        cx = x + cell // 2
        parts.append(
            f'<rect x="{x}" y="{y0}" width="{cell}" height="{cell}" fill="none" stroke="black"/>'
        )
        parts.append(
            f'<text x="{cx}" y="{y0 + cell // 2 + 5}" text-anchor="middle">{i + 1}</text>'
        )
        parts.append(
            f'<line x1="{cx}" y1="{y0 - 2}" x2="{cx}" y2="{y0 - 22}" stroke="black" '
            'marker-end="url(#arrow)"/>'
        )
        parts.append(
            f'<text x="{cx}" y="{y0 - 28}" text-anchor="middle" font-size="12">{o.p(i) + 1}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_render(args) -> None:
    o = _origami_arg(args)
    _emit(args, render_svg(o) if args.format == "svg" else render_text(o))
    _summary(n=o.n, format=args.format)


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fillpairs",
        description="Enumerate and check coherent minimally intersecting filling pairs via origamis.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_choices=None, fmt_default=None):
        p.add_argument("-o", "--output", help="write the primary output here instead of stdout")
        if fmt_choices:
            p.add_argument("--format", choices=fmt_choices, default=fmt_default)

    def census_opts(p):
        p.add_argument("--genus", "-g", type=int, required=True)
        p.add_argument("--method", choices=("brute-force", "construction"), default="brute-force")
        p.add_argument("--workers", "-j", type=_positive, default=1)
        p.add_argument("--group", choices=GROUPS, default="mirror")
        p.add_argument("--allow-long", action="store_true", help="permit genus 7 and beyond")
        p.add_argument(
            "--cross-check", action="store_true", help="also run the other method; exit 1 on mismatch"
        )

    p = sub.add_parser("count", help="number of classes at a genus")
    census_opts(p)
    common(p, ("text", "csv"), "text")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="classes at a genus as JSON lines")
    census_opts(p)
    common(p, ("jsonl",), "jsonl")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="diagnose one vertical gluing")
    p.add_argument("--perm", required=True, help='1-based cycle notation, e.g. "(1 2 5 3 4)"')
    p.add_argument("--n", type=int)
    common(p, ("text", "jsonl"), "text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("polygon", help="the 4n-gon side list of a valid pair")
    p.add_argument("--perm", required=True)
    p.add_argument("--n", type=int)
    common(p)
    p.set_defaults(func=cmd_polygon)

    p = sub.add_parser("menage", help="ménage numbers and rotation classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--classes", action="store_true", help="list class representatives (1-based)")
    p.add_argument("--exclude-opposite", action="store_true")
    common(p)
    p.set_defaults(func=cmd_menage)

    p = sub.add_parser("bound", help="upper bounds on the class count")
    p.add_argument("--genus", "-g", type=int)
    p.add_argument("--table", action="store_true")
    p.add_argument("--max", type=int)
    common(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("render", help="draw the square row of an origami")
    p.add_argument("--perm", required=True)
    p.add_argument("--n", type=int)
    common(p, ("text", "svg"), "text")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except UsageError as exc:
        print(f"fillpairs {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except CheckFailed as exc:
        print(f"fillpairs {args.command}: check failed: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``genrose {moment,table,grid,plot,verify}``."""

from __future__ import annotations

import argparse
import io
import json
import sys

from . import moments, svgplot
from .errors import DomainError
from .parameters import make_gamma_pair
from .sweeps import (
    CsvFormatError,
    detect_kind,
    fmt_float,
    grid_cells,
    read_grid_csv,
    read_table_csv,
    render_table_text,
    resolve_alpha,
    table_rows,
    write_grid_csv,
    write_table_csv,
)
from .verify import SUITES, run_suite

EXIT_OK, EXIT_VERIFY, EXIT_DOMAIN, EXIT_IO, EXIT_PARSE = 0, 1, 2, 3, 4

EPILOG = """\
exit codes:
  0  success
  1  a verification check failed
  2  parameter outside the domain (or bad command line)
  3  file could not be read or written
  4  malformed CSV input
"""


class _Failure(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _emit(text, output):
    if output is None or output == "-":
        sys.stdout.write(text)
        return
    try:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise _Failure(EXIT_IO, f"cannot write {output}: {exc.strerror or exc}") from None


def _sig12(x):
    return format(x, ".12g")


def cmd_moment(args):
    p = make_gamma_pair(args.gamma1, args.gamma2)
    rep = moments.report(p, args.amplitude)
    data = rep.as_dict()
    fmt = args.format or "text"
    if fmt == "json":
        return json.dumps(data, indent=2, sort_keys=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        buf.write("quantity,value,rounded\n")
        for k, v in data.items():
            buf.write(f"{k},{fmt_float(v)},{v:.3f}\n")
        return buf.getvalue()
    lines = [f"{'quantity':<10}{'value':>22}{'rounded':>12}"]
    for k, v in data.items():
        lines.append(f"{k:<10}{_sig12(v):>22}{v:>12.3f}")
    return "\n".join(lines) + "\n"


def cmd_table(args):
    alpha = resolve_alpha(args.hurst, args.alpha)
    rows = table_rows(alpha, args.points)
    fmt = args.format or ("csv" if args.output else "text")
    if fmt == "csv":
        buf = io.StringIO()
        write_table_csv(rows, buf)
        return buf.getvalue()
    if fmt == "json":
        payload = {
            "alpha": alpha,
            "hurst": round(alpha + 2.0, 12),
            "rows": [{"gamma1": r.gamma1, "gamma2": r.gamma2, "M3": r.m3} for r in rows],
        }
        return json.dumps(payload, indent=2) + "\n"
    return render_table_text(rows, alpha)


def cmd_grid(args):
    cells = grid_cells(args.step)
    buf = io.StringIO()
    write_grid_csv(cells, buf)
    return buf.getvalue()


def cmd_plot(args):
    try:
        with open(args.input, encoding="utf-8", newline="") as fh:
            text = fh.read()
    except OSError as exc:
        raise _Failure(EXIT_IO, f"cannot read {args.input}: {exc.strerror or exc}") from None
    kind = args.kind or ("contour" if detect_kind(text) == "grid" else "line")
    if kind == "contour":
        return svgplot.contour_svg(read_grid_csv(io.StringIO(text)))
    return svgplot.line_svg(read_table_csv(io.StringIO(text)))


def _parse_tolerances(items):
    out = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep:
            raise DomainError(f"tolerance override must look like NAME=VALUE, got {item!r}")
        try:
            out[name.strip()] = float(value)
        except ValueError:
            raise DomainError(f"tolerance {name!r} is not a number: {value!r}") from None
    return out


def cmd_verify(args):
    records = run_suite(args.suite, seed=args.seed, tolerances=_parse_tolerances(args.tolerance))
    failed = [r for r in records if not r["pass"]]
    report = {
        "suite": args.suite,
        "seed": args.seed,
        "passed": not failed,
        "checks": records,
    }
    text = json.dumps(report, indent=2) + "\n"
    if failed:
        _emit(text, args.output)
        names = ", ".join(r["check"] for r in failed)
        raise _Failure(EXIT_VERIFY, f"{len(failed)} of {len(records)} checks failed: {names}")
    return text


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), help="output format")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")

    parser = argparse.ArgumentParser(
        prog="genrose",
        description="Moments of the generalized Rosenblatt distribution.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("moment", parents=[common], help="moments at one (gamma1, gamma2)", epilog=EPILOG,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("gamma1", type=float)
    p.add_argument("gamma2", type=float)
    p.add_argument("--amplitude", type=float, default=None,
                   help="kernel amplitude A (default: the value giving unit variance)")
    p.set_defaults(func=cmd_moment)

    p = sub.add_parser("table", parents=[common], help="M3 along gamma1 at fixed H", epilog=EPILOG,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--hurst", type=float)
    which.add_argument("--alpha", type=float)
    p.add_argument("--points", type=int, default=10)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("grid", parents=[common], help="M3 on a lattice over (-1,-1/2)^2 (CSV)", epilog=EPILOG,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--step", type=float, default=0.005)
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("plot", parents=[common], help="render a grid or table CSV as SVG", epilog=EPILOG,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("input", help="CSV written by the grid or table command")
    p.add_argument("--kind", choices=("contour", "line"), default=None,
                   help="contour for grid CSV, line for table CSV (default: from the header)")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("verify", parents=[common], help="run an oracle suite, JSON report", epilog=EPILOG,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--tolerance", action="append", metavar="NAME=VALUE",
                   help="override a tolerance, e.g. mu3=1e-9 (repeatable)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.func(args)
        _emit(text, args.output)
    except _Failure as exc:
        print(f"genrose: {exc}", file=sys.stderr)
        return exc.code
    except DomainError as exc:
        print(f"genrose: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except CsvFormatError as exc:
        print(f"genrose: malformed CSV: {exc}", file=sys.stderr)
        return EXIT_PARSE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

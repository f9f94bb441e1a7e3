"""Command-line interface.

Exit codes: 0 success, 1 verification or equivalence failure,
2 undecided outcomes present, 3 usage error.
"""

from __future__ import annotations

import argparse
import sys
from itertools import permutations
from pathlib import Path

from .arrays import format_array, parse
from .coloring import (
    NotPerfectError,
    PeriodicColoring,
    ShiftPeriodError,
    ShiftSelection,
    equivalent,
    is_distance_regular,
    parameter_matrix,
    read_hexcol,
    shift_cosets,
    write_hexcol,
)
from .render import render
from .search import (
    DEFAULT_MAX_CELLS,
    DEFAULT_RADIUS,
    DEFAULT_SMALL_CELLS,
    UNDECIDED,
    classify,
    classify_array,
    outcome_json,
    report_lines,
    witness_filename,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_UNDECIDED = 2
EXIT_USAGE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _load(path: str):
    try:
        return read_hexcol(Path(path))
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    except ValueError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _parse_array(text: str):
    try:
        return parse(text)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def cmd_verify(args) -> int:
    doc = _load(args.file)
    try:
        matrix = parameter_matrix(doc.coloring)
    except NotPerfectError as exc:
        print(f"FAIL {exc}")
        return EXIT_FAIL
    if matrix.rows != doc.array.rows:
        print(
            f"FAIL matrix {matrix.rows} does not match the declared "
            f"array {format_array(doc.array)}"
        )
        return EXIT_FAIL
    if not is_distance_regular(doc.coloring):
        print(f"FAIL matrix of {args.file} is not tridiagonal")
        return EXIT_FAIL
    print(format_array(doc.array))
    return EXIT_OK


def cmd_classify(args) -> int:
    outcomes = classify(
        args.colors,
        r_max=args.refute_radius,
        small_cells=min(args.torus_cells, DEFAULT_SMALL_CELLS),
        max_cells=args.torus_cells,
        threads=args.threads,
    )
    if args.json:
        for o in outcomes:
            print(outcome_json(o))
    else:
        for line in report_lines(outcomes, out_dir=args.out_dir):
            print(line)
    if any(o.status == UNDECIDED for o in outcomes):
        return EXIT_UNDECIDED
    return EXIT_OK


def cmd_search(args) -> int:
    array = _parse_array(args.array)
    outcome = classify_array(
        array,
        r_max=args.refute_radius,
        small_cells=min(args.torus_cells, DEFAULT_SMALL_CELLS),
        max_cells=args.torus_cells,
    )
    out_dir = args.out_dir if args.out_dir is not None else "."
    print(report_lines([outcome], out_dir=out_dir)[0])
    if outcome.status == UNDECIDED:
        return EXIT_UNDECIDED
    return EXIT_OK


def cmd_refute(args) -> int:
    array = _parse_array(args.array)
    from .search import refutation_radius

    radius = refutation_radius(array, r_max=args.radius)
    if radius is None:
        print(f"not refuted up to radius {args.radius}")
        return EXIT_UNDECIDED
    print(radius)
    return EXIT_OK


def cmd_equiv(args) -> int:
    a = _load(args.file1).coloring
    b = _load(args.file2).coloring
    if a.k == b.k:
        if args.allow_color_swap:
            swaps = list(permutations(range(b.k)))
        else:
            swaps = [tuple(range(b.k))]
        for swap in swaps:
            relabeled = PeriodicColoring(
                tuple(tuple(swap[v] for v in row) for row in b.grid), b.k
            )
            if equivalent(a, relabeled):
                print("equivalent")
                return EXIT_OK
    print("nonequivalent")
    return EXIT_FAIL


def cmd_shift(args) -> int:
    doc = _load(args.file)
    c = doc.coloring
    try:
        keys = frozenset(int(t) for t in args.select.split(",") if t)
    except ValueError:
        print(f"error: bad selection {args.select!r}", file=sys.stderr)
        return EXIT_USAGE
    try:
        sel = ShiftSelection(c.H, c.W, keys)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        shifted = shift_cosets(c, sel)
    except ShiftPeriodError as exc:
        print(f"FAIL {exc}")
        return EXIT_FAIL
    matrix = parameter_matrix(shifted)
    if matrix.rows != doc.array.rows:
        print("FAIL shifted matrix changed")
        return EXIT_FAIL
    write_hexcol(Path(args.out), doc.array, shifted)
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_render(args) -> int:
    doc = _load(args.file)
    window = None
    if args.window is not None:
        try:
            r, _, c = args.window.partition("x")
            window = (int(r), int(c))
        except ValueError:
            print(f"error: bad window {args.window!r}", file=sys.stderr)
            return EXIT_USAGE
    try:
        text = render(doc.coloring, args.format, window)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out is not None:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return EXIT_OK


def cmd_catalog(args) -> int:
    from . import catalog

    if args.action == "list":
        for name in catalog.list_names():
            print(name)
        return EXIT_OK
    ok, lines = catalog.verify_all()
    for line in lines:
        print(line)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> _Parser:
    parser = _Parser(prog="hexcrc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a HEXCOL file against its declared array")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="classify all candidate arrays for k colors")
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--refute-radius", type=int, default=DEFAULT_RADIUS)
    p.add_argument("--torus-cells", type=int, default=DEFAULT_MAX_CELLS)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out-dir", default=None, help="write witness files here")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("search", help="decide a single array")
    p.add_argument("array")
    p.add_argument("--refute-radius", type=int, default=DEFAULT_RADIUS)
    p.add_argument("--torus-cells", type=int, default=DEFAULT_MAX_CELLS)
    p.add_argument("--out-dir", default=None)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("refute", help="search for a refutation radius")
    p.add_argument("array")
    p.add_argument("--radius", type=int, default=DEFAULT_RADIUS)
    p.set_defaults(func=cmd_refute)

    p = sub.add_parser("equiv", help="test two colorings for equivalence")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--allow-color-swap", action="store_true")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("shift", help="shift selected coset lines (matrix preserved)")
    p.add_argument("file")
    p.add_argument("--select", required=True, help="comma-separated even line keys")
    p.add_argument("-o", "--out", required=True)
    p.set_defaults(func=cmd_shift)

    p = sub.add_parser("render", help="render a coloring as ascii or svg")
    p.add_argument("file")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--window", default=None, help="RxC, at least one domain")
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("catalog", help="list or verify the bundled catalog")
    p.add_argument("action", choices=("list", "verify"))
    p.set_defaults(func=cmd_catalog)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

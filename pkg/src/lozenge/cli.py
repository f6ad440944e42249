"""Command line interface: ``lozenge count|enumerate|verify|render``.

Exit codes: 0 success, 1 a verification check failed, 2 bad input,
3 oracle size guard exceeded, 4 file could not be read or written.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core import RowSet, count_to_json
from .gtp import count_formula, count_recursive, enumerate_patterns, pattern_from_json, pattern_to_json
from .lattice import Region, brute_force_count, build_dented_hexagon, glue_halves, pattern_to_tiling
from .render import Style, region_to_svg, tiling_to_svg
from .shuffle import RestrictedSpec, count_dented
from .verify import (check_dented_oracle, check_factored, check_gtp_agreement,
                     check_random_invariance, check_restricted, check_shuffle_ratio,
                     check_shuffle_ratio_random, check_spec)

EXIT_OK, EXIT_FAILED, EXIT_BAD_INPUT, EXIT_GUARD, EXIT_IO = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _rowset(text: str) -> RowSet:
    try:
        return RowSet.from_json(json.loads(text))
    except (ValueError, TypeError) as exc:
        raise CliError(f"bad row set {text!r}: {exc}", EXIT_BAD_INPUT) from None


def _load_json(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_IO) from None
    try:
        return json.loads(text)
    except ValueError as exc:
        raise CliError(f"{path} is not valid JSON: {exc}", EXIT_BAD_INPUT) from None


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(", ", ": ")))


def _guard(region: Region, max_cells: int) -> None:
    if len(region.cells) > max_cells:
        raise CliError(f"region has {len(region.cells)} cells, over --max-cells {max_cells}",
                       EXIT_GUARD)


def cmd_count(args) -> int:
    u = _rowset(args.U)
    l = _rowset(args.L) if args.L is not None else None
    if not u or (l is not None and not l):
        raise CliError("bottom rows must be nonempty", EXIT_BAD_INPUT)
    if args.method == "formula":
        count = count_formula(u) if l is None else count_dented(u, l)
    elif args.method == "recursion":
        count = count_recursive(u) if l is None else count_recursive(u) * count_recursive(l)
    else:
        N = args.N or max(u + (l or ()))
        try:
            if l is None:
                # half-hexagon with the bottom-row verticals pinned to U
                region = Region(len(u), 0, N, u)
            else:
                region = build_dented_hexagon(len(u), len(l), N, u, l)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_BAD_INPUT) from None
        _guard(region, args.max_cells)
        count = brute_force_count(region, allow_protruding=False)
    _emit({"U": list(u), "L": None if l is None else list(l),
           "count": count_to_json(count), "method": args.method})
    return EXIT_OK


def cmd_enumerate(args) -> int:
    u = _rowset(args.U)
    if not u:
        raise CliError("bottom row must be nonempty", EXIT_BAD_INPUT)
    for k, pattern in enumerate(enumerate_patterns(u)):
        if args.limit is not None and k >= args.limit:
            break
        print(json.dumps(pattern_to_json(pattern), separators=(",", ":")))
    return EXIT_OK


def _verify_results(args) -> list:
    if args.spec:
        data = _load_json(args.spec)
        try:
            spec = RestrictedSpec.from_json(data)
            shuffles = [RowSet(s) for s in data.get("shuffles", [])]
            if "S" in data:
                shuffles.append(RowSet(data["S"]))
        except (ValueError, TypeError, AttributeError) as exc:
            raise CliError(f"bad spec: {exc}", EXIT_BAD_INPUT) from None
        try:
            return check_spec(spec, shuffles, args.max_cells)
        except ValueError as exc:
            raise CliError(f"bad spec: {exc}", EXIT_BAD_INPUT) from None
    top = args.sweep
    if top < 1:
        raise CliError("--sweep needs a positive bound", EXIT_BAD_INPUT)
    results = [
        check_gtp_agreement(min(top, 8), 5),
        check_dented_oracle(min(top, 5)),
        check_factored(top),
        check_shuffle_ratio(top),
        check_shuffle_ratio_random(args.random, max(top, 12), args.seed),
    ]
    results.extend(check_restricted(top, args.max_b))
    results.append(check_random_invariance(args.random, max(top, 12), args.max_b, args.seed))
    return [r for r in results if r.cases]


def cmd_verify(args) -> int:
    results = _verify_results(args)
    for result in results:
        _emit(result.to_json())
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


def _style(args) -> Style:
    palette = Style.palette
    if args.palette:
        palette = tuple(args.palette.split(","))
        if len(palette) != 3:
            raise CliError("--palette needs three comma-separated colours", EXIT_BAD_INPUT)
    return Style(scale=args.scale, palette=palette, show_diagonal=args.show_diagonal,
                 show_dents=args.dents == "white")


def _tiling_from_patterns(data):
    try:
        upper = pattern_from_json(data["upper"]) if "upper" in data else None
        lower = pattern_from_json(data["lower"]) if "lower" in data else None
        if upper is None and lower is None:
            raise ValueError("patterns file needs 'upper' and/or 'lower'")
        bottoms = [p[-1][-1] for p in (upper, lower) if p is not None]
        N = int(data.get("N", max(bottoms)))
        if upper is not None and lower is not None:
            return glue_halves(upper, lower, N)
        if upper is not None:
            return pattern_to_tiling(upper, N, "upper")
        return pattern_to_tiling(lower, N, "lower")
    except (ValueError, TypeError, KeyError, AttributeError) as exc:
        raise CliError(f"bad patterns file: {exc}", EXIT_BAD_INPUT) from None


def cmd_render(args) -> int:
    style = _style(args)
    if args.region:
        try:
            region = Region.from_json(_load_json(args.region))
        except (ValueError, TypeError) as exc:
            raise CliError(f"bad region file: {exc}", EXIT_BAD_INPUT) from None
        svg = region_to_svg(region, style)
    else:
        data = _load_json(args.patterns)
        if not isinstance(data, dict):
            raise CliError("patterns file must hold a JSON object", EXIT_BAD_INPUT)
        svg = tiling_to_svg(_tiling_from_patterns(data), style)
    try:
        Path(args.out).write_text(svg)
    except OSError as exc:
        raise CliError(f"cannot write {args.out}: {exc}", EXIT_IO) from None
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lozenge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count patterns or dented-hexagon tilings")
    p.add_argument("--U", required=True, help="bottom row as a JSON array, e.g. [1,3,6,8]")
    p.add_argument("--L", help="second bottom row; reports the dented-hexagon count")
    p.add_argument("--method", choices=("formula", "recursion", "oracle"), default="formula")
    p.add_argument("--N", type=int, help="diagonal length for the oracle (default max(U|L))")
    p.add_argument("--max-cells", type=int, default=400)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="stream patterns as JSON lines")
    p.add_argument("--U", required=True)
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="cross-check formulas against each other and the oracle")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--spec", help="JSON file with U, L, V, B and a list of shuffles")
    group.add_argument("--sweep", type=int, metavar="MAXPOS", help="exhaustive sweep bound")
    p.add_argument("--max-b", type=int, default=3)
    p.add_argument("--random", type=int, default=1000, help="random instances in the sweep")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-cells", type=int, default=400)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="write an SVG of a region or glued tiling")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--region", help='JSON file {"m", "n", "N", "U", "L"}')
    group.add_argument("--patterns", help='JSON file {"upper", "lower", "N"}')
    p.add_argument("--out", required=True)
    p.add_argument("--scale", type=float, default=20.0)
    p.add_argument("--palette", help="three colours: vertical,left-tilted,right-tilted")
    p.add_argument("--show-diagonal", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--dents", choices=("white", "omit"), default="white")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"lozenge: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource limit.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from . import formulas as fm
from .cayley import (
    ARROWHEAD,
    DIAMOND,
    LevelCeilingError,
    make_graph,
    parse_vertex,
    set_max_level,
)
from .export import FORMATS, render
from .metrics import shortest_path
from .verify import CLAIMS, render_kv, render_table, run_sweep

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def parse_range(text: str) -> tuple[int, int]:
    """``"5"`` -> (5, 5); ``"1..6"`` -> (1, 6)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad level {text!r}; expected N or MIN..MAX") from None
    if lo < 0 or hi < lo:
        raise UsageError(f"bad level range {text!r}")
    return lo, hi


def single_level(text: str) -> int:
    lo, hi = parse_range(text)
    if lo != hi:
        raise UsageError(f"expected a single level, got {text!r}")
    return lo


def split_list(text: str | None) -> list[str] | None:
    if text is None:
        return None
    return [t.strip() for t in text.split(",") if t.strip()]


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", required=True, help="graph level n (2^n x 2^n torus)")
    p.add_argument("--variant", choices=(ARROWHEAD, DIAMOND), default=ARROWHEAD)
    d = p.add_mutually_exclusive_group()
    d.add_argument("--directed", dest="directed", action="store_true")
    d.add_argument("--undirected", dest="directed", action="store_false")
    p.set_defaults(directed=False)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arrowhead",
        description="Arrowhead and diamond Cayley graphs: export, statistics, routing and verification.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--max-level", type=int, default=None,
        help="vertex ceiling as a level (default: $ARROWHEAD_MAX_LEVEL or 12)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write the graph in an export format")
    _graph_args(gen)
    gen.add_argument("--format", choices=FORMATS, default="edge_list")
    gen.add_argument("--out", default=None, help="output file (default: stdout)")

    st = sub.add_parser("stats", help="print formula and oracle statistics as JSON")
    _graph_args(st)

    ver = sub.add_parser("verify", help="sweep closed forms against the BFS oracle")
    ver.add_argument("--n", default="1..8", help="level range MIN..MAX (default 1..8)")
    ver.add_argument("--families", default=None, help=f"comma list from {','.join(fm.FAMILIES)}")
    ver.add_argument("--claims", default=None, help="comma list of claim ids (default: all)")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--samples", type=int, default=8, help="random origins for transitivity")
    ver.add_argument("--out", default=None, help="report file; the table then goes to stdout")
    ver.add_argument("--timings", action="store_true", help="include wall times in the report")

    rt = sub.add_parser("route", help="print a shortest path")
    _graph_args(rt)
    rt.add_argument("source", help="x,y")
    rt.add_argument("target", help="x,y")
    return parser


def cmd_generate(args) -> int:
    g = make_graph(single_level(args.n), args.variant, args.directed)
    _write(render(g, args.format), args.out)
    return EXIT_OK


def cmd_stats(args) -> int:
    g = make_graph(single_level(args.n), args.variant, args.directed)
    _write(render(g, "json_stats"), None)
    return EXIT_OK


def cmd_verify(args) -> int:
    lo, hi = parse_range(args.n)
    families = split_list(args.families) or list(fm.FAMILIES)
    bad = set(families) - set(fm.FAMILIES)
    if bad:
        raise UsageError(f"unknown families: {', '.join(sorted(bad))}")
    claims = split_list(args.claims)
    if claims is not None:
        bad = set(claims) - set(CLAIMS)
        if bad:
            raise UsageError(f"unknown claims: {', '.join(sorted(bad))}")
    report = run_sweep(lo, hi, families, claims, seed=args.seed, samples=args.samples)
    kv = render_kv(report, timings=args.timings)
    if args.out is None:
        _write(kv, None)
    else:
        _write(kv, args.out)
        sys.stdout.write(render_table(report))
    for c in report.failed:
        print(
            f"FAILED {c.claim_id} family={c.family} n={c.n}: "
            f"expected {c.expected!r}, observed {c.observed!r}",
            file=sys.stderr,
        )
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_route(args) -> int:
    g = make_graph(single_level(args.n), args.variant, args.directed)
    try:
        src, dst = parse_vertex(args.source), parse_vertex(args.target)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for v in (src, dst):
        if not (0 <= v.x < g.side and 0 <= v.y < g.side):
            raise UsageError(f"vertex {v} out of range for n={g.level}")
    path = shortest_path(g, src, dst)
    sys.stdout.write(f"{len(path) - 1}\n" + " ".join(f"({v})" for v in path) + "\n")
    return EXIT_OK


COMMANDS = {
    "generate": cmd_generate,
    "stats": cmd_stats,
    "verify": cmd_verify,
    "route": cmd_route,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    set_max_level(args.max_level)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"arrowhead: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LevelCeilingError as exc:
        print(f"arrowhead: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    finally:
        set_max_level(None)


if __name__ == "__main__":
    sys.exit(main())

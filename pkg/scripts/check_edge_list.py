#!/usr/bin/env python3
"""Re-read an exported edge list and check degree and edge-count invariants.

Uses only the standard library so it stays independent of the package.

    arrowhead generate --n 4 --format edge_list | python scripts/check_edge_list.py --n 4
"""
import argparse
import re
import sys
from collections import Counter

LINE = re.compile(r"^(\d+),(\d+) (->|--) (\d+),(\d+)$")


def check(lines, n):
    m = 2 ** n
    out_deg, in_deg, deg = Counter(), Counter(), Counter()
    count = 0
    arrows = set()
    for raw in lines:
        match = LINE.match(raw.rstrip("\n"))
        if not match:
            return f"malformed line: {raw!r}"
        x1, y1, arrow, x2, y2 = match.groups()
        u, v = (int(x1), int(y1)), (int(x2), int(y2))
        if not all(0 <= c < m for c in u + v):
            return f"vertex out of range: {raw!r}"
        arrows.add(arrow)
        count += 1
        out_deg[u] += 1
        in_deg[v] += 1
        deg[u] += 1
        deg[v] += 1
    if len(arrows) > 1:
        return "mixed directed and undirected lines"
    if count != 3 * 4 ** n:
        return f"expected {3 * 4 ** n} edges, got {count}"
    vertices = [(x, y) for x in range(m) for y in range(m)]
    if arrows == {"->"}:
        bad = [v for v in vertices if out_deg[v] != 3 or in_deg[v] != 3]
    else:
        bad = [v for v in vertices if deg[v] != 6]
    if bad:
        return f"wrong degree at {bad[:5]}"
    return None


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("path", nargs="?", default="-")
    args = p.parse_args(argv)
    stream = sys.stdin if args.path == "-" else open(args.path)
    with stream:
        problem = check(stream, args.n)
    if problem:
        print(f"FAIL {problem}")
        return 1
    print("OK")
    return 0


if __name__ == "__main__":
    sys.exit(main())

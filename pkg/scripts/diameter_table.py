#!/usr/bin/env python3
"""Print diameters per level: closed form, recurrence and BFS oracle for the three families."""
import argparse
import time

from arrowhead import formulas as fm
from arrowhead.cayley import LevelCeilingError, make_graph
from arrowhead.metrics import antipodals_oracle, diameter_oracle


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-max", type=int, default=9)
    args = p.parse_args()

    print(f"{'n':>2} {'N':>8} | {'D_n':>5} {'rec':>5} {'bfs':>5} {'#ant':>4} | "
          f"{'AT':>5} {'bfs':>5} {'#ant':>4} | {'DT':>5} {'bfs':>5} {'#ant':>5} | {'s':>6}")
    for n in range(args.n_max + 1):
        start = time.perf_counter()
        row = [f"{n:>2} {4 ** n:>8} |"]
        for family in fm.FAMILIES:
            g_args = fm.FAMILY_GRAPH[family]
            formula = fm.diameter(family, n)
            try:
                g = make_graph(n, *g_args)
                oracle, count = diameter_oracle(g), len(antipodals_oracle(g))
            except LevelCeilingError:
                oracle, count = "-", "-"
            if family == fm.T:
                row.append(f"{formula:>5} {fm.undirected_recurrence(n):>5} {oracle:>5} {count:>4} |")
            else:
                row.append(f"{formula:>5} {oracle:>5} {count:>4} |")
        row.append(f"{time.perf_counter() - start:>6.2f}")
        print(" ".join(row))


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""List the labelled antipodal triples of T_n and where each sits relative to the origin."""
import argparse

from arrowhead.cayley import make_graph
from arrowhead.metrics import antipodals_oracle, bfs_from, diameter_oracle
from arrowhead.omega import omega_subsets


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-max", type=int, default=7)
    args = p.parse_args()

    for n in range(1, args.n_max + 1):
        g = make_graph(n)
        f = bfs_from(g)
        ants = antipodals_oracle(g)
        print(f"T_{n}: diameter {diameter_oracle(g)}, {len(ants)} antipodals")
        covered = set()
        for t in omega_subsets(n):
            members = " ".join(f"({v})" for v in t.members)
            dists = ",".join(str(f[v]) for v in t.members)
            tag = "antipodal" if set(t.members) <= ants else "inner"
            covered |= set(t.members) & ants
            print(f"  {t.label:<12} {members:<36} dist {dists:<12} {tag}")
        leftover = sorted(ants - covered)
        print(f"  antipodals outside every triple: {leftover or 'none'}")


if __name__ == "__main__":
    main()

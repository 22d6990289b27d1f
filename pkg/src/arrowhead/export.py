"""Text serialisations of a graph and its statistics.

All outputs are byte-deterministic. Edge lines are sorted by
``(x1, y1, x2, y2)``; multi-edges are repeated and loops kept.
"""
from __future__ import annotations

import json

import numpy as np

from . import formulas as fm
from .cayley import GraphSpec, LevelCeilingError, edge_array, edges
from .metrics import antipodals_oracle, bfs_from, distance_histogram, eccentricity

FORMATS = ("edge_list", "dot", "adjacency_csv", "json_stats")
ADJACENCY_MAX_LEVEL = 5


def edge_list(g: GraphSpec) -> str:
    arrow = "->" if g.directed else "--"
    return "".join(f"{u} {arrow} {v}\n" for u, v in edges(g))


def dot(g: GraphSpec) -> str:
    kind, arrow = ("digraph", "->") if g.directed else ("graph", "--")
    name = g.name.replace("->", "")
    lines = [f"{kind} {name} {{"]
    lines += [f"  v_{v.x}_{v.y};" for v in g.vertices()]
    lines += [f"  v_{u.x}_{u.y} {arrow} v_{v.x}_{v.y};" for u, v in edges(g)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def adjacency_matrix(g: GraphSpec) -> np.ndarray:
    """Edge multiplicities between vertex indices (symmetric when undirected)."""
    a = np.zeros((g.order, g.order), dtype=np.int64)
    pairs = edge_array(g)
    np.add.at(a, (pairs[:, 0], pairs[:, 1]), 1)
    if not g.directed:
        off = pairs[:, 0] != pairs[:, 1]
        np.add.at(a, (pairs[off, 1], pairs[off, 0]), 1)
    return a


def adjacency_csv(g: GraphSpec) -> str:
    if g.level > ADJACENCY_MAX_LEVEL:
        raise LevelCeilingError(
            f"adjacency_csv is limited to n <= {ADJACENCY_MAX_LEVEL}, got n={g.level}"
        )
    a = adjacency_matrix(g)
    return "".join(",".join(map(str, row)) + "\n" for row in a.tolist())


def stats(g: GraphSpec) -> dict:
    """Order, sizes, diameters, antipodals and histogram, split into formula and oracle values."""
    family = fm.family_of(g.variant, g.directed)
    f = bfs_from(g)
    far = sorted(antipodals_oracle(g))
    try:
        count_formula = fm.antipodal_count(family, g.level)
    except ValueError:
        count_formula = None
    out = {
        "graph": g.name,
        "n": g.level,
        "variant": g.variant,
        "directed": g.directed,
        "family": family,
        "order": g.order,
        "edge_count": g.edge_count,
        "diameter": {"formula": fm.diameter(family, g.level), "oracle": eccentricity(f)},
        "antipodal_count": {"formula": count_formula, "oracle": len(far)},
        "antipodals": {"oracle": [str(v) for v in far]},
        "histogram": {"oracle": {str(p): c for p, c in distance_histogram(f).items()}},
        "anchor": None,
    }
    if family == fm.T and g.level >= 1:
        s = fm.antipodal_anchor(g.level)
        members = set(far)
        out["anchor"] = {
            "formula": {
                "anchor": str(s.anchor),
                "label": s.anchor_label,
                "inverse": str(s.anchor_inverse),
                "inverse_label": s.inverse_label,
            },
            "oracle": {
                "anchor_is_antipodal": s.anchor in members,
                "inverse_is_antipodal": s.anchor_inverse in members,
            },
        }
    return out


def json_stats(g: GraphSpec) -> str:
    return json.dumps(stats(g), indent=2, sort_keys=True) + "\n"


def render(g: GraphSpec, kind: str) -> str:
    if kind == "edge_list":
        return edge_list(g)
    if kind == "dot":
        return dot(g)
    if kind == "adjacency_csv":
        return adjacency_csv(g)
    if kind == "json_stats":
        return json_stats(g)
    raise ValueError(f"unknown format {kind!r}; expected one of {FORMATS}")

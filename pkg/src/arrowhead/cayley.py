"""Arrowhead and diamond Cayley graphs on Z_{2^n} x Z_{2^n}.

Graphs are implicit: a :class:`GraphSpec` only knows its level and generating
set, and neighbours are computed by adding generators modulo ``2**n``. Vertex
``(x, y)`` has the dense index ``x * 2**n + y``.

The generating multiset is authoritative. At ``n <= 1`` generators collide
(``s == -s`` mod 2, and every generator is a loop at ``n == 0``), so
:func:`neighbors` keeps duplicates and loops.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

ARROWHEAD = "arrowhead"
DIAMOND = "diamond"
VARIANTS = (ARROWHEAD, DIAMOND)

# s1, s2, s3 and t1, t2, t3 in canonical order
ARROWHEAD_GENERATORS = ((-1, -1), (1, 0), (0, 1))
DIAMOND_GENERATORS = ((1, 1), (1, 0), (0, 1))

DEFAULT_MAX_LEVEL = 12
MAX_LEVEL_ENV = "ARROWHEAD_MAX_LEVEL"


_override: int | None = None


class LevelCeilingError(RuntimeError):
    """Raised when a level would enumerate more vertices than the ceiling allows."""


def set_max_level(n: int | None) -> None:
    """Process-wide ceiling override; ``None`` restores the environment/default."""
    global _override
    _override = n


def max_level() -> int:
    """Level ceiling: explicit override, else the environment, else the default."""
    if _override is not None:
        return _override
    raw = os.environ.get(MAX_LEVEL_ENV)
    if raw is None or raw == "":
        return DEFAULT_MAX_LEVEL
    return int(raw)


def check_level(n: int, ceiling: int | None = None) -> None:
    if n < 0:
        raise ValueError(f"level must be non-negative, got {n}")
    limit = max_level() if ceiling is None else ceiling
    if n > limit:
        raise LevelCeilingError(
            f"level {n} has {4 ** n} vertices, above ceiling level {limit}"
        )


class Vertex(NamedTuple):
    x: int
    y: int

    def __str__(self) -> str:
        return f"{self.x},{self.y}"


def canonical(n: int, v) -> Vertex:
    m = 1 << n
    return Vertex(v[0] % m, v[1] % m)


def vertex_index(n: int, v) -> int:
    return (v[0] << n) | v[1]


def index_vertex(n: int, i: int) -> Vertex:
    return Vertex(i >> n, i & ((1 << n) - 1))


def parse_vertex(text: str) -> Vertex:
    """Parse ``"x,y"`` (optionally parenthesised)."""
    parts = text.strip().strip("()").split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'x,y', got {text!r}")
    return Vertex(int(parts[0]), int(parts[1]))


def generators(variant: str, directed: bool) -> tuple[tuple[int, int], ...]:
    """Ordered generator list; undirected sets append the inverses in the same order."""
    if variant == ARROWHEAD:
        plus = ARROWHEAD_GENERATORS
    elif variant == DIAMOND:
        plus = DIAMOND_GENERATORS
    else:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    if directed:
        return plus
    return plus + tuple((-a, -b) for a, b in plus)


@dataclass(frozen=True)
class GraphSpec:
    level: int
    variant: str = ARROWHEAD
    directed: bool = False

    @property
    def gens(self) -> tuple[tuple[int, int], ...]:
        return generators(self.variant, self.directed)

    @property
    def side(self) -> int:
        return 1 << self.level

    @property
    def order(self) -> int:
        return 4 ** self.level

    @property
    def edge_count(self) -> int:
        # 3N arcs for S+ / T+, and 3N edges (1/2 |S| |G_n|) for the undirected graph
        return 3 * self.order

    @property
    def name(self) -> str:
        base = "AT" if self.variant == ARROWHEAD else "DT"
        if self.directed:
            return f"->{base}_{self.level}"
        return f"T_{self.level}"

    def vertices(self) -> Iterator[Vertex]:
        m = self.side
        for x in range(m):
            for y in range(m):
                yield Vertex(x, y)


def make_graph(
    n: int, variant: str = ARROWHEAD, directed: bool = False, ceiling: int | None = None
) -> GraphSpec:
    check_level(n, ceiling)
    generators(variant, directed)  # validates variant
    return GraphSpec(n, variant, bool(directed))


def neighbors(g: GraphSpec, v) -> list[Vertex]:
    mask = g.side - 1
    x, y = v
    return [Vertex((x + a) & mask, (y + b) & mask) for a, b in g.gens]


def neighbor_indices(g: GraphSpec, idx: np.ndarray) -> list[np.ndarray]:
    """Vectorised neighbour indices, one array per generator."""
    n = g.level
    mask = g.side - 1
    x = idx >> n
    y = idx & mask
    return [(((x + a) & mask) << n) | ((y + b) & mask) for a, b in g.gens]


def edge_array(g: GraphSpec) -> np.ndarray:
    """Edge multiset as an ``(3N, 2)`` array of vertex indices.

    Directed graphs give arcs ``(u, u + s)`` for ``s`` in the positive
    generating set. Undirected graphs pair each arc with its inverse, so every
    edge is ``{u, u + s}`` for ``s`` in the positive set, stored with the
    smaller index first.
    """
    src = np.arange(g.order, dtype=np.int64)
    plus = GraphSpec(g.level, g.variant, True)
    heads = neighbor_indices(plus, src)
    u = np.concatenate([src] * len(heads))
    v = np.concatenate(heads)
    if not g.directed:
        u, v = np.minimum(u, v), np.maximum(u, v)
    pairs = np.stack([u, v], axis=1)
    order = np.lexsort((pairs[:, 1], pairs[:, 0]))
    return pairs[order]


def edges(g: GraphSpec) -> Iterator[tuple[Vertex, Vertex]]:
    n = g.level
    for u, v in edge_array(g).tolist():
        yield index_vertex(n, u), index_vertex(n, v)


def simple_edges(g: GraphSpec) -> list[tuple[Vertex, Vertex]]:
    """Deduplicated, loop-free view of the edge multiset (export only)."""
    seen = []
    last = None
    for e in edges(g):
        if e[0] == e[1] or e == last:
            continue
        seen.append(e)
        last = e
    return seen


def subgroup_vertices(n: int, k: int) -> set[Vertex]:
    """Vertices of G_{n,k} = 2^k * G_{n-k}."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    check_level(n)
    step = 1 << k
    m = 1 << n
    return {Vertex(x, y) for x in range(0, m, step) for y in range(0, m, step)}


def embed_scaled(n: int, k: int, v) -> Vertex:
    """Map a vertex of the level ``n-k`` graph into level ``n`` by scaling by 2^k."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    guest = 1 << (n - k)
    if not (0 <= v[0] < guest and 0 <= v[1] < guest):
        raise ValueError(f"{tuple(v)} is not a canonical vertex of level {n - k}")
    return canonical(n, (v[0] << k, v[1] << k))

"""Exact BFS distance oracle over the implicit Cayley graphs."""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .cayley import (
    GraphSpec,
    Vertex,
    check_level,
    index_vertex,
    neighbor_indices,
    vertex_index,
)

UNSET = -1


@dataclass(frozen=True, eq=False)
class DistanceField:
    graph: GraphSpec
    origin: Vertex
    dist: np.ndarray  # int32, indexed by x * 2**n + y

    def __getitem__(self, v) -> int:
        return int(self.dist[vertex_index(self.graph.level, v)])

    def at(self, vertices) -> np.ndarray:
        n = self.graph.level
        idx = np.fromiter((vertex_index(n, v) for v in vertices), dtype=np.int64)
        return self.dist[idx]


def _bfs_array(g: GraphSpec, origin_index: int) -> np.ndarray:
    dist = np.full(g.order, UNSET, dtype=np.int32)
    dist[origin_index] = 0
    frontier = np.array([origin_index], dtype=np.int64)
    level = 0
    while frontier.size:
        level += 1
        reached = np.concatenate(neighbor_indices(g, frontier))
        reached = reached[dist[reached] == UNSET]
        if reached.size == 0:
            break
        reached = np.unique(reached)
        dist[reached] = level
        frontier = reached
    if (dist == UNSET).any():
        raise AssertionError(f"{g.name} is not strongly connected from {origin_index}")
    dist.setflags(write=False)
    return dist


@lru_cache(maxsize=64)
def _cached_bfs(g: GraphSpec, origin: Vertex) -> np.ndarray:
    return _bfs_array(g, vertex_index(g.level, origin))


def bfs_from(g: GraphSpec, origin=(0, 0)) -> DistanceField:
    """Single-source hop distances, following arc direction for digraphs."""
    check_level(g.level)
    m = g.side
    if not (0 <= origin[0] < m and 0 <= origin[1] < m):
        raise ValueError(f"{tuple(origin)} is not a canonical vertex of {g.name}")
    origin = Vertex(*origin)
    return DistanceField(g, origin, _cached_bfs(g, origin))


def eccentricity(f: DistanceField) -> int:
    return int(f.dist.max())


def distance(g: GraphSpec, u, v) -> int:
    """Distance from ``u`` to ``v``, re-based on the origin by translation."""
    m = g.side
    return bfs_from(g)[((v[0] - u[0]) % m, (v[1] - u[1]) % m)]


def random_origins(g: GraphSpec, count: int, seed: int) -> list[Vertex]:
    rng = random.Random(seed)
    return [index_vertex(g.level, rng.randrange(g.order)) for _ in range(count)]


def diameter_oracle(g: GraphSpec, paranoid: int = 0, seed: int = 0) -> int:
    """Eccentricity of the origin.

    With ``paranoid > 0`` the eccentricity is recomputed from that many seeded
    random origins and must agree (a vertex-transitivity smoke test).
    """
    d = eccentricity(bfs_from(g))
    for origin in random_origins(g, paranoid, seed):
        other = eccentricity(bfs_from(g, origin))
        if other != d:
            raise AssertionError(
                f"{g.name}: eccentricity {other} from {origin} differs from {d} at origin"
            )
    return d


def antipodals_oracle(g: GraphSpec) -> set[Vertex]:
    f = bfs_from(g)
    far = np.flatnonzero(f.dist == f.dist.max())
    return {index_vertex(g.level, int(i)) for i in far}


def distance_histogram(f: DistanceField) -> dict[int, int]:
    counts = np.bincount(f.dist)
    return {p: int(c) for p, c in enumerate(counts)}


def histogram_tuple(f: DistanceField) -> tuple[int, ...]:
    return tuple(int(c) for c in np.bincount(f.dist))


def shortest_path(g: GraphSpec, source, target) -> list[Vertex]:
    """A shortest path from ``source`` to ``target``.

    Walks forward, taking at each step the first generator (canonical order)
    that brings the remaining distance down by one. Remaining distance is read
    off the origin field by translation.
    """
    m = g.side
    mask = m - 1
    for v in (source, target):
        if not (0 <= v[0] < m and 0 <= v[1] < m):
            raise ValueError(f"{tuple(v)} is not a canonical vertex of {g.name}")
    f = bfs_from(g)

    def remaining(v) -> int:
        return f[((target[0] - v[0]) & mask, (target[1] - v[1]) & mask)]

    here = Vertex(*source)
    path = [here]
    left = remaining(here)
    while left:
        for a, b in g.gens:
            step = Vertex((here.x + a) & mask, (here.y + b) & mask)
            if remaining(step) == left - 1:
                break
        else:
            raise AssertionError(f"no descending generator at {here}")
        here = step
        left -= 1
        path.append(here)
    return path

"""Arrowhead and diamond Cayley graphs on the triangular torus Z_{2^n} x Z_{2^n}."""

__version__ = "0.1.0"

from .cayley import (  # noqa: E402
    ARROWHEAD,
    DIAMOND,
    GraphSpec,
    LevelCeilingError,
    Vertex,
    edges,
    embed_scaled,
    make_graph,
    neighbors,
    subgroup_vertices,
)
from .metrics import (  # noqa: E402
    antipodals_oracle,
    bfs_from,
    diameter_oracle,
    distance_histogram,
    eccentricity,
    shortest_path,
)

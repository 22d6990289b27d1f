"""Closed forms for diameters, antipodal counts and antipodal anchors.

Families are named ``"T"`` (undirected, arrowhead and diamond coincide),
``"ATdir"`` (directed arrowhead) and ``"DTdir"`` (directed diamond).
Everything here is integer arithmetic; no graph is built.
"""
from __future__ import annotations

from typing import NamedTuple

from .cayley import ARROWHEAD, DIAMOND, Vertex

T = "T"
AT_DIR = "ATdir"
DT_DIR = "DTdir"
FAMILIES = (T, AT_DIR, DT_DIR)

# family -> (variant, directed)
FAMILY_GRAPH = {
    T: (ARROWHEAD, False),
    AT_DIR: (ARROWHEAD, True),
    DT_DIR: (DIAMOND, True),
}


def family_of(variant: str, directed: bool) -> str:
    if not directed:
        return T
    return AT_DIR if variant == ARROWHEAD else DT_DIR


class DiameterValue(NamedTuple):
    n: int
    family: str
    value: int


class AntipodalSummary(NamedTuple):
    family: str
    n: int
    count: int
    anchor: Vertex
    anchor_label: str
    anchor_inverse: Vertex
    inverse_label: str


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError(f"level must be non-negative, got {n}")


def undirected_diameter(n: int) -> int:
    """Diameter of T_n: (2*2^n - 1)/3 for odd n, 2*(2^n - 1)/3 for even n."""
    _check_n(n)
    side = 1 << n
    num = 2 * side - 1 if n % 2 else 2 * (side - 1)
    q, r = divmod(num, 3)
    assert r == 0, f"inexact division at n={n}"
    return q


def undirected_recurrence(n: int) -> int:
    """D_0 = 0, D_n = 2 D_{n-1} + (n mod 2)."""
    _check_n(n)
    d = 0
    for i in range(1, n + 1):
        d = 2 * d + (i & 1)
    return d


def diameter_recurrence_table(n_max: int) -> list[DiameterValue]:
    _check_n(n_max)
    table = [DiameterValue(0, T, 0)]
    for i in range(1, n_max + 1):
        table.append(DiameterValue(i, T, 2 * table[-1].value + (i & 1)))
    return table


def check_relations(n: int) -> tuple[bool, bool | None]:
    """Truth of D_{n-1} + D_n = 2^n - 1 and, for n >= 2, D_n - D_{n-2} = 2^{n-1}."""
    if n < 1:
        raise ValueError(f"relations need n >= 1, got {n}")
    d = undirected_diameter
    first = d(n - 1) + d(n) == (1 << n) - 1
    second = None if n < 2 else d(n) - d(n - 2) == 1 << (n - 1)
    return first, second


def directed_arrowhead_diameter(n: int) -> int:
    _check_n(n)
    return (1 << n) - 1


def directed_arrowhead_recurrence(n: int) -> int:
    """D_0 = 0, D_n = 2 D_{n-1} + 1."""
    _check_n(n)
    d = 0
    for _ in range(n):
        d = 2 * d + 1
    return d


def directed_diamond_diameter(n: int) -> int:
    _check_n(n)
    return (1 << n) - 1


def directed_diamond_distance(n: int, v) -> int:
    """Distance from the origin in ->DT_n.

    ``max(x, y)`` over canonical coordinates. A derived closed form, not a
    published one; kept because it matches BFS on every vertex (see tests).
    """
    m = 1 << n
    if not (0 <= v[0] < m and 0 <= v[1] < m):
        raise ValueError(f"{tuple(v)} is not canonical at level {n}")
    return max(v[0], v[1])


def diameter(family: str, n: int) -> int:
    if family == T:
        return undirected_diameter(n)
    if family == AT_DIR:
        return directed_arrowhead_diameter(n)
    if family == DT_DIR:
        return directed_diamond_diameter(n)
    raise ValueError(f"unknown family {family!r}")


def antipodal_count(family: str, n: int, allow_trivial: bool = False) -> int:
    """Number of antipodals of the origin.

    T and ATdir are undefined at n = 0 (the origin is its own antipodal);
    pass ``allow_trivial=True`` to get 1 there.
    """
    _check_n(n)
    if family == DT_DIR:
        return (1 << (n + 1)) - 1
    if family not in (T, AT_DIR):
        raise ValueError(f"unknown family {family!r}")
    if n == 0:
        if allow_trivial:
            return 1
        raise ValueError(f"antipodal count of {family} at n = 0 is not defined")
    if n == 1:
        return 3
    if family == AT_DIR:
        return 6
    if n == 2:
        # Omega_{2,1} and its mirror coincide
        return 9
    return 6 if n % 2 else 12


def antipodal_anchor(n: int) -> AntipodalSummary:
    """Anchor (D_{n-1}, D_n) of Omega_n in T_n and its mirror (D_n, D_{n-1})."""
    if n < 1:
        raise ValueError(f"antipodal anchor needs n >= 1, got {n}")
    lo, hi = undirected_diameter(n - 1), undirected_diameter(n)
    odd = n % 2 == 1
    return AntipodalSummary(
        family=T,
        n=n,
        count=antipodal_count(T, n),
        anchor=Vertex(lo, hi),
        anchor_label="C" if odd else "B",
        anchor_inverse=Vertex(hi, lo),
        inverse_label="B_bar" if odd else "C_bar",
    )

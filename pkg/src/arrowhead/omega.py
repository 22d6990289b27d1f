"""Ordered antipodal 3-cycles of T_n and their scaled images.

``Omega_n = (A, B, C)``. The member at (D_{n-1}, D_n) is C for odd n and B
for even n; its 3-cycle partner sits one diagonal step further, at
anchor + (1, 1). The third member A has no published closed form, so it is
taken from the BFS antipodal set: it is the antipodal common neighbour of the
anchor pair that lies outside the scaled subgroup G_{n,1}.
"""
from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .cayley import ARROWHEAD, GraphSpec, Vertex, canonical, check_level, embed_scaled
from .formulas import antipodal_anchor
from .metrics import antipodals_oracle

OMEGA = "Omega_n"
OMEGA_1 = "Omega_n1"
OMEGA_2 = "Omega_n2"
OMEGA_BAR = "OmegaBar_n"
OMEGA_BAR_1 = "OmegaBar_n1"
OMEGA_BAR_2 = "OmegaBar_n2"


class OmegaTriple(NamedTuple):
    label: str
    n: int
    members: tuple[Vertex, ...]  # (A, B, C); a lone origin for images of Omega_0

    @property
    def is_degenerate(self) -> bool:
        return len(self.members) == 1


def negate(n: int, t: OmegaTriple, label: str) -> OmegaTriple:
    return OmegaTriple(label, n, tuple(canonical(n, (-x, -y)) for x, y in t.members))


def scale(n: int, k: int, t: OmegaTriple, label: str) -> OmegaTriple:
    return OmegaTriple(label, n, tuple(embed_scaled(n, k, v) for v in t.members))


def third_member(n: int, first: Vertex, second: Vertex) -> Vertex:
    """The oracle-selected third vertex of the antipodal 3-cycle on ``first``-``second``."""
    antipodals = antipodals_oracle(GraphSpec(n, ARROWHEAD, False))
    found = []
    for step in ((1, 0), (0, 1)):
        c = canonical(n, (first.x + step[0], first.y + step[1]))
        in_scaled = c.x % 2 == 0 and c.y % 2 == 0
        if c in antipodals and not in_scaled:
            found.append(c)
    if len(found) != 1:
        raise AssertionError(f"n={n}: expected one third member, oracle gave {found}")
    return found[0]


@lru_cache(maxsize=None)
def omega(n: int) -> OmegaTriple:
    """Omega_n for n >= 0 (Omega_0 is the origin alone)."""
    if n == 0:
        return OmegaTriple(OMEGA, 0, (Vertex(0, 0),))
    check_level(n)
    anchor = antipodal_anchor(n).anchor
    partner = canonical(n, (anchor.x + 1, anchor.y + 1))
    a = third_member(n, anchor, partner)
    if n % 2:
        members = (a, partner, anchor)
    else:
        members = (a, anchor, partner)
    return OmegaTriple(OMEGA, n, members)


def omega_subsets(n: int) -> list[OmegaTriple]:
    """Omega_n, its mirror, and the scaled images Omega_{n,1}, Omega_{n,2} with mirrors."""
    if n < 0:
        raise ValueError(f"level must be non-negative, got {n}")
    base = omega(n)
    if n == 0:
        return [base]
    out = [base, negate(n, base, OMEGA_BAR)]
    one = scale(n, 1, omega(n - 1), OMEGA_1)
    out += [one, negate(n, one, OMEGA_BAR_1)]
    if n >= 2:
        two = scale(n, 2, omega(n - 2), OMEGA_2)
        out += [two, negate(n, two, OMEGA_BAR_2)]
    return out


def predicted_antipodals(n: int) -> set[Vertex]:
    """Omega_n and its mirror, plus Omega_{n,1} and its mirror for even n."""
    if n < 1:
        raise ValueError(f"antipodals need n >= 1, got {n}")
    subsets = {t.label: t for t in omega_subsets(n)}
    chosen = [OMEGA, OMEGA_BAR]
    if n % 2 == 0:
        chosen += [OMEGA_1, OMEGA_BAR_1]
    return {v for label in chosen for v in subsets[label].members}

"""Sweep levels and families, checking every closed form against the BFS oracle.

Each check yields a :class:`ClaimCheck` with status ``pass``, ``fail`` or
``skip``. A skip is never a failure: it marks either a level above the vertex
ceiling (``note=resource``) or a claim that is undefined at that level
(``note=n/a...``).
"""
from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from . import __version__
from . import formulas as fm
from .cayley import (
    ARROWHEAD,
    DIAMOND,
    GraphSpec,
    LevelCeilingError,
    Vertex,
    check_level,
    edge_array,
)
from .metrics import (
    antipodals_oracle,
    bfs_from,
    diameter_oracle,
    histogram_tuple,
    random_origins,
)
from .omega import OMEGA, OMEGA_1, OMEGA_BAR, omega_subsets, predicted_antipodals

PASS, FAIL, SKIP = "pass", "fail", "skip"
DEFAULT_SAMPLES = 8


@dataclass
class ClaimCheck:
    claim_id: str
    family: str
    n: int
    expected: Any = None
    observed: Any = None
    status: str = SKIP
    provenance: str = "published"
    relation: str = "eq"  # "eq", or "le" for an upper bound
    note: str = ""
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == PASS


@dataclass
class VerificationReport:
    tool_version: str
    n_range: tuple[int, int]
    families: tuple[str, ...]
    claims: tuple[str, ...]
    seed: int
    samples: int
    checks: list[ClaimCheck] = field(default_factory=list)

    def count(self, status: str) -> int:
        return sum(c.status == status for c in self.checks)

    @property
    def failed(self) -> list[ClaimCheck]:
        return [c for c in self.checks if c.status == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failed

    def find(self, claim_id: str, family: str | None = None) -> list[ClaimCheck]:
        return [
            c
            for c in self.checks
            if c.claim_id == claim_id and (family is None or c.family == family)
        ]


class NotApplicable(Exception):
    pass


def _graph(family: str, n: int) -> GraphSpec:
    variant, directed = fm.FAMILY_GRAPH[family]
    check_level(n)
    return GraphSpec(n, variant, directed)


def _need(n: int, least: int) -> None:
    if n < least:
        raise NotApplicable(f"n/a:requires_n>={least}")


def _compare(expected, observed, relation: str) -> bool:
    if relation == "eq":
        return expected == observed
    if relation == "le":
        return all(o <= e for e, o in zip(expected, observed)) and len(expected) == len(observed)
    raise ValueError(relation)


# Each claim body returns (expected, observed, provenance, relation, note).

def _diameter(family, n, ctx):
    return fm.diameter(family, n), diameter_oracle(_graph(family, n)), "published", "eq", ""


def _recurrence(family, n, ctx):
    if family == fm.T:
        rec = fm.undirected_recurrence(n)
        closed = fm.undirected_diameter(n)
    else:
        rec = fm.directed_arrowhead_recurrence(n)
        closed = fm.directed_arrowhead_diameter(n)
    return rec, closed, "published", "eq", "closed_form_vs_recurrence"


def _antipodal_count(family, n, ctx):
    if family != fm.DT_DIR:
        _need(n, 1)
    g = _graph(family, n)
    return fm.antipodal_count(family, n), len(antipodals_oracle(g)), "published", "eq", ""


def _anchor(family, n, ctx):
    _need(n, 1)
    s = fm.antipodal_anchor(n)
    expected = {s.anchor, s.anchor_inverse}
    observed = expected & antipodals_oracle(_graph(family, n))
    return expected, observed, "published", "eq", f"anchor={s.anchor_label};inverse={s.inverse_label}"


def _omega(family, n, ctx):
    return _omega_check(n)


def _omega_check(n):
    _need(n, 1)
    g = _graph(fm.T, n)
    expected = predicted_antipodals(n)
    observed = antipodals_oracle(g)
    note = "A_n_from_oracle"
    if n % 2 == 1 and n > 1:
        f = bfs_from(g)
        subsets = {t.label: t for t in omega_subsets(n)}
        scaled = sorted({f[v] for v in subsets[OMEGA_1].members})
        note += f";scaled_triple_dist={','.join(map(str, scaled))}"
    return expected, observed, "published+derived", "eq", note


def _at_antipodal_set(family, n, ctx):
    _need(n, 1)
    subsets = {t.label: t for t in omega_subsets(n)}
    expected = set(subsets[OMEGA].members) | set(subsets[OMEGA_BAR].members)
    observed = antipodals_oracle(_graph(family, n))
    return expected, observed, "published+derived", "eq", "A_n_from_oracle"


def _shells(family, n, ctx):
    expected = tuple(2 * p + 1 for p in range(1 << n))
    observed = histogram_tuple(bfs_from(_graph(family, n)))
    return expected, observed, "published", "eq", ""


def _closed_form(family, n, ctx):
    g = _graph(family, n)
    f = bfs_from(g)
    idx = np.arange(g.order)
    closed = np.maximum(idx >> n, idx & (g.side - 1))
    mismatches = int((closed != f.dist).sum())
    return 0, mismatches, "derived", "eq", "mismatching_vertices_of_max(x,y)"


def _relation3(family, n, ctx):
    _need(n, 1)
    d = fm.undirected_diameter
    return (1 << n) - 1, d(n - 1) + d(n), "published", "eq", ""


def _relation4(family, n, ctx):
    _need(n, 2)
    d = fm.undirected_diameter
    return 1 << (n - 1), d(n) - d(n - 2), "published", "eq", ""


def _edge_digest(g: GraphSpec) -> str:
    return "sha256:" + hashlib.sha256(edge_array(g).astype("<i8").tobytes()).hexdigest()[:16]


def _iso(family, n, ctx):
    check_level(n)
    at = GraphSpec(n, ARROWHEAD, False)
    dt = GraphSpec(n, DIAMOND, False)
    same = np.array_equal(edge_array(at), edge_array(dt))
    return _edge_digest(at), _edge_digest(dt), "published", "eq", f"multiset_equal={str(same).lower()}"


def max_dilation(g: GraphSpec, k: int) -> int:
    """Largest host distance between images of guest-adjacent vertices under scaling by 2^k.

    Guest edges ``(u, u + s)`` of level ``n - k`` are mapped to host pairs
    ``(2^k u, 2^k (u + s))``; host distances are re-based on the origin by
    translation.
    """
    n = g.level
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    f = bfs_from(g)
    gm = 1 << (n - k)
    u = np.arange(gm * gm, dtype=np.int64)
    ux, uy = u >> (n - k), u & (gm - 1)
    mask = g.side - 1
    worst = 0
    for a, b in g.gens:
        vx, vy = (ux + a) & (gm - 1), (uy + b) & (gm - 1)
        hx, hy = (ux << k) & mask, (uy << k) & mask
        tx, ty = (vx << k) & mask, (vy << k) & mask
        d = f.dist[(((tx - hx) & mask) << n) | ((ty - hy) & mask)]
        worst = max(worst, int(d.max()))
    return worst


def _dilation(family, n, ctx):
    g = _graph(family, n)
    bounds = tuple(1 << k for k in range(n + 1))
    observed = tuple(max_dilation(g, k) for k in range(n + 1))
    exact = all(observed[k] == bounds[k] for k in range(n))
    return bounds, observed, "published", "le", f"exact_below_k=n:{str(exact).lower()}"


def _transitivity(family, n, ctx):
    g = _graph(family, n)
    expected = histogram_tuple(bfs_from(g))
    origins = random_origins(g, ctx["samples"], ctx["seed"])
    observed = expected
    for o in origins:
        h = histogram_tuple(bfs_from(g, o))
        if h != expected:
            observed = h
            break
    note = "origins=" + ";".join(f"{o.x},{o.y}" for o in origins)
    return expected, observed, "oracle", "eq", note


Body = Callable[[str, int, dict], tuple]

# claim_id -> (families it applies to, body, needs graphs)
CLAIMS: dict[str, tuple[tuple[str, ...], Body, bool]] = {
    "Tn.diameter": ((fm.T,), _diameter, True),
    "Tn.recurrence": ((fm.T,), _recurrence, False),
    "Tn.antipodal_count": ((fm.T,), _antipodal_count, True),
    "Tn.anchor": ((fm.T,), _anchor, True),
    "omega.membership": ((fm.T,), _omega, True),
    "relations.eq3": ((fm.T,), _relation3, False),
    "relations.eq4": ((fm.T,), _relation4, False),
    "iso.AT_DT": ((fm.T,), _iso, True),
    "ATdir.diameter": ((fm.AT_DIR,), _diameter, True),
    "ATdir.recurrence": ((fm.AT_DIR,), _recurrence, False),
    "ATdir.antipodal_count": ((fm.AT_DIR,), _antipodal_count, True),
    "ATdir.antipodal_set": ((fm.AT_DIR,), _at_antipodal_set, True),
    "DTdir.diameter": ((fm.DT_DIR,), _diameter, True),
    "DTdir.antipodal_count": ((fm.DT_DIR,), _antipodal_count, True),
    "DTdir.shells": ((fm.DT_DIR,), _shells, True),
    "DTdir.closed_form": ((fm.DT_DIR,), _closed_form, True),
    "embed.dilation": (fm.FAMILIES, _dilation, True),
    "transitivity.sample": (fm.FAMILIES, _transitivity, True),
}
FORMULA_CLAIMS = tuple(c for c, (_, _, graphs) in CLAIMS.items() if not graphs)


def run_claim(claim_id: str, family: str, n: int, seed: int = 0, samples: int = DEFAULT_SAMPLES) -> ClaimCheck:
    families, body, _ = CLAIMS[claim_id]
    if family not in families:
        raise ValueError(f"{claim_id} does not apply to family {family}")
    check = ClaimCheck(claim_id, family, n)
    start = time.perf_counter()
    try:
        expected, observed, provenance, relation, note = body(family, n, {"seed": seed, "samples": samples})
    except LevelCeilingError:
        check.note = "resource"
    except NotApplicable as exc:
        check.note = str(exc)
    else:
        check.expected, check.observed = expected, observed
        check.provenance, check.relation, check.note = provenance, relation, note
        check.status = PASS if _compare(expected, observed, relation) else FAIL
    check.wall_time = time.perf_counter() - start
    return check


def check_omega_antipodality(n: int) -> ClaimCheck:
    return run_claim("omega.membership", fm.T, n)


def check_embedding_dilation(n: int, k: int, family: str = fm.T) -> ClaimCheck:
    """Scaling embedding of level ``n - k`` into level ``n`` stays within dilation 2^k."""
    check = ClaimCheck("embed.dilation", family, n, relation="le")
    start = time.perf_counter()
    try:
        observed = max_dilation(_graph(family, n), k)
    except LevelCeilingError:
        check.note = "resource"
    else:
        check.expected, check.observed = 1 << k, observed
        check.status = PASS if observed <= 1 << k else FAIL
        check.note = f"k={k}"
    check.wall_time = time.perf_counter() - start
    return check


def run_sweep(
    n_min: int,
    n_max: int,
    families=fm.FAMILIES,
    claims=None,
    seed: int = 0,
    samples: int = DEFAULT_SAMPLES,
) -> VerificationReport:
    if n_min < 0 or n_max < n_min:
        raise ValueError(f"bad level range {n_min}..{n_max}")
    families = tuple(f for f in fm.FAMILIES if f in set(families))
    unknown = set(claims or ()) - set(CLAIMS)
    if unknown:
        raise ValueError(f"unknown claims: {', '.join(sorted(unknown))}")
    selected = tuple(c for c in CLAIMS if claims is None or c in set(claims))
    report = VerificationReport(__version__, (n_min, n_max), families, selected, seed, samples)
    for claim_id in selected:
        for family in CLAIMS[claim_id][0]:
            if family not in families:
                continue
            for n in range(n_min, n_max + 1):
                report.checks.append(run_claim(claim_id, family, n, seed, samples))
    return report


def format_value(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, Vertex):
        return f"({v.x},{v.y})"
    if isinstance(v, (set, frozenset)):
        return "{" + ",".join(format_value(x) for x in sorted(v)) + "}"
    if isinstance(v, (tuple, list)):
        return "(" + ",".join(format_value(x) for x in v) + ")"
    return str(v)


def render_kv(report: VerificationReport, timings: bool = False) -> str:
    """Machine-parseable report: ``key=value`` header lines, one ``check`` line per claim.

    Wall times are left out unless ``timings`` is set, so equal seeds give
    byte-identical output.
    """
    lo, hi = report.n_range
    lines = [
        "report=arrowhead-verify",
        f"tool_version={report.tool_version}",
        f"n_range={lo}..{hi}",
        f"families={','.join(report.families)}",
        f"claims={','.join(report.claims)}",
        f"seed={report.seed}",
        f"transitivity_samples={report.samples}",
    ]
    for c in report.checks:
        parts = [
            "check",
            f"claim={c.claim_id}",
            f"family={c.family}",
            f"n={c.n}",
            f"status={c.status}",
            f"relation={c.relation}",
            f"provenance={c.provenance}",
            f"expected={format_value(c.expected)}",
            f"observed={format_value(c.observed)}",
        ]
        if c.note:
            parts.append(f"note={c.note}")
        if timings:
            parts.append(f"wall_ms={c.wall_time * 1000:.3f}")
        lines.append(" ".join(parts))
    lines.append(
        f"summary total={len(report.checks)} passed={report.count(PASS)} "
        f"failed={report.count(FAIL)} skipped={report.count(SKIP)}"
    )
    return "\n".join(lines) + "\n"


def parse_kv(text: str) -> tuple[dict[str, str], list[dict[str, str]]]:
    header, checks = {}, []
    for line in text.splitlines():
        if line.startswith("check "):
            checks.append(dict(tok.split("=", 1) for tok in line.split()[1:]))
        elif line.startswith("summary "):
            header.update({f"summary.{k}": v for k, v in (t.split("=", 1) for t in line.split()[1:])})
        elif "=" in line:
            k, v = line.split("=", 1)
            header[k] = v
    return header, checks


def _clip(s: str, width: int) -> str:
    return s if len(s) <= width else s[: width - 3] + "..."


def render_table(report: VerificationReport) -> str:
    rows = [("claim", "family", "n", "status", "expected", "observed", "ms")]
    for c in report.checks:
        rows.append((
            c.claim_id,
            c.family,
            str(c.n),
            c.status if c.status != SKIP else f"skip ({c.note})",
            _clip(format_value(c.expected), 36),
            _clip(format_value(c.observed), 36),
            f"{c.wall_time * 1000:.1f}",
        ))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    out = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
    out.insert(1, "  ".join("-" * w for w in widths))
    out.append(
        f"{len(report.checks)} checks: {report.count(PASS)} passed, "
        f"{report.count(FAIL)} failed, {report.count(SKIP)} skipped"
    )
    return "\n".join(out) + "\n"

"""Builders for the extremal graph G(n, s, t) and the two deletion families.

G(n, s, t) is K_t joined to (K_{2s-2t} + empty graph on n + t - 2s
vertices), with t - delta of the edges at one independent-part vertex u
removed.  Vertex labels are fixed: dominating clique first (0..t-1), middle
clique next, independent part last with u as the final vertex; the removed
u-edges go to the lowest-indexed clique vertices.  This makes graph6 output
reproducible across runs.

The families F1(t) and F2(t) instead delete edges at a vertex v of the
middle clique (F1) or of the dominating clique (F2), leaving v with degree
delta.  Motif counts of a family member depend only on how many retained
neighbors of v fall in each structural part, so maximizing over a family
reduces to enumerating those retained splits; that symmetry claim is
checked against literal deletion-set enumeration in the test suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .counting import Motif, count_motif
from .formulas import ExtremalParams
from .graphs import Graph, complete_graph, delete_edges, disjoint_union, empty_graph, join


def _base_join(p: ExtremalParams) -> Graph:
    """K_t v (K_{2s-2t} + empty_{n+t-2s}) in canonical labeling."""
    inner: Graph | None = None
    if p.middle_size:
        inner = complete_graph(p.middle_size)
    inner = disjoint_union(inner, empty_graph(p.independent_size))
    return join(complete_graph(p.t), inner)


def build_extremal(p: ExtremalParams) -> Graph:
    """The extremal graph G(n, s, t) with t - delta edges removed at u = n - 1."""
    g = _base_join(p)
    u = p.n - 1
    removed = [(i, u) for i in range(p.t - p.delta)]
    return delete_edges(g, removed)


def describe_extremal(p: ExtremalParams) -> dict:
    """Part sizes and deletion list of build_extremal(p), JSON-friendly."""
    u = p.n - 1
    return {
        "n": p.n,
        "s2": p.s2,
        "t": p.t,
        "delta": p.delta,
        "clique_part": list(range(p.t)),
        "middle_clique": list(range(p.t, p.t + p.middle_size)),
        "independent_part": list(range(p.t + p.middle_size, p.n)),
        "u": u,
        "deleted_edges": [[i, u] for i in range(p.t - p.delta)],
    }


@dataclass(frozen=True)
class FamilySpec:
    """One member of F1(t) or F2(t), identified by its retained split.

    ``retained_split`` lists how many neighbors the degree-delta vertex v
    keeps in (dominating clique, middle clique, independent part).  For F1
    the vertex v sits in the middle clique and has no independent-part
    neighbors, so the last entry must be zero.
    """

    family: str  # "F1" | "F2"
    params: ExtremalParams
    retained_split: tuple[int, int, int]

    def __post_init__(self) -> None:
        p = self.params
        a, b, c = self.retained_split
        if self.family not in ("F1", "F2"):
            raise ValueError(f"unknown family {self.family!r}")
        if min(a, b, c) < 0:
            raise ValueError("split entries must be nonnegative")
        if a + b + c != p.delta:
            raise ValueError(f"split {self.retained_split} must sum to delta = {p.delta}")
        if self.family == "F1":
            if p.middle_size < 2:
                raise ValueError("F1 needs a nonempty middle clique (t <= s - 1)")
            if c != 0:
                raise ValueError("F1's vertex v has no independent-part neighbors")
            if a > p.t or b > p.middle_size - 1:
                raise ValueError(f"split {self.retained_split} exceeds part sizes")
        else:
            if a > p.t - 1 or b > p.middle_size or c > p.independent_size:
                raise ValueError(f"split {self.retained_split} exceeds part sizes")


def _family_vertex(spec: FamilySpec) -> int:
    # v is the lowest-indexed vertex of its part
    return spec.params.t if spec.family == "F1" else 0


def build_family_member(spec: FamilySpec) -> Graph:
    """Base join with v's edges trimmed to realize the retained split.

    Deterministic rule: within each part the retained neighbors are the
    highest-indexed ones, mirroring build_extremal's deletion order.
    """
    p = spec.params
    base = _base_join(p)
    v = _family_vertex(spec)
    a, b, c = spec.retained_split
    mid_lo, mid_hi = p.t, p.t + p.middle_size
    parts = [
        [w for w in range(0, p.t) if w != v],
        [w for w in range(mid_lo, mid_hi) if w != v],
        list(range(mid_hi, p.n)),
    ]
    removed = []
    for keep, members in zip((a, b, c), parts):
        neighbors = [w for w in members if base.has_edge(v, w)]
        drop = len(neighbors) - keep
        if drop < 0:
            raise ValueError(f"split {spec.retained_split} exceeds available neighbors")
        removed += [(v, w) for w in neighbors[:drop]]
    return delete_edges(base, removed)


def family_splits(family: str, p: ExtremalParams):
    """All valid retained splits for the family, lexicographic order."""
    if family == "F1":
        if p.middle_size < 2:
            raise ValueError("F1 needs a nonempty middle clique (t <= s - 1)")
        caps = (p.t, p.middle_size - 1, 0)
    elif family == "F2":
        caps = (p.t - 1, p.middle_size, p.independent_size)
    else:
        raise ValueError(f"unknown family {family!r}")
    for a in range(min(caps[0], p.delta) + 1):
        for b in range(min(caps[1], p.delta - a) + 1):
            c = p.delta - a - b
            if c <= caps[2]:
                yield (a, b, c)


def family_max_count(family: str, p: ExtremalParams, motif: Motif) -> int:
    """Exact maximum motif count over the family, by split enumeration."""
    best = -1
    for split in family_splits(family, p):
        member = build_family_member(FamilySpec(family, p, split))
        best = max(best, count_motif(member, motif))
    if best < 0:
        raise ValueError(f"family {family} is empty for {p}")
    return best


def family_max_count_literal(family: str, p: ExtremalParams, motif: Motif,
                             subset_limit: int = 1 << 16) -> int:
    """Maximum over literal deletion subsets E1/E2; cross-check for the
    split enumeration, feasible only at small sizes."""
    base = _base_join(p)
    v = p.t if family == "F1" else 0
    if family == "F1" and p.middle_size < 2:
        raise ValueError("F1 needs a nonempty middle clique (t <= s - 1)")
    incident = [(v, w) for w in range(p.n) if base.has_edge(v, w)]
    drop = len(incident) - p.delta
    total = comb(len(incident), drop)
    if total > subset_limit:
        raise ValueError(f"{total} deletion subsets exceed limit {subset_limit}")
    best = -1
    for subset in itertools.combinations(incident, drop):
        member = delete_edges(base, list(subset))
        best = max(best, count_motif(member, motif))
    return best

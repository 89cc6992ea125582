"""Fractional and ordinary matching numbers, computed exactly.

The fractional matching number nu* of a simple graph is always an integer
or half-integer, so it is carried here as its doubled integer value and no
floating point appears anywhere.  Two independent routes are provided:

* a deficiency maximization over all vertex subsets T, which also yields a
  witness T attaining max (isolated(G-T) - |T|), and
* half the size of a maximum matching of the bipartite double cover,
  found with Hopcroft-Karp.

The double-cover matching additionally produces an optimal half-integral
edge weighting whose feasibility and total are checked by the caller's
tests rather than trusted.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import Graph, _bits


@dataclass(frozen=True, order=True)
class HalfInt:
    """An exact half-integral value stored as twice itself."""

    doubled: int

    def __post_init__(self) -> None:
        if self.doubled < 0:
            raise ValueError("negative half-integer")

    def __str__(self) -> str:
        if self.doubled % 2 == 0:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"

    @property
    def is_integer(self) -> bool:
        return self.doubled % 2 == 0


@dataclass(frozen=True)
class DeficiencyWitness:
    """A subset T with the number of isolated vertices of G - T."""

    T: tuple[int, ...]
    isolated: int

    @property
    def deficiency(self) -> int:
        return self.isolated - len(self.T)


@dataclass(frozen=True)
class FractionalCertificate:
    """Half-integral fractional matching: (u, v, doubled weight) per edge."""

    edges: tuple[tuple[int, int, int], ...]
    total_doubled: int

    def to_json_dict(self) -> dict:
        return {
            "edges": [[u, v, w] for u, v, w in self.edges],
            "total_doubled": self.total_doubled,
        }


MAX_DEFICIENCY_SCAN = 24


def nu_star_deficiency(g: Graph) -> tuple[HalfInt, DeficiencyWitness]:
    """Exhaustive Tutte-Berge style scan: nu* = (n - max_T(i(G-T) - |T|)) / 2.

    Subsets are walked in Gray-code order so the isolated-vertex count of
    G - T is maintained incrementally.  Ties among maximizing subsets are
    broken toward the lexicographically smallest sorted vertex tuple.
    """
    n = g.n
    if n > MAX_DEFICIENCY_SCAN:
        raise ValueError(f"deficiency scan limited to n <= {MAX_DEFICIENCY_SCAN}, got {n}")
    adj = g.adj
    # out_deg[v] = neighbors of v outside T, maintained for every vertex
    out_deg = [nb.bit_count() for nb in adj]
    t_mask = 0
    iso = sum(1 for v in range(n) if out_deg[v] == 0)

    best = iso  # T = empty set
    best_t = ()
    prev_gray = 0
    for k in range(1, 1 << n):
        gray = k ^ (k >> 1)
        w = (gray ^ prev_gray).bit_length() - 1
        prev_gray = gray
        if gray >> w & 1:  # w enters T
            if out_deg[w] == 0:
                iso -= 1
            t_mask |= 1 << w
            for u in _bits(adj[w]):
                out_deg[u] -= 1
                if out_deg[u] == 0 and not t_mask >> u & 1:
                    iso += 1
        else:  # w leaves T
            t_mask &= ~(1 << w)
            for u in _bits(adj[w]):
                out_deg[u] += 1
                if out_deg[u] == 1 and not t_mask >> u & 1:
                    iso -= 1
            if out_deg[w] == 0:
                iso += 1
        deficiency = iso - t_mask.bit_count()
        if deficiency > best:
            best = deficiency
            best_t = tuple(_bits(t_mask))
        elif deficiency == best:
            cand = tuple(_bits(t_mask))
            if cand < best_t:
                best_t = cand
    isolated_at_best = best + len(best_t)
    return HalfInt(n - best), DeficiencyWitness(best_t, isolated_at_best)


def _double_cover_matching(g: Graph) -> tuple[int, list[int]]:
    """Hopcroft-Karp on the bipartite double cover; returns (size, match_left).

    Left copy u is matched to right copy match_left[u] (-1 if exposed);
    left u - right v is an edge exactly when uv is an edge of g.
    """
    n = g.n
    adj = g.adj
    INF = n + 1
    match_left = [-1] * n
    match_right = [-1] * n
    dist = [0] * n
    size = 0
    while True:
        queue = deque()
        for u in range(n):
            if match_left[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = INF
        found = False
        while queue:
            u = queue.popleft()
            for v in _bits(adj[u]):
                w = match_right[v]
                if w == -1:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if not found:
            break

        def advance(u: int) -> bool:
            for v in _bits(adj[u]):
                w = match_right[v]
                if w == -1 or (dist[w] == dist[u] + 1 and advance(w)):
                    match_left[u] = v
                    match_right[v] = u
                    return True
            dist[u] = INF
            return False

        for u in range(n):
            if match_left[u] == -1 and advance(u):
                size += 1
    return size, match_left


def nu_star_fast(g: Graph) -> HalfInt:
    """nu* via the double cover: doubled value = maximum matching size there."""
    size, _ = _double_cover_matching(g)
    return HalfInt(size)


def fractional_certificate(g: Graph) -> FractionalCertificate:
    """Optimal half-integral fractional matching extracted from the double cover.

    Edge uv receives doubled weight [u matched to v'] + [v matched to u'],
    so per-vertex doubled load is at most 2 and the doubled total equals the
    double-cover matching size, i.e. 2 nu*(g).
    """
    size, match_left = _double_cover_matching(g)
    edges = []
    total = 0
    for u, v in g.edges():
        w = int(match_left[u] == v) + int(match_left[v] == u)
        edges.append((u, v, w))
        total += w
    if total != size:
        raise AssertionError("certificate total disagrees with matching size")
    return FractionalCertificate(tuple(edges), total)


MAX_MATCHING_BRANCH = 16


def matching_number(g: Graph) -> int:
    """Maximum matching size by branching on the lowest non-isolated vertex."""
    if g.n > MAX_MATCHING_BRANCH:
        raise ValueError(f"matching search limited to n <= {MAX_MATCHING_BRANCH}, got {g.n}")
    adj = g.adj
    cache: dict[int, int] = {}

    def rec(avail: int) -> int:
        m = avail
        while m:
            low = m & -m
            v = low.bit_length() - 1
            if adj[v] & avail:
                break
            m ^= low
        else:
            return 0
        avail = m  # isolated prefix vertices never matter again
        hit = cache.get(avail)
        if hit is not None:
            return hit
        v_bit = avail & -avail
        v = v_bit.bit_length() - 1
        best = rec(avail ^ v_bit)  # leave v unmatched
        for u in _bits(adj[v] & avail):
            best = max(best, 1 + rec(avail ^ v_bit ^ (1 << u)))
        cache[avail] = best
        return best

    return rec((1 << g.n) - 1)

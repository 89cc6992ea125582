"""Simple undirected graphs on at most 64 vertices.

Vertices are 0..n-1 and every neighbor set is a Python int used as a
bitmask, so set operations are single word operations for the sizes this
package cares about.  Graphs are immutable: every structural operation
(complement, join, disjoint union, edge deletion) returns a new graph.

Serialization is the graph6 ASCII format (6-bit groups, byte offset 63,
upper-triangle column order), bit-exact and without any relabeling.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_VERTICES = 64


class Graph6Error(ValueError):
    """Malformed or unsupported graph6 input."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbor bitmask of v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency table length does not match vertex count")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbor index >= {self.n}")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(self.n):
            for u in _bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        out = []
        for v in range(self.n):
            for u in _bits(self.adj[v] >> (v + 1)):
                out.append((v, u + v + 1))
        return out

    def edge_mask(self) -> int:
        """Pack the upper triangle into one int, bit pair_index(i, j) per edge."""
        mask = 0
        for i, j in self.edges():
            mask |= 1 << pair_index(i, j)
        return mask

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> "Graph":
        adj = [0] * n
        for j in range(1, n):
            base = j * (j - 1) // 2
            row = mask >> base & ((1 << j) - 1)
            for i in _bits(row):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        return cls(n, tuple(adj))


def _bits(mask: int):
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def pair_index(i: int, j: int) -> int:
    """Column-order index of the unordered pair i < j (matches graph6 bit order)."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


# ---------------------------------------------------------------------------
# small builders

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


# ---------------------------------------------------------------------------
# structural operations

def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ nb ^ (1 << v)) for v, nb in enumerate(g.adj)))


def join(g: Graph, h: Graph) -> Graph:
    """g on 0..n(g)-1, h shifted up, plus all cross edges."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise ValueError(f"join would have {n} > {MAX_VERTICES} vertices")
    hmask = ((1 << h.n) - 1) << g.n
    gmask = (1 << g.n) - 1
    adj = [nb | hmask for nb in g.adj]
    adj += [(nb << g.n) | gmask for nb in h.adj]
    return Graph(n, tuple(adj))


def disjoint_union(g: Graph | None, h: Graph) -> Graph:
    """g followed by h with no cross edges; g may be None (empty graph)."""
    if g is None:
        return h
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise ValueError(f"union would have {n} > {MAX_VERTICES} vertices")
    adj = list(g.adj) + [nb << g.n for nb in h.adj]
    return Graph(n, tuple(adj))


def delete_edges(g: Graph, edges) -> Graph:
    adj = list(g.adj)
    seen = set()
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"duplicate edge {key} in deletion list")
        seen.add(key)
        if not g.has_edge(u, v):
            raise ValueError(f"edge {key} not present")
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def degree_stats(g: Graph) -> tuple[int, int, list[int]]:
    """(min degree, max degree, degree sequence indexed by vertex)."""
    seq = [nb.bit_count() for nb in g.adj]
    return min(seq), max(seq), seq


# ---------------------------------------------------------------------------
# graph6

def to_graph6(g: Graph) -> str:
    """Canonical graph6 line for g, current labeling, no trailing newline."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + chr((n >> 12 & 63) + 63) + chr((n >> 6 & 63) + 63) + chr((n & 63) + 63)
    m = n * (n - 1) // 2
    mask = g.edge_mask()
    chars = []
    for gstart in range(0, m, 6):
        val = 0
        for k in range(6):
            p = gstart + k
            if p < m and mask >> p & 1:
                val |= 1 << (5 - k)
        chars.append(chr(val + 63))
    return head + "".join(chars)


def from_graph6(text: str) -> Graph:
    """Decode one graph6 line (surrounding whitespace tolerated)."""
    s = text.strip()
    if not s:
        raise Graph6Error("empty graph6 line")
    data = [ord(c) - 63 for c in s]
    if any(d < 0 or d > 63 for d in data):
        raise Graph6Error(f"malformed header: byte outside graph6 alphabet in {s!r}")
    if data[0] < 63:
        n, body = data[0], data[1:]
    elif len(data) >= 2 and data[1] < 63:
        if len(data) < 4:
            raise Graph6Error("malformed header: truncated extended vertex count")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        raise Graph6Error("vertex count out of supported range (n > 258047 form)")
    if not 1 <= n <= MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} out of supported range 1..{MAX_VERTICES}")
    m = n * (n - 1) // 2
    need = (m + 5) // 6
    if len(body) != need:
        raise Graph6Error(f"malformed header: expected {need} payload bytes, got {len(body)}")
    mask = 0
    for g6pos, val in enumerate(body):
        for k in range(6):
            if val >> (5 - k) & 1:
                p = 6 * g6pos + k
                if p >= m:
                    raise Graph6Error("trailing bits nonzero")
                mask |= 1 << p
    return Graph.from_edge_mask(n, mask)


# ---------------------------------------------------------------------------
# isomorphism (exact, intended for n <= 10)

def _refine_colors(g: Graph) -> tuple[int, ...]:
    """Iterated degree refinement; returns a stable color per vertex."""
    colors = tuple(g.degree(v) for v in range(g.n))
    for _ in range(g.n):
        sig = []
        for v in range(g.n):
            nbc = sorted(colors[u] for u in _bits(g.adj[v]))
            sig.append((colors[v], tuple(nbc)))
        ranking = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = tuple(ranking[s] for s in sig)
        if new == colors:
            break
        colors = new
    return colors


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test via color refinement plus backtracking."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    cg, ch = _refine_colors(g), _refine_colors(h)
    if sorted(cg) != sorted(ch):
        return False
    n = g.n
    candidates = [[u for u in range(n) if ch[u] == cg[v]] for v in range(n)]
    order = sorted(range(n), key=lambda v: len(candidates[v]))
    mapping = [-1] * n
    used = [False] * n

    def extend(idx: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        for u in candidates[v]:
            if used[u]:
                continue
            ok = True
            for w in order[:idx]:
                if g.has_edge(v, w) != h.has_edge(u, mapping[w]):
                    ok = False
                    break
            if ok:
                mapping[v] = u
                used[u] = True
                if extend(idx + 1):
                    return True
                used[u] = False
                mapping[v] = -1
        return False

    return extend(0)


def relabel(g: Graph, perm) -> Graph:
    """Image of g under vertex map v -> perm[v]."""
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def all_labeled_graphs(n: int):
    """Every labeled graph on n vertices, ascending edge-mask order."""
    for mask in range(1 << (n * (n - 1) // 2)):
        yield Graph.from_edge_mask(n, mask)

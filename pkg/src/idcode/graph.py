"""Small simple graphs stored as adjacency bit masks.

A vertex set is a plain ``int`` whose bit ``v`` is set when vertex ``v`` is a
member.  Every graph has at most :data:`MAX_VERTICES` vertices so any vertex
set of it fits in one 64-bit word.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import CapacityError, PreconditionError

MAX_VERTICES = 64

VertexSet = int


def vset(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    """Vertices of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: VertexSet) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the open neighborhood of ``v`` as a bit mask.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = self.full
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in members(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 1 <= n <= MAX_VERTICES:
            raise CapacityError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in members(self.adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def max_degree(self) -> int:
        return max(self.degree(v) for v in range(self.n))

    def closed(self, v: int) -> VertexSet:
        return self.adj[v] | (1 << v)

    def is_complete(self) -> bool:
        return all(self.closed(v) == self.full for v in range(self.n))

    def components(self) -> list[VertexSet]:
        """Connected components ordered by their smallest vertex."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = 0
                for u in members(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def eccentricity(self, v: int) -> int | None:
        """Greatest distance from ``v``; ``None`` if some vertex is unreachable."""
        reached = frontier = 1 << v
        dist = 0
        while reached != self.full:
            nxt = 0
            for u in members(frontier):
                nxt |= self.adj[u]
            frontier = nxt & ~reached
            if not frontier:
                return None
            reached |= frontier
            dist += 1
        return dist

    def diameter(self) -> float:
        """Diameter, or ``math.inf`` for a disconnected graph."""
        best = 0
        for v in range(self.n):
            e = self.eccentricity(v)
            if e is None:
                return float("inf")
            best = max(best, e)
        return best

    def induced(self, mask: VertexSet) -> tuple[Graph, list[int]]:
        """Subgraph induced by ``mask``, relabelled in ascending order.

        Returns the subgraph and the list mapping its vertices back to ``self``.
        """
        verts = members(mask)
        index = {v: i for i, v in enumerate(verts)}
        adj = []
        for v in verts:
            adj.append(vset(index[u] for u in members(self.adj[v] & mask)))
        return Graph(len(verts), tuple(adj)), verts


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """``g1`` on ``0..n1-1`` followed by ``g2`` shifted by ``n1``."""
    if g1.n + g2.n > MAX_VERTICES:
        raise CapacityError(f"union has {g1.n + g2.n} vertices, limit {MAX_VERTICES}")
    return Graph(g1.n + g2.n, g1.adj + tuple(a << g1.n for a in g2.adj))


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise PreconditionError(f"vertex {v} out of range for graph on {g.n} vertices")


def _check_subset(g: Graph, *sets: VertexSet) -> None:
    for s in sets:
        if s < 0 or s & ~g.full:
            raise PreconditionError(f"vertex set {members(s)} is not a subset of V(G)")


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    _check_vertex(g, v)
    return g.closed(v)


def traces(g: Graph, c: VertexSet, s: VertexSet | None = None) -> list[int]:
    """``N[x] & c`` for every ``x`` in ``s`` (default: all vertices), ascending."""
    xs = range(g.n) if s is None else members(s)
    return [g.closed(x) & c for x in xs]


def covers(g: Graph, c: VertexSet, s: VertexSet) -> bool:
    _check_subset(g, c, s)
    return all(t for t in traces(g, c, s))


def separates(g: Graph, c: VertexSet, s: VertexSet) -> bool:
    _check_subset(g, c, s)
    tr = traces(g, c, s)
    return len(set(tr)) == len(tr)


def is_identifying_code(g: Graph, c: VertexSet) -> bool:
    return covers(g, c, g.full) and separates(g, c, g.full)


def is_identifiable(g: Graph) -> bool:
    return len({g.closed(v) for v in range(g.n)}) == g.n


def is_dominating(g: Graph, d: VertexSet) -> bool:
    return covers(g, d, g.full)


def is_total_dominating(g: Graph, t: VertexSet) -> bool:
    _check_subset(g, t)
    return all(g.adj[x] & t for x in range(g.n))


def contained_in_some_closed_nbhd(g: Graph, s: VertexSet) -> bool:
    """True when ``s`` is a subset of ``N[x]`` for at least one vertex ``x``."""
    return any(s & ~g.closed(x) == 0 for x in range(g.n))


def twin_pairs(g: Graph) -> Iterator[tuple[int, int]]:
    """Pairs ``x < y`` with ``N[x] == N[y]``."""
    for x, y in combinations(range(g.n), 2):
        if g.closed(x) == g.closed(y):
            yield x, y

"""Corona products ``H ⊙ G`` with a fixed vertex layout.

Vertices of ``H`` keep their indices ``0..m-1``.  The copy of ``G`` attached to
``H``-vertex ``v`` occupies the contiguous block ``m + v*n_g .. m + (v+1)*n_g - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError
from .graph import MAX_VERTICES, Graph, VertexSet, is_identifiable, members


@dataclass(frozen=True)
class CoronaLayout:
    m: int
    n_g: int

    @property
    def size(self) -> int:
        return self.m + self.m * self.n_g

    def h_index(self, v: int) -> int:
        if not 0 <= v < self.m:
            raise IndexError(f"H-vertex {v} out of range")
        return v

    def copy_index(self, v: int, u: int) -> int:
        if not (0 <= v < self.m and 0 <= u < self.n_g):
            raise IndexError(f"copy vertex ({v},{u}) out of range")
        return self.m + v * self.n_g + u

    def block(self, v: int) -> VertexSet:
        """All vertices of the copy of ``G`` attached to ``v``."""
        return ((1 << self.n_g) - 1) << self.copy_index(v, 0)

    def locate(self, x: int) -> tuple[int, int | None]:
        """Inverse of the layout: ``(v, None)`` for an H-vertex, ``(v, u)`` for a copy vertex."""
        if not 0 <= x < self.size:
            raise IndexError(f"vertex {x} out of range")
        if x < self.m:
            return x, None
        v, u = divmod(x - self.m, self.n_g)
        return v, u

    def label(self, x: int) -> str:
        v, u = self.locate(x)
        return str(v) if u is None else f"{v}:{u}"

    def lift(self, v: int, s: VertexSet) -> VertexSet:
        """Copy of the ``G``-vertex set ``s`` inside block ``v``."""
        return s << self.copy_index(v, 0)

    def restrict(self, v: int, c: VertexSet) -> VertexSet:
        """``c ∩ V(G_v)`` expressed in ``G``'s own vertex numbering."""
        return (c >> self.copy_index(v, 0)) & ((1 << self.n_g) - 1)


def corona(h: Graph, g: Graph) -> tuple[Graph, CoronaLayout]:
    layout = CoronaLayout(h.n, g.n)
    if layout.size > MAX_VERTICES:
        raise CapacityError(
            f"corona of {h.n}- and {g.n}-vertex graphs has {layout.size} vertices, "
            f"limit {MAX_VERTICES}"
        )
    adj = list(h.adj) + [0] * (h.n * g.n)
    for v in range(h.n):
        base = layout.copy_index(v, 0)
        adj[v] |= layout.block(v)
        for u in range(g.n):
            adj[base + u] = (g.adj[u] << base) | (1 << v)
    return Graph(layout.size, tuple(adj)), layout


def identifiability_reason(h: Graph, g: Graph) -> str | None:
    """Why ``H ⊙ G`` is not identifiable, or ``None`` when it is.

    Decided from the factors alone.  A disconnected ``H`` is handled one
    connected component at a time, each component being either ``K1`` or
    nontrivial connected.
    """
    if not is_identifiable(g):
        return "G is not identifiable"
    for comp in h.components():
        if comp & (comp - 1) == 0 and g.max_degree() > g.n - 2:
            which = "H = K1" if h.n == 1 else f"H has isolated vertex {members(comp)[0]}"
            return f"{which} and G has a vertex of degree |V(G)|-1"
    return None


def corona_identifiable(h: Graph, g: Graph) -> bool:
    return identifiability_reason(h, g) is None

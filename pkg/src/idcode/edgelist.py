"""Plain-text edge lists.

First non-comment line is ``n m``; then ``m`` lines ``u v``.  ``#`` starts a
comment that runs to end of line.
"""

from __future__ import annotations

from .errors import GraphFormatError
from .graph import MAX_VERTICES, Graph


def _ints(text: str, lineno: int, count: int) -> list[int]:
    parts = text.split()
    if len(parts) != count:
        raise GraphFormatError(f"expected {count} integers, got {len(parts)}", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphFormatError(f"non-integer token in {text.strip()!r}", lineno) from None


def parse_edge_list(text: str) -> Graph:
    header = None
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if header is None:
            n, m = _ints(line, lineno, 2)
            if not 1 <= n <= MAX_VERTICES:
                raise GraphFormatError(f"vertex count {n} outside 1..{MAX_VERTICES}", lineno)
            if m < 0:
                raise GraphFormatError(f"negative edge count {m}", lineno)
            header = (n, m)
            continue
        u, v = _ints(line, lineno, 2)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        for x in (u, v):
            if not 0 <= x < n:
                raise GraphFormatError(f"vertex {x} out of range 0..{n - 1}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key[0]} {key[1]} (first on line {seen[key]})", lineno)
        seen[key] = lineno
        edges.append(key)
    if header is None:
        raise GraphFormatError("missing 'n m' header line")
    n, m = header
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges but {len(edges)} were given")
    return Graph.from_edges(n, edges)


def serialize_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"

"""Named graph families and the textual spec language used by the CLI.

Grammar::

    spec   := NAME | NAME ":" INT | "file:" PATH | "corona:(" spec "),(" spec ")"
    NAME   := path | cycle | complete | empty | star | fan | wheel | binomial | g3
              | k<INT>   (shorthand for complete:<INT>)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .corona import corona
from .edgelist import parse_edge_list
from .errors import GraphFormatError
from .graph import Graph

MIN_PARAM = {
    "path": 1,
    "cycle": 3,
    "complete": 1,
    "empty": 1,
    "star": 1,
    "fan": 3,
    "wheel": 3,
    "binomial": 1,
}

# Figure 1 of the source: hub 0 on the even rim vertices of the 6-cycle 1..6.
G3_EDGES = [(0, 2), (0, 4), (0, 6), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)]


@dataclass(frozen=True)
class GraphSpec:
    family: str
    param: int | None = None
    path: str | None = None
    children: tuple[GraphSpec, ...] = ()

    def __str__(self) -> str:
        if self.family == "file":
            return f"file:{self.path}"
        if self.family == "corona":
            h, g = self.children
            return f"corona:({h}),({g})"
        if self.param is None:
            return self.family
        return f"{self.family}:{self.param}"


def _split_corona_args(body: str, text: str) -> tuple[str, str]:
    if not body.startswith("("):
        raise GraphFormatError(f"corona spec needs '(h),(g)': {text!r}")
    depth = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                left, rest = body[1:i], body[i + 1 :]
                if not (rest.startswith(",(") and rest.endswith(")")):
                    break
                right = rest[2:-1]
                if right.count("(") != right.count(")"):
                    break
                return left, right
    raise GraphFormatError(f"unbalanced corona spec: {text!r}")


def parse_spec(text: str) -> GraphSpec:
    text = text.strip()
    if text.startswith("file:"):
        path = text[len("file:") :]
        if not path:
            raise GraphFormatError("file spec needs a path")
        return GraphSpec("file", path=path)
    if text.startswith("corona:"):
        left, right = _split_corona_args(text[len("corona:") :], text)
        return GraphSpec("corona", children=(parse_spec(left), parse_spec(right)))
    low = text.lower()
    if low == "g3":
        return GraphSpec("g3")
    m = re.fullmatch(r"k(\d+)", low)
    if m:
        low = f"complete:{m.group(1)}"
    m = re.fullmatch(r"([a-z]+):(\d+)", low)
    if not m:
        raise GraphFormatError(f"unrecognised graph spec: {text!r}")
    family, param = m.group(1), int(m.group(2))
    if family not in MIN_PARAM:
        raise GraphFormatError(f"unknown graph family {family!r}")
    if param < MIN_PARAM[family]:
        raise GraphFormatError(f"{family} needs parameter >= {MIN_PARAM[family]}, got {param}")
    return GraphSpec(family, param)


def path_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def empty_graph(k: int) -> Graph:
    return Graph(k, (0,) * k)


def g3_graph() -> Graph:
    return Graph.from_edges(7, G3_EDGES)


def binomial_tree(k: int) -> Graph:
    """``T_1 = K1 ⊙ K1`` and ``T_k = T_{k-1} ⊙ K1``; ``T_k`` has ``2**k`` vertices."""
    k1 = complete_graph(1)
    t = k1
    for _ in range(k):
        t, _ = corona(t, k1)
    return t


def make_family(spec: GraphSpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    fam, k = spec.family, spec.param
    if fam == "path":
        return path_graph(k)
    if fam == "cycle":
        return cycle_graph(k)
    if fam == "complete":
        return complete_graph(k)
    if fam == "empty":
        return empty_graph(k)
    if fam == "star":
        return corona(complete_graph(1), empty_graph(k))[0]
    if fam == "fan":
        return corona(complete_graph(1), path_graph(k))[0]
    if fam == "wheel":
        return corona(complete_graph(1), cycle_graph(k))[0]
    if fam == "binomial":
        return binomial_tree(k)
    if fam == "g3":
        return g3_graph()
    if fam == "file":
        return parse_edge_list(Path(spec.path).read_text())
    if fam == "corona":
        h, g = spec.children
        return corona(make_family(h), make_family(g))[0]
    raise GraphFormatError(f"unknown graph family {fam!r}")

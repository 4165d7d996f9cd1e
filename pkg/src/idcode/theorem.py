"""Closed-form minimum identifying codes of corona products, with witnesses.

:func:`gamma_id_corona` walks a fixed case tree:

0. ``H ⊙ G`` not identifiable: raise :class:`NotIdentifiableError`.
1. ``H = K1``: ``gamma_id(G)`` if (a) holds for ``G``, else ``gamma_id(G) + 1``.
2. ``H`` disconnected: sum over the components of ``H``.
3. ``H`` nontrivial connected, ``G = K1``: ``|V(H)| + 1`` if ``H`` is complete,
   else ``|V(H)|``.
4. ``H`` nontrivial connected, ``G`` nontrivial: ``|V(H)| * gamma_id(G)`` if (a)
   or (b) holds; otherwise add ``gamma(H)`` if (c) holds, else ``gamma_t(H)``.

Each case also builds an identifying code of the product of exactly that size.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classifier import check_condition_a, check_condition_b, check_condition_c, spread
from .corona import CoronaLayout, corona, identifiability_reason
from .errors import NotIdentifiableError, PreconditionError
from .graph import (
    Graph,
    VertexSet,
    contained_in_some_closed_nbhd,
    is_dominating,
    is_identifiable,
    is_identifying_code,
    is_total_dominating,
    members,
    popcount,
    separates,
    vset,
)
from .solver import (
    min_dominating_set,
    min_identifying_code,
    min_total_dominating_set,
)

CASE_TAGS = (
    "T2.1-unidentifiable",
    "T4.3-K1-a",
    "T4.3-K1-nota",
    "T4.5-Kn-K1",
    "T4.6-H-K1",
    "T4.1-ab",
    "T4.2-c",
    "T4.2-nc",
    "component-sum",
)


@dataclass(frozen=True)
class CoronaResult:
    value: int
    case_tag: str
    witness: VertexSet
    layout: CoronaLayout
    gamma_id_g: int
    gamma_h: int
    gamma_t_h: int | None
    flags: dict = field(default_factory=dict)
    components: tuple[CoronaResult, ...] = ()

    def witness_labels(self) -> list[str]:
        return [self.layout.label(x) for x in members(self.witness)]

    def as_dict(self) -> dict:
        out = {
            "value": self.value,
            "case": self.case_tag,
            "witness": members(self.witness),
            "witness_labels": self.witness_labels(),
            "ingredients": {
                "gamma_id_g": self.gamma_id_g,
                "gamma_h": self.gamma_h,
                "gamma_t_h": self.gamma_t_h,
                "flags": dict(self.flags),
            },
        }
        if self.components:
            out["components"] = [c.as_dict() for c in self.components]
        return out


# -- constructions --------------------------------------------------------------


def _lift_all(layout: CoronaLayout, s: VertexSet) -> VertexSet:
    return _union(layout.lift(v, s) for v in range(layout.m))


def _union(masks) -> VertexSet:
    out = 0
    for m in masks:
        out |= m
    return out


def construct_cons1(h: Graph, g: Graph, s: VertexSet) -> VertexSet:
    """Copy of ``s`` in every block; ``s`` must be an identifying code of ``g`` lying in no ``N[x]``."""
    if not is_identifying_code(g, s):
        raise PreconditionError(f"{members(s)} is not an identifying code of G")
    if contained_in_some_closed_nbhd(g, s):
        raise PreconditionError(f"{members(s)} lies inside a closed neighborhood of G")
    return _lift_all(CoronaLayout(h.n, g.n), s)


def construct_cons2(h: Graph, g: Graph, t: VertexSet) -> VertexSet:
    """Copy of the separating set ``t`` in every block, plus all of ``V(H)``."""
    if h.n < 2 or not h.is_connected():
        raise PreconditionError("H must be nontrivial and connected")
    if g.n < 2 or not is_identifiable(g):
        raise PreconditionError("G must be nontrivial and identifiable")
    if t == 0 or not separates(g, t, g.full):
        raise PreconditionError(f"{members(t)} is not a nonempty separating set of G")
    return _lift_all(CoronaLayout(h.n, g.n), t) | h.full


def construct_cons3(
    h: Graph, g: Graph, d: VertexSet, t_sep: VertexSet, w_code: VertexSet
) -> VertexSet:
    """Blocks of ``d`` get ``t_sep``, the other blocks get ``w_code``; plus ``d`` itself."""
    if not is_dominating(h, d):
        raise PreconditionError(f"{members(d)} does not dominate H")
    if not is_identifying_code(g, w_code):
        raise PreconditionError(f"{members(w_code)} is not an identifying code of G")
    if not separates(g, t_sep, g.full) or not spread(g, t_sep):
        raise PreconditionError(
            f"{members(t_sep)} must separate V(G) and lie in no closed neighborhood"
        )
    layout = CoronaLayout(h.n, g.n)
    code = d
    for v in range(h.n):
        code |= layout.lift(v, t_sep if d >> v & 1 else w_code)
    return code


def construct_cons4(h: Graph, g: Graph, t: VertexSet, w_code: VertexSet) -> VertexSet:
    """Copy of ``w_code`` in every block plus the total dominating set ``t`` of ``h``."""
    if not is_total_dominating(h, t):
        raise PreconditionError(f"{members(t)} is not a total dominating set of H")
    if not is_identifying_code(g, w_code):
        raise PreconditionError(f"{members(w_code)} is not an identifying code of G")
    return _lift_all(CoronaLayout(h.n, g.n), w_code) | t


def complete_k1_code(layout: CoronaLayout) -> VertexSet:
    """``{v0, v1}`` plus the pendant of every ``H``-vertex except ``v0``; for ``K_n ⊙ K1``."""
    return 0b11 | _union(1 << layout.copy_index(v, 0) for v in range(1, layout.m))


def twin_representatives(h: Graph) -> VertexSet:
    """Smallest vertex of each class of the relation ``N[u] == N[v]``.

    Grouping by open neighborhoods instead does not work: in ``C4`` both open
    classes are forced into adjacent representatives with equal traces.
    """
    seen: dict[int, int] = {}
    for v in range(h.n):
        seen.setdefault(h.closed(v), v)
    return vset(seen.values())


def pendant_code(h: Graph, layout: CoronaLayout) -> VertexSet:
    """Code of ``H ⊙ K1`` of size ``|V(H)|`` for connected, non-complete ``H``.

    Takes one representative per closed-neighborhood class of ``H`` plus the
    pendant vertex of every non-representative.
    """
    d = twin_representatives(h)
    return d | _union(1 << layout.copy_index(v, 0) for v in range(h.n) if not d >> v & 1)


# -- main case tree -------------------------------------------------------------


def _finish(result: CoronaResult, product: Graph) -> CoronaResult:
    if popcount(result.witness) != result.value or not is_identifying_code(product, result.witness):
        raise AssertionError(
            f"case {result.case_tag}: witness {members(result.witness)} is not an "
            f"identifying code of size {result.value}"
        )
    return result


def _gamma_t(h: Graph) -> int | None:
    if any(a == 0 for a in h.adj):
        return None
    return min_total_dominating_set(h).optimum


def _trivial_h(h: Graph, g: Graph, layout: CoronaLayout) -> CoronaResult:
    w = min_identifying_code(g)
    a, aw = check_condition_a(g, w.optimum)
    if a:
        return CoronaResult(w.optimum, "T4.3-K1-a", layout.lift(0, aw.code), layout,
                            w.optimum, 1, None, {"a": True})
    x = next(x for x in range(g.n) if w.witness & ~g.closed(x) == 0)
    y = members(g.full & ~g.closed(x))[0]
    s = w.witness | (1 << y)
    return CoronaResult(w.optimum + 1, "T4.3-K1-nota", construct_cons1(h, g, s), layout,
                        w.optimum, 1, None, {"a": False})


def _connected_h(h: Graph, g: Graph, layout: CoronaLayout) -> CoronaResult:
    m = h.n
    gamma_h = min_dominating_set(h)
    gamma_t_h = min_total_dominating_set(h)
    ingredients = dict(layout=layout, gamma_h=gamma_h.optimum, gamma_t_h=gamma_t_h.optimum)
    if g.n == 1:
        if h.is_complete():
            return CoronaResult(m + 1, "T4.5-Kn-K1", complete_k1_code(layout), gamma_id_g=1,
                                **ingredients)
        return CoronaResult(m, "T4.6-H-K1", pendant_code(h, layout), gamma_id_g=1, **ingredients)

    w = min_identifying_code(g)
    k = w.optimum
    a, aw = check_condition_a(g, k)
    if a:
        return CoronaResult(m * k, "T4.1-ab", construct_cons1(h, g, aw.code), gamma_id_g=k,
                            flags={"a": True}, **ingredients)
    b, bw = check_condition_b(g, k)
    if b:
        return CoronaResult(m * k, "T4.1-ab", construct_cons2(h, g, bw.remainder), gamma_id_g=k,
                            flags={"a": False, "b": True}, **ingredients)
    c, cw = check_condition_c(g, k)
    flags = {"a": False, "b": False, "c": c}
    if c:
        code = construct_cons3(h, g, gamma_h.witness, cw.remainder, w.witness)
        return CoronaResult(m * k + gamma_h.optimum, "T4.2-c", code, gamma_id_g=k, flags=flags,
                            **ingredients)
    code = construct_cons4(h, g, gamma_t_h.witness, w.witness)
    return CoronaResult(m * k + gamma_t_h.optimum, "T4.2-nc", code, gamma_id_g=k, flags=flags,
                        **ingredients)


def gamma_id_corona(h: Graph, g: Graph) -> CoronaResult:
    reason = identifiability_reason(h, g)
    if reason is not None:
        raise NotIdentifiableError(f"corona product is not identifiable: {reason}")
    product, layout = corona(h, g)
    if h.n == 1:
        return _finish(_trivial_h(h, g, layout), product)
    comps = h.components()
    if len(comps) == 1:
        return _finish(_connected_h(h, g, layout), product)

    parts = []
    witness = 0
    for comp in comps:
        sub, verts = h.induced(comp)
        part = gamma_id_corona(sub, g)
        parts.append(part)
        for x in members(part.witness):
            i, u = part.layout.locate(x)
            v = verts[i]
            witness |= 1 << (v if u is None else layout.copy_index(v, u))
    result = CoronaResult(
        sum(p.value for p in parts), "component-sum", witness, layout,
        gamma_id_g=parts[0].gamma_id_g,
        gamma_h=min_dominating_set(h).optimum,
        gamma_t_h=_gamma_t(h),
        components=tuple(parts),
    )
    return _finish(result, product)


def corona_bounds(h: Graph, g: Graph) -> tuple[int, int | None]:
    """``(|V(H)| * gamma_id(G), |V(H)| * gamma_id(G) + gamma_t(H))``.

    The upper bound is ``None`` unless ``H`` is nontrivial and connected.
    """
    reason = identifiability_reason(h, g)
    if reason is not None:
        raise NotIdentifiableError(f"corona product is not identifiable: {reason}")
    lower = h.n * min_identifying_code(g).optimum
    if h.n < 2 or not h.is_connected():
        return lower, None
    return lower, lower + min_total_dominating_set(h).optimum


# -- special families -------------------------------------------------------------


def gamma_id_path(n: int) -> int:
    if n < 3:
        raise PreconditionError("closed form for paths needs n >= 3")
    return n // 2 + 1


def gamma_id_cycle(n: int) -> int:
    if n in (4, 5):
        return 3
    if n < 6:
        raise PreconditionError("closed form for cycles needs n >= 4")
    return n // 2 if n % 2 == 0 else (n + 3) // 2


def gamma_id_fan(n: int) -> int:
    """``K1 ⊙ P_n``; not identifiable for ``n <= 3``."""
    if n < 4:
        raise NotIdentifiableError(f"fan on {n} path vertices is not identifiable")
    return 4 if n == 4 else n // 2 + 1


def gamma_id_wheel(n: int) -> int:
    """``K1 ⊙ C_n``; not identifiable for ``n == 3``."""
    if n < 4:
        raise NotIdentifiableError(f"wheel on {n} cycle vertices is not identifiable")
    if n == 4:
        return 4
    return n // 2 if n % 2 == 0 else (n + 3) // 2


def gamma_id_binomial_tree(k: int) -> int:
    if k < 3:
        raise PreconditionError(
            "binomial-tree formula needs k >= 3 (T1 is not identifiable, T2 = P4 has value 3)"
        )
    return 2 ** (k - 1)


@dataclass(frozen=True)
class PendantGraph:
    """``H`` with ``counts[i]`` pendant vertices hung on vertex ``i``.

    ``H`` keeps indices ``0..m-1``; the pendants of vertex ``i`` are
    ``offsets[i] .. offsets[i] + counts[i] - 1``.
    """

    graph: Graph
    counts: tuple[int, ...]
    offsets: tuple[int, ...]

    def pendant(self, i: int, j: int) -> int:
        return self.offsets[i] + j


def build_pendant_graph(h: Graph, counts) -> PendantGraph:
    counts = tuple(counts)
    if len(counts) != h.n:
        raise PreconditionError(f"need {h.n} pendant counts, got {len(counts)}")
    if any(c < 1 for c in counts):
        raise PreconditionError("every pendant count must be at least 1")
    offsets = []
    nxt = h.n
    edges = list(h.edges())
    for i, c in enumerate(counts):
        offsets.append(nxt)
        edges.extend((i, nxt + j) for j in range(c))
        nxt += c
    return PendantGraph(Graph.from_edges(nxt, edges), counts, tuple(offsets))


def pendant_witness(h: Graph, counts) -> tuple[PendantGraph, VertexSet]:
    """Build ``H1`` and an identifying code of it with ``sum(counts)`` vertices."""
    if not h.is_connected():
        raise PreconditionError("H must be connected")
    pg = build_pendant_graph(h, counts)
    m = h.n
    if h.is_complete() and all(c == 1 for c in pg.counts):
        raise PreconditionError(
            f"H1 is K{m} ⊙ K1; its value is {m + 1}, use the complete-graph formula"
        )
    all_pendants = _union(
        1 << pg.pendant(i, j) for i in range(m) for j in range(pg.counts[i])
    )
    if m == 1:
        code = all_pendants
    elif h.is_complete():
        j = next(i for i in range(m) if pg.counts[i] >= 2)
        k = next(i for i in range(m) if i != j)
        code = (all_pendants & ~(1 << pg.pendant(j, 0)) & ~(1 << pg.pendant(k, 0))) | (1 << j) | (1 << k)
    else:
        # H plus the first pendant of each vertex is H ⊙ K1
        first = CoronaLayout(m, 1)
        core = pendant_code(h, first)
        code = core & h.full
        for v in range(m):
            if core >> first.copy_index(v, 0) & 1:
                code |= 1 << pg.pendant(v, 0)
        code |= _union(1 << pg.pendant(i, j) for i in range(m) for j in range(1, pg.counts[i]))
    return pg, code


def gamma_id_pendant(h: Graph, counts) -> int:
    pg, code = pendant_witness(h, counts)
    value = sum(pg.counts)
    if popcount(code) != value or not is_identifying_code(pg.graph, code):
        raise AssertionError(f"pendant witness {members(code)} is invalid")
    return value

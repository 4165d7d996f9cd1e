"""Exact minimum hitting set over bit masks, and the graph invariants built on it.

Every invariant here is "pick the fewest vertices so that each constraint set
contains at least one picked vertex":

* identifying code: ``N[x]`` for every ``x`` and ``N[x] ^ N[y]`` for every pair,
* domination: ``N[x]``,
* total domination: ``N(x)``,
* separation: ``N[x] ^ N[y]`` only.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator

from .errors import EnumerationOverflow, InfeasibleError, NotIdentifiableError, PreconditionError
from .graph import (
    Graph,
    VertexSet,
    covers,
    is_dominating,
    is_identifiable,
    is_identifying_code,
    is_total_dominating,
    members,
    popcount,
    separates,
)

DEFAULT_CAP = 1_000_000


@dataclass(frozen=True)
class ConstraintSystem:
    """Deduplicated constraints over vertices ``0..universe_size-1``.

    Constraints are stored sorted by ``(size, mask)`` so that equal inputs in any
    order produce the same system.
    """

    universe_size: int
    constraints: tuple[int, ...]

    @classmethod
    def build(cls, universe_size: int, masks: Iterable[int]) -> ConstraintSystem:
        full = (1 << universe_size) - 1
        uniq = set()
        for c in masks:
            if c & ~full:
                raise ValueError(f"constraint {members(c)} outside universe of size {universe_size}")
            if c == 0:
                raise InfeasibleError("empty constraint")
            uniq.add(c)
        return cls(universe_size, tuple(sorted(uniq, key=lambda c: (popcount(c), c))))

    def is_hit_by(self, s: VertexSet) -> bool:
        return all(c & s for c in self.constraints)


@dataclass(frozen=True)
class SolveResult:
    optimum: int
    witness: VertexSet
    nodes_explored: int

    @property
    def vertices(self) -> list[int]:
        return members(self.witness)


def _minimal(constraints: Iterable[int]) -> list[int]:
    """Drop every constraint that is a superset of another one.

    Hitting the subset already hits the superset, so the optimum is unchanged.
    """
    kept: list[int] = []
    for c in sorted(set(constraints), key=lambda c: (popcount(c), c)):
        if not any(k & ~c == 0 for k in kept):
            kept.append(c)
    return kept


def _packing_bound(unhit: list[int]) -> int:
    """Size of a greedy family of pairwise-disjoint constraints (smallest first)."""
    used = 0
    count = 0
    for c in sorted(unhit, key=popcount):
        if not c & used:
            used |= c
            count += 1
    return count


def _greedy(constraints: list[int]) -> int:
    chosen = 0
    unhit = constraints
    while unhit:
        freq: dict[int, int] = {}
        for c in unhit:
            for v in members(c):
                freq[v] = freq.get(v, 0) + 1
        v = min(freq, key=lambda v: (-freq[v], v))
        chosen |= 1 << v
        unhit = [c for c in unhit if not c >> v & 1]
    return chosen


class _Counter:
    __slots__ = ("nodes",)

    def __init__(self) -> None:
        self.nodes = 0


def _branch_and_bound(constraints: list[int], counter: _Counter) -> int:
    """Minimum hitting set size.

    Branches on the vertices of the smallest unhit constraint, most frequent
    first; once a vertex's branch is done it is excluded from its siblings.
    """
    best = [popcount(_greedy(constraints))]

    def rec(unhit: list[int], size: int) -> None:
        counter.nodes += 1
        if not unhit:
            best[0] = min(best[0], size)
            return
        if size + _packing_bound(unhit) >= best[0]:
            return
        pivot = min(unhit, key=lambda c: (popcount(c), c))
        freq = {v: 0 for v in members(pivot)}
        for c in unhit:
            for v in freq:
                if c >> v & 1:
                    freq[v] += 1
        excluded = 0
        for v in sorted(freq, key=lambda v: (-freq[v], v)):
            rest = [c & ~excluded for c in unhit if not c >> v & 1]
            excluded |= 1 << v
            if all(rest):
                rec(rest, size + 1)
            if size + 1 >= best[0]:
                return

    rec(_minimal(constraints), 0)
    return best[0]


def _lex_solutions(constraints: list[int], n: int, k: int, counter: _Counter) -> Iterator[int]:
    """All ``k``-subsets of ``0..n-1`` hitting every constraint, in lexicographic order.

    Sets are compared as ascending vertex lists.
    """
    if k > n:
        return

    def rec(unhit: list[int], chosen: int, start: int, r: int) -> Iterator[int]:
        counter.nodes += 1
        if not unhit:
            for extra in combinations(range(start, n), r):
                mask = chosen
                for v in extra:
                    mask |= 1 << v
                yield mask
            return
        if r == 0 or _packing_bound(unhit) > r:
            return
        # skipping past a constraint's top vertex would leave it unhittable
        limit = min(min(c.bit_length() for c in unhit) - 1, n - r)
        for j in range(start, limit + 1):
            bit = 1 << j
            above = ~((bit << 1) - 1)
            rest = [c & above for c in unhit if not c & bit]
            yield from rec(rest, chosen | bit, j + 1, r - 1)

    yield from rec(_minimal(constraints), 0, 0, k)


def _independent_parts(constraints: list[int]) -> list[list[int]]:
    """Group constraints into classes that share no vertex, transitively."""
    parts: list[tuple[int, list[int]]] = []
    for c in constraints:
        support, group = c, [c]
        rest = []
        for s, g in parts:
            if s & support:
                support |= s
                group += g
            else:
                rest.append((s, g))
        parts = rest + [(support, group)]
    return [g for _, g in sorted(parts)]


def min_hitting_set(cs: ConstraintSystem) -> SolveResult:
    """Minimum hitting set with the lexicographically least optimal witness.

    Vertex-disjoint parts of the system are solved separately.  Among sets of
    one size the lex order is decided by the smallest element of their
    symmetric difference, so the union of per-part lex-least optima is the
    overall lex-least optimum.
    """
    if any(c == 0 for c in cs.constraints):
        raise InfeasibleError("empty constraint")
    counter = _Counter()
    if not cs.constraints:
        return SolveResult(0, 0, 1)
    opt = witness = 0
    for part in _independent_parts(_minimal(cs.constraints)):
        k = _branch_and_bound(part, counter)
        opt += k
        witness |= next(_lex_solutions(part, cs.universe_size, k, counter))
    return SolveResult(opt, witness, counter.nodes)


def iter_solutions(cs: ConstraintSystem, k: int) -> Iterator[VertexSet]:
    """Lazy form of :func:`enumerate_solutions` without a cap."""
    if any(c == 0 for c in cs.constraints):
        raise InfeasibleError("empty constraint")
    return _lex_solutions(list(cs.constraints), cs.universe_size, k, _Counter())


def enumerate_solutions(cs: ConstraintSystem, k: int, cap: int = DEFAULT_CAP) -> list[VertexSet]:
    if cap <= 0:
        raise ValueError("cap must be positive")
    out = []
    for s in iter_solutions(cs, k):
        if len(out) == cap:
            raise EnumerationOverflow(cap)
        out.append(s)
    return out


def first_solution(
    cs: ConstraintSystem,
    k: int,
    accept: Callable[[VertexSet], bool],
    cap: int = DEFAULT_CAP,
) -> VertexSet | None:
    """Lexicographically first ``k``-solution passing ``accept``.

    Raises :class:`EnumerationOverflow` if more than ``cap`` solutions are
    rejected before an answer is known.
    """
    for seen, s in enumerate(iter_solutions(cs, k)):
        if seen == cap:
            raise EnumerationOverflow(cap)
        if accept(s):
            return s
    return None


# -- graph constraint systems -------------------------------------------------


def _pair_constraints(g: Graph) -> list[int]:
    out = []
    for x, y in combinations(range(g.n), 2):
        d = g.closed(x) ^ g.closed(y)
        if not d:
            raise NotIdentifiableError(f"vertices {x} and {y} have equal closed neighborhoods")
        out.append(d)
    return out


def identifying_code_system(g: Graph) -> ConstraintSystem:
    return ConstraintSystem.build(g.n, [g.closed(x) for x in range(g.n)] + _pair_constraints(g))


def separating_system(g: Graph) -> ConstraintSystem:
    return ConstraintSystem.build(g.n, _pair_constraints(g))


def domination_system(g: Graph) -> ConstraintSystem:
    return ConstraintSystem.build(g.n, [g.closed(x) for x in range(g.n)])


def total_domination_system(g: Graph) -> ConstraintSystem:
    for x in range(g.n):
        if not g.adj[x]:
            raise PreconditionError(f"vertex {x} is isolated; no total dominating set exists")
    return ConstraintSystem.build(g.n, g.adj)


def _checked(result: SolveResult, ok: bool, what: str) -> SolveResult:
    if not ok:
        raise AssertionError(f"solver witness {result.vertices} is not a {what}")
    return result


def min_identifying_code(g: Graph) -> SolveResult:
    r = min_hitting_set(identifying_code_system(g))
    return _checked(r, is_identifying_code(g, r.witness), "identifying code")


def min_dominating_set(g: Graph) -> SolveResult:
    r = min_hitting_set(domination_system(g))
    return _checked(r, is_dominating(g, r.witness), "dominating set")


def min_total_dominating_set(g: Graph) -> SolveResult:
    r = min_hitting_set(total_domination_system(g))
    return _checked(r, is_total_dominating(g, r.witness), "total dominating set")


def min_separating_set(g: Graph) -> SolveResult:
    r = min_hitting_set(separating_system(g))
    return _checked(r, separates(g, r.witness, g.full), "separating set")


def gamma_id(g: Graph) -> int:
    return min_identifying_code(g).optimum


def extend_separating(g: Graph, s: VertexSet) -> VertexSet:
    """Grow a separating set into an identifying code by adding one vertex.

    If ``s`` already covers every vertex the smallest vertex (0) is added, which
    may already be present.  Otherwise exactly one vertex has an empty trace and
    that vertex is added.
    """
    if not is_identifiable(g):
        raise NotIdentifiableError("graph is not identifiable")
    if not separates(g, s, g.full):
        raise PreconditionError(f"{members(s)} does not separate V(G)")
    if covers(g, s, g.full):
        return s | 1
    (z,) = [x for x in range(g.n) if not g.closed(x) & s]
    return s | (1 << z)

"""Conditions (a), (b) and (c) on the (near-)minimum identifying codes of a graph.

For an identifiable ``G`` with ``k = gamma_id(G)``:

(a) some identifying code ``S`` with ``|S| = k`` lies inside no closed neighborhood;
(b) some identifying code ``S`` with ``|S| = k`` has a vertex ``z`` such that
    ``S - {z}`` still separates ``V(G)``;
(c) some identifying code ``S`` with ``|S| = k + 1`` has a vertex ``z`` such that
    ``S - {z}`` separates ``V(G)`` and lies inside no closed neighborhood.

(b) and (c) are decided through separating sets instead of enumerating codes:
(b) holds iff a separating set of size ``k - 1`` exists, and (c) holds iff a
separating set ``T`` of size ``k`` exists that lies inside no closed
neighborhood (and ``k + 1 <= n``).  Adding one vertex to such a ``T`` always
yields an identifying code.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import EnumerationOverflow, NotIdentifiableError
from .graph import (
    Graph,
    VertexSet,
    contained_in_some_closed_nbhd,
    covers,
    is_identifiable,
    members,
)
from .solver import (
    DEFAULT_CAP,
    extend_separating,
    first_solution,
    identifying_code_system,
    min_identifying_code,
    min_separating_set,
    separating_system,
)


def enumeration_cap() -> int:
    """Cap on enumerated solutions; ``IDCODE_ENUM_CAP`` overrides the default."""
    raw = os.environ.get("IDCODE_ENUM_CAP")
    if raw is None:
        return DEFAULT_CAP
    cap = int(raw)
    if cap <= 0:
        raise ValueError("IDCODE_ENUM_CAP must be positive")
    return cap


@dataclass(frozen=True)
class CodeWitness:
    """An identifying code ``code`` and the removable vertex ``z`` (if the condition has one)."""

    code: VertexSet
    z: int | None = None

    @property
    def remainder(self) -> VertexSet:
        return self.code if self.z is None else self.code & ~(1 << self.z)

    def as_dict(self) -> dict:
        return {"code": members(self.code), "z": self.z}


@dataclass(frozen=True)
class Classification:
    """Condition flags for one graph.

    A flag is ``None`` only when its enumeration overflowed, in which case
    ``caps_hit`` is set.
    """

    gamma_id: int
    a_exists: bool | None
    a_witness: CodeWitness | None
    b_exists: bool
    b_witness: CodeWitness | None
    c_exists: bool | None
    c_witness: CodeWitness | None
    caps_hit: bool = False

    def as_dict(self) -> dict:
        def w(x: CodeWitness | None) -> dict | None:
            return None if x is None else x.as_dict()

        return {
            "gamma_id": self.gamma_id,
            "a": self.a_exists,
            "a_witness": w(self.a_witness),
            "b": self.b_exists,
            "b_witness": w(self.b_witness),
            "c": self.c_exists,
            "c_witness": w(self.c_witness),
            "caps_hit": self.caps_hit,
        }


def _require_identifiable(g: Graph) -> None:
    if not is_identifiable(g):
        raise NotIdentifiableError("graph is not identifiable")


def spread(g: Graph, s: VertexSet) -> bool:
    """``s`` is contained in no closed neighborhood of ``g``."""
    return not contained_in_some_closed_nbhd(g, s)


def check_condition_a(
    g: Graph, gamma: int | None = None, cap: int | None = None
) -> tuple[bool, CodeWitness | None]:
    _require_identifiable(g)
    if gamma is None:
        gamma = min_identifying_code(g).optimum
    cap = enumeration_cap() if cap is None else cap
    s = first_solution(identifying_code_system(g), gamma, lambda s: spread(g, s), cap)
    if s is None:
        return False, None
    return True, CodeWitness(s)


def check_condition_b(g: Graph, gamma: int | None = None) -> tuple[bool, CodeWitness | None]:
    _require_identifiable(g)
    if gamma is None:
        gamma = min_identifying_code(g).optimum
    sep = min_separating_set(g)
    if sep.optimum > gamma - 1:
        return False, None
    t = sep.witness
    code = extend_separating(g, t)
    # t has gamma-1 vertices, so it cannot cover and the added vertex is new
    (z,) = members(code & ~t)
    return True, CodeWitness(code, z)


def _adjoin(g: Graph, t: VertexSet) -> tuple[VertexSet, int]:
    if covers(g, t, g.full):
        z = members(g.full & ~t)[0]
    else:
        (z,) = [x for x in range(g.n) if not g.closed(x) & t]
    return t | (1 << z), z


def check_condition_c(
    g: Graph, gamma: int | None = None, cap: int | None = None
) -> tuple[bool, CodeWitness | None]:
    _require_identifiable(g)
    if gamma is None:
        gamma = min_identifying_code(g).optimum
    if gamma + 1 > g.n:
        return False, None
    cap = enumeration_cap() if cap is None else cap
    t = first_solution(separating_system(g), gamma, lambda t: spread(g, t), cap)
    if t is None:
        return False, None
    code, z = _adjoin(g, t)
    return True, CodeWitness(code, z)


def classify(g: Graph, cap: int | None = None) -> Classification:
    _require_identifiable(g)
    gamma = min_identifying_code(g).optimum
    caps_hit = False
    try:
        a, aw = check_condition_a(g, gamma, cap)
    except EnumerationOverflow:
        a, aw, caps_hit = None, None, True
    b, bw = check_condition_b(g, gamma)
    try:
        c, cw = check_condition_c(g, gamma, cap)
    except EnumerationOverflow:
        c, cw, caps_hit = None, None, True
    return Classification(gamma, a, aw, b, bw, c, cw, caps_hit)

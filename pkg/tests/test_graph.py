from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from idcode.corona import corona
from idcode.edgelist import parse_edge_list, serialize_edge_list
from idcode.errors import CapacityError, GraphFormatError, PreconditionError
from idcode.families import make_family, parse_spec
from idcode.graph import (
    Graph,
    closed_neighborhood,
    covers,
    disjoint_union,
    is_identifiable,
    is_identifying_code,
    members,
    separates,
    vset,
)

from .oracles import graphs, oracle_is_code

P3 = Graph.from_edges(3, [(0, 1), (1, 2)])
K2 = make_family("complete:2")
K3 = make_family("complete:3")
K4 = make_family("complete:4")


def test_vset_members_roundtrip():
    assert members(vset([5, 0, 3])) == [0, 3, 5]
    assert vset([]) == 0


def test_closed_neighborhood_examples():
    assert members(closed_neighborhood(P3, 1)) == [0, 1, 2]
    assert members(closed_neighborhood(P3, 0)) == [0, 1]
    assert members(closed_neighborhood(K4, 2)) == [0, 1, 2, 3]


def test_closed_neighborhood_out_of_range():
    with pytest.raises(PreconditionError):
        closed_neighborhood(P3, 3)


def test_covers_examples():
    assert covers(P3, vset([1]), P3.full)
    assert not covers(P3, vset([0]), vset([2]))
    assert not covers(P3, 0, vset([1]))


def test_separates_examples():
    assert separates(P3, vset([0, 2]), P3.full)
    assert not separates(K2, vset([0, 1]), K2.full)
    assert separates(P3, 0, vset([2]))
    assert separates(P3, 0, 0)


def test_identifying_code_examples():
    assert is_identifying_code(P3, vset([0, 2]))
    c6 = make_family("cycle:6")
    assert is_identifying_code(c6, vset([0, 2, 4]))
    # three consecutive rim vertices leave the opposite vertex 4 uncovered
    assert not is_identifying_code(c6, vset([0, 1, 2]))
    for mask in range(1 << 3):
        assert not is_identifying_code(K3, mask)


@pytest.mark.parametrize(
    "spec, expected", [("complete:1", True), ("complete:2", False), ("path:4", True), ("empty:4", True)]
)
def test_is_identifiable(spec, expected):
    assert is_identifiable(make_family(spec)) is expected


def test_graph_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError):
        Graph(1, (0b1,))
    with pytest.raises(CapacityError):
        Graph.from_edges(65, [])


def test_diameter_and_components():
    assert make_family("path:6").diameter() == 5
    assert make_family("empty:2").diameter() == float("inf")
    assert len(make_family("empty:3").components()) == 3


def test_disjoint_union_layout():
    u = disjoint_union(P3, K2)
    assert u.n == 5
    assert u.edges() == [(0, 1), (1, 2), (3, 4)]


# -- families -------------------------------------------------------------------


def test_path_family():
    assert make_family("path:4").edges() == [(0, 1), (1, 2), (2, 3)]


def test_g3_matches_figure():
    g = make_family("g3")
    assert g.n == 7 and g.edge_count == 9
    assert g.degree(0) == 3
    assert members(g.adj[0]) == [2, 4, 6]
    assert sorted(g.degree(v) for v in range(7)) == [2, 2, 2, 3, 3, 3, 3]


def test_binomial_tree_sizes():
    assert make_family("binomial:1").edges() == [(0, 1)]
    t3 = make_family("binomial:3")
    assert t3.n == 8 and t3.edge_count == 7 and t3.is_connected()
    # T2 is P4
    assert sorted(make_family("binomial:2").degree(v) for v in range(4)) == [1, 1, 2, 2]


def test_star_is_corona_of_empty():
    s = make_family("star:3")
    assert s.degree(0) == 3 and s.edge_count == 3


@pytest.mark.parametrize("k", [3, 4, 5, 7])
def test_fan_and_wheel_are_coronas(k):
    k1 = make_family("k1")
    assert make_family(f"fan:{k}") == corona(k1, make_family(f"path:{k}"))[0]
    assert make_family(f"wheel:{k}") == corona(k1, make_family(f"cycle:{k}"))[0]


def test_corona_spec_nests():
    g = make_family("corona:(corona:(k1),(k1)),(k1)")
    assert g == make_family("binomial:2")
    assert str(parse_spec("corona:(path:3),(g3)")) == "corona:(path:3),(g3)"


@pytest.mark.parametrize(
    "text", ["path:0", "cycle:2", "fan:2", "wheel:2", "blob:3", "path", "corona:(k1)", "corona:(k1),(k2", "file:"]
)
def test_bad_specs(text):
    with pytest.raises(GraphFormatError):
        parse_spec(text)


def test_file_spec(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("3 2\n0 1\n1 2\n")
    assert make_family(f"file:{f}") == P3


# -- edge lists -----------------------------------------------------------------


def test_parse_edge_list():
    assert parse_edge_list("3 2\n0 1\n1 2\n") == P3


def test_parse_comments_and_blank_lines():
    text = "# a path\n3 2  # header\n\n1 2\n0 1 # first\n"
    g = parse_edge_list(text)
    assert g == P3
    assert serialize_edge_list(g) == "3 2\n0 1\n1 2\n"


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("2 1\n0 0\n", 2, "self-loop"),
        ("2 1\n0 2\n", 2, "out of range"),
        ("3 2\n0 1\n1 0\n", 3, "duplicate"),
        ("3 1\n0 x\n", 2, "non-integer"),
        ("3\n", 1, "expected 2"),
    ],
)
def test_parse_errors(text, line, fragment):
    with pytest.raises(GraphFormatError) as info:
        parse_edge_list(text)
    assert info.value.line == line
    assert fragment in str(info.value)


def test_parse_edge_count_mismatch():
    with pytest.raises(GraphFormatError, match="declares 2"):
        parse_edge_list("3 2\n0 1\n")


@given(graphs(max_n=12))
def test_serialize_roundtrip(g):
    text = serialize_edge_list(g)
    assert parse_edge_list(text) == g
    assert serialize_edge_list(parse_edge_list(text)) == text


# -- properties -----------------------------------------------------------------


@given(graphs(max_n=10), st.data())
def test_vertex_in_own_closed_neighborhood(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    assert closed_neighborhood(g, v) >> v & 1


@given(graphs(max_n=10))
def test_separating_everything_is_identifiability(g):
    assert separates(g, g.full, g.full) == is_identifiable(g)


@settings(max_examples=200)
@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_identifying_codes_are_superset_closed(g, rnd):
    codes = [c for c in range(1 << g.n) if is_identifying_code(g, c)]
    for c in rnd.sample(codes, min(len(codes), 5)):
        extra = rnd.getrandbits(g.n)
        assert is_identifying_code(g, c | extra)


@given(graphs(max_n=6), st.integers(0, 63))
def test_identifying_code_matches_set_oracle(g, mask):
    mask &= g.full
    assert is_identifying_code(g, mask) == oracle_is_code(g, members(mask))

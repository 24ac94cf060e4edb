"""
Tests for the graph model, the named builders, the families and graph6.

Run with: pytest tests/test_graph_core.py -v
"""

import random

import networkx as nx
import pytest

from src.models.errors import (
    Graph6ParseError,
    InvalidEdgeError,
    InvalidParameterError,
    UnsupportedError,
    VertexIndexError,
)
from src.models.graph import Graph
from src.models.types import FamilySpec, SmithKind
from src.services.canonical_service import is_isomorphic
from src.services.graph_builders import (
    attach_two_paths,
    build_family,
    complete_bipartite,
    cycle,
    internal_paths,
    is_internal_path,
    k33_minus_edge,
    path,
    smith_graph,
    star,
    subdivide,
    theorem1_extremal,
    wheel,
)
from src.services.graph_codec import decode_graph6, encode_graph6, from_networkx, to_dot, to_networkx
from src.utils.random_graphs import random_graph


# ----------------------------------------------------------------------
# Graph model
# ----------------------------------------------------------------------

def test_from_edges_rejects_loops_and_duplicates():
    with pytest.raises(InvalidEdgeError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(InvalidEdgeError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(VertexIndexError):
        Graph.from_edges(3, [(0, 3)])


def test_basic_queries():
    g = star(6)
    assert g.n == 7
    assert g.num_edges == 6
    assert g.degree(0) == 6
    assert g.neighbors(0) == [1, 2, 3, 4, 5, 6]
    assert g.is_connected()
    assert g.is_tree()
    assert not cycle(5).is_tree()
    assert not Graph.empty(2).is_connected()
    assert path(4).edges() == [(0, 1), (1, 2), (2, 3)]


def test_edge_updates():
    g = path(3).add_edge(0, 2)
    assert g == cycle(3)
    assert g.delete_edge(0, 2) == path(3)
    with pytest.raises(InvalidEdgeError):
        path(3).add_edge(0, 1)
    with pytest.raises(InvalidEdgeError):
        path(3).delete_edge(0, 2)


def test_induced_subgraph_and_delete_vertex():
    assert cycle(5).induced_subgraph([0, 1, 2, 3]) == path(4)
    assert cycle(5).delete_vertex(4) == path(4)
    assert star(3).delete_vertex(0) == Graph.empty(3)


def test_relabel_preserves_isomorphism_class():
    g = path(5)
    h = g.relabel([4, 2, 0, 1, 3])
    assert h != g
    assert is_isomorphic(g, h)
    with pytest.raises(InvalidParameterError):
        g.relabel([0, 0, 1, 2, 3])


# ----------------------------------------------------------------------
# Named graphs
# ----------------------------------------------------------------------

def test_named_graph_parameter_errors():
    with pytest.raises(InvalidParameterError):
        path(0)
    with pytest.raises(InvalidParameterError):
        cycle(2)
    with pytest.raises(InvalidParameterError):
        wheel(3)


def test_path_of_one_vertex():
    g = path(1)
    assert g.n == 1
    assert g.edges() == []


def test_wheel_and_k33_minus_edge():
    w = wheel(5)
    assert w.n == 5
    assert w.num_edges == 8
    assert sorted(w.degrees()) == [3, 3, 3, 3, 4]
    g = k33_minus_edge()
    assert g.n == 6 and g.num_edges == 8
    assert complete_bipartite(3, 3).num_edges == 9


def test_smith_graphs():
    assert is_isomorphic(smith_graph(SmithKind.W, 4), star(3))
    assert smith_graph(SmithKind.E6).n == 6
    assert smith_graph(SmithKind.E7).n == 7
    assert smith_graph(SmithKind.E8_TILDE).n == 9
    for n in range(6, 13):
        g = smith_graph(SmithKind.W_TILDE, n)
        assert g.n == n and g.is_tree()
        assert sum(1 for d in g.degrees() if d == 3) == 2
    with pytest.raises(InvalidParameterError):
        smith_graph(SmithKind.W, 3)
    with pytest.raises(InvalidParameterError):
        smith_graph(SmithKind.W_TILDE, 5)


# ----------------------------------------------------------------------
# Families
# ----------------------------------------------------------------------

def test_family_with_no_attachments_is_the_spine():
    fg = build_family(FamilySpec.g(0, 0, 0, 0, 0, 0))
    assert fg.graph == path(7)
    assert fg.anchors == (0, 3, 6)


def test_family_vertex_count_formula():
    params = range(3)
    for a in params:
        for b in params:
            for c in params:
                for p, q, r in ((0, 0, 0), (1, 2, 0), (2, 1, 2), (0, 0, 1)):
                    for spec in (FamilySpec.g(a, b, c, p, q, r), FamilySpec.h(a, b, c, p, q, r)):
                        fg = build_family(spec)
                        assert fg.n == spec.n
                        assert fg.graph.is_connected()
                        for anchor, degree in zip(fg.anchors, spec.anchor_degrees):
                            assert fg.graph.degree(anchor) == degree


def test_h_family_base_is_a_tree_on_five_vertices():
    fg = build_family(FamilySpec.h(0, 0, 0, 0, 0, 0))
    assert fg.n == 5
    assert fg.graph.is_tree()
    assert fg.graph.degree(3) == 3


def test_family_spec_parse_and_label():
    spec = FamilySpec.parse("G(1,0,0;6,5,6)")
    assert spec == FamilySpec.g(1, 0, 0, 6, 5, 6)
    assert spec.label == "G(1,0,0;6,5,6)"
    assert spec.n == 42
    with pytest.raises(ValueError):
        FamilySpec.parse("K(1,0,0;6,5,6)")


def test_theorem1_extremal_table():
    assert theorem1_extremal(42) == FamilySpec.g(1, 0, 0, 6, 5, 6)
    assert theorem1_extremal(43) == FamilySpec.g(1, 0, 1, 6, 5, 6)
    assert theorem1_extremal(44) == FamilySpec.g(1, 0, 0, 6, 5, 7)
    assert theorem1_extremal(45) == FamilySpec.g(0, 0, 0, 7, 5, 7)
    assert theorem1_extremal(46) == FamilySpec.g(0, 1, 0, 7, 5, 7)
    assert theorem1_extremal(41) == FamilySpec.g(0, 0, 0, 6, 5, 6)
    for n in range(12, 80):
        assert theorem1_extremal(n).n == n
    with pytest.raises(UnsupportedError):
        theorem1_extremal(11)


# ----------------------------------------------------------------------
# Transformations
# ----------------------------------------------------------------------

def test_subdivide():
    assert is_isomorphic(subdivide(path(3), 1, 2), path(4))
    assert is_isomorphic(subdivide(cycle(5), 0, 1), cycle(6))
    g = wheel(5)
    h = subdivide(g, 0, 1)
    assert h.n == 6 and h.num_edges == g.num_edges + 1
    assert h.delete_vertex(5).add_edge(0, 1) == g
    with pytest.raises(InvalidEdgeError):
        subdivide(path(3), 0, 2)


def test_attach_two_paths():
    assert attach_two_paths(path(3), 1, 0, 0) == path(3)
    assert is_isomorphic(attach_two_paths(Graph.empty(1), 0, 2, 1), path(4))
    assert is_isomorphic(attach_two_paths(path(2), 0, 1, 1), star(3))
    with pytest.raises(VertexIndexError):
        attach_two_paths(path(3), 5, 1, 1)


def test_internal_paths():
    fg = build_family(FamilySpec.g(1, 1, 1, 1, 1, 1))
    assert is_internal_path(fg.graph, [0, 1, 2, 3])
    assert is_internal_path(fg.graph, [3, 4, 5, 6])
    assert not is_internal_path(fg.graph, [0, 1, 2])
    assert not is_internal_path(path(10), [2, 3, 4])
    double_star = Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
    assert is_internal_path(double_star, [0, 1])
    assert internal_paths(double_star) == [[0, 1]]
    assert sorted(internal_paths(fg.graph)) == [[0, 1, 2, 3], [3, 4, 5, 6]]


# ----------------------------------------------------------------------
# graph6 and DOT
# ----------------------------------------------------------------------

def test_graph6_small_values():
    assert encode_graph6(path(3)) == "Bg"
    g = decode_graph6("B?")
    assert g.n == 3 and g.num_edges == 0
    assert not g.is_connected()
    assert decode_graph6(">>graph6<<Bg\n") == path(3)


def test_graph6_matches_networkx():
    rng = random.Random(7)
    for n in (1, 2, 5, 9, 13):
        g = random_graph(n, rng)
        text = encode_graph6(g)
        h = nx.from_graph6_bytes(text.encode("ascii"))
        assert sorted(tuple(sorted(e)) for e in h.edges()) == g.edges()
        nx_text = nx.to_graph6_bytes(h, header=False).decode("ascii").strip()
        assert nx_text == text
        assert decode_graph6(text) == g


def test_networkx_conversion_keeps_vertex_numbers():
    g = Graph.from_edges(5, [(0, 4), (1, 2)])
    h = to_networkx(g)
    assert list(h.nodes) == [0, 1, 2, 3, 4]
    assert from_networkx(h) == g
    relabelled = nx.relabel_nodes(nx.path_graph(3), {0: "a", 1: "b", 2: "c"})
    assert from_networkx(relabelled) == path(3)


def test_graph6_medium_vertex_count():
    g = path(70)
    text = encode_graph6(g)
    assert text.startswith("~")
    assert decode_graph6(text) == g


def test_graph6_parse_errors():
    with pytest.raises(Graph6ParseError) as err:
        decode_graph6("B!")
    assert err.value.offset == 1
    with pytest.raises(Graph6ParseError):
        decode_graph6("C")
    with pytest.raises(Graph6ParseError):
        decode_graph6("Bgg")
    with pytest.raises(Graph6ParseError):
        decode_graph6("")
    with pytest.raises(Graph6ParseError) as err:
        decode_graph6("~")
    assert err.value.offset == 1
    with pytest.raises(Graph6ParseError) as err:
        decode_graph6(">>graph6<<B\x1f")
    assert err.value.offset == 11


def test_to_dot():
    assert to_dot(path(2)) == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n"


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))

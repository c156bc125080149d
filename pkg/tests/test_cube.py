import pytest
from hypothesis import given, settings

from fibcube.bits import popcount
from fibcube.cube import (build_cube, cube_automorphisms, cube_vertex_count, cycle_hypergraph,
                          export_dot, path_hypergraph, to_json)
from fibcube.errors import CapExceeded, InvalidHypergraph
from fibcube.hypergraph import Hypergraph, hypergraph_isos, is_independent, isolated

from conftest import simple_hypergraphs
from oracles import graph_automorphism_count, independent_sets, no_two_consecutive, toggle_graph


def test_path4_count():
    assert no_two_consecutive(4) == 8
    assert len(build_cube(path_hypergraph(4))) == 8


def test_empty_hypergraph_cube():
    c = build_cube(Hypergraph(0))
    assert c.verts == (0,) and c.num_edges == 0


def test_single_edge_cube(single_edge):
    c = build_cube(single_edge)
    assert c.verts == (0, 1, 2)
    assert c.edges() == [(0, 1), (0, 2)]


def test_path_constructor():
    assert path_hypergraph(0) == Hypergraph(0)
    assert path_hypergraph(2).edges == ((0, 1),)
    assert path_hypergraph(5).edges == ((0, 1), (1, 2), (2, 3), (3, 4))


def test_cycle_constructor():
    assert cycle_hypergraph(4).edges == ((0, 1), (0, 3), (1, 2), (2, 3))
    with pytest.raises(InvalidHypergraph):
        cycle_hypergraph(2)


@pytest.mark.parametrize("n,expected", [(0, 1), (1, 2), (5, 13)])
def test_vertex_count_values(n, expected):
    assert no_two_consecutive(n) == expected
    assert cube_vertex_count(n) == expected


def test_vertex_count_matches_build_up_to_20():
    for n in range(21):
        assert len(build_cube(path_hypergraph(n))) == cube_vertex_count(n)


def test_invalid_hypergraph_rejected():
    with pytest.raises(InvalidHypergraph):
        build_cube(Hypergraph(3, [(0, 1), (0, 1, 2)]))


def test_cap():
    with pytest.raises(CapExceeded, match="cap 4"):
        build_cube(path_hypergraph(5), cap=4)
    with pytest.raises(CapExceeded):
        cube_automorphisms(build_cube(path_hypergraph(6)), cap=10)


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("FIBCUBE_CAP_VERTICES", "3")
    with pytest.raises(CapExceeded):
        build_cube(path_hypergraph(4))


def test_single_edge_automorphisms(single_edge):
    c = build_cube(single_edge)
    assert graph_automorphism_count(independent_sets(2, single_edge.edges)) == 2
    assert cube_automorphisms(c) == [(0, 1, 2), (0, 2, 1)]


def test_path3_automorphisms(path3):
    assert graph_automorphism_count(independent_sets(3, path3.edges)) == 2
    assert len(cube_automorphisms(build_cube(path3))) == 2


def test_empty_cube_automorphism():
    assert cube_automorphisms(build_cube(Hypergraph(0))) == [(0,)]


@settings(max_examples=40, deadline=None)
@given(simple_hypergraphs(max_n=7))
def test_cube_structure_against_oracle(h):
    c = build_cube(h)
    sets = independent_sets(h.num_vertices, h.edges)
    assert sorted(c.verts) == list(c.verts)
    assert set(c.verts) == {sum(1 << v for v in s) for s in sets}
    adj = toggle_graph(sets)
    for i, m in enumerate(c.verts):
        got = {frozenset(v for v in range(h.num_vertices) if c.verts[j] >> v & 1)
               for j in c.adjacency[i]}
        key = frozenset(v for v in range(h.num_vertices) if m >> v & 1)
        assert got == adj[key]
        for j in c.adjacency[i]:
            assert i in c.adjacency[j] and i != j and popcount(m ^ c.verts[j]) == 1
        addable = sum(1 for v in range(h.num_vertices)
                      if not m >> v & 1 and is_independent(h, m | 1 << v))
        assert c.degree(i) == popcount(m) + addable


@settings(max_examples=30, deadline=None)
@given(simple_hypergraphs(max_n=5))
def test_automorphism_counts(h):
    c = build_cube(h)
    if len(c) <= 8:
        assert len(cube_automorphisms(c)) == graph_automorphism_count(
            independent_sets(h.num_vertices, h.edges))
    assert len(cube_automorphisms(c)) == len(hypergraph_isos(h, h)) * 2 ** len(isolated(h))


def test_dot_single_edge(single_edge):
    dot = export_dot(build_cube(single_edge))
    assert dot == ('graph cube {\n  0 [label="{}"];\n  1 [label="{0}"];\n'
                   '  2 [label="{1}"];\n  0 -- 1;\n  0 -- 2;\n}\n')


def test_dot_empty():
    dot = export_dot(build_cube(Hypergraph(0)))
    assert dot.count("label=") == 1 and "--" not in dot


def test_dot_path3(path3):
    sets = independent_sets(3, path3.edges)
    n_edges = sum(len(v) for v in toggle_graph(sets).values()) // 2
    dot = export_dot(build_cube(path3))
    assert dot.count("label=") == 5
    assert dot.count("--") == n_edges == 5
    assert '[label="{0,2}"]' in dot
    assert dot == export_dot(build_cube(path3))


def test_cube_json(path3):
    data = to_json(build_cube(path3))
    assert data["vertices"] == [[], [0], [1], [2], [0, 2]]
    assert data["edges"] == [[0, 1], [0, 2], [0, 3], [1, 4], [3, 4]]

import json
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibcube.errors import VertexRangeError
from fibcube.hypergraph import (Hypergraph, classify_vertices, dumps, enumerate_simple_hypergraphs,
                                from_json, hypergraph_isos, is_independent, isolated, loads,
                                neighbors, random_hypergraph, remove_isolated, tails, to_json,
                                validate)

from conftest import simple_hypergraphs
from oracles import hypergraph_iso_list, simple_hypergraph_families


def test_validate_minimal_edge():
    assert validate(Hypergraph(2, [(0, 1)])).valid


def test_validate_small_edge():
    rep = validate(Hypergraph(2, [(0,)]))
    assert not rep.valid
    assert any("size < 2" in v for v in rep.violations)


def test_validate_nested_edges():
    rep = validate(Hypergraph(3, [(0, 1), (0, 1, 2)]))
    assert rep.violations == ["edge {0,1} ⊆ edge {0,1,2}"]


def test_validate_out_of_range():
    rep = validate(Hypergraph(2, [(0, 5)]))
    assert any("out-of-range" in v for v in rep.violations)


def test_duplicate_edges_collapse_with_warning():
    h = Hypergraph(3, [(1, 0), (0, 1), (2, 1)])
    assert h.edges == ((0, 1), (1, 2))
    rep = validate(h)
    assert rep.valid and rep.warnings


def test_neighbors(path3):
    assert neighbors(path3, 1) == {0, 2}
    assert neighbors(Hypergraph(3, [(0, 1, 2)]), 0) == {1, 2}
    assert neighbors(Hypergraph(1), 0) == set()
    with pytest.raises(VertexRangeError):
        neighbors(path3, 3)


def test_tails(path3):
    assert tails(path3, 1) == [(0,), (2,)]
    assert tails(Hypergraph(3, [(0, 1, 2)]), 2) == [(0, 1)]
    assert tails(Hypergraph(1), 0) == []


def test_is_independent(path3):
    assert is_independent(path3, {0, 2})
    assert not is_independent(path3, {0, 1})
    assert is_independent(path3, set())
    with pytest.raises(VertexRangeError):
        is_independent(path3, {4})


def test_classification():
    h = Hypergraph(4, [(1, 2)])
    cl = classify_vertices(h)
    assert cl.isolated == {0, 3} and cl.non_isolated == {1, 2}


def test_path3_automorphisms_match_brute_force(path3):
    expected = hypergraph_iso_list(3, path3.edges, path3.edges)
    assert len(expected) == 2
    assert hypergraph_isos(path3, path3) == expected


def test_iso_edge_count_mismatch():
    assert hypergraph_isos(Hypergraph(2, [(0, 1)]), Hypergraph(2)) == []


def test_single_vertex_has_one_automorphism():
    assert hypergraph_isos(Hypergraph(1), Hypergraph(1)) == [(0,)]


@settings(max_examples=60, deadline=None)
@given(simple_hypergraphs(max_n=6), st.permutations(range(6)))
def test_isos_match_brute_force(h, perm):
    perm = [p for p in perm if p < h.num_vertices]
    t = h.relabel(perm)
    assert hypergraph_isos(h, t) == hypergraph_iso_list(h.num_vertices, h.edges, t.edges)


@settings(max_examples=30, deadline=None)
@given(simple_hypergraphs(max_n=5), simple_hypergraphs(max_n=5), simple_hypergraphs(max_n=5))
def test_isos_compose(a, b, c):
    for f in hypergraph_isos(a, b):
        for g in hypergraph_isos(b, c):
            assert tuple(g[f[v]] for v in range(a.num_vertices)) in hypergraph_isos(a, c)


@settings(max_examples=100, deadline=None)
@given(simple_hypergraphs(max_n=7), st.data())
def test_neighborhood_laws(h, data):
    iso = isolated(h)
    for v in range(h.num_vertices):
        nv = neighbors(h, v)
        assert v not in nv
        assert all(v in neighbors(h, u) for u in nv)
        assert (tails(h, v) == []) == (v in iso)
    if h.num_vertices:
        s = data.draw(st.sets(st.integers(0, h.num_vertices - 1)))
        if is_independent(h, s):
            sub = data.draw(st.sets(st.sampled_from(sorted(s)))) if s else set()
            assert is_independent(h, sub)


def test_random_hypergraph_edge_cases():
    assert random_hypergraph(0, seed=1) == Hypergraph(0)
    assert random_hypergraph(2, max_edge_size=2, density=1.0, seed=3) == Hypergraph(2, [(0, 1)])
    assert random_hypergraph(5, seed=42) == random_hypergraph(5, seed=42)


@pytest.mark.parametrize("seed", range(40))
def test_random_hypergraph_is_simple(seed):
    h = random_hypergraph(7, max_edge_size=4, density=0.3, seed=seed, forbid_isolated=seed % 2 == 0)
    assert validate(h).valid
    if seed % 2 == 0:
        assert isolated(h) == set()


def test_remove_isolated():
    h = remove_isolated(Hypergraph(5, [(1, 3)]))
    assert h == Hypergraph(2, [(0, 1)])


@pytest.mark.parametrize("n", range(5))
def test_enumerate_simple_matches_oracle(n):
    ours = {h.edges for h in enumerate_simple_hypergraphs(n)}
    theirs = {tuple(sorted(tuple(sorted(e)) for e in fam)) for fam in simple_hypergraph_families(n)}
    assert ours == theirs
    assert all(validate(h).valid for h in enumerate_simple_hypergraphs(n))


def test_json_round_trip():
    text = '{"vertices": ["a", "b", "c"], "edges": [["b", "a"], ["c", "b"]]}'
    h = loads(text)
    assert h.edges == ((0, 1), (1, 2))
    assert to_json(h) == {"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]]}
    assert from_json(json.loads(dumps(h))) == h


def test_json_edges_written_sorted():
    h = from_json({"vertices": ["z", "y", "x"], "edges": [["z", "y"], ["x", "z"]]})
    assert to_json(h)["edges"] == [["x", "z"], ["y", "z"]]


def test_json_unknown_label():
    with pytest.raises(ValueError):
        from_json({"vertices": ["a"], "edges": [["a", "q"]]})

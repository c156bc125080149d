import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibcube.cube import build_cube, path_hypergraph
from fibcube.errors import HorizonError, WindowError
from fibcube.graphiso import are_isomorphic
from fibcube.lazy import (EMPTY_BASE, BasePoint, ComponentVertex, ball_dot, ball_json,
                          base_point_independent, finite_oracle, infinite_path_oracle,
                          parse_base_point, same_component, windowed_ball, windowed_neighbors)

P = infinite_path_oracle()


def deltas(vs):
    return [sorted(v.delta_set) for v in vs]


def cv(*vs, base=EMPTY_BASE):
    return ComponentVertex(base, sum(1 << v for v in vs))


def test_infinite_path_edges():
    assert list(P.edges_containing(0)) == [(0, 1)]
    assert list(P.edges_containing(3)) == [(2, 3), (3, 4)]
    assert all(len(P.edges_containing(v)) <= 2 for v in range(100))


def test_windowed_neighbors_examples():
    assert deltas(windowed_neighbors(P, cv(), 3)) == [[0], [1], [2]]
    assert deltas(windowed_neighbors(P, cv(0), 3)) == [[], [0, 2]]
    assert deltas(windowed_neighbors(P, cv(0, 2), 3)) == [[0], [2]]


def test_window_errors():
    with pytest.raises(WindowError):
        windowed_neighbors(P, cv(5), 3)
    with pytest.raises(WindowError):
        windowed_neighbors(P, cv(), 0)


def test_ball_examples():
    b = windowed_ball(P, cv(), 1, 2)
    assert b.verts == (0, 1, 2)
    assert windowed_ball(P, cv(0, 3), 0, 6).verts == (0b1001,)


@pytest.mark.parametrize("n", range(1, 9))
def test_ball_matches_finite_cube(n):
    ball = windowed_ball(P, cv(), n, n)
    c = build_cube(path_hypergraph(n))
    assert ball.verts == c.verts
    assert are_isomorphic(ball.adjacency, c.adjacency)


def test_base_point_independence():
    assert base_point_independent(P, BasePoint(pattern="10"))
    assert not base_point_independent(P, BasePoint(pattern="11"))
    assert not base_point_independent(P, BasePoint(frozenset({0, 1})))
    with pytest.raises(HorizonError):
        base_point_independent(P, BasePoint(frozenset({3}), "10"), check_horizon=5)


def test_parse_base_point():
    b = parse_base_point("prefix=0,2;pattern=10")
    assert b.prefix == {0, 2} and b.pattern == "10" and b.start == 3
    assert [v for v in range(9) if b.contains(v)] == [0, 2, 3, 5, 7]
    assert parse_base_point("") == EMPTY_BASE
    assert str(parse_base_point("pattern=10")) == "pattern=10"
    with pytest.raises(ValueError):
        parse_base_point("prefix=x")
    with pytest.raises(ValueError):
        parse_base_point("pattern=12")


def test_neighbors_around_even_positions():
    # toggling 0..5 from the even-position set: only removals are allowed
    x = ComponentVertex(BasePoint(pattern="10"))
    assert deltas(windowed_neighbors(P, x, 6)) == [[0], [2], [4]]


def test_same_component():
    evens = BasePoint(pattern="10")
    assert same_component(evens, BasePoint(frozenset({0, 2, 4}), "01"), horizon=10)
    assert same_component(evens, BasePoint(pattern="01"), horizon=10) is False
    assert same_component(evens, BasePoint(frozenset({9}), "10"), horizon=5) is None


@settings(max_examples=50, deadline=None)
@given(st.sets(st.integers(0, 9)), st.integers(1, 6))
def test_window_monotone(delta, extra):
    x = cv(*delta)
    if not all(not (x.contains(v) and x.contains(v + 1)) for v in range(12)):
        return
    small = set(y.delta for y in windowed_neighbors(P, x, 10))
    big = set(y.delta for y in windowed_neighbors(P, x, 10 + extra))
    assert small <= big
    for y in small:
        assert bin(y ^ x.delta).count("1") == 1
        assert not any(y >> v & 1 and y >> (v + 1) & 1 for v in range(20))


def test_finite_oracle_ball_is_whole_cube(path3):
    o = finite_oracle(path3)
    ball = windowed_ball(o, cv(), 10, 3)
    assert ball.verts == build_cube(path3).verts


def test_ball_output_records_window():
    b = windowed_ball(P, cv(), 2, 4)
    assert "radius=2 window=4" in ball_dot(b)
    data = ball_json(b)
    assert data["window"] == 4 and data["radius"] == 2
    assert len(data["vertices"]) == len(b)


def test_component_vertex_equality():
    assert cv(1, 3) == cv(3, 1)
    assert cv(1) != cv(2)

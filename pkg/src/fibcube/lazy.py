"""Oracle hypergraphs and windowed exploration of cube components.

An infinite locally finite hypergraph is given by ``edges_containing(v)``.
A component of its cube is anchored at an eventually periodic independent
set (a :class:`BasePoint`); its vertices are finite deltas from that base.
Every vertex of such a component has infinitely many neighbours, so all
exploration is confined to toggles inside a window ``[0, window)``.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from . import kernels
from .bits import iter_bits, set_label
from .errors import HorizonError, WindowError
from .hypergraph import Hypergraph

Edge = tuple[int, ...]


@dataclass(frozen=True)
class HypergraphOracle:
    edges_containing: Callable[[int], Sequence[Edge]]
    name: str = "oracle"
    num_vertices: int | None = None  # None: vertices 0, 1, 2, ... forever

    def vertex_stream(self) -> Iterator[int]:
        if self.num_vertices is None:
            return itertools.count()
        return iter(range(self.num_vertices))

    def has_vertex(self, v: int) -> bool:
        return v >= 0 and (self.num_vertices is None or v < self.num_vertices)

    def neighbor_mask(self, v: int) -> int:
        m = 0
        for e in self.edges_containing(v):
            for u in e:
                m |= 1 << u
        return m & ~(1 << v)


def _infinite_path_edges(v: int) -> list[Edge]:
    if v < 0:
        return []
    if v == 0:
        return [(0, 1)]
    return [(v - 1, v), (v, v + 1)]


def infinite_path_oracle() -> HypergraphOracle:
    """The one-way infinite path 0 - 1 - 2 - ..."""
    return HypergraphOracle(_infinite_path_edges, name="infinite-path")


def finite_oracle(h: Hypergraph) -> HypergraphOracle:
    """Wrap a finite hypergraph in the oracle interface."""

    def edges_containing(v: int) -> list[Edge]:
        if not 0 <= v < h.num_vertices:
            return []
        return [h.edges[i] for i in h.incident[v]]

    return HypergraphOracle(edges_containing, name=f"finite-{h.num_vertices}",
                            num_vertices=h.num_vertices)


@dataclass(frozen=True)
class BasePoint:
    """``prefix`` below ``start``, then ``pattern`` repeated from ``start`` on.

    ``start`` is one past the largest prefix id (0 with no prefix).  An empty
    pattern means no vertex beyond the prefix is in the set.
    """

    prefix: frozenset[int] = frozenset()
    pattern: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "prefix", frozenset(self.prefix))
        if any(ch not in "01" for ch in self.pattern):
            raise ValueError(f"pattern must be a bit string, got {self.pattern!r}")
        if any(v < 0 for v in self.prefix):
            raise ValueError("prefix ids must be non-negative")
        if "1" not in self.pattern:
            object.__setattr__(self, "pattern", "")

    @property
    def start(self) -> int:
        return max(self.prefix) + 1 if self.prefix else 0

    @property
    def period(self) -> int:
        return len(self.pattern)

    def contains(self, v: int) -> bool:
        if v < self.start:
            return v in self.prefix
        if not self.pattern:
            return False
        return self.pattern[(v - self.start) % len(self.pattern)] == "1"

    def is_finite(self) -> bool:
        return not self.pattern

    def mask_below(self, width: int) -> int:
        m = 0
        for v in range(width):
            if self.contains(v):
                m |= 1 << v
        return m

    def __str__(self) -> str:
        parts = []
        if self.prefix:
            parts.append("prefix=" + ",".join(str(v) for v in sorted(self.prefix)))
        if self.pattern:
            parts.append("pattern=" + self.pattern)
        return ";".join(parts)


EMPTY_BASE = BasePoint()


def parse_base_point(text: str) -> BasePoint:
    """Parse ``"prefix=0,2;pattern=10"``; both parts optional."""
    prefix: set[int] = set()
    pattern = ""
    for part in filter(None, (p.strip() for p in text.split(";"))):
        key, sep, value = part.partition("=")
        key = key.strip()
        if not sep:
            raise ValueError(f"expected key=value in base point, got {part!r}")
        if key == "prefix":
            try:
                prefix = {int(x) for x in value.split(",") if x.strip()}
            except ValueError:
                raise ValueError(f"bad prefix {value!r}") from None
        elif key == "pattern":
            pattern = value.strip()
        else:
            raise ValueError(f"unknown base point field {key!r}")
    return BasePoint(frozenset(prefix), pattern)


def min_horizon(b: BasePoint) -> int:
    return b.start + 2 * b.period


def base_point_independent(o: HypergraphOracle, b: BasePoint,
                           check_horizon: int | None = None) -> bool:
    """No edge touching ``[0, check_horizon)`` lies inside the described set.

    For eventually periodic sets over the infinite path this horizon is
    enough: violating adjacent pairs repeat with the pattern.
    """
    need = min_horizon(b)
    if check_horizon is None:
        check_horizon = need + 2
    if check_horizon < need:
        raise HorizonError(f"horizon {check_horizon} < prefix width + 2*period = {need}")
    for v in range(check_horizon):
        if not o.has_vertex(v):
            break
        for e in o.edges_containing(v):
            if all(b.contains(u) for u in e):
                return False
    return True


def same_component(a: BasePoint, b: BasePoint, horizon: int) -> bool | None:
    """Whether the two sets differ finitely; ``None`` means unknown at horizon.

    Past both starts the sets are periodic with the lcm period, so one full
    joint period decides the question.
    """
    start = max(a.start, b.start)
    period = math.lcm(max(a.period, 1), max(b.period, 1))
    if horizon < start + period:
        return None
    return all(a.contains(v) == b.contains(v) for v in range(start, start + period))


@dataclass(frozen=True)
class ComponentVertex:
    base: BasePoint
    delta: int = 0  # bitmask of the finite symmetric difference from base

    def contains(self, v: int) -> bool:
        return self.base.contains(v) ^ bool(self.delta >> v & 1)

    def toggled(self, v: int) -> "ComponentVertex":
        return ComponentVertex(self.base, self.delta ^ (1 << v))

    @property
    def delta_set(self) -> frozenset[int]:
        return frozenset(iter_bits(self.delta))


def _check_window(x: ComponentVertex, window: int) -> None:
    if window < 1:
        raise WindowError("window must be at least 1")
    if x.delta >> window:
        raise WindowError(f"delta {set_label(x.delta)} leaves window [0, {window})")


def can_add(o: HypergraphOracle, x: ComponentVertex, v: int) -> bool:
    """Whether adding v (not in x) keeps x independent."""
    for e in o.edges_containing(v):
        if all(u == v or x.contains(u) for u in e):
            return False
    return True


def windowed_neighbors(o: HypergraphOracle, x: ComponentVertex, window: int) -> list[ComponentVertex]:
    """Neighbours of x reached by toggling one vertex inside the window."""
    _check_window(x, window)
    out = []
    for v in range(window):
        if not o.has_vertex(v):
            break
        if x.contains(v) or can_add(o, x, v):
            out.append(x.toggled(v))
    out.sort(key=lambda y: y.delta)
    return out


@dataclass(frozen=True)
class WindowedBall:
    """Induced subgraph of a component around ``center``; vertices are deltas."""

    base: BasePoint
    center: int
    radius: int
    window: int
    verts: tuple[int, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.verts)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.adjacency) for j in row if i < j]

    def header(self) -> str:
        return (f"base={str(self.base) or '∅'} center={set_label(self.center)} "
                f"radius={self.radius} window={self.window}")


def windowed_ball(o: HypergraphOracle, x: ComponentVertex, radius: int, window: int) -> WindowedBall:
    _check_window(x, window)
    if radius < 0:
        raise ValueError("radius must be non-negative")
    seen = {x.delta}
    frontier = deque([(x, 0)])
    while frontier:
        y, d = frontier.popleft()
        if d == radius:
            continue
        for z in windowed_neighbors(o, y, window):
            if z.delta not in seen:
                seen.add(z.delta)
                frontier.append((z, d + 1))
    verts = sorted(seen)
    adj = kernels.toggle_adjacency(verts, window)
    return WindowedBall(x.base, x.delta, radius, window, tuple(verts),
                        tuple(tuple(r) for r in adj))


def ball_dot(ball: WindowedBall) -> str:
    lines = ["graph ball {", f"  // {ball.header()}"]
    for i, m in enumerate(ball.verts):
        lines.append(f'  {i} [label="{set_label(m)}"];')
    for i, j in ball.edges():
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def ball_json(ball: WindowedBall) -> dict:
    return {
        "base": str(ball.base),
        "center": list(iter_bits(ball.center)),
        "radius": ball.radius,
        "window": ball.window,
        "vertices": [list(iter_bits(m)) for m in ball.verts],
        "edges": [[i, j] for i, j in ball.edges()],
    }

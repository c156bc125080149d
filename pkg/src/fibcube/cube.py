"""Explicit generalized Fibonacci cubes for finite hypergraphs.

A cube vertex is an independent set, held as an int bitmask.  Vertices are
kept in ascending integer order of their masks (bit i is vertex i), so every
output is reproducible.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Any

from . import kernels
from .bits import iter_bits, set_label
from .errors import CapExceeded, InvalidHypergraph
from .graphiso import graph_isomorphisms
from .hypergraph import Hypergraph, require_valid

IndepSet = int

DEFAULT_VERTEX_CAP = 24
DEFAULT_AUT_CAP = 4096


def vertex_cap() -> int:
    env = os.environ.get("FIBCUBE_CAP_VERTICES")
    return int(env) if env else DEFAULT_VERTEX_CAP


@dataclass(frozen=True)
class CubeGraph:
    base: Hypergraph
    verts: tuple[int, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @cached_property
    def index(self) -> dict[int, int]:
        return {m: i for i, m in enumerate(self.verts)}

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def __len__(self) -> int:
        return len(self.verts)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.adjacency) for j in row if i < j]

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])


def build_cube(h: Hypergraph, cap: int | None = None) -> CubeGraph:
    """Enumerate the independent sets of ``h`` and link single toggles."""
    require_valid(h)
    cap = vertex_cap() if cap is None else cap
    if h.num_vertices > cap:
        raise CapExceeded("hypergraph vertex", h.num_vertices, cap)
    verts = kernels.enumerate_independent(h.num_vertices, h.edge_masks)
    adj = kernels.toggle_adjacency(verts, h.num_vertices)
    return CubeGraph(h, tuple(verts), tuple(tuple(row) for row in adj))


def path_hypergraph(n: int) -> Hypergraph:
    """Path on n vertices (n counts vertices, not edges)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return Hypergraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_hypergraph(n: int) -> Hypergraph:
    if n < 3:
        raise InvalidHypergraph("a cycle needs at least 3 vertices")
    return Hypergraph(n, [(i, (i + 1) % n) for i in range(n)])


def cube_vertex_count(n: int) -> int:
    """F(n+2) with F(1) = F(2) = 1: the vertex count of the n-vertex path cube."""
    if n < 0:
        raise ValueError("n must be non-negative")
    a, b = 1, 1  # F(1), F(2)
    for _ in range(n):
        a, b = b, a + b
    return b


def cube_isomorphisms(a: CubeGraph, b: CubeGraph, cap: int = DEFAULT_AUT_CAP,
                      limit: int = 0) -> list[tuple[int, ...]]:
    for c in (a, b):
        if len(c) > cap:
            raise CapExceeded("cube vertex", len(c), cap)
    return graph_isomorphisms(a.adjacency, b.adjacency, limit=limit)


def cube_automorphisms(c: CubeGraph, cap: int = DEFAULT_AUT_CAP) -> list[tuple[int, ...]]:
    return cube_isomorphisms(c, c, cap=cap)


def export_dot(c: CubeGraph, name: str = "cube", header: str | None = None) -> str:
    lines = [f"graph {name} {{"]
    if header:
        lines.append(f"  // {header}")
    for i, m in enumerate(c.verts):
        lines.append(f'  {i} [label="{set_label(m)}"];')
    for i, j in c.edges():
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(c: CubeGraph) -> dict[str, Any]:
    return {
        "vertices": [list(iter_bits(m)) for m in c.verts],
        "edges": [[i, j] for i, j in c.edges()],
    }


def dumps(c: CubeGraph) -> str:
    return json.dumps(to_json(c))

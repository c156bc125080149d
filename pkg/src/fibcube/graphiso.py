"""Isomorphism enumeration for small simple graphs given as adjacency lists.

Joint colour refinement on both graphs, then backtracking through the
kernel's ``match_all``.  Used for cube automorphisms, cube-to-cube
isomorphisms and the lazy/finite consistency checks.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

from . import kernels

Adjacency = Sequence[Sequence[int]]


def refine_colors(adj: Adjacency, init: Sequence[int] | None = None) -> list[int]:
    """Stable colouring by iterated degree refinement (1-WL)."""
    n = len(adj)
    colors = list(init) if init is not None else [len(a) for a in adj]
    classes = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(n)]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [palette[s] for s in sigs]
        if len(palette) == classes:
            return colors
        classes = len(palette)


def _joint_colors(adj1: Adjacency, adj2: Adjacency) -> tuple[list[int], list[int]]:
    n1 = len(adj1)
    union = [list(a) for a in adj1] + [[w + n1 for w in a] for a in adj2]
    colors = refine_colors(union)
    return colors[:n1], colors[n1:]


def search_order(adj: Adjacency, colors: Sequence[int]) -> tuple[list[int], list[int]]:
    """BFS order rooted in the rarest colour class, with parent positions."""
    n = len(adj)
    size: dict[int, int] = {}
    for c in colors:
        size[c] = size.get(c, 0) + 1
    seen = [False] * n
    order: list[int] = []
    anchor: list[int] = []
    pos = [0] * n
    roots = sorted(range(n), key=lambda v: (size[colors[v]], v))
    for r in roots:
        if seen[r]:
            continue
        seen[r] = True
        queue = deque([r])
        parent = {r: -1}
        while queue:
            u = queue.popleft()
            pos[u] = len(order)
            order.append(u)
            p = parent[u]
            anchor.append(pos[p] if p >= 0 else -1)
            for w in sorted(adj[u], key=lambda x: (size[colors[x]], x)):
                if not seen[w]:
                    seen[w] = True
                    parent[w] = u
                    queue.append(w)
    return order, anchor


def graph_isomorphisms(adj1: Adjacency, adj2: Adjacency, limit: int = 0) -> list[tuple[int, ...]]:
    """All isomorphisms from graph 1 onto graph 2 (``limit`` > 0 truncates).

    Each result maps vertex index i of graph 1 to ``result[i]``.  The order is
    deterministic for fixed inputs.
    """
    if len(adj1) != len(adj2):
        return []
    if sum(map(len, adj1)) != sum(map(len, adj2)):
        return []
    col1, col2 = _joint_colors(adj1, adj2)
    if sorted(col1) != sorted(col2):
        return []
    order, anchor = search_order(adj1, col1)
    found = kernels.match_all(adj1, adj2, col1, col2, order, anchor, limit)
    return [tuple(m) for m in found]


def are_isomorphic(adj1: Adjacency, adj2: Adjacency) -> bool:
    return bool(graph_isomorphisms(adj1, adj2, limit=1))


def is_isomorphism(adj1: Adjacency, adj2: Adjacency, mapping: Sequence[int]) -> bool:
    n = len(adj1)
    if len(adj2) != n or len(mapping) != n or sorted(mapping) != list(range(n)):
        return False
    nb2 = [set(a) for a in adj2]
    for u in range(n):
        if len(adj1[u]) != len(adj2[mapping[u]]):
            return False
        if any(mapping[w] not in nb2[mapping[u]] for w in adj1[u]):
            return False
    return True

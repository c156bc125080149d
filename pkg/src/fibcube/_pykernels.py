"""Pure-Python kernels.  ``_ckernels.pyx`` implements the same functions."""

from __future__ import annotations

from typing import Sequence


def enumerate_independent(n: int, edge_masks: Sequence[int]) -> list[int]:
    """All independent sets of the hypergraph as ascending bitmasks.

    Vertices are processed in id order; sets that take vertex v are appended
    after every set built from vertices < v, so the output stays sorted.
    """
    closing: list[list[int]] = [[] for _ in range(n)]
    for e in edge_masks:
        top = e.bit_length() - 1
        closing[top].append(e & ~(1 << top))
    sets = [0]
    for v in range(n):
        bit = 1 << v
        rests = closing[v]
        if rests:
            sets.extend([s | bit for s in sets if not any(s & r == r for r in rests)])
        else:
            sets.extend([s | bit for s in sets])
    return sets


def toggle_adjacency(verts: Sequence[int], n: int) -> list[list[int]]:
    """Neighbor index lists for the single-toggle graph on ``verts``."""
    index = {m: i for i, m in enumerate(verts)}
    bits = [1 << b for b in range(n)]
    adj = []
    for m in verts:
        row = []
        for bit in bits:
            j = index.get(m ^ bit)
            if j is not None:
                row.append(j)
        row.sort()
        adj.append(row)
    return adj


def match_all(
    adj1: Sequence[Sequence[int]],
    adj2: Sequence[Sequence[int]],
    col1: Sequence[int],
    col2: Sequence[int],
    order: Sequence[int],
    anchor: Sequence[int],
    limit: int = 0,
) -> list[list[int]]:
    """Enumerate color-respecting isomorphisms from graph 1 onto graph 2.

    ``order`` fixes the source vertex sequence; ``anchor[k]`` is the position
    of an earlier source neighbor of ``order[k]`` (or -1), whose image's
    neighborhood then supplies the candidates.  Iterative, so deep searches do
    not hit the recursion limit.
    """
    n = len(adj1)
    if n != len(adj2):
        return []
    if n == 0:
        return [[]]
    nb2 = [set(a) for a in adj2]
    pos = [0] * n
    for k, u in enumerate(order):
        pos[u] = k
    earlier = [[w for w in adj1[u] if pos[w] < k] for k, u in enumerate(order)]
    image = [-1] * n
    used = [False] * n
    ptr = [0] * n
    everyone = range(n)
    out: list[list[int]] = []
    k = 0
    while k >= 0:
        if k == n:
            out.append(list(image))
            if limit and len(out) >= limit:
                break
            k -= 1
            continue
        u = order[k]
        if image[u] >= 0:
            used[image[u]] = False
            image[u] = -1
        a = anchor[k]
        pool = adj2[image[order[a]]] if a >= 0 else everyone
        need = earlier[k]
        cu = col1[u]
        found = -1
        i = ptr[k]
        while i < len(pool):
            v = pool[i]
            i += 1
            if used[v] or col2[v] != cu:
                continue
            nv = nb2[v]
            if any(image[w] not in nv for w in need):
                continue
            if sum(1 for x in adj2[v] if used[x]) != len(need):
                continue
            found = v
            break
        ptr[k] = i
        if found < 0:
            k -= 1
            continue
        image[u] = found
        used[found] = True
        k += 1
        if k < n:
            ptr[k] = 0
    return out

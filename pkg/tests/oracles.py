"""Independent brute-force oracles.  Nothing here calls the package kernels."""

from itertools import chain, combinations, permutations


def subsets(n):
    return chain.from_iterable(combinations(range(n), k) for k in range(n + 1))


def independent_sets(n, edges):
    """Every subset of range(n) containing no edge, as frozensets."""
    es = [frozenset(e) for e in edges]
    return [frozenset(s) for s in subsets(n) if not any(e <= set(s) for e in es)]


def toggle_graph(sets):
    """Adjacency as a dict of frozensets: |a ^ b| == 1."""
    return {a: {b for b in sets if len(a ^ b) == 1} for a in sets}


def graph_automorphism_count(sets):
    """Count permutations of the vertex list preserving the toggle adjacency."""
    verts = list(sets)
    adj = toggle_graph(sets)
    idx = {v: i for i, v in enumerate(verts)}
    nb = [{idx[w] for w in adj[v]} for v in verts]
    count = 0
    for p in permutations(range(len(verts))):
        if all({p[w] for w in nb[u]} == nb[p[u]] for u in range(len(verts))):
            count += 1
    return count


def hypergraph_iso_list(n, edges_s, edges_t):
    es = {frozenset(e) for e in edges_s}
    et = {frozenset(e) for e in edges_t}
    return [p for p in permutations(range(n)) if {frozenset(p[v] for v in e) for e in es} == et]


def no_two_consecutive(n):
    return sum(1 for s in subsets(n) if all(b - a > 1 for a, b in zip(s, s[1:])))


def simple_hypergraph_families(n):
    """All antichains of subsets of size >= 2, found by filtering the power set
    of candidate edges."""
    cands = [frozenset(c) for k in range(2, n + 1) for c in combinations(range(n), k)]
    out = []
    for fam in chain.from_iterable(combinations(cands, k) for k in range(len(cands) + 1)):
        if all(not (a <= b) for a in fam for b in fam if a is not b):
            out.append(fam)
    return out

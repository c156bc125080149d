"""Finite hypergraphs: validation, neighborhood queries and isomorphism search.

Vertices are dense integer ids ``0..n-1``; string labels only exist at the
JSON boundary.  Edges are stored as sorted tuples, and every edge also has a
bitmask form used by the enumeration kernels.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Any, Iterable, Iterator, Sequence

from .bits import iter_bits, to_mask
from .errors import InvalidHypergraph, VertexRangeError


@dataclass(frozen=True)
class Hypergraph:
    num_vertices: int
    edges: tuple[tuple[int, ...], ...] = ()
    labels: tuple[str, ...] | None = field(default=None, compare=False)
    duplicate_edges: int = field(default=0, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.num_vertices < 0:
            raise ValueError("num_vertices must be non-negative")
        canon = []
        seen = set()
        dups = self.duplicate_edges
        for e in self.edges:
            t = tuple(sorted(set(int(v) for v in e)))
            if t in seen:
                dups += 1
                continue
            seen.add(t)
            canon.append(t)
        canon.sort()
        object.__setattr__(self, "edges", tuple(canon))
        object.__setattr__(self, "duplicate_edges", dups)
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != self.num_vertices:
                raise ValueError("labels must name every vertex")
            object.__setattr__(self, "labels", labels)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(to_mask(e) for e in self.edges)

    @cached_property
    def edge_mask_set(self) -> frozenset[int]:
        return frozenset(self.edge_masks)

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Per vertex, the indices of edges containing it."""
        inc: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for i, e in enumerate(self.edges):
            for v in e:
                if 0 <= v < self.num_vertices:
                    inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        out = []
        for v in range(self.num_vertices):
            m = 0
            for i in self.incident[v]:
                m |= self.edge_masks[i]
            out.append(m & ~(1 << v))
        return tuple(out)

    @property
    def full_mask(self) -> int:
        return (1 << self.num_vertices) - 1

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def relabel(self, perm: Sequence[int]) -> "Hypergraph":
        """The hypergraph with vertex v renamed to perm[v]."""
        return Hypergraph(self.num_vertices, [[perm[v] for v in e] for e in self.edges])

    def __str__(self) -> str:
        es = ", ".join("{" + ",".join(map(str, e)) + "}" for e in self.edges)
        return f"Hypergraph(n={self.num_vertices}, edges=[{es}])"


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid


def _fmt(e: Iterable[int]) -> str:
    return "{" + ",".join(map(str, e)) + "}"


def validate(h: Hypergraph) -> ValidationReport:
    """Check that ``h`` is simple and that every edge is in range.

    Violations are reported, never raised.
    """
    rep = ValidationReport()
    n = h.num_vertices
    for e in h.edges:
        if len(e) < 2:
            rep.violations.append(f"edge {_fmt(e)} size < 2")
        bad = [v for v in e if not 0 <= v < n]
        if bad:
            rep.violations.append(f"edge {_fmt(e)} has out-of-range vertex {bad[0]}")
    masks = h.edge_masks
    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            if i != j and a & b == a:
                rep.violations.append(f"edge {_fmt(h.edges[i])} ⊆ edge {_fmt(h.edges[j])}")
    if h.duplicate_edges:
        rep.warnings.append(f"{h.duplicate_edges} duplicate edge(s) collapsed")
    return rep


def require_valid(h: Hypergraph) -> None:
    rep = validate(h)
    if not rep.valid:
        raise InvalidHypergraph("; ".join(rep.violations))


def _check_vertex(h: Hypergraph, v: int) -> None:
    if not 0 <= v < h.num_vertices:
        raise VertexRangeError(f"vertex {v} not in [0, {h.num_vertices})")


def neighbors(h: Hypergraph, v: int) -> set[int]:
    _check_vertex(h, v)
    return set(iter_bits(h.neighbor_masks[v]))


def tails(h: Hypergraph, v: int) -> list[tuple[int, ...]]:
    """Edges through v with v removed."""
    _check_vertex(h, v)
    return [tuple(u for u in h.edges[i] if u != v) for i in h.incident[v]]


def isolated(h: Hypergraph) -> set[int]:
    return {v for v in range(h.num_vertices) if not h.incident[v]}


def isolated_mask(h: Hypergraph) -> int:
    m = 0
    for v in range(h.num_vertices):
        if not h.incident[v]:
            m |= 1 << v
    return m


@dataclass(frozen=True)
class VertexClassification:
    isolated: frozenset[int]
    non_isolated: frozenset[int]


def classify_vertices(h: Hypergraph) -> VertexClassification:
    iso = isolated(h)
    return VertexClassification(
        frozenset(iso), frozenset(set(range(h.num_vertices)) - iso)
    )


def is_independent(h: Hypergraph, s: int | Iterable[int]) -> bool:
    m = to_mask(s)
    if m >> h.num_vertices:
        raise VertexRangeError(f"set {sorted(iter_bits(m))} leaves [0, {h.num_vertices})")
    return not any(e & m == e for e in h.edge_masks)


def _vertex_signature(h: Hypergraph, v: int) -> tuple:
    return (
        len(h.incident[v]),
        tuple(sorted(len(h.edges[i]) for i in h.incident[v])),
        bin(h.neighbor_masks[v]).count("1"),
    )


def hypergraph_isos(s: Hypergraph, t: Hypergraph) -> list[tuple[int, ...]]:
    """All isomorphisms S -> T as tuples ``f`` with ``f[v]`` the image of v.

    Plain backtracking over vertices in id order, pruned by vertex
    signatures; results come out lexicographically ordered.
    """
    n = s.num_vertices
    if n != t.num_vertices or len(s.edges) != len(t.edges):
        return []
    if sorted(map(len, s.edges)) != sorted(map(len, t.edges)):
        return []
    sig_s = [_vertex_signature(s, v) for v in range(n)]
    sig_t = [_vertex_signature(t, v) for v in range(n)]
    if sorted(sig_s) != sorted(sig_t):
        return []
    # edges of S that become fully mapped once vertex v is assigned
    closing: list[list[int]] = [[] for _ in range(n)]
    for e, em in zip(s.edges, s.edge_masks):
        closing[e[-1]].append(em)
    t_edges = t.edge_mask_set
    f = [-1] * n
    used = [False] * n
    out: list[tuple[int, ...]] = []

    def extend(v: int) -> None:
        if v == n:
            out.append(tuple(f))
            return
        for w in range(n):
            if used[w] or sig_t[w] != sig_s[v]:
                continue
            f[v] = w
            ok = True
            for em in closing[v]:
                img = 0
                for u in iter_bits(em):
                    img |= 1 << f[u]
                if img not in t_edges:
                    ok = False
                    break
            if ok:
                used[w] = True
                extend(v + 1)
                used[w] = False
            f[v] = -1

    extend(0)
    return out


def random_hypergraph(
    n: int,
    max_edge_size: int = 3,
    density: float = 0.3,
    seed: int = 0,
    forbid_isolated: bool = False,
) -> Hypergraph:
    """Seeded random simple hypergraph.

    Candidate edges of size 2..max_edge_size are kept with probability
    ``density``; supersets of kept edges are then dropped.  With
    ``forbid_isolated`` each remaining isolated vertex gets a random 2-edge
    (impossible, and skipped, when n == 1).
    """
    if n < 0 or max_edge_size < 2:
        raise ValueError("need n >= 0 and max_edge_size >= 2")
    rng = random.Random(seed)
    chosen = []
    for k in range(2, min(max_edge_size, n) + 1):
        for e in combinations(range(n), k):
            if rng.random() < density:
                chosen.append(to_mask(e))
    minimal = [a for a in chosen if not any(b != a and b & a == b for b in chosen)]
    edges = [list(iter_bits(m)) for m in minimal]
    if forbid_isolated and n >= 2:
        covered = 0
        for m in minimal:
            covered |= m
        for v in range(n):
            if not covered >> v & 1:
                u = rng.choice([w for w in range(n) if w != v])
                edges.append([v, u])
                covered |= (1 << v) | (1 << u)
    return Hypergraph(n, edges)


def enumerate_simple_hypergraphs(n: int) -> Iterator[Hypergraph]:
    """Every simple hypergraph on the labeled vertex set 0..n-1.

    These are the antichains of subsets of size >= 2.
    """
    cands = [to_mask(c) for k in range(2, n + 1) for c in combinations(range(n), k)]

    def rec(i: int, chosen: list[int]) -> Iterator[list[int]]:
        if i == len(cands):
            yield list(chosen)
            return
        yield from rec(i + 1, chosen)
        c = cands[i]
        if all(c & a != a and c & a != c for a in chosen):
            chosen.append(c)
            yield from rec(i + 1, chosen)
            chosen.pop()

    for family in rec(0, []):
        yield Hypergraph(n, [list(iter_bits(m)) for m in family])


def from_json(data: dict[str, Any]) -> Hypergraph:
    """Parse ``{"vertices": [...], "edges": [[label, ...], ...]}``."""
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise InvalidHypergraph("hypergraph JSON needs 'vertices' and 'edges'")
    labels = [str(x) for x in data["vertices"]]
    if len(set(labels)) != len(labels):
        raise InvalidHypergraph("duplicate vertex labels")
    ids = {lab: i for i, lab in enumerate(labels)}
    edges = []
    for e in data["edges"]:
        if not isinstance(e, list):
            raise InvalidHypergraph(f"edge {e!r} is not a list")
        try:
            edges.append([ids[str(x)] for x in e])
        except KeyError as exc:
            raise InvalidHypergraph(f"edge {e!r} names unknown vertex {exc.args[0]!r}") from None
    return Hypergraph(len(labels), edges, labels=labels)


def to_json(h: Hypergraph) -> dict[str, Any]:
    labels = [h.label(v) for v in range(h.num_vertices)]
    edges = sorted(sorted(labels[v] for v in e) for e in h.edges)
    return {"vertices": labels, "edges": edges}


def loads(text: str) -> Hypergraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidHypergraph(f"bad JSON: {exc}") from None
    return from_json(data)


def dumps(h: Hypergraph) -> str:
    return json.dumps(to_json(h))


def remove_isolated(h: Hypergraph) -> Hypergraph:
    """Drop isolated vertices, renumbering the rest in order."""
    keep = [v for v in range(h.num_vertices) if h.incident[v]]
    new_id = {v: i for i, v in enumerate(keep)}
    return Hypergraph(len(keep), [[new_id[v] for v in e] for e in h.edges])

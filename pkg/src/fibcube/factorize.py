"""Factor a cube isomorphism g into a hypergraph isomorphism f and offset c.

Every isomorphism g between cubes of simple hypergraphs has the form
``g(r) = f[r] ^ c``; ``c`` is empty unless isolated vertices are involved.
This module extracts ``f`` from basis pairs, derives ``c``, and checks the
factorization against every cube vertex and edge.
"""

from __future__ import annotations

import json
from dataclasses import InitVar, dataclass, field
from typing import Any, Callable, Iterable, Sequence

from .bits import iter_bits, map_set, popcount, set_label, to_list, to_mask
from .cube import CubeGraph, build_cube, cube_isomorphisms
from .errors import IntegrityError, NotAnIsomorphism
from .graphiso import is_isomorphism
from .hypergraph import Hypergraph, hypergraph_isos, is_independent, isolated_mask
from .lazy import BasePoint, ComponentVertex, HypergraphOracle


@dataclass(frozen=True)
class CubeIso:
    """Vertex-index map from ``source`` onto ``target``."""

    source: CubeGraph
    target: CubeGraph
    mapping: tuple[int, ...]
    check: InitVar[bool] = True

    def __post_init__(self, check: bool) -> None:
        object.__setattr__(self, "mapping", tuple(self.mapping))
        if check and not is_isomorphism(self.source.adjacency, self.target.adjacency, self.mapping):
            raise NotAnIsomorphism("map does not preserve cube adjacency")

    def __call__(self, r: int) -> int:
        return self.target.verts[self.mapping[self.source.index[r]]]

    def pairs(self) -> list[tuple[int, int]]:
        return [(m, self.target.verts[j]) for m, j in zip(self.source.verts, self.mapping)]


@dataclass(frozen=True)
class BasisPair:
    v: int
    x: int
    y: int


def basis_pair(h: Hypergraph, s: int | Iterable[int], v: int) -> BasisPair:
    """Drop v and its neighbours from s, then the same set with v added."""
    s = to_mask(s)
    if not is_independent(h, s):
        raise ValueError(f"{set_label(s)} is not independent")
    x = s & ~((1 << v) | h.neighbor_masks[v])
    y = x | (1 << v)
    if not is_independent(h, y):
        # every edge through v meets a neighbour of v, all of which are gone
        raise IntegrityError(f"basis set {set_label(y)} is dependent")
    return BasisPair(v, x, y)


def extract_f(iso: CubeIso, s_base: int | Iterable[int] = 0) -> tuple[int, ...]:
    """f(v) is the single vertex toggled between g(x_s(v)) and g(y_s(v))."""
    s = to_mask(s_base)
    h = iso.source.base
    f = []
    for v in range(h.num_vertices):
        bp = basis_pair(h, s, v)
        d = iso(bp.x) ^ iso(bp.y)
        if popcount(d) != 1:
            raise NotAnIsomorphism(
                f"images of basis pair for vertex {v} differ in {set_label(d)}", vertex=v)
        f.append(d.bit_length() - 1)
    return tuple(f)


def extract_offset(iso: CubeIso, f: Sequence[int], s_base: int | Iterable[int] = 0) -> int:
    s = to_mask(s_base)
    return map_set(f, s) ^ iso(s)


def is_bijection(f: Sequence[int], size: int) -> bool:
    return len(f) == size and sorted(f) == list(range(size))


@dataclass
class VerificationReport:
    checked: int = 0
    edges_checked: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    sampled: bool = False

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def failing_vertices(self) -> list[list[int]]:
        return [fl["r"] for fl in self.failures if fl["law"] == "affine"]

    def to_dict(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "checked": self.checked,
            "edges_checked": self.edges_checked,
            "sampled": self.sampled,
            "failures": self.failures,
        }


def verify_factorization(iso: CubeIso, f: Sequence[int], c: int,
                         sample: Iterable[int] | None = None) -> VerificationReport:
    """Check ``g(r) == f[r] ^ c`` on the sample and edge transport on its edges.

    With no sample every cube vertex (and so every cube edge) is checked.
    """
    src = iso.source
    rep = VerificationReport(sampled=sample is not None)
    rows = range(len(src)) if sample is None else [src.index[to_mask(r)] for r in sample]
    for i in rows:
        r = src.verts[i]
        got = iso(r)
        want = map_set(f, r) ^ c
        rep.checked += 1
        if got != want:
            rep.failures.append({"law": "affine", "r": to_list(r),
                                 "expected": to_list(want), "got": to_list(got)})
        for j in src.adjacency[i]:
            if j < i and sample is None:
                continue
            rep.edges_checked += 1
            other = src.verts[j]
            v = (r ^ other).bit_length() - 1
            moved = got ^ iso(other)
            if moved != 1 << f[v]:
                rep.failures.append({"law": "edge", "a": to_list(r), "b": to_list(other),
                                     "v": v, "expected": [f[v]], "got": to_list(moved)})
    return rep


def check_iso(f: Sequence[int], s: Hypergraph, t: Hypergraph) -> bool:
    """True iff f maps the edges of S exactly onto the edges of T."""
    if s.num_vertices != t.num_vertices or not is_bijection(f, s.num_vertices):
        raise ValueError("f is not a bijection between the vertex sets")
    image = {map_set(f, e) for e in s.edge_masks}
    return len(image) == len(s.edge_masks) and image == t.edge_mask_set


def canonical_path(start: int | Iterable[int], end: int | Iterable[int],
                   h: Hypergraph | None = None) -> list[int]:
    """Remove start\\end in ascending order, then add end\\start ascending.

    With ``h`` given each step is re-checked for independence.
    """
    a, b = to_mask(start), to_mask(end)
    path = [a]
    cur = a
    for v in iter_bits(a & ~b):
        cur &= ~(1 << v)
        path.append(cur)
    for v in iter_bits(b & ~a):
        cur |= 1 << v
        path.append(cur)
    if h is not None:
        for m in path:
            if not is_independent(h, m):
                raise IntegrityError(f"intermediate set {set_label(m)} is dependent")
    return path


@dataclass(frozen=True)
class OffsetWitness:
    """r is independent while r ^ b contains the edge ``edge``."""

    r: int
    b: int
    v: int
    edge: tuple[int, ...]

    def holds(self, h: Hypergraph) -> bool:
        e = sum(1 << u for u in self.edge)
        flipped = self.r ^ self.b
        return (is_independent(h, self.r) and not is_independent(h, flipped)
                and flipped & e == e)

    def to_dict(self) -> dict[str, Any]:
        return {"r": to_list(self.r), "b": to_list(self.b), "v": self.v,
                "edge": list(self.edge), "r_xor_b": to_list(self.r ^ self.b)}


def refute_offset_witness(h: Hypergraph, offset_b: int | Iterable[int]) -> OffsetWitness | None:
    """Witness that toggling ``offset_b`` cannot preserve independence.

    Picks the smallest non-isolated v in b and its first edge e, and returns
    r = e \\ b.  Returns None when b holds only isolated vertices.
    """
    b = to_mask(offset_b)
    if not b:
        raise ValueError("offset must be nonempty")
    for v in iter_bits(b):
        if v < h.num_vertices and h.incident[v]:
            i = h.incident[v][0]
            r = h.edge_masks[i] & ~b
            return OffsetWitness(r, b, v, h.edges[i])
    return None


@dataclass
class Factorization:
    f: tuple[int, ...]
    c: int
    report: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v for k, v in self.report.items() if isinstance(v, bool))

    def to_json(self) -> dict[str, Any]:
        return {"f": [[v, fv] for v, fv in enumerate(self.f)], "c": to_list(self.c),
                "report": self.report}


def factorize(iso: CubeIso, s_base: int | Iterable[int] = 0) -> Factorization:
    """Extract (f, c) and record which laws hold.

    A map that is not an isomorphism yields a failed report naming the
    vertex whose basis pair broke, rather than an exception.
    """
    s_base = to_mask(s_base)
    src, tgt = iso.source.base, iso.target.base
    try:
        f = extract_f(iso, s_base)
    except NotAnIsomorphism as exc:
        return Factorization((), 0, {"extracted": False, "failing_vertex": exc.vertex,
                                     "error": str(exc)})
    c = extract_offset(iso, f, s_base)
    ver = verify_factorization(iso, f, c)
    bij = is_bijection(f, tgt.num_vertices)
    report: dict[str, Any] = {
        "extracted": True,
        "bijective": bij,
        "edge_transport": not any(x["law"] == "edge" for x in ver.failures),
        "affine": not any(x["law"] == "affine" for x in ver.failures),
        "hypergraph_iso": bij and check_iso(f, src, tgt),
    }
    if ver.failures:
        report["failures"] = ver.failures[:5]
    return Factorization(f, c, report)


@dataclass
class SuiteReport:
    source: Hypergraph
    target: Hypergraph
    cube_isos: int = 0
    hypergraph_isos: int = 0
    properties: dict[str, bool] = field(default_factory=dict)
    counterexample: dict[str, Any] | None = None

    @property
    def passed(self) -> bool:
        return all(self.properties.values())

    def fail(self, prop: str, detail: dict[str, Any]) -> None:
        self.properties[prop] = False
        if self.counterexample is None:
            self.counterexample = {"property": prop, **detail}

    def to_dict(self) -> dict[str, Any]:
        from .hypergraph import to_json

        out = {
            "source": to_json(self.source),
            "target": to_json(self.target),
            "cube_isos": self.cube_isos,
            "hypergraph_isos": self.hypergraph_isos,
            "properties": self.properties,
            "passed": self.passed,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def swap_mutant(iso: CubeIso) -> tuple[CubeIso, tuple[int, int]] | None:
    """First swap of two images that breaks adjacency, or None if none does."""
    n = len(iso.mapping)
    for i in range(n):
        for j in range(i + 1, n):
            m = list(iso.mapping)
            m[i], m[j] = m[j], m[i]
            if not is_isomorphism(iso.source.adjacency, iso.target.adjacency, m):
                return CubeIso(iso.source, iso.target, m, check=False), (i, j)
    return None


def theorem_suite(s: Hypergraph, t: Hypergraph,
                  mutate: Callable[[CubeIso], CubeIso] | None = None) -> SuiteReport:
    """Brute-force every cube isomorphism Γ_S -> Γ_T and factor each one.

    Properties recorded:
      part1      cube isos exist iff hypergraph isos exist
      P1         edge transport
      P2         f bijective
      P3         f independent of the extraction base
      P4         affine form g(r) = f[r] ^ c at every vertex
      P5         f is a hypergraph isomorphism
      P6         offset is empty without isolated vertices, and otherwise
                 lies over isolated vertices only
      part2      without isolated vertices, g <-> f is a bijection onto Iso(S,T)
      injective  (f, c) determines g
      P7         |Iso(Γ_S,Γ_T)| = |Iso(S,T)| * 2^|isolated|

    ``mutate`` replaces the first cube isomorphism before factoring; it is
    the hook for negative controls.
    """
    cs, ct = build_cube(s), build_cube(t)
    gmaps = cube_isomorphisms(cs, ct)
    hisos = hypergraph_isos(s, t)
    rep = SuiteReport(s, t, len(gmaps), len(hisos))
    props = ["part1", "P1", "P2", "P3", "P4", "P5", "P6", "part2", "injective", "P7"]
    rep.properties = {p: True for p in props}
    if bool(gmaps) != bool(hisos):
        rep.fail("part1", {"cube_isos": len(gmaps), "hypergraph_isos": len(hisos)})

    iso_s, iso_t = isolated_mask(s), isolated_mask(t)
    no_isolated = not iso_s and not iso_t
    seen: dict[tuple[tuple[int, ...], int], int] = {}
    fs: list[tuple[int, ...]] = []
    for k, mapping in enumerate(gmaps):
        g = CubeIso(cs, ct, mapping, check=False)
        if k == 0 and mutate is not None:
            g = mutate(g)
        ident = {"iso_index": k}
        fac = factorize(g)
        r = fac.report
        if not r["extracted"]:
            rep.fail("P1", {**ident, "failing_vertex": r["failing_vertex"], "error": r["error"]})
            continue
        if not r["edge_transport"]:
            rep.fail("P1", {**ident, "failures": r["failures"]})
        if not r["bijective"]:
            rep.fail("P2", {**ident, "f": list(fac.f)})
        if not r["affine"]:
            rep.fail("P4", {**ident, "failures": r["failures"]})
        if not r["hypergraph_iso"]:
            rep.fail("P5", {**ident, "f": list(fac.f)})
        for base in cs.verts:
            try:
                other = extract_f(g, base)
            except NotAnIsomorphism as exc:
                rep.fail("P3", {**ident, "base": to_list(base), "failing_vertex": exc.vertex})
                break
            if other != fac.f:
                rep.fail("P3", {**ident, "base": to_list(base), "f": list(other),
                                "f_empty_base": list(fac.f)})
                break
        if fac.c:
            if no_isolated:
                rep.fail("P6", {**ident, "c": to_list(fac.c)})
            elif r["bijective"]:
                preimage = 0
                for v, fv in enumerate(fac.f):
                    if fac.c >> fv & 1:
                        preimage |= 1 << v
                if preimage & ~iso_s:
                    rep.fail("P6", {**ident, "c": to_list(fac.c), "b": to_list(preimage)})
        key = (fac.f, fac.c)
        if key in seen:
            rep.fail("injective", {**ident, "same_as": seen[key]})
        seen[key] = k
        fs.append(fac.f)

    if no_isolated and (sorted(set(fs)) != hisos or len(gmaps) != len(hisos)):
        rep.fail("part2", {"cube_isos": len(gmaps), "hypergraph_isos": len(hisos),
                           "distinct_f": len(set(fs))})
    if hisos and len(gmaps) != len(hisos) * 2 ** popcount(iso_s):
        rep.fail("P7", {"cube_isos": len(gmaps), "hypergraph_isos": len(hisos),
                        "isolated": popcount(iso_s)})
    return rep


# ---- lazy mode -------------------------------------------------------------

LazyMap = Callable[[ComponentVertex], ComponentVertex]


def lazy_basis_pair(o: HypergraphOracle, base: BasePoint, v: int) -> tuple[ComponentVertex, ComponentVertex]:
    closed = (1 << v) | o.neighbor_mask(v)
    x = ComponentVertex(base, base.mask_below(closed.bit_length()) & closed)
    return x, x.toggled(v)


def extract_f_lazy(g: LazyMap, o: HypergraphOracle, base: BasePoint, window: int) -> dict[int, int]:
    """f on the vertices inside the window, for a component given by oracle."""
    f = {}
    for v in range(window):
        if not o.has_vertex(v):
            break
        x, y = lazy_basis_pair(o, base, v)
        gx, gy = g(x), g(y)
        if gx.base != gy.base:
            raise NotAnIsomorphism(f"basis images for {v} lie over different bases", vertex=v)
        d = gx.delta ^ gy.delta
        if popcount(d) != 1:
            raise NotAnIsomorphism(
                f"images of basis pair for vertex {v} differ in {set_label(d)}", vertex=v)
        f[v] = d.bit_length() - 1
    return f


def verify_factorization_lazy(g: LazyMap, f: dict[int, int], base: BasePoint,
                              sample: Iterable[int]) -> VerificationReport:
    """Sampled check of the affine law written in delta form.

    With t = g(base), g(r) = f[r] ^ c becomes delta(g(r)) = delta(t) ^ f[delta(r)];
    ``sample`` lists deltas whose vertices all lie in f's domain.
    """
    rep = VerificationReport(sampled=True)
    t = g(ComponentVertex(base, 0))
    for d in sample:
        d = to_mask(d)
        img = g(ComponentVertex(base, d))
        want = t.delta ^ sum(1 << f[v] for v in iter_bits(d))
        rep.checked += 1
        if img.base != t.base or img.delta != want:
            rep.failures.append({"law": "affine", "r": to_list(d), "expected": to_list(want),
                                 "got": to_list(img.delta)})
    return rep


# ---- JSON -------------------------------------------------------------------

def iso_to_json(iso: CubeIso) -> dict[str, Any]:
    return {"map": [[to_list(a), to_list(b)] for a, b in iso.pairs()]}


def iso_from_json(data: dict[str, Any], source: CubeGraph, target: CubeGraph,
                  check: bool = True) -> CubeIso:
    if not isinstance(data, dict) or "map" not in data:
        raise ValueError("isomorphism JSON needs a 'map' array")
    mapping = [-1] * len(source)
    for pair in data["map"]:
        a, b = to_mask(pair[0]), to_mask(pair[1])
        if a not in source.index or b not in target.index:
            raise ValueError(f"map entry {pair!r} names a non-vertex")
        mapping[source.index[a]] = target.index[b]
    if -1 in mapping:
        raise ValueError("map does not cover every source vertex")
    return CubeIso(source, target, mapping, check=check)


def factorization_dumps(fac: Factorization) -> str:
    return json.dumps(fac.to_json(), sort_keys=True)

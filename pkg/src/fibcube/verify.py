"""Brute-force sweep behind ``fibcube verify``.

Every record is a plain dict, streamed as one JSON line.  Nothing in a
record depends on wall-clock time, so equal configs give identical reports.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass
from typing import Any, Iterator, TextIO

from .bits import to_list
from .cube import build_cube, cube_automorphisms, path_hypergraph
from .factorize import (CubeIso, extract_f, extract_offset, refute_offset_witness,
                        swap_mutant, theorem_suite, verify_factorization)
from .graphiso import are_isomorphic
from .hypergraph import (Hypergraph, enumerate_simple_hypergraphs, random_hypergraph,
                         remove_isolated, to_json)
from .lazy import EMPTY_BASE, ComponentVertex, infinite_path_oracle, windowed_ball

SHADOW = "finite shadow of: every component of the infinite Fibonacci cube is asymmetric"


@dataclass
class VerifyConfig:
    seed: int = 0
    exhaustive_n: int = 4
    samples: int = 100
    max_n: int = 7
    pairs: int = 50
    pair_max_n: int = 5
    offset_pairs: int = 100
    lazy_max_n: int = 8
    negative_trials: int = 50
    self_test: bool = False


def _rng(cfg: VerifyConfig, section: str, i: int) -> random.Random:
    return random.Random(f"{cfg.seed}:{section}:{i}")


def sample_hypergraph(rng: random.Random, lo: int, hi: int, forbid_isolated: bool) -> Hypergraph:
    n = rng.randint(lo, hi)
    return random_hypergraph(
        n,
        max_edge_size=rng.randint(2, max(2, min(n, 4))),
        density=rng.choice([0.15, 0.25, 0.4, 0.6]),
        seed=rng.randrange(2**32),
        forbid_isolated=forbid_isolated,
    )


def random_relabel(h: Hypergraph, rng: random.Random) -> Hypergraph:
    perm = list(range(h.num_vertices))
    rng.shuffle(perm)
    return h.relabel(perm)


def negative_control(h: Hypergraph, rng: random.Random) -> dict[str, Any]:
    """Corrupt one valid automorphism by swapping two images and check that
    verification against the genuine (f, c) names a swapped vertex."""
    c = build_cube(h)
    auts = cube_automorphisms(c)
    g = CubeIso(c, c, rng.choice(auts))
    f = extract_f(g)
    off = extract_offset(g, f)
    i, j = rng.sample(range(len(c)), 2)
    m = list(g.mapping)
    m[i], m[j] = m[j], m[i]
    bad = CubeIso(c, c, m, check=False)
    rep = verify_factorization(bad, f, off)
    named = rep.failing_vertices
    swapped = [to_list(c.verts[i]), to_list(c.verts[j])]
    detected = bool(named) and all(r in swapped for r in named)
    return {"swapped": swapped, "failing": named, "detected": detected}


def run_verify(cfg: VerifyConfig) -> Iterator[dict[str, Any]]:
    yield {"kind": "header", "config": asdict(cfg), "note": SHADOW + " (checked on finite "
           "truncations: automorphism sweeps, lemma properties, lazy/finite consistency)"}
    violations = 0
    injected = False

    def mutate(g: CubeIso) -> CubeIso:
        nonlocal injected
        if injected:
            return g
        hit = swap_mutant(g)
        if hit is None:
            return g
        injected = True
        return hit[0]

    def suite(section: str, i: int, s: Hypergraph, t: Hypergraph, **extra: Any) -> dict[str, Any]:
        nonlocal violations
        rep = theorem_suite(s, t, mutate=mutate if cfg.self_test and not injected else None)
        if not rep.passed:
            violations += 1
        return {"kind": "theorem_suite", "section": section, "index": i, **extra, **rep.to_dict()}

    k = 0
    for n in range(cfg.exhaustive_n + 1):
        for h in enumerate_simple_hypergraphs(n):
            yield suite("exhaustive", k, h, h, shadow=SHADOW)
            k += 1

    for i in range(cfg.samples):
        h = sample_hypergraph(_rng(cfg, "random", i), 2, cfg.max_n, forbid_isolated=True)
        yield suite("random", i, h, h, shadow=SHADOW)

    for i in range(cfg.pairs):
        rng = _rng(cfg, "pairs", i)
        s = sample_hypergraph(rng, 1, cfg.pair_max_n, forbid_isolated=rng.random() < 0.5)
        t = random_relabel(s, rng) if i % 2 == 0 else sample_hypergraph(
            rng, s.num_vertices, s.num_vertices, forbid_isolated=False)
        yield suite("pairs", i, s, t)

    for i in range(cfg.offset_pairs):
        rng = _rng(cfg, "offset", i)
        h = Hypergraph(0)
        while h.num_vertices == 0:
            h = remove_isolated(sample_hypergraph(rng, 2, cfg.max_n, forbid_isolated=False))
        b = 0
        while not b:
            b = rng.randrange(1, 1 << h.num_vertices)
        w = refute_offset_witness(h, b)
        ok = w is not None and w.holds(h)
        if not ok:
            violations += 1
        yield {"kind": "offset_witness", "index": i, "hypergraph": to_json(h), "b": to_list(b),
               "witness": w.to_dict() if w else None, "passed": ok}

    oracle = infinite_path_oracle()
    for n in range(1, cfg.lazy_max_n + 1):
        ball = windowed_ball(oracle, ComponentVertex(EMPTY_BASE), n, n)
        c = build_cube(path_hypergraph(n))
        ok = are_isomorphic(ball.adjacency, c.adjacency)
        if not ok:
            violations += 1
        yield {"kind": "lazy_consistency", "n": n, "ball_vertices": len(ball),
               "cube_vertices": len(c), "isomorphic": ok, "passed": ok, "shadow": SHADOW}

    for i in range(cfg.negative_trials):
        rng = _rng(cfg, "negative", i)
        h = sample_hypergraph(rng, 2, 6, forbid_isolated=True)
        res = negative_control(h, rng)
        if not res["detected"]:
            violations += 1
        yield {"kind": "negative_control", "index": i, "hypergraph": to_json(h), **res,
               "passed": res["detected"]}

    yield {"kind": "summary", "violations": violations, "passed": violations == 0,
           "self_test_injected": injected}


def write_report(cfg: VerifyConfig, out: TextIO) -> dict[str, Any]:
    """Stream the report as JSON lines; returns the summary record."""
    last: dict[str, Any] = {}
    for rec in run_verify(cfg):
        out.write(json.dumps(rec, sort_keys=True) + "\n")
        last = rec
    return last

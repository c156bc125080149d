"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from fibcube import kernels
from fibcube.cube import path_hypergraph
from fibcube.graphiso import _joint_colors, search_order
from fibcube.hypergraph import Hypergraph, random_hypergraph


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases():
    for name, h in [("path-22", path_hypergraph(22)),
                    ("edgeless-16", Hypergraph(16)),
                    ("random-20", random_hypergraph(20, 3, 0.05, seed=1))]:
        py = kernels.get_backend("python")
        verts = py.enumerate_independent(h.num_vertices, h.edge_masks)
        yield f"enumerate {name} ({len(verts)} sets)", \
            lambda k, h=h: k.enumerate_independent(h.num_vertices, h.edge_masks)
        yield f"adjacency {name}", lambda k, v=verts, n=h.num_vertices: k.toggle_adjacency(v, n)
    for name, h in [("6-cube", Hypergraph(6)), ("path-14", path_hypergraph(14))]:
        py = kernels.get_backend("python")
        verts = py.enumerate_independent(h.num_vertices, h.edge_masks)
        adj = py.toggle_adjacency(verts, h.num_vertices)
        c1, c2 = _joint_colors(adj, adj)
        order, anchor = search_order(adj, c1)
        yield f"automorphisms {name} ({len(verts)} vertices)", \
            lambda k, a=adj, c1=c1, c2=c2, o=order, an=anchor: k.match_all(a, a, c1, c2, o, an, 0)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    names = ["python"] + (["cython"] if kernels.compiled is not None else [])
    print(f"{'case':48s}" + "".join(f"{n:>12s}" for n in names) + ("     speedup" if len(names) == 2 else ""))
    for label, fn in cases():
        times = [best_of(lambda: fn(kernels.get_backend(n)), args.repeat) for n in names]
        row = f"{label:48s}" + "".join(f"{t * 1e3:10.1f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()

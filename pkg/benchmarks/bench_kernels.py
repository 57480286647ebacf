"""Compare the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat N]

Node counts must agree between backends; the script exits non-zero if not.
"""
import argparse
import random
import sys
import time

from burlbox import _pykernels
from burlbox.burling import burling_abstract
from burlbox.coloring import csr
from burlbox.graph import complete_graph, cycle_graph, graph_from_edges

try:
    from burlbox import _kernels
except ImportError:
    _kernels = None


def mycielski(steps):
    """Triangle-free graphs of chromatic number steps + 2."""
    g = graph_from_edges(2, [(0, 1)])
    for _ in range(steps):
        n = g.n
        edges = list(g.edges)
        edges += [(u + n, v) for u, v in g.edges] + [(v + n, u) for u, v in g.edges]
        edges += [(n + i, 2 * n) for i in range(n)]
        g = graph_from_edges(2 * n + 1, edges)
    return g


def cases():
    lv4 = burling_abstract(4).graph
    lv5 = burling_abstract(5).graph
    for name, g, k in [
        ("kcolor level4 k=3", lv4, 3),
        ("kcolor mycielski23 k=4", mycielski(3), 4),
        ("kcolor mycielski47 k=5", mycielski(4), 5),
    ]:
        ip, ix = csr(g)
        yield name, "kcolor", (g.n, ip, ix, k, 10**8)
    ip, ix = csr(lv5)
    order = list(range(lv5.n))
    random.Random(0).shuffle(order)
    yield "greedy level5", "greedy_color", (lv5.n, ip, ix, order)
    for n in (4, 5):
        g = cycle_graph(n)
        adj = [1 if g.has_edge(u, v) else 0 for u in range(n) for v in range(n)]
        order = sorted(range(n), key=lambda v: (-g.degree(v), v))
        yield f"cbu_place C{n} d=2", "cbu_place", (n, 2, order, adj, 2 * n, 10**8)
    g = complete_graph(3)
    adj = [1 if g.has_edge(u, v) else 0 for u in range(3) for v in range(3)]
    yield "cbu_place K3 d=3", "cbu_place", (3, 3, [0, 1, 2], adj, 6, 10**8)


def timed(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled kernels not built; only the Python backend is available")
    print(f"{'case':26} {'python s':>10} {'cython s':>10} {'speedup':>8}  nodes")
    ok = True
    for name, kernel, call in cases():
        tp, outp = timed(getattr(_pykernels, kernel), call, args.repeat)
        if _kernels is None:
            print(f"{name:26} {tp:10.4f} {'-':>10} {'-':>8}")
            continue
        tc, outc = timed(getattr(_kernels, kernel), call, args.repeat)
        same = outp == outc
        ok &= same
        nodes = outp[2] if kernel != "greedy_color" else "-"
        print(f"{name:26} {tp:10.4f} {tc:10.4f} {tp / max(tc, 1e-9):7.1f}x  {nodes}{'' if same else '  MISMATCH'}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())

"""Slow, obviously-correct reference computations used only by the tests."""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

from burlbox.burling import burling_abstract
from burlbox.graph import complete_graph, cycle_graph, graph_from_edges, path_graph, wheel_graph


def brute_chromatic(g) -> int:
    """Smallest k with a proper k-colouring, by full enumeration."""
    if g.n == 0:
        return 0
    edges = g.sorted_edges()
    for k in range(1, g.n + 1):
        for rest in itertools.product(range(k), repeat=g.n - 1):
            col = (0,) + rest
            if all(col[u] != col[v] for u, v in edges):
                return k
    raise AssertionError("unreachable")


def brute_triangle(g):
    for a, b, c in itertools.combinations(range(g.n), 3):
        if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c):
            return (a, b, c)
    return None


def random_graph(n, p, rng):
    return graph_from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def corpus(max_n=8, randoms=40, seed=7):
    """Named small graphs: cycles, paths, wheels, cliques, Burling 1-2, random."""
    out = []
    for n in range(3, max_n + 1):
        out.append((f"C{n}", cycle_graph(n)))
    for n in range(1, max_n + 1):
        out.append((f"P{n}", path_graph(n)))
    for rim in range(3, max_n):
        out.append((f"W{rim}", wheel_graph(rim)))
    for n in range(1, 7):
        out.append((f"K{n}", complete_graph(n)))
    for k in (1, 2):
        out.append((f"B{k}", burling_abstract(k).graph))
    rng = random.Random(seed)
    for i in range(randoms):
        n = rng.randint(2, max_n)
        out.append((f"R{i}", random_graph(n, rng.choice((0.2, 0.35, 0.5)), rng)))
    return out


# segments on the doubled integer grid ------------------------------------

def raster_points(orient, at, lo, hi):
    """All half-integer points of an axis-parallel segment with integer ends."""
    ts = [Fraction(t, 2) for t in range(int(2 * lo), int(2 * hi) + 1)]
    if orient == "h":
        return {(t, Fraction(at)) for t in ts}
    return {(Fraction(at), t) for t in ts}


# meet kinds of interval families --------------------------------------------

def _kind(a, b):
    lo, hi = max(a[0], b[0]), min(a[1], b[1])
    if lo > hi:
        return 0
    return 1 if lo == hi else 2


def realizable_kind_matrices(n):
    """Every pairwise meet-kind pattern of n proper intervals.

    n intervals have at most 2n distinct endpoints, so the grid 0..2n-1
    realizes every order type.
    """
    ivs = [(a, b) for a in range(2 * n) for b in range(a + 1, 2 * n)]
    pairs = list(itertools.combinations(range(n), 2))
    seen = set()
    for fam in itertools.product(ivs, repeat=n):
        seen.add(tuple(_kind(fam[i], fam[j]) for i, j in pairs))
    return pairs, seen


def brute_is_cbu(g, d, matrices):
    """Decide d-CBU membership from per-axis meet-kind patterns.

    Axis 0 must give a point meet on every edge; every axis must be
    non-empty on edges; each non-edge needs an empty meet on some axis.
    """
    pairs, mats = matrices
    edge_mask = sum(1 << p for p, (i, j) in enumerate(pairs) if g.has_edge(i, j))
    all_mask = (1 << len(pairs)) - 1

    def zero_mask(m):
        return sum(1 << p for p, k in enumerate(m) if k == 0)

    firsts = {
        zero_mask(m) for m in mats
        if all(m[p] == 1 for p in range(len(pairs)) if edge_mask >> p & 1)
    }
    others = {z for z in map(zero_mask, mats) if not z & edge_mask}
    covers = {0}
    for _ in range(d - 1):
        covers = {c | z for c in covers for z in others}
    return any((z | c) & ~edge_mask & all_mask == ~edge_mask & all_mask for z in firsts for c in covers)


def monotone_map(values, rng):
    """A random strictly increasing map on a finite set of rationals."""
    vals = sorted(set(values))
    cur = Fraction(rng.randint(-50, 50), rng.randint(1, 7))
    out = {}
    for v in vals:
        out[v] = cur
        cur += Fraction(rng.randint(1, 40), rng.randint(1, 9))
    return out

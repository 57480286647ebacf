"""Simple undirected graphs on dense integer ids, plus triangle/wheel tests."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset  # of (u, v) with u < v
    labels: Optional[dict] = field(default=None, compare=False)

    def __post_init__(self):
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    def neighbors(self, v: int) -> frozenset:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def adjacency(self) -> tuple:
        return self._adj

    def without(self, v: int) -> "Graph":
        """Induced subgraph on everything but ``v``, ids above ``v`` shifted down."""
        relabel = lambda x: x - 1 if x > v else x  # noqa: E731
        pairs = [(relabel(a), relabel(b)) for a, b in self.edges if v not in (a, b)]
        return graph_from_edges(self.n - 1, pairs)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def graph_from_edges(n: int, pairs: Iterable, labels: Optional[dict] = None) -> Graph:
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    edges = set()
    for pair in pairs:
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex id out of range in edge ({u}, {v}) for n={n}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        edges.add((u, v) if u < v else (v, u))
    return Graph(n, frozenset(edges), labels)


def graphs_equal_by_id(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.edges == h.edges


def triangle_witness(g: Graph) -> Optional[tuple]:
    """Lexicographically smallest triangle, or None."""
    adj = g.adjacency()
    for u in range(g.n):
        for v in sorted(w for w in adj[u] if w > u):
            common = [w for w in adj[u] & adj[v] if w > v]
            if common:
                return (u, v, min(common))
    return None


@dataclass(frozen=True)
class WheelWitness:
    hub: int
    cycle: tuple


def _spanning_cycle(adj, vertices) -> Optional[list]:
    """Cycle order if the graph induced on ``vertices`` is a single cycle."""
    if len(vertices) < 3:
        return None
    if any(len(adj[v] & vertices) != 2 for v in vertices):
        return None
    start = min(vertices)
    prev, cur = None, start
    order = [start]
    nxt = min(adj[start] & vertices)
    while nxt != start:
        order.append(nxt)
        prev, cur = cur, nxt
        options = [w for w in adj[cur] & vertices if w != prev]
        nxt = options[0]
    return order if len(order) == len(vertices) else None


def wheel_witness(g: Graph) -> Optional[WheelWitness]:
    """Hub of smallest id whose removal leaves one spanning cycle."""
    adj = g.adjacency()
    everything = frozenset(range(g.n))
    for hub in range(g.n):
        if len(adj[hub]) < 3:
            continue
        rest = everything - {hub}
        cycle = _spanning_cycle(adj, rest)
        if cycle is not None:
            return WheelWitness(hub, tuple(cycle))
    return None


def check_wheel(g: Graph, w: WheelWitness) -> bool:
    """Independent re-check of a claimed wheel witness."""
    cyc = list(w.cycle)
    if len(cyc) < 3 or sorted(cyc + [w.hub]) != list(range(g.n)):
        return False
    ring = {tuple(sorted((cyc[i], cyc[(i + 1) % len(cyc)]))) for i in range(len(cyc))}
    spokes = {e for e in g.edges if w.hub in e}
    return len(spokes) >= 3 and g.edges == frozenset(ring) | spokes


# small named graphs used by the CLI corpus and tests

def cycle_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def wheel_graph(rim: int, spokes: Optional[Iterable] = None) -> Graph:
    """Hub 0 joined to rim vertices ``1..rim`` (all of them unless ``spokes`` given)."""
    ring = [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    hub_to = range(1, rim + 1) if spokes is None else spokes
    return graph_from_edges(rim + 1, ring + [(0, s) for s in hub_to])

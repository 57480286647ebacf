"""Exact chromatic and clique numbers, each with certificates."""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Optional, Sequence

from ._backend import kernels
from .graph import Graph, WheelWitness, triangle_witness, wheel_witness

DEFAULT_BUDGET = 10**7
CLIQUE_LIMIT = 10**4

YES = "yes"
NO_COMPLETE = "no-complete"
UNKNOWN = "unknown"
_STATUS = {kernels.YES: YES, kernels.NO: NO_COMPLETE, kernels.UNKNOWN: UNKNOWN}


def default_budget() -> int:
    return int(os.environ.get("BURLBOX_BUDGET", DEFAULT_BUDGET))


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class Coloring:
    assignment: tuple  # assignment[v] = colour of v

    @property
    def colors_used(self) -> int:
        return len(set(self.assignment))

    def is_proper(self, g: Graph) -> bool:
        return len(self.assignment) == g.n and all(
            self.assignment[u] != self.assignment[v] for u, v in g.edges
        )


@dataclass(frozen=True)
class ColorVerdict:
    status: str
    nodes_explored: int
    coloring: Optional[Coloring] = None


def csr(g: Graph):
    indptr = [0]
    indices = []
    adj = g.adjacency()
    for v in range(g.n):
        indices.extend(sorted(adj[v]))
        indptr.append(len(indices))
    return indptr, indices


def greedy_coloring(g: Graph, order: Optional[Sequence[int]] = None) -> Coloring:
    order = list(range(g.n)) if order is None else list(order)
    if sorted(order) != list(range(g.n)):
        raise ColoringError("order must be a permutation of the vertex ids")
    indptr, indices = csr(g)
    return Coloring(tuple(kernels.greedy_color(g.n, indptr, indices, order)))


def k_colorable(g: Graph, k: int, budget: Optional[int] = None) -> ColorVerdict:
    if k < 1:
        raise ColoringError("k must be at least 1")
    budget = default_budget() if budget is None else budget
    indptr, indices = csr(g)
    status, colors, nodes = kernels.kcolor(g.n, indptr, indices, k, budget)
    if status == kernels.YES:
        col = Coloring(tuple(colors))
        if not col.is_proper(g) or col.colors_used > k:
            raise AssertionError("kernel returned an invalid colouring")
        return ColorVerdict(YES, nodes, col)
    return ColorVerdict(_STATUS[status], nodes)


@dataclass(frozen=True)
class ChromaticResult:
    """Exact chi (``lower == upper``) or a bracket when the budget ran out.

    ``coloring`` realises ``upper``; ``refutation`` is the verdict for
    ``upper - 1`` colours (None when upper <= 1, where it is trivial).
    """

    lower: int
    upper: int
    coloring: Coloring
    refutation: Optional[ColorVerdict]
    nodes_explored: int

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def chi(self) -> Optional[int]:
        return self.lower if self.exact else None


def chromatic_number(g: Graph, budget: Optional[int] = None) -> ChromaticResult:
    budget = default_budget() if budget is None else budget
    if g.n == 0:
        return ChromaticResult(0, 0, Coloring(()), None, 0)
    maxdeg = max(g.degree(v) for v in range(g.n))
    best = k_colorable(g, maxdeg + 1, budget=budget)  # never backtracks: a saturation-order upper bound
    if best.status != YES:
        best_col = greedy_coloring(g)
    else:
        best_col = best.coloring
    nodes = best.nodes_explored
    upper = best_col.colors_used
    lower = 1 if g.m == 0 else 2
    omega, _ = clique_number(g) if g.n <= CLIQUE_LIMIT else (lower, None)
    lower = max(lower, omega)
    refutation = None
    while upper > 1:
        v = k_colorable(g, upper - 1, budget=budget)
        nodes += v.nodes_explored
        if v.status == YES:
            best_col = v.coloring
            upper = best_col.colors_used
            continue
        if v.status == NO_COMPLETE:
            lower = upper
            refutation = v
        else:
            refutation = v
        break
    return ChromaticResult(lower, upper, best_col, refutation, nodes)


def _max_clique(adj, vertices):
    best: list = []

    def expand(r, p, x):
        nonlocal best
        if not p and not x:
            if len(r) > len(best):
                best = list(r)
            return
        if len(r) + len(p) <= len(best):
            return
        pivot = max(p | x, key=lambda u: (len(adj[u] & p), -u))
        for v in sorted(p - adj[pivot]):
            expand(r + [v], p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    expand([], set(vertices), set())
    return sorted(best)


def clique_number(g: Graph, limit: int = CLIQUE_LIMIT):
    """Return ``(omega, witness)``; triangle-free graphs skip the search."""
    if g.n == 0:
        return 0, ()
    if g.m == 0:
        return 1, (0,)
    tri = triangle_witness(g)
    if tri is None:
        return 2, min(g.edges)
    if g.n > limit:
        raise ColoringError(f"clique search limited to {limit} vertices")
    witness = _max_clique(g.adjacency(), range(g.n))
    return len(witness), tuple(witness)


@dataclass
class AnalysisReport:
    n: int
    m: int
    chi: Optional[int]
    chi_lower: int
    chi_upper: int
    omega: int
    omega_witness: tuple
    triangle_free: bool
    wheel: Optional[WheelWitness]
    coloring: Coloring
    refutation: Optional[ColorVerdict]
    k_query: Optional[dict] = field(default=None)

    def to_doc(self) -> dict:
        doc = {
            "n": self.n,
            "m": self.m,
            "chi": self.chi,
            "chi_bracket": [self.chi_lower, self.chi_upper],
            "omega": self.omega,
            "omega_witness": list(self.omega_witness),
            "triangle_free": self.triangle_free,
            "wheel": None
            if self.wheel is None
            else {"hub": self.wheel.hub, "cycle": list(self.wheel.cycle)},
            "coloring": {str(v): c for v, c in enumerate(self.coloring.assignment)},
            "refutation": None
            if self.refutation is None
            else {
                "k": self.chi_upper - 1,
                "status": self.refutation.status,
                "nodes_explored": self.refutation.nodes_explored,
            },
        }
        if self.k_query is not None:
            doc["k_colorable"] = self.k_query
        return doc


def analyze(g: Graph, budget: Optional[int] = None, k: Optional[int] = None) -> AnalysisReport:
    chi = chromatic_number(g, budget=budget)
    omega, witness = clique_number(g)
    k_query = None
    if k is not None:
        v = k_colorable(g, k, budget=budget)
        k_query = {"k": k, "status": v.status, "nodes_explored": v.nodes_explored}
    return AnalysisReport(
        n=g.n,
        m=g.m,
        chi=chi.chi,
        chi_lower=chi.lower,
        chi_upper=chi.upper,
        omega=omega,
        omega_witness=tuple(witness),
        triangle_free=triangle_witness(g) is None,
        wheel=wheel_witness(g),
        coloring=chi.coloring,
        refutation=chi.refutation,
        k_query=k_query,
    )

"""Contact graphs of boxes with unidirectional contacts (d-CBU).

Axis 0 is the e1 direction: two boxes that meet must meet inside a
hyperplane perpendicular to it, i.e. their axis-0 intervals share exactly
one point.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from ._backend import kernels
from .exact import EMPTY, POINT, Interval, format_scalar, interval_meet
from .graph import Graph, graph_from_edges

SEARCH_LIMIT = 8
SEARCH_MAX_DIM = 3
DEFAULT_SEARCH_BUDGET = 10**7


class BoxError(ValueError):
    pass


@dataclass(frozen=True)
class BoxD:
    id: int
    intervals: tuple

    @property
    def dim(self) -> int:
        return len(self.intervals)


@dataclass
class BoxFamily:
    dim: int
    boxes: list

    def __post_init__(self):
        if self.dim < 1:
            raise BoxError("dimension must be at least 1")
        ids = [b.id for b in self.boxes]
        if len(set(ids)) != len(ids):
            raise BoxError("box ids must be unique")
        for b in self.boxes:
            if b.dim != self.dim:
                raise BoxError(f"box {b.id} has {b.dim} intervals, family dimension is {self.dim}")
        self.boxes = sorted(self.boxes, key=lambda b: b.id)

    def check_proper(self):
        for b in self.boxes:
            for axis, iv in enumerate(b.intervals):
                if not iv.proper:
                    raise BoxError(f"box {b.id} is degenerate on axis {axis}: {iv}")


def family(dim: int, boxes) -> BoxFamily:
    """Build a family from ``[(id, [(lo, hi), ...]), ...]``."""
    return BoxFamily(
        dim,
        [BoxD(i, tuple(Interval(Fraction(lo), Fraction(hi)) for lo, hi in ivs)) for i, ivs in boxes],
    )


def _meets(a: BoxD, b: BoxD):
    return [interval_meet(x, y) for x, y in zip(a.intervals, b.intervals)]


def box_graph(b: BoxFamily) -> Graph:
    boxes = b.boxes
    pairs = [
        (i, j)
        for i in range(len(boxes))
        for j in range(i + 1, len(boxes))
        if all(m.kind != EMPTY for m in _meets(boxes[i], boxes[j]))
    ]
    return graph_from_edges(len(boxes), pairs, labels={i: bx.id for i, bx in enumerate(boxes)})


@dataclass
class CbuReport:
    valid: bool
    violations: list  # of ((id, id), Meet on axis 0)
    graph: Graph

    def to_doc(self) -> dict:
        return {
            "pass": self.valid,
            "violations": [
                {
                    "boxes": list(ids),
                    "axis0": {"kind": m.kind, "lo": format_scalar(m.lo), "hi": format_scalar(m.hi)},
                }
                for ids, m in self.violations
            ],
            "graph": {"n": self.graph.n, "edges": [list(e) for e in self.graph.sorted_edges()]},
        }


def verify_cbu(b: BoxFamily) -> CbuReport:
    b.check_proper()
    boxes = b.boxes
    violations = []
    pairs = []
    for i in range(len(boxes)):
        for j in range(i + 1, len(boxes)):
            meets = _meets(boxes[i], boxes[j])
            if any(m.kind == EMPTY for m in meets):
                continue
            pairs.append((i, j))
            if meets[0].kind != POINT:
                violations.append(((boxes[i].id, boxes[j].id), meets[0]))
    g = graph_from_edges(len(boxes), pairs, labels={i: bx.id for i, bx in enumerate(boxes)})
    return CbuReport(not violations, violations, g)


def lift_dim(b: BoxFamily) -> BoxFamily:
    extra = Interval(Fraction(0), Fraction(1))
    return BoxFamily(b.dim + 1, [BoxD(bx.id, bx.intervals + (extra,)) for bx in b.boxes])


def normalize_order(b: BoxFamily) -> BoxFamily:
    """Replace every axis's coordinates by their ranks among that axis's values."""
    ranks = []
    for axis in range(b.dim):
        values = sorted({c for bx in b.boxes for c in (bx.intervals[axis].lo, bx.intervals[axis].hi)})
        ranks.append({v: Fraction(r) for r, v in enumerate(values)})
    return BoxFamily(
        b.dim,
        [
            BoxD(bx.id, tuple(Interval(ranks[a][iv.lo], ranks[a][iv.hi]) for a, iv in enumerate(bx.intervals)))
            for bx in b.boxes
        ],
    )


REPRESENTATION = "representation"
NONE_COMPLETE = "none-complete"
UNKNOWN = "unknown"


@dataclass
class SearchResult:
    status: str
    nodes_explored: int
    family: Optional[BoxFamily] = field(default=None)


def search_cbu(
    g: Graph,
    d: int,
    budget: Optional[int] = None,
    limit: int = SEARCH_LIMIT,
) -> SearchResult:
    """Exhaustive d-CBU representation search on the integer grid 0..2n.

    Only coordinate order matters to every predicate, so the grid loses no
    generality; NONE_COMPLETE therefore settles membership in d-CBU for this
    one d, and says nothing about other dimensions.
    """
    if g.n > limit:
        raise BoxError(f"search limited to {limit} vertices, graph has {g.n}")
    if not 1 <= d <= SEARCH_MAX_DIM:
        raise BoxError(f"search supports dimensions 1..{SEARCH_MAX_DIM}")
    budget = DEFAULT_SEARCH_BUDGET if budget is None else budget
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    adj = [1 if g.has_edge(u, v) else 0 for u in range(g.n) for v in range(g.n)]
    status, coords, nodes = kernels.cbu_place(g.n, d, order, adj, 2 * g.n, budget)
    if status == kernels.UNKNOWN:
        return SearchResult(UNKNOWN, nodes)
    if status == kernels.NO:
        return SearchResult(NONE_COMPLETE, nodes)
    boxes = [
        (v, [(coords[(v * d + a) * 2], coords[(v * d + a) * 2 + 1]) for a in range(d)])
        for v in range(g.n)
    ]
    fam = family(d, boxes)
    report = verify_cbu(fam)
    if not report.valid or report.graph.edges != g.edges:
        raise AssertionError("search kernel produced a family that does not re-verify")
    return SearchResult(REPRESENTATION, nodes, fam)

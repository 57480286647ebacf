"""Burling sequence, frame families and the three frame axioms.

Level 1 is one vertex with one special set.  Level k+1 takes a base copy B
of level k and, for every special S of B, a fresh copy C_S of level k plus a
vertex v(S, S') adjacent to exactly S' for every special S' of C_S.  The new
specials are S + {v(S, S')} and S + S'.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .coloring import Coloring, ColoringError
from .exact import (
    Interval,
    Rect,
    rect_contains_rect,
    rect_in_interior,
    seg_meet,
)
from .graph import Graph, graph_from_edges, triangle_witness

MAX_LEVEL = 5
REALIZE_MAX_LEVEL = 3

SIDES = ("left", "right", "bottom", "top")


class LevelError(ValueError):
    pass


def level_sizes(k: int) -> tuple:
    """(vertices, specials) of level k from the recurrence alone."""
    n, p = 1, 1
    for _ in range(k - 1):
        n, p = n + p * (n + p), 2 * p * p
    return n, p


@dataclass(frozen=True)
class BurlingLevel:
    level: int
    graph: Graph
    specials: tuple  # of sorted vertex-id tuples


def _grow(n: int, edges: list, specials: list):
    out_edges = list(edges)
    out_specials = []
    offset = n
    for base in specials:
        out_edges.extend((u + offset, v + offset) for u, v in edges)
        v_first = offset + n
        for j, sp in enumerate(specials):
            v = v_first + j
            copied = tuple(x + offset for x in sp)
            out_edges.extend((x, v) for x in copied)
            out_specials.append(base + (v,))
            out_specials.append(base + copied)
        offset = v_first + len(specials)
    return offset, out_edges, out_specials


@lru_cache(maxsize=None)
def _abstract(k: int) -> BurlingLevel:
    n, edges, specials = 1, [], [(0,)]
    for _ in range(k - 1):
        n, edges, specials = _grow(n, edges, specials)
    return BurlingLevel(k, graph_from_edges(n, edges), tuple(specials))


def burling_abstract(k: int, max_level: int = MAX_LEVEL) -> BurlingLevel:
    if not 1 <= k <= max_level:
        raise LevelError(f"level must be in 1..{max_level}, got {k}")
    return _abstract(k)


def probe_lemma_check(lv: BurlingLevel, coloring: Coloring) -> Optional[int]:
    """Index of the first special set carrying at least ``lv.level`` colours.

    A proper colouring always has one; None means the construction is broken.
    """
    if not coloring.is_proper(lv.graph):
        raise ColoringError("probe lemma needs a proper colouring")
    col = coloring.assignment
    for i, s in enumerate(lv.specials):
        if len({col[v] for v in s}) >= lv.level:
            return i
    return None


# frames ---------------------------------------------------------------------

@dataclass(frozen=True)
class Frame:
    id: int
    rect: Rect


@dataclass(frozen=True)
class ProbeRecord:
    id: int
    region: Rect
    members: tuple


@dataclass
class FrameFamily:
    frames: list
    probes: list = field(default_factory=list)

    def __post_init__(self):
        ids = [f.id for f in self.frames]
        if len(set(ids)) != len(ids):
            raise ValueError("frame ids must be unique")
        self.frames = sorted(self.frames, key=lambda f: f.id)


def contacts(a: Rect, b: Rect) -> frozenset:
    """Pairs (side of a, side of b) whose closed segments meet."""
    if (
        a.x.hi < b.x.lo
        or b.x.hi < a.x.lo
        or a.y.hi < b.y.lo
        or b.y.hi < a.y.lo
    ):
        return frozenset()
    sa, sb = a.sides(), b.sides()
    return frozenset(
        (na, nb) for na in SIDES for nb in SIDES if not seg_meet(sa[na], sb[nb]).empty
    )


def frame_graph(f: FrameFamily) -> Graph:
    frames = f.frames
    pairs = [
        (i, j)
        for i in range(len(frames))
        for j in range(i + 1, len(frames))
        if contacts(frames[i].rect, frames[j].rect)
    ]
    return graph_from_edges(len(frames), pairs, labels={i: fr.id for i, fr in enumerate(frames)})


def _side_meets_region(seg, region: Rect) -> bool:
    along, across = (region.x, region.y) if seg.orient == "h" else (region.y, region.x)
    return across.contains(seg.at) and seg.span.lo <= along.hi and along.lo <= seg.span.hi


def probe_members(f: FrameFamily, region: Rect) -> tuple:
    """Ids of frames whose boundary meets the closed region."""
    return tuple(
        fr.id
        for fr in f.frames
        if any(_side_meets_region(s, region) for s in fr.rect.sides().values())
    )


@dataclass(frozen=True)
class Violation:
    axiom: str
    frames: tuple
    reason: str


@dataclass
class AxiomReport:
    triangle_free: bool
    a1_ok: bool
    a2_ok: bool
    a3_ok: bool
    violations: list

    @property
    def ok(self) -> bool:
        return self.triangle_free and self.a1_ok and self.a2_ok and self.a3_ok

    def to_doc(self) -> dict:
        return {
            "pass": self.ok,
            "triangle_free": self.triangle_free,
            "a1": self.a1_ok,
            "a2": self.a2_ok,
            "a3": self.a3_ok,
            "violations": [
                {"axiom": v.axiom, "frames": list(v.frames), "reason": v.reason}
                for v in self.violations
            ],
        }


def verify_burling_axioms(f: FrameFamily) -> AxiomReport:
    frames = f.frames
    n = len(frames)
    rect = [fr.rect for fr in frames]
    fid = [fr.id for fr in frames]
    touch = {}
    for i in range(n):
        for j in range(i + 1, n):
            c = contacts(rect[i], rect[j])
            if c:
                touch[i, j] = c
                touch[j, i] = frozenset((b, a) for a, b in c)
    nbrs = [set() for _ in range(n)]
    for i, j in touch:
        nbrs[i].add(j)
    violations = []

    g = graph_from_edges(n, [p for p in touch if p[0] < p[1]])
    tri = triangle_witness(g)
    if tri is not None:
        violations.append(Violation("triangle", tuple(fid[t] for t in tri), "frames pairwise intersect"))

    for (i, j), c in touch.items():
        hit_by_left = sorted({sb for sa, sb in c if sa == "left"})
        if hit_by_left:
            violations.append(Violation(
                "A1", (fid[i], fid[j]),
                f"left side of {fid[i]} meets {'/'.join(hit_by_left)} of {fid[j]}",
            ))
        hit_by_right = {sb for sa, sb in c if sa == "right"}
        if hit_by_right and not {"top", "bottom"} <= hit_by_right:
            violations.append(Violation(
                "A1", (fid[i], fid[j]),
                f"right side of {fid[i]} meets {fid[j]} without crossing both its top and bottom",
            ))

    for (i, j) in touch:
        if i > j:
            continue
        a, b = rect[i], rect[j]
        x0, x1 = max(a.x.lo, b.x.lo), min(a.x.hi, b.x.hi)
        y0, y1 = max(a.y.lo, b.y.lo), min(a.y.hi, b.y.hi)
        if x0 >= x1 or y0 >= y1:
            continue  # a degenerate common region holds no proper frame
        common = Rect.of(x0, x1, y0, y1)
        for k in range(n):
            if k in (i, j):
                continue
            if rect_contains_rect(rect[k], common):
                violations.append(Violation(
                    "A2", (fid[i], fid[j], fid[k]),
                    f"{fid[k]} lies in the common region of intersecting {fid[i]} and {fid[j]}",
                ))

    for c in range(n):
        for d in range(n):
            if c == d or not rect_in_interior(rect[c], rect[d]):
                continue
            for t in sorted(nbrs[c] & nbrs[d]):
                sides_of_t = {st for _, st in touch[c, t]} | {st for _, st in touch[d, t]}
                bad = sorted(sides_of_t - {"top", "bottom"})
                if bad:
                    violations.append(Violation(
                        "A3", (fid[c], fid[d], fid[t]),
                        f"{fid[c]} nested in {fid[d]}; both meet {'/'.join(bad)} of {fid[t]}",
                    ))

    violations.sort(key=lambda v: (v.axiom, v.frames, v.reason))
    axioms = {v.axiom for v in violations}
    return AxiomReport(
        triangle_free=tri is None,
        a1_ok="A1" not in axioms,
        a2_ok="A2" not in axioms,
        a3_ok="A3" not in axioms,
        violations=violations,
    )


def check_probes(f: FrameFamily) -> list:
    """Problems with the family's probe records (empty list when all hold)."""
    problems = []
    g = frame_graph(f)
    index = {fr.id: i for i, fr in enumerate(f.frames)}
    for p in f.probes:
        actual = probe_members(f, p.region)
        if tuple(sorted(p.members)) != actual:
            problems.append(f"probe {p.id}: declared {sorted(p.members)}, boundary hits {list(actual)}")
        ms = [index[m] for m in p.members if m in index]
        if any(g.has_edge(u, v) for u in ms for v in ms if u < v):
            problems.append(f"probe {p.id}: members not stable")
    return problems


# realization ----------------------------------------------------------------

def _map_rect(r: Rect, sx, tx, sy, ty) -> Rect:
    return Rect(r.x.map(sx, tx), r.y.map(sy, ty))


@lru_cache(maxsize=None)
def _realize(k: int):
    """Frames (list of Rect indexed by vertex id) and probes [(region, members)].

    Everything lives in the unit square.  Every probe region is crossed by the
    right sides of its members from bottom to top and by nothing else, the
    strip from the probe to the right edge of the square meets only those
    right sides, and probe y-ranges are pairwise disjoint.
    """
    one = Fraction(1)
    if k == 1:
        frame = Rect.of(Fraction(1, 8), Fraction(5, 8), Fraction(1, 8), Fraction(7, 8))
        probe = Rect.of(Fraction(3, 8), Fraction(7, 8), Fraction(1, 4), Fraction(3, 4))
        return [frame], [(probe, (0,))]

    sub_frames, sub_probes = _realize(k - 1)
    frames = list(sub_frames)
    probes = []
    for region, members in sub_probes:
        a, b = region.x.lo, region.x.hi
        c, d = region.y.lo, region.y.hi
        lines = [frames[i].x.hi for i in members]
        first_line = min(lines)
        # copy goes into the free part of the probe, left of every member line
        zx0 = a + (first_line - a) / 7
        zx1 = a + (first_line - a) * 6 / 7
        zy0 = c + (d - c) / 9
        zy1 = d - (d - c) / 9
        sx, sy = (zx1 - zx0) / one, (zy1 - zy0) / one
        offset = len(frames)
        frames.extend(_map_rect(r, sx, zx0, sy, zy0) for r in sub_frames)
        v_first = len(frames)
        right_end = (max(lines) + b) / 2
        for j, (sub_region, sub_members) in enumerate(sub_probes):
            pr = _map_rect(sub_region, sx, zx0, sy, zy0)
            copied = tuple(m + offset for m in sub_members)
            p0, p1 = pr.x.lo, pr.x.hi
            q0, h = pr.y.lo, pr.y.hi - pr.y.lo
            sub_lines = [frames[m].x.hi for m in copied]
            lmin, lmax = min(sub_lines), max(sub_lines)
            # staggered by j so sibling frames never share an x-coordinate
            t = Fraction(j + 1, len(sub_probes) + 2)
            v = Rect(
                Interval(p0 + (lmin - p0) * t, lmax + (p1 - lmax) * t),
                Interval(q0 + h * Fraction(1, 11), q0 + h * Fraction(5, 11)),
            )
            frames.append(v)
            v_id = v_first + j
            gap = (v.x.hi - lmax) / 3
            with_v = Rect(
                Interval(v.x.hi - gap, right_end),
                Interval(q0 + h * Fraction(2, 11), q0 + h * Fraction(4, 11)),
            )
            with_sub = Rect(
                Interval(p0 + (lmin - p0) / 2, right_end),
                Interval(q0 + h * Fraction(6, 11), q0 + h * Fraction(10, 11)),
            )
            probes.append((with_v, members + (v_id,)))
            probes.append((with_sub, members + copied))
    return frames, probes


def realize_frames(k: int, max_level: int = REALIZE_MAX_LEVEL) -> FrameFamily:
    """Frame family for level k whose frame graph is the abstract level graph.

    Frame ids equal abstract vertex ids; probe ``i`` realises special ``i``.
    """
    if not 1 <= k <= max_level:
        raise LevelError(f"frame realization supports levels 1..{max_level}, got {k}")
    rects, probes = _realize(k)
    return FrameFamily(
        frames=[Frame(i, r) for i, r in enumerate(rects)],
        probes=[ProbeRecord(i, region, members) for i, (region, members) in enumerate(probes)],
    )


def generic_position(f: FrameFamily) -> bool:
    """True when no two frames share an x-coordinate or a y-coordinate."""
    xs = [c for fr in f.frames for c in (fr.rect.x.lo, fr.rect.x.hi)]
    ys = [c for fr in f.frames for c in (fr.rect.y.lo, fr.rect.y.hi)]
    return len(set(xs)) == len(xs) and len(set(ys)) == len(ys)

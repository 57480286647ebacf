"""Exact rational scalars, intervals, rectangles and axis-parallel segments.

Every coordinate in the package is a :class:`fractions.Fraction`.  Fractions
are always kept in lowest terms with a positive denominator, which is the
canonical form used for serialization (``"p/q"`` or ``"p"``).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

Scalar = Fraction
ScalarLike = Union[Fraction, int, str]

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*$")


def scalar(value: ScalarLike) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: nothing in this package is allowed to round.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _SCALAR_RE.match(value)
        if not m:
            raise ValueError(f"not a rational scalar: {value!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise ValueError(f"zero denominator in {value!r}")
        return Fraction(num, den)
    raise TypeError(f"cannot build an exact scalar from {type(value).__name__}")


def format_scalar(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", scalar(self.lo))
        object.__setattr__(self, "hi", scalar(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"interval with lo > hi: [{self.lo}, {self.hi}]")

    @property
    def proper(self) -> bool:
        return self.lo < self.hi

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi

    def map(self, scale: Fraction, shift: Fraction) -> "Interval":
        """Image under ``x -> scale*x + shift`` (``scale`` must be positive)."""
        if scale <= 0:
            raise ValueError("only increasing maps keep interval orientation")
        return Interval(self.lo * scale + shift, self.hi * scale + shift)

    def __repr__(self):
        return f"[{format_scalar(self.lo)}, {format_scalar(self.hi)}]"


EMPTY = "empty"
POINT = "point"
SEGMENT = "segment"


@dataclass(frozen=True)
class Meet:
    """Classification of the intersection of two closed intervals."""

    kind: str
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None

    @property
    def empty(self) -> bool:
        return self.kind == EMPTY

    def __repr__(self):
        if self.kind == EMPTY:
            return "Empty"
        if self.kind == POINT:
            return f"Point({format_scalar(self.lo)})"
        return f"Segment({format_scalar(self.lo)}, {format_scalar(self.hi)})"


MEET_EMPTY = Meet(EMPTY)


def interval_meet(a: Interval, b: Interval) -> Meet:
    lo = max(a.lo, b.lo)
    hi = min(a.hi, b.hi)
    if lo > hi:
        return MEET_EMPTY
    if lo == hi:
        return Meet(POINT, lo, lo)
    return Meet(SEGMENT, lo, hi)


@dataclass(frozen=True)
class Rect:
    x: Interval
    y: Interval

    def __post_init__(self):
        if not (self.x.proper and self.y.proper):
            raise ValueError(f"rectangle needs non-empty interior: {self.x} x {self.y}")

    @classmethod
    def of(cls, x0: ScalarLike, x1: ScalarLike, y0: ScalarLike, y1: ScalarLike) -> "Rect":
        return cls(Interval(scalar(x0), scalar(x1)), Interval(scalar(y0), scalar(y1)))

    def sides(self) -> dict:
        """The four boundary segments keyed by ``left/right/bottom/top``."""
        x, y = self.x, self.y
        return {
            "left": Seg.vertical(x.lo, y.lo, y.hi),
            "right": Seg.vertical(x.hi, y.lo, y.hi),
            "bottom": Seg.horizontal(y.lo, x.lo, x.hi),
            "top": Seg.horizontal(y.hi, x.lo, x.hi),
        }

    def __repr__(self):
        return f"{self.x}x{self.y}"


def rect_in_interior(inner: Rect, outer: Rect) -> bool:
    return (
        outer.x.lo < inner.x.lo
        and inner.x.hi < outer.x.hi
        and outer.y.lo < inner.y.lo
        and inner.y.hi < outer.y.hi
    )


def rect_contains_rect(inner: Rect, outer: Rect) -> bool:
    return (
        outer.x.lo <= inner.x.lo
        and inner.x.hi <= outer.x.hi
        and outer.y.lo <= inner.y.lo
        and inner.y.hi <= outer.y.hi
    )


HORIZONTAL = "h"
VERTICAL = "v"


@dataclass(frozen=True)
class Seg:
    """Closed axis-parallel segment.

    ``orient`` is ``"h"`` (constant y = ``at``, x ranging over ``span``) or
    ``"v"`` (constant x = ``at``, y ranging over ``span``).
    """

    orient: str
    at: Fraction
    span: Interval

    def __post_init__(self):
        if self.orient not in (HORIZONTAL, VERTICAL):
            raise ValueError(f"bad orientation {self.orient!r}")
        if not self.span.proper:
            raise ValueError("segment endpoints must be distinct")

    @classmethod
    def horizontal(cls, y, x0, x1) -> "Seg":
        return cls(HORIZONTAL, scalar(y), Interval(scalar(x0), scalar(x1)))

    @classmethod
    def vertical(cls, x, y0, y1) -> "Seg":
        return cls(VERTICAL, scalar(x), Interval(scalar(y0), scalar(y1)))


@dataclass(frozen=True)
class SegMeet:
    """``kind`` is empty, point (``point`` = (x, y)) or overlap (collinear)."""

    kind: str
    point: Optional[tuple] = None
    orient: Optional[str] = None
    at: Optional[Fraction] = None
    span: Optional[Interval] = None

    @property
    def empty(self) -> bool:
        return self.kind == EMPTY


OVERLAP = "overlap"
SEG_EMPTY = SegMeet(EMPTY)


def _xy(orient, at, t):
    return (t, at) if orient == HORIZONTAL else (at, t)


def seg_meet(s: Seg, t: Seg) -> SegMeet:
    if s.orient == t.orient:
        if s.at != t.at:
            return SEG_EMPTY
        m = interval_meet(s.span, t.span)
        if m.kind == EMPTY:
            return SEG_EMPTY
        if m.kind == POINT:
            return SegMeet(POINT, point=_xy(s.orient, s.at, m.lo))
        return SegMeet(OVERLAP, orient=s.orient, at=s.at, span=Interval(m.lo, m.hi))
    h, v = (s, t) if s.orient == HORIZONTAL else (t, s)
    if h.span.contains(v.at) and v.span.contains(h.at):
        return SegMeet(POINT, point=(v.at, h.at))
    return SEG_EMPTY

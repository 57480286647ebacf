from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from burlbox.exact import (
    EMPTY,
    OVERLAP,
    POINT,
    SEGMENT,
    Interval,
    Rect,
    Seg,
    format_scalar,
    interval_meet,
    rect_contains_rect,
    rect_in_interior,
    scalar,
    seg_meet,
)
from oracles import raster_points

fractions = st.fractions(min_value=-99, max_value=99, max_denominator=12)
positive = st.fractions(min_value=Fraction(1, 12), max_value=50, max_denominator=12)


@st.composite
def intervals(draw, proper=False):
    a, b = draw(fractions), draw(fractions)
    if proper and a == b:
        b = a + 1
    return Interval(min(a, b), max(a, b))


@st.composite
def rects(draw):
    return Rect(draw(intervals(proper=True)), draw(intervals(proper=True)))


def test_scalar_parsing():
    assert scalar("3/6") == Fraction(1, 2)
    assert scalar(" -4 ") == -4
    assert scalar(Fraction(2, 3)) == Fraction(2, 3)
    assert format_scalar(Fraction(-6, 4)) == "-3/2"
    assert format_scalar(Fraction(5)) == "5"


@pytest.mark.parametrize("bad", ["1/0", "0.5", "abc", "", "1/2/3"])
def test_scalar_rejects_malformed(bad):
    with pytest.raises(ValueError):
        scalar(bad)


@pytest.mark.parametrize("bad", [0.5, True, None])
def test_scalar_rejects_inexact_types(bad):
    with pytest.raises(TypeError):
        scalar(bad)


def test_interval_meet_examples():
    assert interval_meet(Interval(0, 1), Interval(1, 2)).kind == POINT
    assert interval_meet(Interval(0, 2), Interval(1, 3)) == interval_meet(Interval(1, 3), Interval(0, 2))
    m = interval_meet(Interval(0, 2), Interval(1, 3))
    assert (m.kind, m.lo, m.hi) == (SEGMENT, 1, 2)
    assert interval_meet(Interval(0, 1), Interval(2, 3)).kind == EMPTY
    with pytest.raises(ValueError):
        Interval(2, 1)


def test_rect_needs_interior():
    with pytest.raises(ValueError):
        Rect.of(0, 0, 0, 1)
    r = Rect.of(0, 2, 0, 1)
    assert set(r.sides()) == {"left", "right", "bottom", "top"}
    assert r.sides()["top"] == Seg.horizontal(1, 0, 2)


def test_interior_and_containment():
    outer = Rect.of(0, 10, 0, 10)
    assert rect_in_interior(Rect.of(1, 9, 1, 9), outer)
    assert not rect_in_interior(Rect.of(0, 9, 1, 9), outer)
    assert rect_contains_rect(Rect.of(0, 9, 1, 9), outer)
    assert not rect_contains_rect(Rect.of(-1, 9, 1, 9), outer)


def test_seg_meet_examples():
    assert seg_meet(Seg.horizontal(0, 0, 2), Seg.vertical(1, -1, 1)).point == (1, 0)
    assert seg_meet(Seg.horizontal(0, 0, 2), Seg.vertical(3, -1, 1)).kind == EMPTY
    m = seg_meet(Seg.horizontal(0, 0, 2), Seg.horizontal(0, 1, 3))
    assert m.kind == OVERLAP and m.span == Interval(1, 2)
    assert seg_meet(Seg.horizontal(0, 0, 1), Seg.horizontal(0, 1, 3)).point == (1, 0)
    assert seg_meet(Seg.horizontal(0, 0, 1), Seg.horizontal(1, 0, 1)).kind == EMPTY


@given(intervals(), intervals())
def test_interval_meet_symmetric(a, b):
    assert interval_meet(a, b) == interval_meet(b, a)


@given(intervals(), intervals(), positive, fractions)
def test_interval_meet_affine_invariant(a, b, s, t):
    m, m2 = interval_meet(a, b), interval_meet(a.map(s, t), b.map(s, t))
    assert m.kind == m2.kind
    if m.kind != EMPTY:
        assert (m2.lo, m2.hi) == (m.lo * s + t, m.hi * s + t)


@settings(max_examples=300)
@given(rects(), rects())
def test_interior_implies_containment(a, b):
    if rect_in_interior(a, b):
        assert rect_contains_rect(a, b)
        assert not rect_in_interior(b, a)


coords = st.integers(0, 10)


@st.composite
def grid_segments(draw):
    orient = draw(st.sampled_from("hv"))
    lo = draw(st.integers(0, 9))
    hi = draw(st.integers(lo + 1, 10))
    return orient, draw(coords), lo, hi


@settings(max_examples=500)
@given(grid_segments(), grid_segments())
def test_seg_meet_matches_raster(s, t):
    """Compare against the set of shared points on the doubled grid."""
    a = Seg(s[0], Fraction(s[1]), Interval(s[2], s[3]))
    b = Seg(t[0], Fraction(t[1]), Interval(t[2], t[3]))
    shared = raster_points(*s) & raster_points(*t)
    m = seg_meet(a, b)
    assert m == seg_meet(b, a) or m.kind == POINT
    if not shared:
        assert m.kind == EMPTY
    elif len(shared) == 1:
        assert m.kind == POINT and m.point == next(iter(shared))
    else:
        assert m.kind == OVERLAP
        assert raster_points(m.orient, m.at, m.span.lo, m.span.hi) == shared

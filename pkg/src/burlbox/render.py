"""Static SVG pictures of 2-D frame and box families."""
from __future__ import annotations

from fractions import Fraction

from .burling import FrameFamily
from .cbu import BoxFamily

WIDTH = 1000
PALETTE = ("#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7")


class RenderError(ValueError):
    pass


def decimal(x: Fraction, digits: int = 3) -> str:
    """Fixed-point text for an exact value, rounded half away from zero."""
    scale = 10**digits
    q, r = divmod(abs(x.numerator) * scale, x.denominator)
    if 2 * r >= x.denominator:
        q += 1
    sign = "-" if x < 0 and q else ""
    whole, frac = divmod(q, scale)
    text = f"{sign}{whole}.{frac:0{digits}d}".rstrip("0").rstrip(".")
    return text or "0"


def _rects(fam):
    if isinstance(fam, FrameFamily):
        return [(fr.id, fr.rect.x, fr.rect.y) for fr in fam.frames]
    if fam.dim != 2:
        raise RenderError(
            f"SVG needs a 2-D family, this one has dim {fam.dim}; render its graph as DOT instead"
        )
    return [(bx.id, bx.intervals[0], bx.intervals[1]) for bx in fam.boxes]


def to_svg(fam) -> str:
    rects = _rects(fam)
    outline = isinstance(fam, FrameFamily)
    if not rects:
        return f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{WIDTH}"/>\n'
    x0 = min(x.lo for _, x, _ in rects)
    x1 = max(x.hi for _, x, _ in rects)
    y0 = min(y.lo for _, _, y in rects)
    y1 = max(y.hi for _, _, y in rects)
    mx, my = (x1 - x0) / 20, (y1 - y0) / 20
    x0, x1, y0, y1 = x0 - mx, x1 + mx, y0 - my, y1 + my
    s = Fraction(WIDTH) / (x1 - x0)
    height = (y1 - y0) * s
    sx = lambda v: decimal((v - x0) * s)  # noqa: E731
    sy = lambda v: decimal((y1 - v) * s)  # noqa: E731  (svg y grows downwards)
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{WIDTH}" height="{decimal(height)}" viewBox="0 0 {WIDTH} {decimal(height)}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for i, (rid, x, y) in enumerate(rects):
        color = PALETTE[i % len(PALETTE)]
        style = (
            f'fill="none" stroke="{color}" stroke-width="1.5"'
            if outline
            else f'fill="{color}" fill-opacity="0.45" stroke="black" stroke-width="1"'
        )
        lines.append(
            f'<rect id="r{rid}" x="{sx(x.lo)}" y="{sy(y.hi)}" '
            f'width="{decimal((x.hi - x.lo) * s)}" height="{decimal((y.hi - y.lo) * s)}" {style}/>'
        )
        if outline:
            tx, ty = sx(x.hi), sy(y.hi)
        else:
            tx, ty = sx((x.lo + x.hi) / 2), sy((y.lo + y.hi) / 2)
        lines.append(f'<text x="{tx}" y="{ty}" font-size="12" font-family="monospace">{rid}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"

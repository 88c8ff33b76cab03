"""Deterministic SVG rendering of polygons over the unit circle.

The drawing contains exactly one circle element (the unit circle) and one
polygon path, plus a second path when the polar overlay is requested; vertex
markers are small squares colored by the on-circle flag.  Output is a pure
function of the input, so identical polygons render byte-identically.
"""

from __future__ import annotations

from .duality import polar as polar_of
from .polygon import SymPolygon, on_circle_flags
from .scalars import EPS_CIRCLE

_VIEW = 1.6
_MARKER = 0.035
_ON_COLOR = "#d62728"    # vertex on the unit circle
_OFF_COLOR = "#1f77b4"   # interior vertex


def _fmt(x: float) -> str:
    return f"{float(x):.9g}"


def _path(P: SymPolygon, stroke: str) -> str:
    coords = " L ".join(f"{_fmt(v.x)} {_fmt(v.y)}" for v in P.vertices)
    return (
        f'<path d="M {coords} Z" fill="none" stroke="{stroke}" stroke-width="0.012"/>'
    )


def _markers(P: SymPolygon) -> list:
    flags = on_circle_flags(P, EPS_CIRCLE)
    out = []
    for v, on in zip(P.vertices, flags):
        color = _ON_COLOR if on else _OFF_COLOR
        x = float(v.x) - _MARKER / 2
        y = float(v.y) - _MARKER / 2
        out.append(
            f'<rect x="{_fmt(x)}" y="{_fmt(y)}" width="{_fmt(_MARKER)}" '
            f'height="{_fmt(_MARKER)}" fill="{color}"/>'
        )
    return out


def render_svg(P: SymPolygon, with_polar: bool = False, size: int = 480) -> str:
    """Render P (and optionally its polar) over the unit circle as an SVG document."""
    P = P.as_float()
    body = [
        f'<circle cx="0" cy="0" r="1" fill="none" stroke="#999999" stroke-width="0.008"/>',
        _path(P, "#000000"),
    ]
    if with_polar:
        body.append(_path(polar_of(P), "#2ca02c"))
    body.extend(_markers(P))
    inner = "\n    ".join(body)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="{_fmt(-_VIEW)} {_fmt(-_VIEW)} {_fmt(2 * _VIEW)} {_fmt(2 * _VIEW)}">\n'
        f'  <g transform="scale(1,-1)">\n    {inner}\n  </g>\n</svg>\n'
    )

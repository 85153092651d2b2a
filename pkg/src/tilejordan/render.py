"""SVG drawings of tiling windows, curves and their interiors."""

from __future__ import annotations

from typing import Iterable, Optional

from .cells import CellRef, Kind
from .jordan import ComplementSplit
from .tiling import TilingError, TilingWindow


class RenderError(TilingError):
    pass


SCALE = 40.0
PAD = 20.0

FACE_FILL = "#ffffff"
RIM_STROKE = "#bbbbbb"
CURVE = "#d62828"
CURVE_FACE = "#f4a261"
INTERIOR = "#8ecae6"
INTERIOR_FACE = "#cfe8f3"


def _fmt(x: float) -> str:
    s = f"{x:.2f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def render_svg(window: TilingWindow, curve: Iterable[CellRef] = (), split: Optional[ComplementSplit] = None) -> str:
    """Faces as polygons, edges as paths, vertices as circles, in index order."""
    if window.coords is None:
        raise RenderError("tiling has no vertex coordinates")
    curve = frozenset(curve)
    interior = split.interior if split is not None else frozenset()
    xs = [p[0] for p in window.coords]
    ys = [p[1] for p in window.coords]
    x0, y1 = min(xs), max(ys)
    width = (max(xs) - x0) * SCALE + 2 * PAD
    height = (y1 - min(ys)) * SCALE + 2 * PAD

    def pt(v: CellRef) -> str:
        x, y = window.coords[v.index]
        return f"{_fmt((x - x0) * SCALE + PAD)},{_fmt((y1 - y) * SCALE + PAD)}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        '<g id="faces">',
    ]
    for f in window.cells(Kind.FACE):
        rec = window.record(f)
        fill = CURVE_FACE if f in curve else INTERIOR_FACE if f in interior else FACE_FILL
        points = " ".join(pt(v) for v in rec.vertices)
        out.append(f'<polygon id="{window.name(f)}" points="{points}" fill="{fill}" stroke="none"/>')
    out.append('</g>')
    out.append('<g id="edges" fill="none">')
    for e in window.cells(Kind.EDGE):
        rec = window.record(e)
        if e in curve:
            style = f'stroke="{CURVE}" stroke-width="4"'
        elif e in interior:
            style = f'stroke="{INTERIOR}" stroke-width="3"'
        elif not rec.complete:
            style = f'stroke="{RIM_STROKE}" stroke-width="1" stroke-dasharray="4 3"'
        else:
            style = 'stroke="#333333" stroke-width="1"'
        a, b = rec.endpoints
        out.append(f'<path id="{window.name(e)}" d="M {pt(a)} L {pt(b)}" {style}/>')
    out.append('</g>')
    out.append('<g id="vertices">')
    for v in window.cells(Kind.VERTEX):
        x, y = pt(v).split(",")
        if v in curve:
            attrs = f'r="5" fill="{CURVE}"'
        elif v in interior:
            attrs = f'r="4" fill="{INTERIOR}"'
        elif not window.is_complete(v):
            attrs = f'r="2" fill="{RIM_STROKE}"'
        else:
            attrs = 'r="2" fill="#333333"'
        out.append(f'<circle id="{window.name(v)}" cx="{x}" cy="{y}" {attrs}/>')
    out.append('</g>')
    out.append('</svg>')
    return "\n".join(out) + "\n"

"""Named curves used by the examples, the CLI and the test-suite."""

from __future__ import annotations

from .cells import CellRef, F, Kind
from .space import CellSet
from .tiling import TilingWindow


def square_face(cols: int, i: int, j: int) -> CellRef:
    """Face in column ``i`` and row ``j`` of a window from ``build_square_window(cols, _)``."""
    return F(j * cols + i)


def square_center(cols: int, rows: int) -> CellRef:
    return square_face(cols, cols // 2, rows // 2)


def tile_boundary(window: TilingWindow, face: CellRef) -> tuple[CellRef, ...]:
    """The vertices and edges of one tile, in boundary order (a closed curve)."""
    return window.record(face).boundary


def vertex_ring(window: TilingWindow, vertex: CellRef) -> tuple[CellRef, ...]:
    """Faces and edges around a complete vertex, interleaved.

    Encloses the vertex alone; on the hexagonal tiling this is the smallest
    open curve whose interior holds no face.
    """
    rec = window.record(vertex)
    return tuple(c for pair in zip(rec.incident_edges, rec.incident_faces) for c in pair)


def face_ring(window: TilingWindow, face: CellRef) -> CellSet:
    """Faces around ``face`` plus the edges they share: an open curve enclosing its closure."""
    rec = window.record(face)
    own_edges = set(rec.edges)
    out = set()
    for v in rec.vertices:
        vr = window.record(v)
        out.update(f for f in vr.incident_faces if f != face)
        out.update(e for e in vr.incident_edges if e not in own_edges)
    return CellSet(out)


def edge_neighbor_ring(window: TilingWindow, face: CellRef) -> CellSet:
    """Faces sharing an edge with ``face``, interleaved with its vertices (a vertex-Jordan curve)."""
    rec = window.record(face)
    out = set(rec.vertices)
    for e in rec.edges:
        out.update(f for f in window.record(e).sides if f != face)
    return CellSet(out)


def count_kind(cells, kind: Kind) -> int:
    return sum(1 for c in cells if c.kind is kind)

"""Built-in windows of the square, hexagonal and triangular tilings."""

from __future__ import annotations

import math
from typing import Hashable, Sequence

from .cells import E, F, V
from .tiling import EdgeRecord, FaceRecord, TilingWindow, VertexRecord

Point = tuple[float, float]


def assemble(polygons: Sequence[Sequence[Hashable]], positions: dict[Hashable, Point]) -> TilingWindow:
    """Build a window from tiles given as counter-clockwise vertex-key cycles.

    Edges are the consecutive vertex pairs. An edge is complete when two
    tiles of the window share it; a vertex is complete when all its edges
    are, which for a simply connected patch means its whole star is present.
    """
    vid: dict[Hashable, int] = {}
    eid: dict[frozenset, int] = {}
    ends: list[tuple[int, int]] = []
    sides: list[list[int]] = []
    boundaries = []
    # per vertex: face -> (edge entering the face ccw around v, edge leaving it)
    star: list[dict[int, tuple[int, int]]] = []

    for fi, poly in enumerate(polygons):
        for key in poly:
            if key not in vid:
                vid[key] = len(vid)
                star.append({})
        n = len(poly)
        bnd = []
        for i in range(n):
            a, b = vid[poly[i]], vid[poly[(i + 1) % n]]
            k = frozenset((a, b))
            if k not in eid:
                eid[k] = len(eid)
                ends.append((a, b))
                sides.append([])
            sides[eid[k]].append(fi)
            bnd.extend((V(a), E(eid[k])))
        boundaries.append(tuple(bnd))
        for i in range(n):
            p, v, q = vid[poly[i - 1]], vid[poly[i]], vid[poly[(i + 1) % n]]
            # ccw around v inside a ccw tile: edge towards the next vertex, then the tile, then the edge back
            star[v][fi] = (eid[frozenset((v, q))], eid[frozenset((p, v))])

    edge_complete = [len(s) == 2 for s in sides]
    at_vertex: list[set[int]] = [set() for _ in vid]
    for e, (a, b) in enumerate(ends):
        at_vertex[a].add(e)
        at_vertex[b].add(e)
    vertices = []
    for v, faces_at in enumerate(star):
        after = {e_in: (f, e_out) for f, (e_in, e_out) in faces_at.items()}
        outs = {e_out for (_e_in, e_out) in faces_at.values()}
        incident = at_vertex[v]
        complete = all(edge_complete[e] for e in incident)
        # open star: start at the edge no tile leads into
        start = min(incident) if complete else min(e for e in after if e not in outs)
        es, fs = [start], []
        e = start
        while e in after:
            f, e = after[e]
            fs.append(F(f))
            if e == start:
                break
            es.append(e)
        vertices.append(VertexRecord(tuple(E(x) for x in es), tuple(fs), complete))

    edges = tuple(
        EdgeRecord((V(a), V(b)), tuple(F(f) for f in s), c)
        for (a, b), s, c in zip(ends, sides, edge_complete)
    )
    faces = tuple(FaceRecord(b, True) for b in boundaries)
    inv = {i: k for k, i in vid.items()}
    coords = tuple(positions[inv[i]] for i in range(len(vid)))
    return TilingWindow(tuple(vertices), edges, faces, coords=coords)


def build_square_window(cols: int, rows: int) -> TilingWindow:
    """``cols`` x ``rows`` unit squares; the outer frame is the rim."""
    if cols < 2 or rows < 2:
        raise ValueError("square window needs cols >= 2 and rows >= 2")
    polys = [
        [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)]
        for j in range(rows)
        for i in range(cols)
    ]
    pos = {(i, j): (float(i), float(j)) for i in range(cols + 1) for j in range(rows + 1)}
    return assemble(polys, pos)


_HEX_DIRS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))


def _hex_center(q: int, r: int) -> Point:
    return (math.sqrt(3) * (q + r / 2), 1.5 * r)


def build_hexagonal_window(radius: int) -> TilingWindow:
    """Hexagons at hex distance <= ``radius`` from a centre hexagon (face 0)."""
    if radius < 1:
        raise ValueError("hexagonal window needs radius >= 1")
    cells = [(0, 0)]
    for k in range(1, radius + 1):
        q, r = _HEX_DIRS[4][0] * k, _HEX_DIRS[4][1] * k
        for side in range(6):
            for _ in range(k):
                cells.append((q, r))
                dq, dr = _HEX_DIRS[side]
                q, r = q + dq, r + dr
    polys, pos = [], {}
    for q, r in cells:
        poly = []
        for i in range(6):
            d0, d1 = _HEX_DIRS[i], _HEX_DIRS[(i + 1) % 6]
            trio = ((q, r), (q + d0[0], r + d0[1]), (q + d1[0], r + d1[1]))
            key = frozenset(trio)
            if key not in pos:
                xs, ys = zip(*(_hex_center(*h) for h in trio))
                pos[key] = (round(sum(xs) / 3, 9), round(sum(ys) / 3, 9))
            poly.append(key)
        polys.append(poly)
    return assemble(polys, pos)


def build_triangular_window(size: int) -> TilingWindow:
    """Rhombus of ``size`` x ``size`` lattice cells, each split into two triangles."""
    if size < 2:
        raise ValueError("triangular window needs size >= 2")
    polys = []
    for j in range(size):
        for i in range(size):
            polys.append([(i, j), (i + 1, j), (i, j + 1)])
            polys.append([(i + 1, j), (i + 1, j + 1), (i, j + 1)])
    h = math.sqrt(3) / 2
    pos = {(i, j): (i + j / 2, j * h) for i in range(size + 1) for j in range(size + 1)}
    return assemble(polys, pos)


def build_window(spec: str) -> TilingWindow:
    """Parse ``square:WxH``, ``hex:R`` or ``tri:S`` (an optional ``builtin:`` prefix is allowed)."""
    if spec.startswith("builtin:"):
        spec = spec[len("builtin:"):]
    shape, _, arg = spec.partition(":")
    try:
        if shape == "square":
            w, _, h = arg.lower().partition("x")
            return build_square_window(int(w), int(h))
        if shape == "hex":
            return build_hexagonal_window(int(arg))
        if shape == "tri":
            return build_triangular_window(int(arg))
    except ValueError as exc:
        raise ValueError(f"bad builtin tiling {spec!r}: {exc}") from None
    raise ValueError(f"unknown builtin tiling {spec!r}")

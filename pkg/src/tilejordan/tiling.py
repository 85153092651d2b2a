"""Finite windows of locally finite plane tilings.

A window stores the combinatorial embedding of a patch of a tiling: for each
vertex the cyclic order of its edges and faces, for each edge its endpoints
and side faces, for each face its alternating vertex/edge boundary. Cells
whose incidence data is only partially present (the rim) carry
``complete=False``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from .cells import CellRef, Kind


class TilingError(Exception):
    """Base class for errors raised by this package."""


class UnknownCellError(TilingError, KeyError):
    pass


class IncompleteCellError(TilingError, ValueError):
    """An operation needed incidence data that lies outside the window."""

    def __init__(self, cell: CellRef, what: str = "incomplete star"):
        super().__init__(f"{what}: {cell}")
        self.cell = cell


class WindowTooSmallError(TilingError, ValueError):
    pass


@dataclass(frozen=True)
class VertexRecord:
    # incident_faces[i] lies between incident_edges[i] and incident_edges[i + 1]
    incident_edges: tuple[CellRef, ...]
    incident_faces: tuple[CellRef, ...]
    complete: bool


@dataclass(frozen=True)
class EdgeRecord:
    endpoints: tuple[CellRef, ...]
    sides: tuple[CellRef, ...]
    complete: bool


@dataclass(frozen=True)
class FaceRecord:
    # v0, e0, v1, e1, ... with e_i joining v_i and v_{i+1}
    boundary: tuple[CellRef, ...]
    complete: bool

    @property
    def vertices(self) -> tuple[CellRef, ...]:
        return tuple(c for c in self.boundary if c.kind is Kind.VERTEX)

    @property
    def edges(self) -> tuple[CellRef, ...]:
        return tuple(c for c in self.boundary if c.kind is Kind.EDGE)


@dataclass(frozen=True, eq=False)
class TilingWindow:
    """Immutable incidence structure for a bounded patch of a tiling.

    ``names`` optionally maps every cell to the string id it had in a tiling
    file; ``coords`` optionally gives one 2D point per vertex for rendering.
    The analysis code never reads coordinates.
    """

    vertices: tuple[VertexRecord, ...]
    edges: tuple[EdgeRecord, ...]
    faces: tuple[FaceRecord, ...]
    coords: Optional[tuple[tuple[float, float], ...]] = None
    names: Optional[dict[CellRef, str]] = field(default=None, compare=False)

    def __post_init__(self):
        if not (self.vertices or self.edges or self.faces):
            raise TilingError("a window needs at least one cell")

    def __len__(self) -> int:
        return len(self.vertices) + len(self.edges) + len(self.faces)

    def count(self, kind: Kind) -> int:
        return len(self._table(kind))

    def _table(self, kind: Kind):
        return (self.vertices, self.edges, self.faces)[kind]

    def record(self, x: CellRef):
        table = self._table(x.kind)
        if not 0 <= x.index < len(table):
            raise UnknownCellError(f"unknown cell {x}")
        return table[x.index]

    def __contains__(self, x) -> bool:
        return isinstance(x, tuple) and len(x) == 2 and 0 <= x[1] < len(self._table(Kind(x[0])))

    def cells(self, kind: Optional[Kind] = None) -> Iterator[CellRef]:
        kinds = (kind,) if kind is not None else tuple(Kind)
        for k in kinds:
            for i in range(len(self._table(k))):
                yield CellRef(k, i)

    def is_complete(self, x: CellRef) -> bool:
        return self.record(x).complete

    @cached_property
    def complete_cells(self) -> frozenset[CellRef]:
        return frozenset(x for x in self.cells() if self.record(x).complete)

    @cached_property
    def rim(self) -> frozenset[CellRef]:
        return frozenset(x for x in self.cells() if not self.record(x).complete)

    def incident(self, x: CellRef) -> tuple[CellRef, ...]:
        """Cells listed in the record of ``x`` (its stored incidences)."""
        rec = self.record(x)
        if x.kind is Kind.VERTEX:
            return rec.incident_edges + rec.incident_faces
        if x.kind is Kind.EDGE:
            return rec.endpoints + rec.sides
        return rec.boundary

    @cached_property
    def rim_adjacent(self) -> frozenset[CellRef]:
        """Complete cells with an incomplete cell among their incidences."""
        rim = self.rim
        out = set()
        for x in self.complete_cells:
            if any(y in rim for y in self.incident(x)):
                out.add(x)
        # a complete cell can also be listed by a rim cell without listing it back
        for r in rim:
            for y in self.incident(r):
                if y in self.complete_cells:
                    out.add(y)
        return frozenset(out)

    def name(self, x: CellRef) -> str:
        if self.names is not None:
            return self.names[x]
        return str(x)

    @cached_property
    def _by_name(self) -> dict[str, CellRef]:
        if self.names is None:
            return {str(x): x for x in self.cells()}
        return {v: k for k, v in self.names.items()}

    def resolve(self, name: str) -> CellRef:
        """Map a cell id string (file id, or canonical id) to a CellRef."""
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownCellError(f"unknown cell id {name!r}") from None


# ---------------------------------------------------------------- validation


@dataclass(frozen=True)
class Violation:
    axiom: str
    cells: tuple[CellRef, ...]
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def axioms(self) -> set[str]:
        return {v.axiom for v in self.violations}


def _cyclic_pairs(seq: Sequence) -> Iterator[tuple]:
    n = len(seq)
    for i in range(n):
        yield seq[i], seq[(i + 1) % n]


def _check_face(window: TilingWindow, f: CellRef, out: list[Violation]) -> None:
    b = window.record(f).boundary
    n = len(b)
    if n % 2 or n < 4 or any(c.kind is not (Kind.VERTEX, Kind.EDGE)[i % 2] for i, c in enumerate(b)):
        out.append(Violation("alternation", (f,), f"boundary of {f} does not alternate v,e,... with even length >= 4"))
        return
    if len(set(b)) != n:
        out.append(Violation("disk-like", (f,), f"boundary of {f} repeats a cell"))
        return
    for i in range(1, n, 2):
        e, v0, v1 = b[i], b[i - 1], b[(i + 1) % n]
        ends = window.record(e).endpoints
        if sorted(ends) != sorted((v0, v1)):
            out.append(Violation("edge endpoints", (f, e), f"{e} on {f} does not join its boundary neighbours {v0}, {v1}"))
        if f not in window.record(e).sides:
            out.append(Violation("symmetry", (f, e), f"{f} lists {e} but {e} does not list {f}"))
    for v in b[0::2]:
        if f not in window.record(v).incident_faces:
            out.append(Violation("symmetry", (f, v), f"{f} lists {v} but {v} does not list {f}"))


def _check_edge(window: TilingWindow, e: CellRef, out: list[Violation]) -> None:
    rec = window.record(e)
    if len(rec.endpoints) != 2 or rec.endpoints[0] == rec.endpoints[1]:
        out.append(Violation("edge endpoints", (e,), f"{e} needs two distinct endpoints"))
        return
    if len(rec.sides) != 2:
        out.append(Violation("edge sides", (e,), f"{e} needs exactly two side faces"))
        return
    if rec.sides[0] == rec.sides[1]:
        out.append(Violation("edge sides distinct", (e,), f"both sides of {e} are {rec.sides[0]}"))
        return
    for v in rec.endpoints:
        if e not in window.record(v).incident_edges:
            out.append(Violation("symmetry", (e, v), f"{e} lists {v} but {v} does not list {e}"))
    for f in rec.sides:
        fb = window.record(f).boundary
        if e not in fb:
            out.append(Violation("symmetry", (e, f), f"{e} lists {f} but {f} does not list {e}"))
        for v in rec.endpoints:
            if v not in fb:
                out.append(Violation("face intersection", (e, f, v), f"endpoint {v} of {e} missing from side {f}"))


def _check_vertex(window: TilingWindow, v: CellRef, out: list[Violation]) -> None:
    rec = window.record(v)
    es, fs = rec.incident_edges, rec.incident_faces
    if len(es) != len(fs) or len(fs) < 3:
        out.append(Violation("vertex degree", (v,), f"{v} has {len(es)} edges and {len(fs)} faces; need equal and >= 3"))
        return
    if len(set(fs)) != len(fs) or len(set(es)) != len(es):
        out.append(Violation("cyclic order", (v,), f"{v} lists a face or edge twice"))
        return
    for i, (e0, e1) in enumerate(_cyclic_pairs(es)):
        f = fs[i]
        if f not in window.record(e0).sides or f not in window.record(e1).sides:
            out.append(Violation("cyclic order", (v, e0, f, e1), f"{f} is not between {e0} and {e1} at {v}"))
    for e in es:
        if v not in window.record(e).endpoints:
            out.append(Violation("symmetry", (v, e), f"{v} lists {e} but {e} does not list {v}"))
    for f in fs:
        if v not in window.record(f).boundary:
            out.append(Violation("symmetry", (v, f), f"{v} lists {f} but {f} does not list {v}"))


def _check_face_pairs(window: TilingWindow, out: list[Violation]) -> None:
    # Finite-intersection axiom, checkable only between complete faces: two tiles meet in
    # shared boundary cells, and each shared edge brings its endpoints along.
    faces = [f for f in window.cells(Kind.FACE) if window.is_complete(f)]
    owner: dict[CellRef, list[CellRef]] = {}
    for f in faces:
        for c in window.record(f).boundary:
            owner.setdefault(c, []).append(f)
    for c, fs in owner.items():
        if c.kind is Kind.EDGE and len(fs) > 2:
            out.append(Violation("face intersection", (c, *fs), f"{c} lies on more than two faces"))


def _check_connected(window: TilingWindow, out: list[Violation]) -> None:
    complete = window.complete_cells
    if not complete:
        out.append(Violation("connected", (), "window has no complete cell"))
        return
    start = min(complete)
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in window.incident(x):
            if y in complete and y not in seen:
                seen.add(y)
                queue.append(y)
    if len(seen) != len(complete):
        missing = min(complete - seen)
        out.append(Violation("connected", (missing,), "complete cells do not form a connected incidence structure"))


def validate_tiling(window: TilingWindow) -> ValidationReport:
    """Check the tiling axioms on the complete cells of ``window``.

    Violations are collected, never raised. Only pairs of complete faces can
    be checked against the finite-intersection axiom.
    """
    out: list[Violation] = []
    for x in window.cells():
        for y in window.incident(x):
            if y not in window:
                out.append(Violation("dangling", (x,), f"{x} refers to missing cell {y}"))
    if out:
        return ValidationReport(tuple(out))
    for f in window.cells(Kind.FACE):
        if window.is_complete(f):
            _check_face(window, f, out)
    for e in window.cells(Kind.EDGE):
        if window.is_complete(e):
            _check_edge(window, e, out)
    for v in window.cells(Kind.VERTEX):
        if window.is_complete(v):
            _check_vertex(window, v, out)
    _check_face_pairs(window, out)
    _check_connected(window, out)
    return ValidationReport(tuple(out))


# ------------------------------------------------------------------- queries


def delta(window: TilingWindow) -> int:
    """Largest number of faces at a complete vertex of the window."""
    degrees = [len(r.incident_faces) for r in window.vertices if r.complete]
    if not degrees:
        raise WindowTooSmallError("window too small: no complete vertex")
    return max(degrees)


def star_complete(window: TilingWindow, x: CellRef, depth: int) -> bool:
    """True iff every cell within ``depth`` incidence hops of ``x`` is complete."""
    window.record(x)
    if depth < 0:
        raise ValueError("depth must be non-negative")
    seen = {x}
    frontier = [x]
    for _ in range(depth + 1):
        nxt = []
        for c in frontier:
            if not window.is_complete(c):
                return False
            for y in window.incident(c):
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return True


def ball(window: TilingWindow, sources: Iterable[CellRef], radius: int) -> frozenset[CellRef]:
    """All cells within ``radius`` incidence hops of ``sources``."""
    seen = set(sources)
    frontier = list(seen)
    for _ in range(radius):
        nxt = []
        for c in frontier:
            for y in window.incident(c):
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)

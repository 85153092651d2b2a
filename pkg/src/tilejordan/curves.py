"""Open, closed and well-behaved curves; face adjacency; Rosenfeld-type reports."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import asdict, dataclass, fields
from typing import Iterable, Optional

from .cells import CellRef, Kind
from .jordan import DEFAULT_MARGIN, ComplementSplit, check_margin, is_jordan_curve, jordan_complement
from .space import CellSet, DigitalSpace, boundary_set, closure_set, interior_set
from .tiling import TilingError, TilingWindow, ball, delta


class PreconditionError(TilingError, ValueError):
    pass


class CurveKind(enum.Enum):
    EDGE_JORDAN = "EdgeJordan"
    VERTEX_JORDAN = "VertexJordan"


class Connectivity(enum.Enum):
    EDGE = "EdgeConnected"
    VERTEX = "VertexConnected"


class _Report:
    def as_dict(self) -> dict:
        return {k: (v.value if isinstance(v, enum.Enum) else v) for k, v in asdict(self).items()}


@dataclass(frozen=True)
class ClosedCurveReport(_Report):
    a_closed: bool
    b_int_ext_open: bool
    c_nowhere_dense: bool
    d_complement_dense: bool
    e_no_faces: bool
    f_boundary_of_interior: bool

    @property
    def coherent(self) -> bool:
        return len({getattr(self, f.name) for f in fields(self)}) == 1


@dataclass(frozen=True)
class OpenCurveReport(_Report):
    a_open: bool
    b_int_ext_closed: bool
    c_no_vertices: bool

    @property
    def coherent(self) -> bool:
        return len({getattr(self, f.name) for f in fields(self)}) == 1


def _regions(space: DigitalSpace, J: CellSet, split: ComplementSplit, margin: int):
    if margin < 2:
        raise PreconditionError("curve classification needs a margin of at least 2")
    check_margin(space, J, margin)
    near1 = ball(space.window, J, 1)
    near2 = ball(space.window, J, 2)
    # Exterior cells away from J are interior to, and closed in, the exterior
    # regardless of J; only the collar O1 can fail, and its neighbourhoods and
    # closures stay inside O2.
    return split.exterior & near1, split.exterior & near2


def classify_closed(space: DigitalSpace, J: Iterable[CellRef], split: ComplementSplit,
                    margin: int = DEFAULT_MARGIN) -> ClosedCurveReport:
    J = CellSet(J)
    I = split.interior
    O1, O2 = _regions(space, J, split, margin)
    return ClosedCurveReport(
        a_closed=closure_set(space, J) == J,
        b_int_ext_open=interior_set(space, I) == I and O1 <= interior_set(space, O2),
        c_nowhere_dense=not interior_set(space, closure_set(space, J)),
        d_complement_dense=closure_set(space, I | O2) >= (J | I | O1),
        e_no_faces=not any(c.kind is Kind.FACE for c in J),
        f_boundary_of_interior=boundary_set(space, I) == J,
    )


def classify_open(space: DigitalSpace, J: Iterable[CellRef], split: ComplementSplit,
                  margin: int = DEFAULT_MARGIN) -> OpenCurveReport:
    J = CellSet(J)
    I = split.interior
    O1, _ = _regions(space, J, split, margin)
    return OpenCurveReport(
        a_open=interior_set(space, J) == J,
        b_int_ext_closed=closure_set(space, I) == I and closure_set(space, O1) <= split.exterior,
        c_no_vertices=not any(c.kind is Kind.VERTEX for c in J),
    )


def is_open_curve(space: DigitalSpace, J: Iterable[CellRef]) -> bool:
    J = CellSet(J)
    return interior_set(space, J) == J


def open_interior_vertex_check(space: DigitalSpace, J: Iterable[CellRef], split: ComplementSplit) -> bool:
    """For an open curve, whether the interior contains a vertex (it always should)."""
    if not is_open_curve(space, J):
        raise PreconditionError("curve is not open")
    return any(c.kind is Kind.VERTEX for c in split.interior)


def well_behaved_witness(space: DigitalSpace, J: Iterable[CellRef]) -> Optional[tuple[CellRef, CellRef]]:
    """First ``(face, vertex)`` with the face in J and every face at the vertex in J."""
    J = CellSet(J)
    window = space.window
    space.require_complete(sorted(J))
    for C in sorted(c for c in J if c.kind is Kind.FACE):
        for x in window.record(C).vertices:
            space.require_complete((x,))
            if set(window.record(x).incident_faces) <= J:
                return C, x
    return None


def is_well_behaved(space: DigitalSpace, J: Iterable[CellRef]) -> bool:
    return well_behaved_witness(space, J) is None


def well_behaved_interior_face(space: DigitalSpace, J: Iterable[CellRef], split: ComplementSplit) -> bool:
    if not is_well_behaved(space, J):
        raise PreconditionError("curve is not well-behaved")
    if not any(c.kind is Kind.VERTEX for c in split.interior):
        raise PreconditionError("interior holds no vertex")
    return any(c.kind is Kind.FACE for c in split.interior)


# ------------------------------------------------------------ face adjacency


def _check_face_pair(window: TilingWindow, C1: CellRef, C2: CellRef) -> None:
    for C in (C1, C2):
        if C.kind is not Kind.FACE:
            raise PreconditionError(f"{C} is not a face")
        if not window.is_complete(C):
            raise PreconditionError(f"{C} is not complete")
    if C1 == C2:
        raise PreconditionError("faces must be distinct")


def edge_adjacent(window: TilingWindow, C1: CellRef, C2: CellRef) -> bool:
    _check_face_pair(window, C1, C2)
    return bool(set(window.record(C1).edges) & set(window.record(C2).edges))


def vertex_adjacent(window: TilingWindow, C1: CellRef, C2: CellRef) -> bool:
    _check_face_pair(window, C1, C2)
    return bool(set(window.record(C1).vertices) & set(window.record(C2).vertices))


def face_neighbors(window: TilingWindow, C: CellRef, mode: Connectivity) -> frozenset:
    """Faces sharing an edge (EDGE) or a vertex (VERTEX) with ``C``."""
    rec = window.record(C)
    out = set()
    if mode is Connectivity.EDGE:
        for e in rec.edges:
            out.update(window.record(e).sides)
    else:
        for v in rec.vertices:
            out.update(window.record(v).incident_faces)
            # an incomplete vertex may not list every face around it
            for e in window.record(v).incident_edges:
                out.update(window.record(e).sides)
    out.discard(C)
    return frozenset(out)


def faces_connected(window: TilingWindow, faces: Iterable[CellRef], mode: Connectivity) -> bool:
    faces = set(faces)
    for C in faces:
        if C.kind is not Kind.FACE:
            raise PreconditionError(f"{C} is not a face")
        if not window.is_complete(C):
            raise PreconditionError(f"{C} is not complete")
    if not faces:
        return True
    start = min(faces)
    seen = {start}
    queue = deque([start])
    while queue:
        C = queue.popleft()
        for D in face_neighbors(window, C, mode):
            if D in faces and D not in seen:
                seen.add(D)
                queue.append(D)
    return len(seen) == len(faces)


# ------------------------------------------------------- edge/vertex Jordan


def jordan_kind_problem(space: DigitalSpace, J: Iterable[CellRef], kind: CurveKind) -> Optional[str]:
    """Why ``J`` is not an edge-/vertex-Jordan curve, or None if it is."""
    J = CellSet(J)
    verdict = is_jordan_curve(space, J)
    if not verdict:
        return f"not a digital Jordan curve: {verdict.describe(space.window.name)}"
    window = space.window
    faces = sorted(c for c in J if c.kind is Kind.FACE)
    if not faces:
        return "not applicable: curve has no faces"
    if kind is CurveKind.EDGE_JORDAN:
        if not is_open_curve(space, J):
            return "curve is not open"
        mode = Connectivity.EDGE
    else:
        if any(c.kind is Kind.EDGE for c in J):
            return "curve contains an edge"
        mode = Connectivity.VERTEX
    for C in faces:
        n = len(face_neighbors(window, C, mode) & J)
        if n != 2:
            return f"face {window.name(C)} has {n} {mode.value.replace('Connected', '').lower()}-neighbours in the curve"
    return None


def is_edge_jordan(space: DigitalSpace, J: Iterable[CellRef]) -> bool:
    return jordan_kind_problem(space, J, CurveKind.EDGE_JORDAN) is None


def is_vertex_jordan(space: DigitalSpace, J: Iterable[CellRef]) -> bool:
    return jordan_kind_problem(space, J, CurveKind.VERTEX_JORDAN) is None


@dataclass(frozen=True)
class RosenfeldReport(_Report):
    curve_kind: CurveKind
    face_count: int
    delta: int
    hypothesis_met: bool
    well_behaved: bool
    interior_has_face: bool
    exterior_has_face: bool
    interior_faces_connected: bool
    exterior_faces_connected: bool
    connectivity_mode: Connectivity
    faces_alternate: bool  # informational: half the cells are faces

    @property
    def conclusions_hold(self) -> bool:
        return (self.well_behaved and self.interior_has_face and self.exterior_has_face
                and self.interior_faces_connected and self.exterior_faces_connected)

    @property
    def consistent(self) -> bool:
        return not self.hypothesis_met or self.conclusions_hold


def rosenfeld_report(space: DigitalSpace, J: Iterable[CellRef], kind: CurveKind,
                     split: Optional[ComplementSplit] = None, margin: int = DEFAULT_MARGIN) -> RosenfeldReport:
    """Evaluate the face-count hypothesis and every conclusion for ``J``.

    Exterior face connectivity only sees the complete faces of the window,
    and ``delta`` is the window maximum, a lower bound for the whole tiling.
    """
    J = CellSet(J)
    problem = jordan_kind_problem(space, J, kind)
    if problem is not None:
        raise PreconditionError(f"kind mismatch for {kind.value}: {problem}")
    if split is None:
        split = jordan_complement(space, J, margin)
    check_margin(space, J | split.interior, margin)
    window = space.window
    mode = Connectivity.VERTEX if kind is CurveKind.EDGE_JORDAN else Connectivity.EDGE
    face_count = sum(1 for c in J if c.kind is Kind.FACE)
    d = delta(window)
    inner = [c for c in split.interior if c.kind is Kind.FACE]
    outer = [c for c in split.exterior if c.kind is Kind.FACE]
    return RosenfeldReport(
        curve_kind=kind,
        face_count=face_count,
        delta=d,
        hypothesis_met=face_count >= d + 1,
        well_behaved=is_well_behaved(space, J),
        interior_has_face=bool(inner),
        exterior_has_face=bool(outer),
        interior_faces_connected=faces_connected(window, inner, mode),
        exterior_faces_connected=faces_connected(window, outer, mode),
        connectivity_mode=mode,
        faces_alternate=2 * face_count == len(J),
    )

"""Digital Jordan curves: validation, local cycles, interior and exterior."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .cells import CellRef, Kind
from .space import CellSet, DigitalSpace, adjacency_set, components, is_digital_arc
from .tiling import IncompleteCellError, TilingError, star_complete

DEFAULT_MARGIN = 2


class Reason(enum.Enum):
    OK = "Ok"
    TOO_SHORT = "TooShort"
    NOT_CYCLE = "NotCycle"
    CHORD = "Chord"
    ARC_DELETION_FAILED = "ArcDeletionFailed"
    INCOMPLETE_MARGIN = "IncompleteMargin"


@dataclass(frozen=True)
class CurveVerdict:
    reason: Reason
    cells: tuple[CellRef, ...] = ()  # the chord pair, or the offending cell

    @property
    def is_jordan(self) -> bool:
        return self.reason is Reason.OK

    def __bool__(self) -> bool:
        return self.is_jordan

    def describe(self, name=str) -> str:
        if not self.cells:
            return self.reason.value
        return f"{self.reason.value}({', '.join(name(c) for c in self.cells)})"


class StructureError(TilingError):
    """The window violates a structural property every tiling has."""


class MarginError(IncompleteCellError):
    def __init__(self, cell: CellRef, depth: int):
        super().__init__(cell, f"star of depth {depth} not complete around")
        self.depth = depth


class NotJordanError(TilingError, ValueError):
    def __init__(self, verdict: CurveVerdict):
        super().__init__(f"not a digital Jordan curve: {verdict.describe()}")
        self.verdict = verdict


class ComplementError(TilingError):
    """The complement did not split into one bounded and one rim-touching part."""

    def __init__(self, message: str, parts: list[CellSet]):
        super().__init__(message)
        self.parts = parts


@dataclass(frozen=True)
class ComplementSplit:
    interior: CellSet
    exterior: CellSet
    evidence: CellRef  # exterior cell adjacent to the rim


def _precheck(space: DigitalSpace, J: Iterable[CellRef]) -> tuple[list[CellRef], Optional[CurveVerdict]]:
    cells = list(J)
    for x in sorted(set(cells)):
        if not space.window.is_complete(x):
            return cells, CurveVerdict(Reason.INCOMPLETE_MARGIN, (x,))
    if len(set(cells)) < 4:
        return cells, CurveVerdict(Reason.TOO_SHORT)
    return cells, None


def _connected(space: DigitalSpace, s: CellSet) -> bool:
    start = min(s)
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in space.neighbors(x) & s:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == len(s)


def is_jordan_curve(space: DigitalSpace, J: Iterable[CellRef]) -> CurveVerdict:
    """Induced-cycle test: ``J`` has at least four cells and induces a chordless cycle.

    ``J`` may be a set or a sequence. For a sequence that walks a cycle, a
    chord is any adjacency between non-consecutive members; for a set, the
    least adjacency between two cells of induced degree above two.
    """
    cells, early = _precheck(space, J)
    if early is not None:
        return early
    s = CellSet(cells)
    if len(s) != len(cells):
        return CurveVerdict(Reason.NOT_CYCLE, (min(c for c in s if cells.count(c) > 1),))
    deg = {x: len(space.neighbors(x) & s) for x in s}
    low = sorted(x for x in s if deg[x] < 2)
    if low:
        return CurveVerdict(Reason.NOT_CYCLE, (low[0],))
    if not _connected(space, s):
        return CurveVerdict(Reason.NOT_CYCLE)
    high = {x for x in s if deg[x] > 2}
    if not high:
        return CurveVerdict(Reason.OK)
    n = len(cells)
    ordered = not isinstance(J, (set, frozenset)) and all(
        space.adjacent(cells[i], cells[(i + 1) % n]) for i in range(n)
    )
    if ordered:
        chords = [
            tuple(sorted((cells[i], cells[j])))
            for i in range(n)
            for j in range(i + 2, n)
            if not (i == 0 and j == n - 1) and space.adjacent(cells[i], cells[j])
        ]
    else:
        chords = [(x, y) for x in high for y in space.neighbors(x) & high if x < y]
    if chords:
        return CurveVerdict(Reason.CHORD, min(chords))
    return CurveVerdict(Reason.NOT_CYCLE, (min(high),))


def arc_order(space: DigitalSpace, s: Iterable[CellRef]) -> Optional[tuple[CellRef, ...]]:
    """An ordering of ``s`` that is a digital arc, or None if there is none."""
    s = CellSet(s)
    if not s:
        return None
    if len(s) == 1:
        return (next(iter(s)),)
    ends = sorted(x for x in s if len(space.neighbors(x) & s) == 1)
    if len(ends) != 2:
        return None
    seq = [ends[0]]
    prev = None
    while len(seq) < len(s):
        nxt = sorted(space.neighbors(seq[-1]) & s - {prev} - set(seq[-1:]))
        if len(nxt) != 1:
            return None
        prev = seq[-1]
        seq.append(nxt[0])
    if not is_digital_arc(space, seq):
        return None
    return tuple(seq)


def is_jordan_curve_by_deletion(space: DigitalSpace, J: Iterable[CellRef]) -> CurveVerdict:
    """Deletion test: removing any one cell of ``J`` leaves a digital arc."""
    cells, early = _precheck(space, J)
    if early is not None:
        return early
    s = CellSet(cells)
    for j in sorted(s):
        if arc_order(space, s - {j}) is None:
            return CurveVerdict(Reason.ARC_DELETION_FAILED, (j,))
    return CurveVerdict(Reason.OK)


def curve_order(space: DigitalSpace, J: Iterable[CellRef]) -> tuple[CellRef, ...]:
    """Canonical cyclic order: start at the least cell, step to its lesser neighbour."""
    s = CellSet(J)
    verdict = is_jordan_curve(space, s)
    if not verdict:
        raise NotJordanError(verdict)
    start = min(s)
    seq = [start, min(space.neighbors(start) & s)]
    while len(seq) < len(s):
        (nxt,) = space.neighbors(seq[-1]) & s - {seq[-2]}
        seq.append(nxt)
    return tuple(seq)


def same_cycle(a: Sequence, b: Sequence) -> bool:
    """True iff ``b`` is a rotation of ``a`` or of its reversal."""
    if len(a) != len(b) or set(a) != set(b):
        return False
    if not a:
        return True
    k = list(a).index(b[0])
    fwd = list(a[k:]) + list(a[:k])
    rev = [fwd[0]] + fwd[1:][::-1]
    return list(b) in (fwd, rev)


def local_adjacency_cycle(space: DigitalSpace, x: CellRef) -> tuple[CellRef, ...]:
    """Hamiltonian cycle of the subgraph induced on the adjacency set of ``x``.

    Read from the stored cyclic orders; raises StructureError unless the
    induced subgraph is exactly that cycle.
    """
    window = space.window
    space.require_complete((x,))
    rec = window.record(x)
    if x.kind is Kind.VERTEX:
        cyc = tuple(c for pair in zip(rec.incident_edges, rec.incident_faces) for c in pair)
    elif x.kind is Kind.EDGE:
        if len(rec.endpoints) != 2 or len(rec.sides) != 2:
            raise StructureError(f"{x} needs two endpoints and two sides")
        cyc = (rec.endpoints[0], rec.sides[0], rec.endpoints[1], rec.sides[1])
    else:
        cyc = rec.boundary
    n = len(cyc)
    if n < 4 or len(set(cyc)) != n or set(cyc) != adjacency_set(space, x):
        raise StructureError(f"stored order around {x} is not its adjacency set")
    for i in range(n):
        for j in range(i + 1, n):
            consecutive = j == i + 1 or (i == 0 and j == n - 1)
            if space.adjacent(cyc[i], cyc[j]) != consecutive:
                raise StructureError(f"adjacency set of {x} does not induce a cycle at {cyc[i]}, {cyc[j]}")
    return cyc


def check_margin(space: DigitalSpace, J: Iterable[CellRef], margin: int = DEFAULT_MARGIN) -> None:
    for j in sorted(CellSet(J)):
        if not star_complete(space.window, j, margin):
            raise MarginError(j, margin)


def jordan_complement(space: DigitalSpace, J: Iterable[CellRef], margin: int = DEFAULT_MARGIN) -> ComplementSplit:
    """Split the complete cells outside ``J`` into interior and exterior.

    The exterior is the one component that reaches a rim-adjacent cell; the
    rest must be a single component, the interior.
    """
    J = CellSet(J)
    verdict = is_jordan_curve(space, J)
    if not verdict:
        raise NotJordanError(verdict)
    check_margin(space, J, margin)
    window = space.window
    parts = components(space, window.complete_cells - J)
    rim_adj = window.rim_adjacent
    touching = [p for p in parts if p & rim_adj]
    bounded = [p for p in parts if not p & rim_adj]
    if len(touching) != 1:
        raise ComplementError(f"{len(touching)} components reach the rim; window too small", parts)
    if len(bounded) != 1:
        raise ComplementError(f"complement has {len(parts)} components, expected 2", parts)
    return ComplementSplit(bounded[0], touching[0], min(touching[0] & rim_adj))


def interior_adjacency_check(space: DigitalSpace, J: Iterable[CellRef], split: ComplementSplit) -> bool:
    """Every cell of ``J`` is adjacent to some interior cell."""
    return all(space.neighbors(x) & split.interior for x in J)

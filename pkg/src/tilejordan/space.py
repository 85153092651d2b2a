"""The Alexandrov topology of the digital version of a tiling window.

Cell sets are plain ``frozenset`` objects of :class:`CellRef`.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Mapping, Optional, Sequence

import networkx as nx

from .cells import CellRef, Kind
from .tiling import IncompleteCellError, TilingWindow

CellSet = frozenset


class DigitalSpace:
    """A tiling window together with its cached adjacency table.

    The table is built only from closures (face boundaries and edge
    endpoints), symmetrised. Smallest neighbourhoods are read from the other
    half of the records (vertex stars and edge sides), so comparing the two
    is a real check of the window, see :func:`adjacency_by_definition`.
    """

    def __init__(self, window: TilingWindow, adjacency: Optional[Mapping[CellRef, Iterable[CellRef]]] = None):
        self.window = window
        if adjacency is None:
            adjacency = self._build(window)
        self._adj: dict[CellRef, frozenset] = {x: frozenset(ys) for x, ys in adjacency.items()}
        for x in window.cells():
            self._adj.setdefault(x, frozenset())

    @staticmethod
    def _build(window: TilingWindow) -> dict[CellRef, set]:
        adj: dict[CellRef, set] = {x: set() for x in window.cells()}

        def link(a, b):
            adj[a].add(b)
            adj[b].add(a)

        for f in window.cells(Kind.FACE):
            for c in window.record(f).boundary:
                link(f, c)
        for e in window.cells(Kind.EDGE):
            for v in window.record(e).endpoints:
                link(e, v)
        return adj

    def neighbors(self, x: CellRef) -> frozenset:
        """Cached adjacency of ``x`` with no completeness requirement."""
        return self._adj[x]

    def adjacent(self, x: CellRef, y: CellRef) -> bool:
        return y in self._adj[x]

    def require_complete(self, cells: Iterable[CellRef]) -> None:
        for x in cells:
            if not self.window.is_complete(x):
                raise IncompleteCellError(x)

    def with_corrupted_adjacency(self, x: Optional[CellRef] = None) -> "DigitalSpace":
        """Copy whose cache drops one neighbour of ``x``; for fault-injection runs."""
        if x is None:
            x = min(self.window.complete_cells)
        y = min(self._adj[x])
        table = dict(self._adj)
        table[x] = self._adj[x] - {y}
        return DigitalSpace(self.window, table)


def smallest_neighborhood(space: DigitalSpace, x: CellRef) -> CellSet:
    """Smallest open set containing ``x``: the cell plus the higher-dimensional cells around it."""
    space.require_complete((x,))
    rec = space.window.record(x)
    if x.kind is Kind.VERTEX:
        return CellSet((x, *rec.incident_edges, *rec.incident_faces))
    if x.kind is Kind.EDGE:
        return CellSet((x, *rec.sides))
    return CellSet((x,))


def closure_of(space: DigitalSpace, x: CellRef) -> CellSet:
    space.require_complete((x,))
    rec = space.window.record(x)
    if x.kind is Kind.VERTEX:
        return CellSet((x,))
    if x.kind is Kind.EDGE:
        return CellSet((x, *rec.endpoints))
    return CellSet((x, *rec.boundary))


def adjacency_set(space: DigitalSpace, x: CellRef) -> CellSet:
    space.require_complete((x,))
    return space.neighbors(x)


def adjacency_by_definition(space: DigitalSpace, x: CellRef) -> CellSet:
    """``(N(x) | cl(x)) - {x}``, recomputed from the records."""
    return (smallest_neighborhood(space, x) | closure_of(space, x)) - {x}


def connectedness_graph(space: DigitalSpace) -> nx.Graph:
    """Graph on the complete cells; edges join adjacent complete cells."""
    complete = space.window.complete_cells
    g = nx.Graph()
    g.add_nodes_from(sorted(complete))
    for x in sorted(complete):
        for y in space.neighbors(x):
            if y in complete and x < y:
                g.add_edge(x, y)
    return g


def is_digital_path(space: DigitalSpace, seq: Sequence[CellRef]) -> bool:
    if not seq:
        raise ValueError("a digital path needs at least one cell")
    space.require_complete(seq)
    return all(space.adjacent(a, b) for a, b in zip(seq, seq[1:]))


def is_digital_arc(space: DigitalSpace, seq: Sequence[CellRef]) -> bool:
    """Induced simple path test; this is how arcs are decided everywhere here."""
    if not is_digital_path(space, seq):
        return False
    if len(set(seq)) != len(seq):
        return False
    n = len(seq)
    for i in range(n):
        for j in range(i + 2, n):
            if space.adjacent(seq[i], seq[j]):
                return False
    return True


def components(space: DigitalSpace, s: Iterable[CellRef]) -> list[CellSet]:
    """Adjacency components of ``s``, ordered by least member."""
    s = set(s)
    space.require_complete(sorted(s))
    out = []
    for start in sorted(s):
        if start not in s:
            continue
        s.discard(start)
        comp = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in space.neighbors(x):
                if y in s:
                    s.discard(y)
                    comp.append(y)
                    queue.append(y)
        out.append(CellSet(comp))
    return out


def closure_set(space: DigitalSpace, s: Iterable[CellRef]) -> CellSet:
    out: set = set()
    for x in s:
        out |= closure_of(space, x)
    return CellSet(out)


def interior_set(space: DigitalSpace, s: Iterable[CellRef]) -> CellSet:
    s = CellSet(s)
    return CellSet(x for x in s if smallest_neighborhood(space, x) <= s)


def boundary_set(space: DigitalSpace, s: Iterable[CellRef]) -> CellSet:
    s = CellSet(s)
    return closure_set(space, s) - interior_set(space, s)

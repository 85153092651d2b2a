"""Random digital Jordan curves.

The walk grows an induced path in the connectedness graph. A candidate step
that touches earlier path cells would create chords; instead the loop is
shortcut at the latest touched cell, which leaves a chordless cycle. Every
emitted curve still goes through :func:`is_jordan_curve`.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Iterator, Optional

from .cells import CellRef, Kind
from .curves import Connectivity, face_neighbors, is_edge_jordan, is_vertex_jordan
from .jordan import DEFAULT_MARGIN, curve_order, is_jordan_curve
from .space import CellSet, DigitalSpace
from .tiling import TilingError, star_complete


class SampleKind(enum.Enum):
    ANY = "any"
    OPEN = "open"
    CLOSED = "closed"
    EDGE = "edge"
    VERTEX = "vertex"


_KINDS = {
    SampleKind.ANY: frozenset(Kind),
    SampleKind.OPEN: frozenset((Kind.FACE, Kind.EDGE)),
    SampleKind.EDGE: frozenset((Kind.FACE, Kind.EDGE)),
    SampleKind.CLOSED: frozenset((Kind.VERTEX, Kind.EDGE)),
    SampleKind.VERTEX: frozenset((Kind.FACE, Kind.VERTEX)),
}


class SamplerExhausted(TilingError):
    pass


@dataclass(frozen=True)
class SamplerConfig:
    seed: int = 0
    target_length: tuple[int, int] = (4, 64)
    kind: SampleKind = SampleKind.ANY
    max_attempts: int = 10_000
    margin: int = DEFAULT_MARGIN

    def __post_init__(self):
        lo, hi = self.target_length
        if lo < 4 or hi < lo:
            raise ValueError(f"bad target length range {self.target_length}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def _face_mode(kind: SampleKind) -> Optional[Connectivity]:
    if kind is SampleKind.EDGE:
        return Connectivity.EDGE
    if kind is SampleKind.VERTEX:
        return Connectivity.VERTEX
    return None


class CurveSampler:
    def __init__(self, space: DigitalSpace, config: SamplerConfig):
        self.space = space
        self.config = config
        self.rng = random.Random(config.seed)
        kinds = _KINDS[config.kind]
        window = space.window
        self.allowed = frozenset(
            x for x in sorted(window.complete_cells)
            if x.kind in kinds and star_complete(window, x, config.margin)
        )
        self._order = sorted(self.allowed)
        self.mode = _face_mode(config.kind)
        self.attempts = 0
        self._face_nbrs: dict[CellRef, frozenset] = {}

    def _dual_neighbors(self, C: CellRef) -> frozenset:
        if C not in self._face_nbrs:
            self._face_nbrs[C] = face_neighbors(self.space.window, C, self.mode)
        return self._face_nbrs[C]

    def _grow(self, nodes: list, neighbors, lo: int, hi: int) -> Optional[list]:
        """Grow an induced path over ``nodes`` until it can close into an induced cycle."""
        rng = self.rng
        target = rng.randint(lo, hi)
        start = rng.choice(nodes)
        path = [start]
        pos = {start: 0}
        allowed = set(nodes)
        while len(path) <= hi:
            cur = path[-1]
            closings, steps = [], []
            for y in sorted(neighbors(cur) & allowed):
                if y in pos:
                    continue
                hits = [pos[z] for z in neighbors(y) if z in pos and z != cur]
                if not hits:
                    steps.append(y)
                    continue
                k = max(hits)
                if lo <= len(path) - k + 1 <= hi:
                    closings.append((y, k))
            long_enough = [c for c in closings if len(path) - c[1] + 1 >= target]
            if long_enough or (closings and not steps):
                y, k = rng.choice(long_enough or closings)
                return path[k:] + [y]
            if not steps:
                return None
            y = rng.choice(steps)
            pos[y] = len(path)
            path.append(y)
        return None

    def _attempt(self) -> Optional[tuple[CellRef, ...]]:
        lo, hi = self.config.target_length
        if self.mode is None:
            loop = self._grow(self._order, self.space.neighbors, lo, hi)
            return None if loop is None else tuple(loop)
        # sample a chordless cycle of faces, then join consecutive faces by a shared cell
        window = self.space.window
        faces = [c for c in self._order if c.kind is Kind.FACE]
        if not faces:
            return None
        mode = self.mode
        ring = self._grow(faces, self._dual_neighbors, max(3, (lo + 1) // 2), hi // 2)
        if ring is None:
            return None
        out: list[CellRef] = []
        used: set[CellRef] = set()
        touched: dict[CellRef, int] = {}
        for C in ring:
            for x in window.record(C).boundary:
                touched[x] = touched.get(x, 0) + 1
        for g, h in zip(ring, ring[1:] + ring[:1]):
            gr, hr = window.record(g), window.record(h)
            if mode is Connectivity.EDGE:
                shared = set(gr.edges) & set(hr.edges)
            else:
                shared = set(gr.vertices) & set(hr.vertices)
            # a link on a third ring face would be a chord
            shared = sorted(x for x in shared & self.allowed - used if touched[x] == 2)
            if not shared:
                return None
            link = self.rng.choice(shared)
            used.add(link)
            out.extend((g, link))
        return tuple(out)

    def _accept(self, loop: tuple[CellRef, ...]) -> bool:
        space, kind = self.space, self.config.kind
        if not is_jordan_curve(space, loop):
            return False
        if kind is SampleKind.CLOSED:
            return not any(c.kind is Kind.FACE for c in loop)
        if kind is SampleKind.OPEN:
            return not any(c.kind is Kind.VERTEX for c in loop)
        if kind is SampleKind.EDGE:
            return is_edge_jordan(space, loop)
        if kind is SampleKind.VERTEX:
            return is_vertex_jordan(space, loop)
        return True

    def __iter__(self) -> Iterator[tuple[CellRef, ...]]:
        seen: set[CellSet] = set()
        while self.attempts < self.config.max_attempts and self._order:
            self.attempts += 1
            loop = self._attempt()
            if loop is None or CellSet(loop) in seen or not self._accept(loop):
                continue
            seen.add(CellSet(loop))
            yield curve_order(self.space, loop)


def sample_curves(space: DigitalSpace, config: SamplerConfig, count: int) -> list[tuple[CellRef, ...]]:
    """Up to ``count`` distinct verified curves; fewer if attempts run out."""
    out = []
    if count <= 0:
        return out
    for curve in CurveSampler(space, config):
        out.append(curve)
        if len(out) == count:
            break
    return out

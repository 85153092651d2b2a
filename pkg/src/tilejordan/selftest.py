"""Property suites over built-in or loaded windows.

Each suite checks one invariant on every window it is given and collects
counterexamples rather than stopping at the first one.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .cells import CellRef, Kind
from .curves import (
    CurveKind,
    classify_closed,
    classify_open,
    edge_adjacent,
    is_edge_jordan,
    is_open_curve,
    is_vertex_jordan,
    is_well_behaved,
    open_interior_vertex_check,
    rosenfeld_report,
    vertex_adjacent,
    well_behaved_interior_face,
)
from .jordan import (
    DEFAULT_MARGIN,
    ComplementError,
    ComplementSplit,
    MarginError,
    StructureError,
    interior_adjacency_check,
    is_jordan_curve,
    is_jordan_curve_by_deletion,
    jordan_complement,
    local_adjacency_cycle,
)
from .sampler import SampleKind, SamplerConfig, sample_curves
from .space import (
    CellSet,
    DigitalSpace,
    adjacency_by_definition,
    adjacency_set,
    closure_set,
    components,
    interior_set,
    smallest_neighborhood,
)
from .tiling import TilingWindow, ball, star_complete, validate_tiling
from .tilingio import dump_tiling, load_tiling, tiling_document

DEFAULT_WINDOWS = ("builtin:square:11x11", "builtin:hex:4", "builtin:tri:8")


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[dict] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures,
            "warnings": self.warnings,
        }


@dataclass
class Subject:
    """One window with its space and the curves sampled on it."""

    label: str
    window: TilingWindow
    space: DigitalSpace
    curves: dict[SampleKind, list[tuple[CellRef, ...]]] = field(default_factory=dict)
    splits: dict[CellSet, ComplementSplit] = field(default_factory=dict)

    def all_curves(self) -> list[tuple[CellRef, ...]]:
        seen, out = set(), []
        for kind in SampleKind:
            for c in self.curves.get(kind, ()):
                if CellSet(c) not in seen:
                    seen.add(CellSet(c))
                    out.append(c)
        return out


def _names(window: TilingWindow, cells: Iterable[CellRef]) -> list[str]:
    return [window.name(c) for c in cells]


def _fail(result: SuiteResult, subject: Subject, cells: Iterable[CellRef], **detail) -> None:
    result.failures.append({"window": subject.label, "cells": _names(subject.window, cells), **detail})


def reachability_components(space: DigitalSpace, s: Iterable[CellRef]) -> list[CellSet]:
    """Components by transitive closure of the adjacency matrix (independent of BFS)."""
    cells = sorted(CellSet(s))
    n = len(cells)
    if n == 0:
        return []
    index = {c: i for i, c in enumerate(cells)}
    reach = np.eye(n, dtype=bool)
    for c in cells:
        for d in space.neighbors(c):
            if d in index:
                reach[index[c], index[d]] = True
    while True:
        nxt = (reach.astype(np.int32) @ reach.astype(np.int32)) > 0
        if np.array_equal(nxt, reach):
            break
        reach = nxt
    out, done = [], set()
    for i in range(n):
        if i in done:
            continue
        members = np.flatnonzero(reach[i])
        done.update(members.tolist())
        out.append(CellSet(cells[j] for j in members))
    return out


# -------------------------------------------------------------- tiling-core


def suite_tiling_axioms(subjects, rng, result):
    for sub in subjects:
        result.checked += 1
        report = validate_tiling(sub.window)
        for v in report.violations:
            _fail(result, sub, v.cells, axiom=v.axiom, message=v.message)


def suite_round_trip(subjects, rng, result):
    for sub in subjects:
        result.checked += 1
        again = load_tiling(dump_tiling(sub.window))
        if tiling_document(again) != tiling_document(sub.window):
            _fail(result, sub, (), message="reloaded window differs")


# ------------------------------------------------------------ digital-space


def suite_adjacency_definition(subjects, rng, result):
    for sub in subjects:
        for x in sorted(sub.window.complete_cells):
            result.checked += 1
            cached, direct = adjacency_set(sub.space, x), adjacency_by_definition(sub.space, x)
            if cached != direct:
                _fail(result, sub, [x], cache_only=_names(sub.window, sorted(cached - direct)),
                      definition_only=_names(sub.window, sorted(direct - cached)))


def suite_adjacency_symmetry(subjects, rng, result):
    for sub in subjects:
        complete = sub.window.complete_cells
        for x in sorted(complete):
            for y in sorted(sub.space.neighbors(x) & complete):
                result.checked += 1
                if x not in sub.space.neighbors(y):
                    _fail(result, sub, [x, y], message="adjacency is not symmetric")


def suite_kind_bipartite(subjects, rng, result):
    for sub in subjects:
        w = sub.window
        for x in sorted(w.complete_cells):
            for y in sorted(sub.space.neighbors(x)):
                result.checked += 1
                if x.kind == y.kind:
                    _fail(result, sub, [x, y], message="same-kind adjacency")
                elif x.kind is Kind.VERTEX and y.kind is Kind.FACE and x not in w.record(y).vertices:
                    _fail(result, sub, [x, y], message="vertex adjacent to a face it does not bound")
            if x.kind is Kind.FACE:
                for v in w.record(x).vertices:
                    if not sub.space.adjacent(x, v):
                        _fail(result, sub, [x, v], message="face not adjacent to its vertex")


def _random_subset(rng: random.Random, pool: Sequence[CellRef], hi: int) -> CellSet:
    k = rng.randint(1, min(hi, len(pool)))
    return CellSet(rng.sample(pool, k))


def suite_operator_formulations(subjects, rng, result, trials: int = 50):
    for sub in subjects:
        w, sp = sub.window, sub.space
        deep = [x for x in sorted(w.complete_cells) if star_complete(w, x, 2)]
        if not deep:
            result.warnings.append(f"{sub.label}: no cell with a depth-2 complete star")
            continue
        for _ in range(trials):
            s = _random_subset(rng, deep, 30)
            result.checked += 1
            region = ball(w, s, 1)
            via_closures = closure_set(sp, s)
            via_nbhds = CellSet(x for x in region if smallest_neighborhood(sp, x) & s)
            if via_closures != via_nbhds:
                _fail(result, sub, sorted(s), operator="closure",
                      difference=_names(w, sorted(via_closures ^ via_nbhds)))
            inner = interior_set(sp, s)
            dual = s - closure_set(sp, region - s)
            if inner != dual:
                _fail(result, sub, sorted(s), operator="interior",
                      difference=_names(w, sorted(inner ^ dual)))
            if not s <= via_closures or not inner <= s:
                _fail(result, sub, sorted(s), operator="closure", message="closure/interior not monotone")


def suite_components_oracle(subjects, rng, result, trials: int = 200, cap: int = 200):
    for sub in subjects:
        pool = sorted(sub.window.complete_cells)
        for _ in range(trials):
            s = _random_subset(rng, pool, cap)
            result.checked += 1
            fast = components(sub.space, s)
            slow = reachability_components(sub.space, s)
            if sorted(fast, key=min) != sorted(slow, key=min):
                _fail(result, sub, sorted(s), bfs=len(fast), oracle=len(slow))


# ---------------------------------------------------------- jordan-analysis


def _grow_connected(rng: random.Random, space: DigitalSpace, pool: CellSet, size: int) -> CellSet:
    start = rng.choice(sorted(pool))
    s = {start}
    while len(s) < size:
        frontier = sorted({y for x in s for y in space.neighbors(x) & pool} - s)
        if not frontier:
            break
        s.add(rng.choice(frontier))
    return CellSet(s)


def suite_verdict_agreement(subjects, rng, result, trials: int = 300):
    for sub in subjects:
        sp = sub.space
        pool = CellSet(sub.window.complete_cells)
        candidates = []
        for _ in range(trials):
            candidates.append(_random_subset(rng, sorted(pool), 12))
            candidates.append(_grow_connected(rng, sp, pool, rng.randint(1, 12)))
        for curve in sub.all_curves():
            s = CellSet(curve)
            candidates.append(s)
            # perturb: drop one cell, or add a neighbour
            candidates.append(s - {rng.choice(curve)})
            extra = sorted({y for x in s for y in sp.neighbors(x) & pool} - s)
            if extra:
                candidates.append(s | {rng.choice(extra)})
        for s in candidates:
            result.checked += 1
            a, b = is_jordan_curve(sp, s), is_jordan_curve_by_deletion(sp, s)
            if a.is_jordan != b.is_jordan:
                _fail(result, sub, sorted(s), induced_cycle=a.describe(), deletion=b.describe())


def suite_local_hamiltonicity(subjects, rng, result):
    for sub in subjects:
        for x in sorted(sub.window.complete_cells):
            if not star_complete(sub.window, x, 1):
                continue
            result.checked += 1
            try:
                cyc = local_adjacency_cycle(sub.space, x)
            except StructureError as exc:
                _fail(result, sub, [x], message=str(exc))
                continue
            if len(cyc) < 4:
                _fail(result, sub, [x], message=f"cycle of length {len(cyc)}")


def _split(sub: Subject, curve, margin: int) -> Optional[ComplementSplit]:
    key = CellSet(curve)
    if key not in sub.splits:
        sub.splits[key] = jordan_complement(sub.space, key, margin)
    return sub.splits[key]


def suite_sampler_soundness(subjects, rng, result):
    for sub in subjects:
        for kind, curves in sub.curves.items():
            for c in curves:
                result.checked += 1
                a, b = is_jordan_curve(sub.space, c), is_jordan_curve_by_deletion(sub.space, c)
                if not (a and b):
                    _fail(result, sub, c, kind=kind.value, induced_cycle=a.describe(), deletion=b.describe())
                ok = {
                    SampleKind.CLOSED: lambda: not any(x.kind is Kind.FACE for x in c),
                    SampleKind.OPEN: lambda: not any(x.kind is Kind.VERTEX for x in c),
                    SampleKind.EDGE: lambda: is_edge_jordan(sub.space, c),
                    SampleKind.VERTEX: lambda: is_vertex_jordan(sub.space, c),
                }.get(kind, lambda: True)()
                if not ok:
                    _fail(result, sub, c, kind=kind.value, message="curve escaped the kind filter")


def suite_two_components(subjects, rng, result, margin: int = DEFAULT_MARGIN):
    for sub in subjects:
        rim_adj = sub.window.rim_adjacent
        for c in sub.all_curves():
            result.checked += 1
            try:
                sp = _split(sub, c, margin)
            except ComplementError as exc:
                _fail(result, sub, c, message=str(exc), parts=[len(p) for p in exc.parts])
                continue
            complete = sub.window.complete_cells
            if sp.interior & rim_adj or not sp.exterior & rim_adj:
                _fail(result, sub, c, message="rim contact on the wrong side")
            if sp.interior | sp.exterior | CellSet(c) != complete or sp.interior & sp.exterior:
                _fail(result, sub, c, message="interior, exterior and curve do not partition the window")


def suite_interior_adjacency(subjects, rng, result, margin: int = DEFAULT_MARGIN):
    for sub in subjects:
        for c in sub.all_curves():
            result.checked += 1
            sp = _split(sub, c, margin)
            if not interior_adjacency_check(sub.space, c, sp):
                lonely = [x for x in c if not sub.space.neighbors(x) & sp.interior]
                _fail(result, sub, c, without_interior_neighbour=_names(sub.window, lonely))


# ------------------------------------------------------------- curve-classes


def suite_closed_coherence(subjects, rng, result, margin: int = DEFAULT_MARGIN):
    for sub in subjects:
        for c in sub.all_curves():
            result.checked += 1
            report = classify_closed(sub.space, c, _split(sub, c, margin), margin)
            if not report.coherent:
                _fail(result, sub, c, report=report.as_dict())


def suite_open_coherence(subjects, rng, result, margin: int = DEFAULT_MARGIN):
    for sub in subjects:
        for c in sub.all_curves():
            result.checked += 1
            report = classify_open(sub.space, c, _split(sub, c, margin), margin)
            if not report.coherent:
                _fail(result, sub, c, report=report.as_dict())


def suite_open_interior_vertex(subjects, rng, result, margin: int = DEFAULT_MARGIN):
    for sub in subjects:
        for c in sub.all_curves():
            if not is_open_curve(sub.space, c):
                continue
            result.checked += 1
            if not open_interior_vertex_check(sub.space, c, _split(sub, c, margin)):
                _fail(result, sub, c, message="open curve with no interior vertex")


def suite_well_behaved_interior_face(subjects, rng, result, margin: int = DEFAULT_MARGIN):
    for sub in subjects:
        for c in sub.all_curves():
            sp = _split(sub, c, margin)
            if not is_well_behaved(sub.space, c) or not any(x.kind is Kind.VERTEX for x in sp.interior):
                continue
            result.checked += 1
            if not well_behaved_interior_face(sub.space, c, sp):
                _fail(result, sub, c, message="well-behaved curve with an interior vertex but no interior face")


def _rosenfeld(sub: Subject, c, kind: CurveKind, margin: int):
    sp = _split(sub, c, margin)
    try:
        return rosenfeld_report(sub.space, c, kind, sp, margin)
    except MarginError:  # interior too close to the rim for the report's margin
        return None


def suite_edge_jordan_well_behaved(subjects, rng, result, margin: int = DEFAULT_MARGIN):
    for sub in subjects:
        for c in sub.all_curves():
            if not is_edge_jordan(sub.space, c):
                continue
            report = _rosenfeld(sub, c, CurveKind.EDGE_JORDAN, margin)
            if report is None or not report.hypothesis_met:
                continue
            result.checked += 1
            if not report.well_behaved:
                _fail(result, sub, c, report=report.as_dict())


def _suite_rosenfeld(kind: CurveKind, test: Callable):
    def suite(subjects, rng, result, margin: int = DEFAULT_MARGIN):
        skipped = 0
        for sub in subjects:
            for c in sub.all_curves():
                if not test(sub.space, c):
                    continue
                report = _rosenfeld(sub, c, kind, margin)
                if report is None:
                    skipped += 1
                    continue
                if not report.hypothesis_met:
                    continue
                result.checked += 1
                if not report.conclusions_hold:
                    _fail(result, sub, c, report=report.as_dict())
        if skipped:
            result.warnings.append(f"{skipped} curve(s) skipped: interior too close to the rim")
    return suite


suite_edge_jordan_conclusions = _suite_rosenfeld(CurveKind.EDGE_JORDAN, is_edge_jordan)
suite_vertex_jordan_conclusions = _suite_rosenfeld(CurveKind.VERTEX_JORDAN, is_vertex_jordan)


def suite_face_adjacency(subjects, rng, result):
    for sub in subjects:
        w = sub.window
        faces = [f for f in w.cells(Kind.FACE) if w.is_complete(f)]
        for C1, C2 in itertools.combinations(faces, 2):
            if not edge_adjacent(w, C1, C2):
                continue
            result.checked += 1
            if not vertex_adjacent(w, C1, C2):
                _fail(result, sub, [C1, C2], message="edge-adjacent but not vertex-adjacent")


SUITES: dict[str, Callable] = {
    "tiling-axioms": suite_tiling_axioms,
    "round-trip": suite_round_trip,
    "adjacency-definition": suite_adjacency_definition,
    "adjacency-symmetry": suite_adjacency_symmetry,
    "kind-bipartite": suite_kind_bipartite,
    "operator-formulations": suite_operator_formulations,
    "components-oracle": suite_components_oracle,
    "verdict-agreement": suite_verdict_agreement,
    "local-hamiltonicity": suite_local_hamiltonicity,
    "sampler-soundness": suite_sampler_soundness,
    "two-components": suite_two_components,
    "interior-adjacency": suite_interior_adjacency,
    "closed-coherence": suite_closed_coherence,
    "open-coherence": suite_open_coherence,
    "open-interior-vertex": suite_open_interior_vertex,
    "well-behaved-interior-face": suite_well_behaved_interior_face,
    "edge-jordan-well-behaved": suite_edge_jordan_well_behaved,
    "edge-jordan-conclusions": suite_edge_jordan_conclusions,
    "vertex-jordan-conclusions": suite_vertex_jordan_conclusions,
    "face-adjacency": suite_face_adjacency,
}

# suites that need a margin argument
_MARGINED = {
    "two-components", "interior-adjacency", "closed-coherence", "open-coherence",
    "open-interior-vertex", "well-behaved-interior-face", "edge-jordan-well-behaved",
    "edge-jordan-conclusions", "vertex-jordan-conclusions",
}

# share of ``samples`` drawn for each kind filter
_SHARES = {SampleKind.ANY: 1.0, SampleKind.EDGE: 0.25, SampleKind.VERTEX: 0.25, SampleKind.CLOSED: 0.1}


def _kind_seed(seed: int, kind: SampleKind) -> int:
    if kind is SampleKind.ANY:
        return seed
    offset = list(SampleKind).index(kind)
    return (seed + 0x9E3779B97F4A7C15 * offset) % 2**64


def prepare(label: str, window: TilingWindow, samples: int, seed: int,
            margin: int = DEFAULT_MARGIN, space: Optional[DigitalSpace] = None) -> Subject:
    """Build the space for ``window`` and draw its curve samples."""
    space = space or DigitalSpace(window)
    sub = Subject(label, window, space)
    clean = DigitalSpace(window)  # the sampler never sees injected faults
    for kind, share in _SHARES.items():
        n = 0 if samples <= 0 else max(1, int(samples * share))
        cfg = SamplerConfig(seed=_kind_seed(seed, kind), target_length=(4, 60), kind=kind,
                            max_attempts=max(2000, 10 * n), margin=margin)
        sub.curves[kind] = sample_curves(clean, cfg, n)
    return sub


def run_selftest(windows: Sequence[tuple[str, TilingWindow]], samples: int = 500, seed: int = 7,
                 margin: int = DEFAULT_MARGIN, fault: Optional[str] = None,
                 only: Optional[Iterable[str]] = None) -> list[SuiteResult]:
    """Run every suite (or those named in ``only``) over ``windows``.

    ``fault="adjacency"`` corrupts each space's adjacency cache first, which
    the adjacency-definition suite must catch.
    """
    if fault not in (None, "adjacency"):
        raise ValueError(f"unknown fault {fault!r}")
    subjects = []
    for label, window in windows:
        space = DigitalSpace(window)
        if fault == "adjacency":
            space = space.with_corrupted_adjacency()
        subjects.append(prepare(label, window, samples, seed, margin, space))
    names = list(SUITES) if only is None else list(only)
    results = []
    for name in names:
        result = SuiteResult(name)
        rng = random.Random(f"{seed}:{name}")
        suite = SUITES[name]
        if fault is not None and name not in ("adjacency-definition", "adjacency-symmetry",
                                              "tiling-axioms", "round-trip"):
            result.warnings.append("skipped under fault injection")
            results.append(result)
            continue
        if name in _MARGINED:
            suite(subjects, rng, result, margin=margin)
        else:
            suite(subjects, rng, result)
        if samples <= 0 and name in _MARGINED | {"sampler-soundness"}:
            result.warnings.append("no curves sampled; suite checked nothing")
        elif result.checked == 0:
            result.warnings.append("nothing to check")
        results.append(result)
    return results

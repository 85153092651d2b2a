"""Tiling and curve file formats.

A tiling file is a JSON object with ``vertices``, ``edges`` and ``faces``
lists. Every entry has a string ``id`` and a ``complete`` flag; vertices give
cyclic ``edges`` and ``faces`` lists and optionally ``coords``; edges give
``endpoints`` and ``sides``; faces give an alternating ``boundary``. Unknown
keys are ignored.

A curve file is line oriented: ``tiling: <path or builtin:...>`` followed by
one cell id per line. Blank lines and ``#`` comments are skipped.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Union

import networkx as nx

from .cells import CellRef, Kind
from .generators import build_window
from .jordan import same_cycle
from .tiling import EdgeRecord, FaceRecord, TilingError, TilingWindow, VertexRecord


class TilingParseError(TilingError, ValueError):
    pass


class DanglingReferenceError(TilingParseError):
    pass


class DuplicateIdError(TilingParseError):
    pass


_SECTIONS = (("vertices", Kind.VERTEX), ("edges", Kind.EDGE), ("faces", Kind.FACE))


def _entries(doc: dict, section: str) -> list[dict]:
    entries = doc.get(section, [])
    if not isinstance(entries, list) or not all(isinstance(e, dict) for e in entries):
        raise TilingParseError(f"section {section!r} must be a list of objects")
    return entries


def load_tiling(document: Union[str, bytes, dict]) -> TilingWindow:
    """Build a window verbatim from a tiling document; no validation is run."""
    if isinstance(document, (str, bytes)):
        try:
            doc = json.loads(document)
        except json.JSONDecodeError as exc:
            raise TilingParseError(f"not a tiling document: {exc}") from None
    else:
        doc = document
    if not isinstance(doc, dict):
        raise TilingParseError("tiling document must be a JSON object")

    ids: dict[str, CellRef] = {}
    names: dict[CellRef, str] = {}
    for section, kind in _SECTIONS:
        for i, entry in enumerate(_entries(doc, section)):
            name = entry.get("id")
            if not isinstance(name, str) or not name:
                raise TilingParseError(f"{section}[{i}] needs a string id")
            if name in ids:
                raise DuplicateIdError(f"duplicate cell id {name!r}")
            ref = CellRef(kind, i)
            ids[name] = ref
            names[ref] = name

    def refs(entry: dict, key: str, kinds: tuple[Kind, ...], owner: str) -> tuple[CellRef, ...]:
        values = entry.get(key, [])
        if not isinstance(values, list):
            raise TilingParseError(f"{owner}: {key!r} must be a list")
        out = []
        for v in values:
            ref = ids.get(v) if isinstance(v, str) else None
            if ref is None or ref.kind not in kinds:
                raise DanglingReferenceError(f"{owner}: {key} refers to undefined cell {v!r}")
            out.append(ref)
        return tuple(out)

    def flag(entry: dict, owner: str) -> bool:
        value = entry.get("complete", False)
        if not isinstance(value, bool):
            raise TilingParseError(f"{owner}: 'complete' must be true or false")
        return value

    vertices, edges, faces, coords = [], [], [], []
    for entry in _entries(doc, "vertices"):
        name = entry["id"]
        vertices.append(VertexRecord(
            refs(entry, "edges", (Kind.EDGE,), name),
            refs(entry, "faces", (Kind.FACE,), name),
            flag(entry, name),
        ))
        xy = entry.get("coords")
        if xy is not None:
            try:
                x, y = (float(c) for c in xy)
            except (TypeError, ValueError):
                raise TilingParseError(f"{name}: coords must be two numbers") from None
            coords.append((x, y))
    for entry in _entries(doc, "edges"):
        name = entry["id"]
        edges.append(EdgeRecord(
            refs(entry, "endpoints", (Kind.VERTEX,), name),
            refs(entry, "sides", (Kind.FACE,), name),
            flag(entry, name),
        ))
    for entry in _entries(doc, "faces"):
        name = entry["id"]
        faces.append(FaceRecord(refs(entry, "boundary", (Kind.VERTEX, Kind.EDGE), name), flag(entry, name)))

    if coords and len(coords) != len(vertices):
        raise TilingParseError("coords must be given for every vertex or for none")
    try:
        return TilingWindow(tuple(vertices), tuple(edges), tuple(faces),
                            coords=tuple(coords) if coords else None, names=names)
    except TilingError as exc:
        raise TilingParseError(str(exc)) from None


def tiling_document(window: TilingWindow) -> dict:
    name = window.name
    doc: dict = {"vertices": [], "edges": [], "faces": []}
    for v in window.cells(Kind.VERTEX):
        rec = window.record(v)
        entry = {
            "id": name(v),
            "edges": [name(e) for e in rec.incident_edges],
            "faces": [name(f) for f in rec.incident_faces],
            "complete": rec.complete,
        }
        if window.coords is not None:
            entry["coords"] = list(window.coords[v.index])
        doc["vertices"].append(entry)
    for e in window.cells(Kind.EDGE):
        rec = window.record(e)
        doc["edges"].append({
            "id": name(e),
            "endpoints": [name(v) for v in rec.endpoints],
            "sides": [name(f) for f in rec.sides],
            "complete": rec.complete,
        })
    for f in window.cells(Kind.FACE):
        rec = window.record(f)
        doc["faces"].append({
            "id": name(f),
            "boundary": [name(c) for c in rec.boundary],
            "complete": rec.complete,
        })
    return doc


def dump_tiling(window: TilingWindow) -> str:
    return json.dumps(tiling_document(window), indent=1) + "\n"


def id_mapping(window: TilingWindow) -> dict[str, str]:
    """File id -> canonical dense id (``v3``, ``e10``, ...)."""
    return {window.name(x): str(x) for x in window.cells()}


def read_tiling(ref: Union[str, Path], base: Optional[Path] = None) -> TilingWindow:
    """Load a tiling from a path, or build one from ``builtin:...``."""
    ref = str(ref)
    if ref.startswith("builtin:"):
        return build_window(ref)
    path = Path(ref)
    if base is not None and not path.is_absolute() and not path.exists():
        path = base / path
    return load_tiling(path.read_text(encoding="utf-8"))


# -------------------------------------------------------------- curve files


@dataclass(frozen=True)
class CurveDocument:
    tiling_ref: str
    cells: tuple[str, ...]

    def resolve(self, window: TilingWindow) -> tuple[CellRef, ...]:
        return tuple(window.resolve(c) for c in self.cells)


def load_curve(text: str) -> CurveDocument:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("tiling:"):
        raise TilingParseError("curve file must start with 'tiling: <ref>'")
    ref = lines[0][len("tiling:"):].strip()
    if not ref:
        raise TilingParseError("empty tiling reference")
    return CurveDocument(ref, tuple(lines[1:]))


def dump_curve(doc: CurveDocument) -> str:
    return "\n".join([f"tiling: {doc.tiling_ref}", *doc.cells]) + "\n"


def curve_document(window: TilingWindow, tiling_ref: str, cells: Iterable[CellRef]) -> CurveDocument:
    return CurveDocument(tiling_ref, tuple(window.name(c) for c in cells))


# -------------------------------------------------------------- isomorphism


def _incidence_graph(window: TilingWindow) -> nx.Graph:
    g = nx.Graph()
    for x in window.cells():
        g.add_node(x, label=(int(x.kind), window.is_complete(x)))
    for x in window.cells():
        for y in window.incident(x):
            g.add_edge(x, y)
    return g


def windows_isomorphic(a: TilingWindow, b: TilingWindow) -> bool:
    """Equal up to relabelling, cyclic orders included (rotation or reflection)."""
    if [a.count(k) for k in Kind] != [b.count(k) for k in Kind]:
        return False
    ga, gb = _incidence_graph(a), _incidence_graph(b)
    matcher = nx.algorithms.isomorphism.GraphMatcher(
        ga, gb, node_match=lambda p, q: p["label"] == q["label"])
    for m in matcher.isomorphisms_iter():
        if all(same_cycle([m[c] for c in a.record(f).boundary], b.record(m[f]).boundary)
               for f in a.cells(Kind.FACE)) and all(
                same_cycle([m[c] for c in _star(a, v)], _star(b, m[v]))
                for v in a.cells(Kind.VERTEX) if a.is_complete(v)):
            return True
    return False


def _star(window: TilingWindow, v: CellRef) -> list[CellRef]:
    rec = window.record(v)
    return [c for pair in zip(rec.incident_edges, rec.incident_faces) for c in pair]

import copy

import pytest

from tilejordan import (
    CellRef,
    E,
    F,
    IncompleteCellError,
    Kind,
    UnknownCellError,
    V,
    WindowTooSmallError,
    build_hexagonal_window,
    build_square_window,
    build_triangular_window,
    build_window,
    delta,
    parse_cell,
    star_complete,
    validate_tiling,
)
from tilejordan.tilingio import load_tiling, tiling_document


def test_cell_ids_round_trip():
    for ref in (V(0), E(17), F(3)):
        assert parse_cell(str(ref)) == ref
    assert str(CellRef(Kind.FACE, 12)) == "f12"
    with pytest.raises(ValueError):
        parse_cell("x3")
    with pytest.raises(ValueError):
        parse_cell("v-1")


def test_cells_sort_by_kind_then_index():
    assert sorted([F(0), V(5), E(2), V(1)]) == [V(1), V(5), E(2), F(0)]


def _euler(w):
    return w.count(Kind.VERTEX) - w.count(Kind.EDGE) + w.count(Kind.FACE)


@pytest.mark.parametrize("cols,rows", [(c, r) for c in range(2, 11) for r in range(2, 11)])
def test_square_windows_validate(cols, rows):
    w = build_square_window(cols, rows)
    assert w.count(Kind.FACE) == cols * rows
    assert w.count(Kind.VERTEX) == (cols + 1) * (rows + 1)
    assert _euler(w) == 1  # a disk
    assert validate_tiling(w).ok


@pytest.mark.parametrize("radius", range(1, 11))
def test_hex_windows_validate(radius):
    w = build_hexagonal_window(radius)
    assert w.count(Kind.FACE) == 1 + 3 * radius * (radius + 1)
    assert _euler(w) == 1
    assert validate_tiling(w).ok


@pytest.mark.parametrize("size", range(2, 11))
def test_triangular_windows_validate(size):
    w = build_triangular_window(size)
    assert w.count(Kind.FACE) == 2 * size * size
    assert _euler(w) == 1
    assert validate_tiling(w).ok


def test_face_vertex_edge_counts_match():
    for w in (build_square_window(4, 3), build_hexagonal_window(2), build_triangular_window(3)):
        for f in w.cells(Kind.FACE):
            rec = w.record(f)
            assert len(rec.vertices) == len(rec.edges)


def test_complete_vertex_stars():
    w = build_hexagonal_window(3)
    for v in w.cells(Kind.VERTEX):
        rec = w.record(v)
        if rec.complete:
            assert len(rec.incident_edges) == len(rec.incident_faces) == 3


def test_delta_per_tiling():
    assert delta(build_square_window(4, 4)) == 4
    assert delta(build_hexagonal_window(2)) == 3
    assert delta(build_triangular_window(3)) == 6


def test_delta_needs_a_complete_vertex():
    # a 2x1 strip is not buildable; a hex radius-0 disk is one face
    with pytest.raises(ValueError):
        build_square_window(1, 3)
    w = build_square_window(2, 2)
    assert delta(w) == 4
    doc = tiling_document(w)
    for v in doc["vertices"]:
        v["complete"] = False
    with pytest.raises(WindowTooSmallError):
        delta(load_tiling(doc))


def test_rim_is_incomplete_fringe():
    w = build_square_window(3, 3)
    # faces are always complete; only the frame's vertices and edges are rim
    assert all(c.kind is not Kind.FACE for c in w.rim)
    assert len([c for c in w.rim if c.kind is Kind.EDGE]) == 12
    assert len([c for c in w.rim if c.kind is Kind.VERTEX]) == 12


def test_star_complete_depths():
    w = build_square_window(5, 5)
    center = F(12)
    assert star_complete(w, center, 0)
    assert star_complete(w, center, 2)
    assert not star_complete(w, center, 6)
    with pytest.raises(UnknownCellError):
        star_complete(w, F(999), 1)


def test_unknown_cells_rejected():
    w = build_square_window(3, 3)
    with pytest.raises(UnknownCellError):
        w.record(V(10_000))
    with pytest.raises(UnknownCellError):
        w.resolve("nope")


def test_builtin_specs():
    assert build_window("builtin:square:3x4").count(Kind.FACE) == 12
    assert build_window("hex:2").count(Kind.FACE) == 19
    assert build_window("tri:2").count(Kind.FACE) == 8
    for bad in ("square:3", "circle:2", "hex:x", "tri:1"):
        with pytest.raises(ValueError):
            build_window(bad)


# ---------------------------------------------------------------- broken files


def _broken(mutate):
    doc = copy.deepcopy(tiling_document(build_square_window(4, 4)))
    mutate(doc)
    return validate_tiling(load_tiling(doc))


def _by_id(doc, section, ident):
    return next(e for e in doc[section] if e["id"] == ident)


def _inner_vertex(doc):
    return next(v for v in doc["vertices"] if v["complete"])


def test_validator_flags_broken_alternation():
    def mutate(doc):
        b = _by_id(doc, "faces", "f5")["boundary"]
        b[0], b[1] = b[1], b[0]
    report = _broken(mutate)
    assert not report.ok
    assert "alternation" in report.axioms()


def test_validator_flags_asymmetric_incidence():
    def mutate(doc):
        v = _inner_vertex(doc)
        v["faces"] = v["faces"][1:] + v["faces"][:1]  # faces no longer between their edges
    assert "cyclic order" in _broken(mutate).axioms()


def test_validator_flags_edge_with_one_side():
    def mutate(doc):
        e = next(e for e in doc["edges"] if e["complete"])
        e["sides"] = e["sides"][:1]
    assert "edge sides" in _broken(mutate).axioms()


def test_validator_flags_low_degree_vertex():
    def mutate(doc):
        v = _inner_vertex(doc)
        v["edges"], v["faces"] = v["edges"][:2], v["faces"][:2]
    assert "vertex degree" in _broken(mutate).axioms()


def test_validator_flags_missing_incidence():
    def mutate(doc):
        f = _by_id(doc, "faces", "f5")
        v = _by_id(doc, "vertices", f["boundary"][0])
        v["faces"] = [x for x in v["faces"] if x != "f5"] + ["f0"]
    report = _broken(mutate)
    assert not report.ok


def test_validator_flags_disconnected_window():
    def mutate(doc):
        for section in ("vertices", "edges", "faces"):
            doc[section].append({"id": "lonely_" + section, "complete": True, "boundary": [],
                                 "edges": [], "faces": [], "endpoints": [], "sides": [],
                                 "coords": [9, 9]})
    report = _broken(mutate)
    assert "connected" in report.axioms()


def test_incomplete_cell_error_carries_cell():
    err = IncompleteCellError(V(3))
    assert err.cell == V(3)
    assert "v3" in str(err)

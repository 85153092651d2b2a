import numpy as np
import pytest
from scipy import ndimage

from tilejordan import (
    Connectivity,
    CurveKind,
    DigitalSpace,
    Kind,
    PreconditionError,
    build_square_window,
    classify_closed,
    classify_open,
    edge_adjacent,
    faces_connected,
    is_edge_jordan,
    is_vertex_jordan,
    is_well_behaved,
    jordan_complement,
    open_interior_vertex_check,
    rosenfeld_report,
    star_complete,
    vertex_adjacent,
    well_behaved_interior_face,
    well_behaved_witness,
)
from tilejordan.curves import jordan_kind_problem
from tilejordan.fixtures import edge_neighbor_ring, face_ring, square_center, square_face, tile_boundary, vertex_ring
from tilejordan.sampler import SampleKind, SamplerConfig, sample_curves


def _deep_vertex(space, depth=3):
    w = space.window
    return min(v for v in w.cells(Kind.VERTEX) if star_complete(w, v, depth))


@pytest.fixture(scope="module")
def fixtures(square9, hex3):
    w, h = square9.window, hex3.window
    C = square_center(9, 9)
    return {
        "tile": (square9, tile_boundary(w, C)),
        "ring16": (square9, face_ring(w, C)),
        "hex6": (hex3, vertex_ring(h, _deep_vertex(hex3))),
        "hex12": (hex3, face_ring(h, min(f for f in h.cells(Kind.FACE) if star_complete(h, f, 4)))),
    }


@pytest.mark.parametrize("name,closed", [("tile", True), ("ring16", False), ("hex6", False), ("hex12", False)])
def test_closed_classification(fixtures, name, closed):
    space, J = fixtures[name]
    report = classify_closed(space, J, jordan_complement(space, J))
    assert report.coherent
    assert report.a_closed is closed
    assert set(report.as_dict().values()) == {closed}


@pytest.mark.parametrize("name,opened", [("tile", False), ("ring16", True), ("hex6", True), ("hex12", True)])
def test_open_classification(fixtures, name, opened):
    space, J = fixtures[name]
    report = classify_open(space, J, jordan_complement(space, J))
    assert report.coherent
    assert report.a_open is opened


def test_classification_needs_margin(fixtures):
    space, J = fixtures["tile"]
    split = jordan_complement(space, J)
    with pytest.raises(PreconditionError):
        classify_closed(space, J, split, margin=1)


def test_open_curve_interior_vertex(fixtures):
    for name in ("hex6", "ring16"):
        space, J = fixtures[name]
        assert open_interior_vertex_check(space, J, jordan_complement(space, J))
    space, J = fixtures["tile"]
    with pytest.raises(PreconditionError):
        open_interior_vertex_check(space, J, jordan_complement(space, J))


def test_sixteen_ring_interior_has_four_vertices(fixtures):
    space, J = fixtures["ring16"]
    split = jordan_complement(space, J)
    assert sum(1 for c in split.interior if c.kind is Kind.VERTEX) == 4


def test_well_behaved(fixtures):
    space, J = fixtures["hex6"]
    C, x = well_behaved_witness(space, J)
    assert C in J and x not in J
    assert set(space.window.record(x).incident_faces) <= set(J)
    assert not is_well_behaved(space, J)
    assert is_well_behaved(*fixtures["ring16"])
    assert is_well_behaved(*fixtures["tile"])  # no faces at all


def test_well_behaved_interior_face(fixtures):
    for name in ("ring16", "hex12"):
        space, J = fixtures[name]
        assert well_behaved_interior_face(space, J, jordan_complement(space, J))
    space, J = fixtures["hex6"]
    with pytest.raises(PreconditionError):
        well_behaved_interior_face(space, J, jordan_complement(space, J))


# ------------------------------------------------------------- face adjacency


def test_face_adjacency_examples(square9, hex3):
    w = square9.window
    assert edge_adjacent(w, square_face(9, 0, 0), square_face(9, 0, 1))
    diag = (square_face(9, 0, 0), square_face(9, 1, 1))
    assert not edge_adjacent(w, *diag) and vertex_adjacent(w, *diag)
    far = (square_face(9, 0, 0), square_face(9, 2, 0))
    assert not edge_adjacent(w, *far) and not vertex_adjacent(w, *far)
    with pytest.raises(PreconditionError):
        edge_adjacent(w, *diag[:1] * 2)
    with pytest.raises(PreconditionError):
        vertex_adjacent(w, diag[0], next(w.cells(Kind.EDGE)))


def test_edge_adjacency_implies_vertex_adjacency(tri6):
    w = tri6.window
    faces = list(w.cells(Kind.FACE))
    for a in faces:
        for b in faces:
            if a != b and edge_adjacent(w, a, b):
                assert vertex_adjacent(w, a, b)


def test_faces_connected_examples(square9):
    w = square9.window
    diag = {square_face(9, 0, 0), square_face(9, 1, 1)}
    assert faces_connected(w, {square_face(9, 3, 3)}, Connectivity.EDGE)
    assert faces_connected(w, diag, Connectivity.VERTEX)
    assert not faces_connected(w, diag, Connectivity.EDGE)
    with pytest.raises(PreconditionError):
        faces_connected(w, {next(w.cells(Kind.EDGE))}, Connectivity.EDGE)


def _face_image(faces, cols, rows):
    img = np.zeros((rows, cols), dtype=int)
    for f in faces:
        img[f.index // cols, f.index % cols] = 1
    return img


def _label_count(img, eight):
    structure = np.ones((3, 3)) if eight else None
    return ndimage.label(img, structure=structure)[1]


def test_faces_connected_matches_pixel_labelling():
    cols = rows = 8
    w = build_square_window(cols, rows)
    faces = sorted(w.cells(Kind.FACE))
    rng = np.random.default_rng(5)
    for _ in range(200):
        picked = [f for f in faces if rng.random() < 0.35]
        img = _face_image(picked, cols, rows)
        if not picked:
            continue
        assert faces_connected(w, picked, Connectivity.VERTEX) == (_label_count(img, True) == 1)
        assert faces_connected(w, picked, Connectivity.EDGE) == (_label_count(img, False) == 1)


# ------------------------------------------------------- edge/vertex Jordan


def test_edge_jordan_examples(square9, fixtures):
    space, J = fixtures["ring16"]
    assert is_edge_jordan(space, J)
    assert not is_vertex_jordan(space, J)
    block = vertex_ring(square9.window, _deep_vertex(square9))  # 2x2 block of faces
    assert is_edge_jordan(square9, block)
    split = jordan_complement(square9, block)
    assert not any(c.kind is Kind.FACE for c in split.interior)


def test_no_face_curve_not_applicable(fixtures):
    space, J = fixtures["tile"]
    assert jordan_kind_problem(space, J, CurveKind.EDGE_JORDAN).startswith("not applicable")
    assert not is_edge_jordan(space, J) and not is_vertex_jordan(space, J)


def test_vertex_jordan_diamond(square9):
    C = square_center(9, 9)
    J = edge_neighbor_ring(square9.window, C)
    assert len(J) == 8
    assert is_vertex_jordan(square9, J)
    report = rosenfeld_report(square9, J, CurveKind.VERTEX_JORDAN)
    assert report.face_count == 4 and not report.hypothesis_met
    assert report.connectivity_mode is Connectivity.EDGE
    assert report.consistent


def test_rosenfeld_sixteen_ring(fixtures):
    space, J = fixtures["ring16"]
    report = rosenfeld_report(space, J, CurveKind.EDGE_JORDAN)
    assert (report.face_count, report.delta) == (8, 4)
    assert report.hypothesis_met and report.conclusions_hold
    assert report.connectivity_mode is Connectivity.VERTEX
    assert report.faces_alternate
    assert report.as_dict()["curve_kind"] == "EdgeJordan"


def test_rosenfeld_block_hypothesis_is_sharp(square9):
    block = vertex_ring(square9.window, _deep_vertex(square9))
    report = rosenfeld_report(square9, block, CurveKind.EDGE_JORDAN)
    assert report.face_count == 4 and not report.hypothesis_met
    assert not report.interior_has_face
    assert report.consistent and not report.conclusions_hold


def test_rosenfeld_kind_mismatch(fixtures):
    space, J = fixtures["ring16"]
    with pytest.raises(PreconditionError, match="kind mismatch"):
        rosenfeld_report(space, J, CurveKind.VERTEX_JORDAN)


def test_sampled_square_curves_against_pixel_oracle():
    cols = rows = 11
    space = DigitalSpace(build_square_window(cols, rows))
    for kind, ckind, eight in ((SampleKind.EDGE, CurveKind.EDGE_JORDAN, True),
                               (SampleKind.VERTEX, CurveKind.VERTEX_JORDAN, False)):
        curves = sample_curves(space, SamplerConfig(seed=11, kind=kind, target_length=(8, 40)), 60)
        assert curves
        for J in curves:
            split = jordan_complement(space, J)
            report = rosenfeld_report(space, J, ckind, split)
            inner = [c for c in split.interior if c.kind is Kind.FACE]
            outer = [c for c in split.exterior if c.kind is Kind.FACE]
            assert report.interior_faces_connected == (not inner or _label_count(_face_image(inner, cols, rows), eight) == 1)
            assert report.exterior_faces_connected == (_label_count(_face_image(outer, cols, rows), eight) == 1)
            assert report.consistent

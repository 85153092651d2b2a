import json
import subprocess
import sys

import pytest

from tilejordan import DigitalSpace, Kind, build_hexagonal_window, build_square_window, star_complete
from tilejordan.cli import main
from tilejordan.fixtures import face_ring, square_center, vertex_ring
from tilejordan.jordan import curve_order
from tilejordan.tilingio import curve_document, dump_curve, dump_tiling


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def ring_curve(tmp_path):
    w = build_square_window(9, 9)
    J = curve_order(DigitalSpace(w), face_ring(w, square_center(9, 9)))
    path = tmp_path / "ring.curve"
    path.write_text(dump_curve(curve_document(w, "builtin:square:9x9", J)))
    return path, J


@pytest.fixture
def hex_curve(tmp_path):
    w = build_hexagonal_window(3)
    v = min(c for c in w.cells(Kind.VERTEX) if star_complete(w, c, 3))
    path = tmp_path / "six.curve"
    path.write_text(dump_curve(curve_document(w, "builtin:hex:3", vertex_ring(w, v))))
    return path


def test_generate(capsys, tmp_path):
    out = tmp_path / "sq.tiling"
    assert run(capsys, "generate", "square", "5", "5", "--out", str(out))[0] == 0
    assert len(json.loads(out.read_text())["faces"]) == 25
    code, text, _ = run(capsys, "generate", "hex", "2")
    assert code == 0 and len(json.loads(text)["faces"]) == 19


@pytest.mark.parametrize("argv", [("square", "1", "1"), ("square", "5"), ("hex", "0"), ("tri", "3", "3")])
def test_generate_bad_size(capsys, argv):
    code, _, err = run(capsys, "generate", *argv)
    assert code == 2 and "error" in err


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["sample", "builtin:hex:2", "--kind", "spiral"])
    assert info.value.code == 2


def test_validate(capsys, tmp_path):
    good = tmp_path / "good.tiling"
    good.write_text(dump_tiling(build_square_window(4, 4)))
    code, out, _ = run(capsys, "validate", str(good))
    assert code == 0 and out.startswith("ok")
    doc = json.loads(good.read_text())
    doc["faces"][5]["boundary"].reverse()
    doc["faces"][5]["boundary"] = doc["faces"][5]["boundary"][1:] + doc["faces"][5]["boundary"][:1]
    doc["edges"][0]["sides"] = []
    doc["edges"][0]["complete"] = True
    bad = tmp_path / "bad.tiling"
    bad.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "validate", str(bad), "--format", "structured")
    report = json.loads(out)
    assert code == 1 and not report["ok"] and report["violations"]
    assert run(capsys, "validate", str(tmp_path / "missing.tiling"))[0] == 5
    (tmp_path / "junk.tiling").write_text("{{")
    assert run(capsys, "validate", str(tmp_path / "junk.tiling"))[0] == 5


def test_analyze_ring(capsys, ring_curve):
    path, _ = ring_curve
    code, out, _ = run(capsys, "analyze", "builtin:square:9x9", str(path), "--format", "structured")
    report = json.loads(out)
    assert code == 0
    assert report["is_jordan"] and report["interior_size"] == 9
    assert report["open"]["a_open"] and report["EdgeJordan"]["hypothesis_met"]
    assert report["exterior_size"] + report["interior_size"] + 16 == len(
        build_square_window(9, 9).complete_cells)


def test_analyze_hex(capsys, hex_curve):
    code, out, _ = run(capsys, "analyze", "builtin:hex:3", str(hex_curve), "--format", "structured")
    report = json.loads(out)
    assert code == 0
    assert report["open"]["a_open"] and not report["well_behaved"]
    assert report["interior_size"] == 1 and report["interior_kinds"] == {"v": 1, "e": 0, "f": 0}


def test_analyze_text_format(capsys, hex_curve):
    code, out, _ = run(capsys, "analyze", "builtin:hex:3", str(hex_curve))
    assert code == 0 and "interior_size: 1" in out and "well_behaved: False" in out


def test_analyze_not_a_curve(capsys, tmp_path, ring_curve):
    _, J = ring_curve
    path = tmp_path / "path.curve"
    path.write_text("tiling: builtin:square:9x9\n" + "\n".join(str(c) for c in J[:6]) + "\n")
    code, out, _ = run(capsys, "analyze", "builtin:square:9x9", str(path))
    assert code == 1 and "NotCycle" in out


def test_analyze_rejects_shuffled_order(capsys, tmp_path, ring_curve):
    _, J = ring_curve
    shuffled = [J[1], J[0], *J[2:]]
    path = tmp_path / "shuffled.curve"
    path.write_text("tiling: builtin:square:9x9\n" + "\n".join(map(str, shuffled)) + "\n")
    code, out, _ = run(capsys, "analyze", "builtin:square:9x9", str(path))
    assert code == 1 and "not a cyclic order" in out


def test_analyze_unknown_cell(capsys, tmp_path):
    path = tmp_path / "bad.curve"
    path.write_text("tiling: builtin:square:9x9\nv1\nzzz\n")
    assert run(capsys, "analyze", "builtin:square:9x9", str(path))[0] == 5


def test_sample_deterministic(capsys):
    a = run(capsys, "sample", "builtin:square:9x9", "--seed", "1", "--samples", "5")
    b = run(capsys, "sample", "builtin:square:9x9", "--seed", "1", "--samples", "5")
    assert a[0] == 0 and a[1] == b[1]
    assert a[1].count("tiling: builtin:square:9x9") == 5


def test_sample_closed_and_structured(capsys):
    code, out, _ = run(capsys, "sample", "builtin:square:9x9", "--kind", "closed", "--samples", "3",
                       "--format", "structured")
    docs = json.loads(out)
    assert code == 0 and len(docs) == 3
    assert all(not c.startswith("f") for d in docs for c in d["cells"])


def test_sample_exhaustion(capsys):
    code, _, err = run(capsys, "sample", "builtin:square:3x3", "--samples", "2", "--max-attempts", "5")
    assert code == 3 and "exhausted" in err


def test_sample_to_directory_then_analyze(capsys, tmp_path):
    outdir = tmp_path / "curves"
    assert run(capsys, "sample", "builtin:hex:3", "--samples", "3", "--out", str(outdir))[0] == 0
    files = sorted(outdir.glob("*.curve"))
    assert len(files) == 3
    for f in files:
        assert run(capsys, "analyze", "builtin:hex:3", str(f))[0] == 0


def test_render(capsys, tmp_path, hex_curve):
    out = tmp_path / "fig.svg"
    assert run(capsys, "render", "builtin:hex:3", "--curve", str(hex_curve), "--split", "--out", str(out))[0] == 0
    assert out.read_text().count("<polygon") == 37
    assert run(capsys, "render", "builtin:square:5x5")[1].count("<polygon") == 25


def test_render_without_coordinates(capsys, tmp_path):
    doc = json.loads(dump_tiling(build_square_window(3, 3)))
    for v in doc["vertices"]:
        del v["coords"]
    path = tmp_path / "bare.tiling"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "render", str(path), "--out", str(tmp_path / "x.svg"))
    assert code == 4 and "coordinates" in err


def test_selftest_quick(capsys):
    code, out, _ = run(capsys, "selftest", "builtin:square:7x7", "--samples", "20")
    assert code == 0 and "selftest passed" in out


def test_selftest_zero_samples_warns(capsys):
    code, out, _ = run(capsys, "selftest", "builtin:hex:2", "--samples", "0", "--suite", "two-components")
    assert code == 0 and "warning" in out


def test_selftest_fault_injection(capsys, tmp_path):
    code, out, _ = run(capsys, "selftest", "builtin:square:5x5", "--samples", "0", "--inject-fault", "adjacency",
                       "--format", "structured", "--out", str(tmp_path))
    report = json.loads(out)
    assert code == 1 and not report["passed"]
    failed = {s["suite"] for s in report["suites"] if not s["passed"]}
    assert "adjacency-definition" in failed
    dump = json.loads((tmp_path / "adjacency-definition.json").read_text())
    assert dump["failures"][0]["definition_only"]


def test_selftest_unknown_suite(capsys):
    assert run(capsys, "selftest", "--suite", "nope", "--samples", "0")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tilejordan", "generate", "tri", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert len(json.loads(proc.stdout)["faces"]) == 8

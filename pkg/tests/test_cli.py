import json
import re

import numpy as np
import pytest
from shapely.geometry import Polygon

from polychaos import cli
from polychaos.overlap import BracketError
from polychaos.polytopes import PHI
from polychaos.writers import read_csv, sha256_file


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def last_json(out):
    return json.loads(out.strip().splitlines()[-1])


@pytest.mark.parametrize("ident, delta, r", [
    ("pentagon", PHI, 1 / PHI),
    ("16-cell", 1.0, 0.5),
    ("orthoplex:5", 1.0, 0.5),
])
def test_ropt(capsys, ident, delta, r):
    code, out, _ = run(capsys, "ropt", ident)
    assert code == 0
    rec = last_json(out)
    assert rec["schema"] == 1
    assert rec["delta_over_ell"] == pytest.approx(delta, abs=1e-12)
    assert rec["r_opt"] == pytest.approx(r, abs=1e-12)
    assert f"{r:.12g}" in out.splitlines()[0]


def test_ropt_unknown_id(capsys):
    code, _, err = run(capsys, "ropt", "great-dodecahedron")
    assert code == 2
    assert "unknown" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["generate"])
    assert exc.value.code == 2


def test_tables_json(capsys):
    code, out, _ = run(capsys, "tables", "--json")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines() if line.startswith("{")]
    assert len(records) == 16
    assert max(rec["error"] for rec in records) <= 1e-12


@pytest.mark.parametrize("ident, tol, expected", [
    ("hexagon", 1e-4, 2 / 3), ("cube", 1e-4, 0.5), ("simplex:5", 1e-2, 0.5),
])
def test_search(capsys, ident, tol, expected):
    code, out, _ = run(capsys, "search", ident, "--tol", str(tol))
    assert code == 0
    rec = last_json(out)
    assert abs(rec["r_estimate"] - expected) <= tol
    assert rec["r_high"] - rec["r_low"] <= tol
    assert "probe" in out


def test_search_numerical_failure(capsys, monkeypatch):
    def broken(*args, **kwargs):
        raise BracketError("not monotone")
    monkeypatch.setattr(cli, "search_r_opt", broken)
    code, _, err = run(capsys, "search", "triangle")
    assert code == 3
    assert "numerical failure" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "dodecahedron", "--r", "0.72")
    assert code == 0 and last_json(out)["overlap"] is True
    code, out, _ = run(capsys, "verify", "dodecahedron", "--r", "0.737", "--margins")
    rec = last_json(out)
    assert rec["overlap"] is False
    assert len(rec["margins"]) == 190
    assert min(m["margin"] for m in rec["margins"]) > 0


def test_generate_csv_svg_and_manifest(tmp_path, capsys):
    out_base = tmp_path / "tri"
    code, out, _ = run(capsys, "generate", "triangle", "--r", "0.5", "--iterations", "2000",
                       "--seed", "7", "--format", "csv", "--format", "svg", "--out", str(out_base))
    assert code == 0
    rec = last_json(out)
    manifest = json.loads((tmp_path / "tri.manifest.json").read_text())
    assert manifest["schema"] == 1
    assert manifest["parameters"] == {"r": 0.5, "iterations": 2000, "discard": 6, "seed": 7}
    assert {o["format"] for o in manifest["outputs"]} == {"csv", "svg"}
    for o in manifest["outputs"]:
        assert sha256_file(o["path"]) == o["sha256"]
    pts, labels = read_csv(tmp_path / "tri.csv")
    assert pts.shape == (1994, 2)
    assert (tmp_path / "tri.svg").read_text().count("<circle") == 1994
    assert rec["points"] == 1994


def test_generate_refuses_to_overwrite(tmp_path, capsys):
    args = ["generate", "square", "--iterations", "100", "--out", str(tmp_path / "s.csv")]
    assert run(capsys, *args)[0] == 0
    code, _, err = run(capsys, *args)
    assert code == 2
    assert run(capsys, *args, "--force")[0] == 0


def test_generate_ply_for_icosahedron(tmp_path, capsys):
    code, out, _ = run(capsys, "generate", "icosahedron", "--iterations", "3000",
                       "--format", "ply", "--out", str(tmp_path / "ico.ply"))
    assert code == 0
    rec = last_json(out)
    assert rec["parameters"]["r"] == pytest.approx(1 / PHI, abs=1e-12)
    assert (tmp_path / "ico.ply").read_bytes().startswith(b"ply\nformat binary_little_endian 1.0\n")


@pytest.mark.parametrize("ident, fmt", [("cube", "svg"), ("square", "ply"), ("24-cell", "ply")])
def test_generate_format_dimension_mismatch(tmp_path, capsys, ident, fmt):
    code, _, err = run(capsys, "generate", ident, "--iterations", "100", "--format", fmt,
                       "--out", str(tmp_path / "x"))
    assert code == 2


def test_generate_is_reproducible(tmp_path, capsys):
    sums = []
    for k in range(2):
        run(capsys, "generate", "pentagon", "--iterations", "5000", "--seed", "99",
            "--out", str(tmp_path / f"p{k}.csv"))
        manifest = json.loads((tmp_path / f"p{k}.manifest.json").read_text())
        sums.append(manifest["outputs"][0]["sha256"])
    assert sums[0] == sums[1]


def test_hutchinson_triangle_level_three(tmp_path, capsys):
    path = tmp_path / "h.svg"
    code, out, _ = run(capsys, "hutchinson", "triangle", "--r", "0.5", "--level", "3",
                       "--out", str(path))
    assert code == 0
    assert path.read_text().count("<polygon") == 27
    assert last_json(out)["copies"] == 27


def test_hutchinson_level_zero_is_polytope(tmp_path, capsys):
    path = tmp_path / "c.csv"
    code, _, _ = run(capsys, "hutchinson", "cube", "--level", "0", "--out", str(path))
    assert code == 0
    lines = path.read_text().splitlines()
    assert len(lines) == 1 + 8


def _polygons(svg_text):
    out = []
    for pts in re.findall(r'<polygon points="([^"]+)"', svg_text):
        out.append(Polygon([tuple(map(float, xy.split(","))) for xy in pts.split()]))
    return out


def test_hutchinson_pentagon_level_two_no_overlap(tmp_path, capsys):
    path = tmp_path / "p.svg"
    code, _, _ = run(capsys, "hutchinson", "pentagon", "--level", "2", "--out", str(path))
    assert code == 0
    polys = _polygons(path.read_text())
    assert len(polys) == 25
    area = polys[0].area
    for a in range(25):
        for b in range(a + 1, 25):
            # SVG coordinates carry 6 significant digits
            assert polys[a].intersection(polys[b]).area < 1e-5 * area


def test_hutchinson_cap(tmp_path, capsys):
    code, _, err = run(capsys, "hutchinson", "triangle", "--level", "9", "--max-copies", "1000",
                       "--out", str(tmp_path / "x.svg"))
    assert code == 2

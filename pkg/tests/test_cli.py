"""Command-line behavior: dispatch, exit codes, round trips, determinism."""

import json

import pytest

from torjet.cli import main

EXTROP_DOC = {
    "points": [
        [0, 0], [1, 0], [2, 0], [3, 0], [0, 1], [1, 1], [2, 1], [0, 2], [1, 2], [0, 3],
    ],
    "u": [4, 1, 2, 3, 1, 1, 2, 1, 1, 1],
    "k": 2,
}

CUBE_DOC = {
    "vertices": [
        [0, 0, 0], [2, 0, 0], [0, 2, 0], [2, 2, 0],
        [0, 0, 2], [2, 0, 2], [0, 2, 2], [2, 2, 2],
    ]
}

SPIKE_DOC = {
    "points": [[3, 0, 0]]
    + [
        [x, y, z]
        for x in range(3)
        for y in range(3)
        for z in range(3)
        if x + y + z <= 2
    ]
}


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, json.loads(out)


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_dual_degree_cube(tmp_path, capsys):
    path = write(tmp_path, "cube2.json", CUBE_DOC)
    code, doc = run_cli(["dual-degree", "--k", "2", path], capsys)
    assert code == 0
    assert doc["outputs"]["degree"] == 848
    assert doc["outputs"]["branch"] == "formula"
    assert doc["exit_code"] == 0


def test_polytope_info(tmp_path, capsys):
    path = write(tmp_path, "cube2.json", CUBE_DOC)
    code, doc = run_cli(["polytope-info", "--k", "2", path], capsys)
    assert code == 0
    out = doc["outputs"]
    assert out["smooth"] and out["k_regular"]
    assert out["invariants"] == {"vol": 48, "F": 48, "E": 24, "V": 8}
    assert out["adjoint"]["E_r"] == 0


def test_scroll(capsys):
    code, doc = run_cli(["scroll", "--d", "2,2,3", "--k", "2"], capsys)
    assert code == 0
    assert doc["outputs"]["dim"] == 4
    assert doc["outputs"]["degree"] == 8


def test_jet_with_tsv(tmp_path, capsys):
    path = write(tmp_path, "extrop.json", EXTROP_DOC)
    tsv = tmp_path / "mat.tsv"
    code, doc = run_cli(["jet", "--k", "2", "--tsv", str(tsv), path], capsys)
    assert code == 0
    assert doc["outputs"]["rank"] == 6
    assert doc["outputs"]["expected_dim"] == 5
    assert doc["outputs"]["generically_k_spanned"] is True
    lines = tsv.read_text().strip().split("\n")
    assert len(lines) == 6
    assert lines[0].split("\t") == ["1"] * 10


def test_trop_member_with_witness_check(tmp_path, capsys):
    path = write(tmp_path, "extrop.json", EXTROP_DOC)
    code, doc = run_cli(["trop-member", "--witness", "0,0", path], capsys)
    assert code == 0
    out = doc["outputs"]
    assert out["verdict"] == "in-trop"
    assert out["witness_check"]["verified"] is True


def test_trop_empty_spike(tmp_path, capsys):
    path = write(tmp_path, "spike.json", SPIKE_DOC)
    code, doc = run_cli(["trop-empty", "--k", "2", path], capsys)
    assert code == 0
    out = doc["outputs"]
    assert out["torus_disjoint"] is True
    zeros = [v for v in out["witness_values"] if v == 0]
    assert len(zeros) == len(SPIKE_DOC["points"]) - 1


def test_trop_curve_svg_and_determinism(tmp_path, capsys):
    path = write(tmp_path, "extrop.json", EXTROP_DOC)
    svg1 = tmp_path / "a.svg"
    code, doc1 = run_cli(
        ["trop-curve", "--deterministic", "--svg", str(svg1), path], capsys
    )
    assert code == 0
    assert len(doc1["outputs"]["vertices"]) == 3
    assert len(doc1["outputs"]["cells"]) == 3
    svg2 = tmp_path / "b.svg"
    code, doc2 = run_cli(
        ["trop-curve", "--deterministic", "--svg", str(svg2), path], capsys
    )
    strip = lambda d: {k: v for k, v in d.items() if k != "svg"}
    assert strip(doc1["outputs"]) == strip(doc2["outputs"])
    assert svg1.read_bytes() == svg2.read_bytes()
    text = svg1.read_text()
    n_segments = text.count('class="edge"') + text.count('class="ray"')
    assert n_segments == len(doc1["outputs"]["edges"]) + len(doc1["outputs"]["rays"])


def test_trop_curve_tropical_line(tmp_path, capsys):
    doc_in = {"points": [[0, 0], [1, 0], [0, 1]], "u": [0, 0, 0]}
    path = write(tmp_path, "line.json", doc_in)
    svg = tmp_path / "line.svg"
    code, doc = run_cli(["trop-curve", "--svg", str(svg), path], capsys)
    assert code == 0
    assert len(doc["outputs"]["rays"]) == 3
    assert svg.read_text().count('class="ray"') == 3


def test_trop_curve_empty(tmp_path, capsys):
    path = write(tmp_path, "pt.json", {"points": [[2, 3]], "u": [5]})
    svg = tmp_path / "pt.svg"
    code, doc = run_cli(["trop-curve", "--svg", str(svg), path], capsys)
    assert code == 0
    assert doc["outputs"]["vertices"] == []
    text = svg.read_text()
    assert 'class="grid"' in text
    assert 'class="ray"' not in text and 'class="edge"' not in text


def test_polytope_info_exceptional_tag(tmp_path, capsys):
    simplex = write(
        tmp_path, "2d3.json",
        {"vertices": [[0, 0, 0], [2, 0, 0], [0, 2, 0], [0, 0, 2]]},
    )
    code, doc = run_cli(["polytope-info", simplex], capsys)
    assert code == 0
    assert doc["outputs"]["exceptional"] == {"tag": "k-simplex", "k": 2}
    cube = write(tmp_path, "cube.json", CUBE_DOC)
    code, doc = run_cli(["polytope-info", cube], capsys)
    assert doc["outputs"]["exceptional"] == {"tag": None}


def test_trop_curve_figure(tmp_path, capsys):
    pytest.importorskip("matplotlib")
    path = write(tmp_path, "extrop.json", EXTROP_DOC)
    fig = tmp_path / "curve.png"
    code, _doc = run_cli(["trop-curve", "--figure", str(fig), path], capsys)
    assert code == 0
    assert fig.stat().st_size > 0
    assert fig.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_round_trip_of_output_documents(tmp_path, capsys):
    path = write(tmp_path, "extrop.json", EXTROP_DOC)
    code, doc = run_cli(["trop-member", path], capsys)
    assert code == 0
    assert json.loads(json.dumps(doc)) == doc


def test_exit_code_parse_errors(tmp_path, capsys):
    empty = write(tmp_path, "empty.json", {"points": []})
    code, doc = run_cli(["jet", "--k", "2", empty], capsys)
    assert code == 2 and doc["error"]["type"] == "ParseError"
    bad = tmp_path / "bad.json"
    bad.write_text("not json {")
    code, doc = run_cli(["jet", "--k", "2", str(bad)], capsys)
    assert code == 2
    assert doc["error"]["line"] == 1
    missing = tmp_path / "missing.json"
    code, doc = run_cli(["jet", "--k", "2", str(missing)], capsys)
    assert code == 2 and doc["error"]["type"] == "IOError"


def test_exit_code_precondition_errors(tmp_path, capsys):
    octa = write(
        tmp_path,
        "octa.json",
        {"vertices": [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]]},
    )
    code, doc = run_cli(["dual-degree", "--k", "2", octa], capsys)
    assert code == 1
    assert doc["error"]["type"] == "NotSmooth"
    seg = write(tmp_path, "seg.json", {"vertices": [[0, 0], [1, 1]]})
    code, doc = run_cli(["polytope-info", seg], capsys)
    assert code == 1
    assert doc["error"]["type"] == "NotFullDimensional"
    code, doc = run_cli(["scroll", "--d", "2,2,3", "--k", "9"], capsys)
    assert code == 1 and doc["error"]["type"] == "KOutOfRange"


def test_rational_lift_parsing(tmp_path, capsys):
    doc_in = dict(EXTROP_DOC)
    doc_in["u"] = ["4", "1", "2", "3", "1", "1/1", "2", "0.5", "1", "1"]
    path = write(tmp_path, "rat.json", doc_in)
    code, doc = run_cli(["trop-curve", path], capsys)
    assert code == 0

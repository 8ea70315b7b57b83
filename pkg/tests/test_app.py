import json

import pytest

from app import EXIT_ERROR, EXIT_MISMATCH, EXIT_OK, main


def run(capsys, *argv):
    code = main(["--log-level", "WARNING", *argv])
    return code, capsys.readouterr().out


def test_analyze_json(capsys):
    code, out = run(capsys, "analyze", "8", "±1,±3,4", "--verify", "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["schema"] == 1
    assert data["group"]["order"] == 128
    assert data["symmetry"]["det"]["value"] == 4
    assert data["symmetry"]["dist"]["value"] == 3
    assert data["verification"]["ok"]


def test_analyze_is_byte_identical(capsys):
    _, first = run(capsys, "analyze", "14", "±1,±2,±3", "--json", "--mode", "formula")
    _, second = run(capsys, "analyze", "14", "±1,±2,±3", "--json", "--mode", "formula")
    assert first == second
    assert json.loads(first)["group"]["order"] == 28


def test_analyze_text_and_dot(capsys, tmp_path):
    code, out = run(capsys, "analyze", "8", "±1,±3,4", "--mode", "formula", "--dot", str(tmp_path))
    assert code == EXIT_OK
    assert "quotient chain: C_8(±1,±3,4) -> C_4(±1) -> C_2(1) -> C_1()" in out
    assert sorted(p.name for p in tmp_path.iterdir()) == ["step_0.dot", "step_1.dot", "step_2.dot", "step_3.dot"]


def test_analyze_formula_disagreement_exits_1(capsys, mocker):
    mocker.patch("core.symmetry.SymmetryEngine.exhaustive_det", return_value=99)
    code, out = run(capsys, "analyze", "8", "±1,±3,4", "--json")
    assert code == EXIT_MISMATCH
    det = json.loads(out)["symmetry"]["det"]
    assert (det["value"], det["exhaustive"], det["confirmed"]) == (4, 99, False)


def test_named_graph(capsys):
    code, out = run(capsys, "autgroup", "--graph", "icosahedron", "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["oracle_order"] == 120
    assert data["vertex_transitive"]
    assert len(data["vertex_orbits"]) == 1


def test_autgroup_limit(capsys):
    code, out = run(capsys, "autgroup", "5", "±1", "--limit", "20", "--json")
    assert code == EXIT_OK
    assert len(json.loads(out)["automorphisms"]) == 10


def test_validation_error(capsys):
    code, out = run(capsys, "analyze", "8", "1")
    assert code == EXIT_ERROR
    assert json.loads(out)["error"]["type"] == "NotInverseClosedError"


@pytest.mark.parametrize("argv", [
    ["analyze"],
    ["analyze", "8", "±1", "--graph", "q3"],
    ["analyze", "--graph", "dodecahedron"],
])
def test_graph_selection_errors(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == EXIT_ERROR
    assert "error" in json.loads(out)


def test_quotient_seq(capsys):
    code, out = run(capsys, "quotient-seq", "8", "±1,±3,4", "--json")
    assert code == EXIT_OK
    assert [s["kind"] for s in json.loads(out)["steps"]] == ["adjacent", "nonadjacent", "adjacent"]


def test_cotwin(capsys):
    code, out = run(capsys, "cotwin", "10", "±1,±3", "--json")
    assert code == EXIT_OK
    section = json.loads(out)["cotwins"]
    assert section["kind"] == "nonadjacent"
    assert section["crown"]["k"] == 5


def test_catalog_golden(capsys, tmp_path):
    out_file = tmp_path / "table1.csv"
    code, _ = run(capsys, "catalog", "table1", "--max-n", "60", "--golden", "--out", str(out_file))
    assert code == EXIT_OK
    assert out_file.read_text(encoding="utf-8").startswith("n,i,j,kind,w,pattern\n4,1,2,adjacent,1,K_4\n")


def test_catalog_golden_mismatch(capsys):
    code, _ = run(capsys, "catalog", "table1", "--max-n", "20", "--golden")
    assert code == EXIT_MISMATCH


def test_catalog_json(capsys):
    code, out = run(capsys, "catalog", "cotwin-orders", "--max-n", "10", "--format", "json")
    assert code == EXIT_OK
    assert [row["count"] for row in json.loads(out)["rows"]] == [1, 0, 2]


def test_verify_corpus(capsys):
    code, out = run(capsys, "verify-corpus", "--max-n", "6", "--json")
    assert code == EXIT_OK
    assert json.loads(out)["ok"]

import pytest

from analytics.analyzer import SymmetryAnalyzer, analyze, describe_input
from analytics.corpus import CorpusVerifier, verify_corpus
from core.circulant import build, parse_spec


def test_analyze_c8_verified(c8_twins):
    document = analyze(c8_twins, verify=True)
    assert document.ok
    data = document.to_dict()
    assert data["schema"] == 1
    assert data["input"]["graph_spec"] == "C_8(±1,±3,4)"
    assert data["twins"]["kind"] == "adjacent"
    assert data["twins"]["class_size"] == 2
    assert len(data["quotient_chain"]["steps"]) == 3
    assert data["group"]["order"] == 128
    assert data["symmetry"]["det"] == {"method": "Cor-DetTwins", "value": 4, "exhaustive": 4, "confirmed": True}
    assert data["symmetry"]["dist"]["value"] == 3
    claims = {c["claim"] for c in data["verification"]["claims"]}
    assert {"group_order", "orbit_stabilizer", "det", "dist", "twin_detection", "complement_chain",
            "twin_action_kernel", "twin_action_image"} <= claims
    assert data["verification"]["ok"]


def test_analyze_c14_verified(c14):
    document = SymmetryAnalyzer(verify=True).analyze(c14)
    assert document.ok
    assert document.group["order"] == 28
    assert document.cotwins["k"] == 7
    assert not document.cotwins["triangle_free"]
    claims = {c.claim: c for c in document.verification}
    assert "cotwin_kernel" in claims
    pair_action = claims["cotwin_pair_action"]
    assert (pair_action.formula, pair_action.oracle) == ("not onto", "not onto")
    assert pair_action.ok


def test_crown_pair_action_is_onto():
    document = analyze(parse_spec(10, "±2,±4,5"), verify=True)
    assert document.ok
    pair_action = next(c for c in document.verification if c.claim == "cotwin_pair_action")
    assert (pair_action.method, pair_action.formula, pair_action.oracle) == ("crown", "onto", "onto")


def test_formula_disagreement_fails_report(c8_twins, mocker):
    mocker.patch("core.symmetry.SymmetryEngine.exhaustive_det", return_value=99)
    document = analyze(c8_twins)
    assert document.symmetry["det"]["confirmed"] is False
    assert document.disagreements == ["det"]
    assert not document.ok


def test_twin_free_cotwin_free_falls_to_oracle():
    document = analyze(parse_spec(8, "±1,±2,4"))
    assert document.twins["kind"] == "none"
    assert document.cotwins["kind"] == "none"
    assert document.group["provenance"] == "oracle"
    assert document.verification is None
    assert "verification" not in document.to_dict()


def test_cotwin_section():
    analyzer = SymmetryAnalyzer(mode="formula")
    assert analyzer.cotwin_section(parse_spec(8, "±1,±3,4"))["skipped"] == "graph has twins"
    section = analyzer.cotwin_section(parse_spec(10, "±2,±4,5"))
    assert section["kind"] == "adjacent"
    assert section["via_complement"]
    assert section["crown"]["k"] == 5


def test_named_graph_input(icosahedron):
    document = analyze(icosahedron, mode="formula", label="icosahedron")
    assert document.input["graph_spec"] == "icosahedron"
    assert document.symmetry["det"]["value"] == 3
    assert describe_input(icosahedron, None)["graph_spec"] == "G_12"


def test_describe_circulant(c8_twins):
    data = describe_input(build(c8_twins), c8_twins)
    assert data["canonical"] == "C_8(1,3,4,5,7)"
    assert data["edges"] == 20
    assert data["connected"] and not data["bipartite"]


def test_small_corpus():
    summary = verify_corpus(8)
    assert summary.ok, [f.to_dict() for f in summary.failures]
    assert summary.checks["group_order"] == summary.graphs
    assert summary.checks["twin_detection"] > 0
    assert summary.to_dict()["ok"]
    assert set(summary.frame()["check"]) == set(summary.checks)


@pytest.mark.slow
def test_corpus_to_14():
    summary = verify_corpus(14)
    assert summary.ok, [f.to_dict() for f in summary.failures]


@pytest.mark.slow
def test_corpus_to_24():
    summary = verify_corpus(24)
    assert summary.ok, [f.to_dict() for f in summary.failures]
    assert summary.checks["group_order"] == summary.graphs


def test_corpus_rejects_bad_bound():
    with pytest.raises(ValueError):
        CorpusVerifier(0)

import json

import pandas as pd

from analytics.analyzer import analyze
from core.errors import NotInverseClosedError
from core.twins import quotient_sequence
from export.export_engine import ExportEngine


def test_json_is_deterministic(c8_twins):
    engine = ExportEngine()
    first = engine.export_json(analyze(c8_twins, mode="formula"))
    second = engine.export_json(analyze(c8_twins, mode="formula"))
    assert first == second
    assert "±" in first
    assert json.loads(first)["schema"] == 1


def test_schema_added_to_plain_dicts():
    data = json.loads(ExportEngine().export_json({"value": frozenset({3, 1})}))
    assert data == {"schema": 1, "value": [1, 3]}


def test_error_document():
    data = json.loads(ExportEngine().export_error(NotInverseClosedError("1 lacks 7")))
    assert data == {"schema": 1, "error": {"type": "NotInverseClosedError", "message": "1 lacks 7"}}


def test_chain_dot_files(c8_twins, tmp_path):
    engine = ExportEngine()
    documents = engine.export_chain_dot(quotient_sequence(c8_twins))
    assert sorted(documents) == ["step_0.dot", "step_1.dot", "step_2.dot", "step_3.dot"]
    assert documents["step_3.dot"] == "graph step_3 {\n  0;\n}\n"
    paths = engine.write_dot_files(documents, tmp_path / "dot")
    assert len(paths) == 4
    assert (tmp_path / "dot" / "step_1.dot").read_text(encoding="utf-8").count("--") == 4


def test_table_exports():
    engine = ExportEngine()
    frame = pd.DataFrame([{"n": 6, "pattern": "C_6(1,3)"}])
    assert engine.export_table_csv(frame) == 'n,pattern\n6,"C_6(1,3)"\n'
    data = json.loads(engine.export_table_json(frame, "table1"))
    assert data == {"schema": 1, "job": "table1", "rows": [{"n": 6, "pattern": "C_6(1,3)"}]}


def test_text_summary(c8_twins):
    text = ExportEngine().export_text(analyze(c8_twins, mode="formula", verify=True).to_dict())
    assert text.startswith("# C_8(±1,±3,4)\n")
    assert "|Aut| = 128" in text
    assert "det = 4 [Cor-DetTwins]" in text
    assert "all verified" in text


def test_save_to_file(tmp_path):
    path = ExportEngine().save_to_file("x\n", tmp_path / "nested" / "out.txt")
    assert path.read_text(encoding="utf-8") == "x\n"

import json
import subprocess
import sys

import pytest

from rdfrelate.cli import run

from .worked_examples import CAT_SUBCLASS, OO_PP_T1, SS_PP_T1, SS_PP_T2, ZOO_TRIPLES


@pytest.fixture
def ss_files(tmp_path):
    a, b = tmp_path / "t1.nt", tmp_path / "t2.nt"
    a.write_text(SS_PP_T1)
    b.write_text(SS_PP_T2)
    return a, b


@pytest.fixture
def zoo_files(tmp_path):
    paths = []
    for i, text in enumerate(ZOO_TRIPLES, start=1):
        p = tmp_path / f"zoo{i}.nt"
        p.write_text(text)
        paths.append(str(p))
    schema = tmp_path / "subclass.nt"
    schema.write_text(CAT_SUBCLASS)
    return paths, str(schema)


def test_strict_ss_pair(ss_files, capsys):
    a, b = ss_files
    assert run([str(a), str(b), "--mode", "strict"]) == 0
    out, err = capsys.readouterr()
    doc = json.loads(out)
    assert err == ""
    assert doc["nodes"] == ["t1", "t2"]
    assert [(e["from"], e["to"], e["kinds"]) for e in doc["edges"]] == [
        ("t1", "t2", ["SS_PP"]),
        ("t2", "t1", ["SS_PP"]),
    ]


def test_named_inputs_and_tsv(ss_files, capsys):
    a, b = ss_files
    assert run([f"T1={a}", f"T2={b}", "--format", "tsv"]) == 0
    assert capsys.readouterr().out == "T1\tT2\tSS_PP\t1\nT2\tT1\tSS_PP\t1\n"


def test_no_inputs_is_usage_error(capsys):
    assert run([]) == 2
    assert "usage:" in capsys.readouterr().err


def test_bad_option_value(ss_files, capsys):
    a, _ = ss_files
    assert run([str(a), "--format", "xml"]) == 2
    assert run([str(a), "--mode", "fuzzy"]) == 2


def test_duplicate_names_are_usage_errors(ss_files, capsys):
    a, b = ss_files
    assert run([f"X={a}", f"X={b}"]) == 2


def test_zoo_dot_with_inference(zoo_files, capsys):
    paths, schema = zoo_files
    assert run([*paths, "--infer", "--schema", schema, "--format", "dot"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph relations {")
    assert "(dim=3)" in out


def test_zoo_no_inference_has_only_direct_edges(zoo_files, capsys):
    paths, _ = zoo_files
    assert run([*paths, "--format", "tsv"]) == 0
    rows = capsys.readouterr().out.splitlines()
    assert all(r.endswith("\t1") for r in rows)
    assert not any(r.startswith("zoo1\tzoo2") for r in rows)


def test_parse_error_reports_location(tmp_path, capsys):
    bad = tmp_path / "bad.nt"
    bad.write_text(SS_PP_T1 + "<a> <b>\n")
    assert run([str(bad)]) == 1
    out, err = capsys.readouterr()
    assert out == ""
    assert f"{bad}:2:8:" in err


def test_missing_file(tmp_path, capsys):
    assert run([str(tmp_path / "nope.nt")]) == 1
    assert "nope.nt" in capsys.readouterr().err


def test_strict_ntriples_flag(tmp_path, capsys):
    p = tmp_path / "lit.nt"
    p.write_text(OO_PP_T1)
    assert run([str(p)]) == 0
    capsys.readouterr()
    assert run([str(p), "--strict-ntriples"]) == 1


def test_out_file_and_determinism(zoo_files, tmp_path, capsys):
    paths, schema = zoo_files
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    assert run([*paths, "--schema", schema, "--enable-domain", "--out", str(out1)]) == 0
    assert run([*paths, "--schema", schema, "--enable-domain", "--out", str(out2)]) == 0
    assert capsys.readouterr().out == ""
    assert out1.read_bytes() == out2.read_bytes()
    assert json.loads(out1.read_text())["config"]["inference"]["enable_domain"] is True


def test_console_entry_point(ss_files):
    a, b = ss_files
    proc = subprocess.run(
        [sys.executable, "-m", "rdfrelate.cli", str(a), str(b), "--format", "dot"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert '"t1" -> "t2" [label="SS_PP (dim=1)", dir=both];' in proc.stdout

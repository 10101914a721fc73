import json
import subprocess
import sys
from pathlib import Path

import pytest

from smallgraphs import complete_graph

from pancert import cli
from pancert.construction import build_graph
from pancert.serialize import to_json
from pancert.verify import CHECK_NAMES


@pytest.fixture(autouse=True)
def clean_env(monkeypatch, tmp_path):
    for name in list(__import__("os").environ):
        if name.startswith(cli.ENV_PREFIX):
            monkeypatch.delenv(name)
    monkeypatch.chdir(tmp_path)


def test_build_default_out(capsys):
    assert cli.main(["build", "--k", "1"]) == 0
    assert capsys.readouterr().out == "wrote G_1.json\n"
    assert Path("G_1.json").read_text() == to_json(build_graph(1))


def test_build_dot(tmp_path):
    out = tmp_path / "g.dot"
    assert cli.main(["build", "--k", "1", "--format", "dot", "--out", str(out)]) == 0
    assert out.read_text().startswith('graph "G_1"')


def test_export_stdout(capsys):
    assert cli.main(["export", "--k", "1"]) == 0
    assert capsys.readouterr().out.startswith('graph "G_1"')


def test_export_json_file(tmp_path):
    out = tmp_path / "g.json"
    assert cli.main(["export", "--k", "2", "--format", "json", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["k"] == 2


def test_verify_pass(capsys):
    assert cli.main(["verify", "--k", "1", "--out", "report.json"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[: len(CHECK_NAMES)] == [f"check {n}: pass" for n in CHECK_NAMES]
    assert lines[-1] == "verify G_1: pass"
    report = json.loads(Path("report.json").read_text())
    assert report["ok"] is True
    by_name = {c["name"]: c for c in report["checks"]}
    assert by_name["connectivity"]["details"]["kappa"] == 4


def test_verify_subset(capsys):
    assert cli.main(["verify", "--k", "1", "--checks", "layers,sumfree"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["check sumfree: pass", "check layers: pass", "verify G_1: pass"]


def test_verify_unknown_check(capsys):
    assert cli.main(["verify", "--k", "1", "--checks", "sumfree,bogus"]) == 2
    assert "unknown check: 'bogus'" in capsys.readouterr().err


def test_verify_empty_checks(capsys):
    assert cli.main(["verify", "--k", "1", "--checks", " , "]) == 2
    assert "empty --checks selection" in capsys.readouterr().err


def test_verify_failing_seed_still_writes_report(capsys):
    Path("k5.json").write_text(to_json(complete_graph(5)))
    rc = cli.main(["verify", "--seed-graph", "k5.json", "--out", "report.json"])
    assert rc == 1
    out = capsys.readouterr().out
    assert "check obstructions: FAIL" in out
    assert "verify imported:k5.json: FAIL" in out
    report = json.loads(Path("report.json").read_text())
    assert report["ok"] is False


def test_certify(capsys):
    assert cli.main(["certify", "--k", "1", "--out", "certs.jsonl"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "wrote certs.jsonl"
    summary = json.loads(lines[1])
    assert summary == {
        "archive": "certs.jsonl",
        "graph": "G_1",
        "k": 1,
        "ok": True,
        "synthesized": 528,
        "total": 528,
    }
    archive = Path("certs.jsonl").read_text().splitlines()
    assert len(archive) == 528
    first = json.loads(archive[0])
    assert first["m"] == 3 and len(first["cycle"]) == 3


def test_certify_default_out():
    assert cli.main(["certify", "--k", "1"]) == 0
    assert Path("certificates_G_1.jsonl").exists()


def test_oracle_sampled(capsys):
    rc = cli.main(["oracle", "--k", "1", "--sample-vertices", "4", "--sample-edges", "6"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "oracle cross-check G_1: ok (4 vertex anchors, 6 edge anchors)" in out


def test_oracle_report_file():
    rc = cli.main(
        ["oracle", "--k", "1", "--sample-vertices", "2", "--sample-edges", "2",
         "--out", "oracle.json"]
    )
    assert rc == 0
    report = json.loads(Path("oracle.json").read_text())
    assert report["ok"] is True
    assert len(report["vertex_profiles"]) == 2


def test_oracle_guard_blocks_large_instance(capsys):
    assert cli.main(["oracle", "--k", "3"]) == 2
    assert "instance too large for oracle" in capsys.readouterr().err


def test_env_k(monkeypatch, capsys):
    monkeypatch.setenv("PANCERT_K", "1")
    assert cli.main(["export"]) == 0
    assert capsys.readouterr().out.startswith('graph "G_1"')


def test_flag_beats_env(monkeypatch):
    monkeypatch.setenv("PANCERT_K", "2")
    assert cli.main(["build", "--k", "1", "--out", "g.json"]) == 0
    assert json.loads(Path("g.json").read_text())["k"] == 1


def test_env_guard_and_flag_precedence(monkeypatch, capsys):
    monkeypatch.setenv("PANCERT_ORACLE_GUARD", "10")
    assert cli.main(["oracle", "--k", "1", "--sample-vertices", "1",
                     "--sample-edges", "1"]) == 2
    capsys.readouterr()
    rc = cli.main(["oracle", "--k", "1", "--oracle-guard", "60",
                   "--sample-vertices", "1", "--sample-edges", "1"])
    assert rc == 0


def test_bad_env_int(monkeypatch, capsys):
    monkeypatch.setenv("PANCERT_K", "zzz")
    assert cli.main(["build"]) == 2
    assert "PANCERT_K must be an integer, got 'zzz'" in capsys.readouterr().err


def test_k_zero(capsys):
    assert cli.main(["build", "--k", "0"]) == 2
    assert "k must be a positive integer" in capsys.readouterr().err


def test_missing_k(capsys):
    assert cli.main(["build"]) == 2
    assert "--k is required (or set PANCERT_K)" in capsys.readouterr().err


def test_seed_graph_missing_file(capsys):
    assert cli.main(["verify", "--seed-graph", "nope.json"]) == 2
    assert "error:" in capsys.readouterr().err


def test_seed_graph_schema_error(capsys):
    Path("bad.json").write_text('{"k": 1}')
    assert cli.main(["verify", "--seed-graph", "bad.json"]) == 2
    assert "error:" in capsys.readouterr().err


def test_seed_graph_k_mismatch(capsys):
    assert cli.main(["build", "--k", "1", "--out", "g1.json"]) == 0
    capsys.readouterr()
    assert cli.main(["verify", "--seed-graph", "g1.json", "--k", "2"]) == 2
    assert "disagrees with seed graph k=1" in capsys.readouterr().err


def test_workers_must_be_positive(capsys):
    assert cli.main(["certify", "--k", "1", "--workers", "0"]) == 2
    assert "workers must be >= 1" in capsys.readouterr().err


def test_unknown_format(capsys):
    assert cli.main(["build", "--k", "1", "--format", "xml"]) == 2
    assert "unknown format: 'xml'" in capsys.readouterr().err


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "pancert.cli", "build", "--k", "1"],
        cwd=tmp_path,
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert (tmp_path / "G_1.json").exists()

"""
Tests for the dissoc command line: exit codes, text and JSON output.

Run with: pytest tests/test_cli.py -v
"""

import io
import json
import math

import pytest

from src.cli import main
from src.models.config import RunConfig
from src.services.canonical_service import is_isomorphic
from src.services.graph_builders import path
from src.services.graph_codec import decode_graph6, encode_graph6


@pytest.fixture(autouse=True)
def isolated_env(monkeypatch, tmp_path):
    for var in ("DISSOC_WORKERS", "DISSOC_TOLERANCE", "DISSOC_OUTPUT_DIR", "DISSOC_SEED"):
        monkeypatch.delenv(var, raising=False)
    monkeypatch.setenv("DISSOC_OUTPUT_DIR", str(tmp_path))
    monkeypatch.setenv("DISSOC_WORKERS", "1")


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_rho_json(capsys):
    assert main(["--format", "json", "rho", "Bg"]) == 0
    out = _json(capsys)
    assert out["graph6"] == "Bg"
    assert out["spectrum"]["rho"] == pytest.approx(math.sqrt(2), abs=1e-10)
    assert len(out["spectrum"]["perron"]) == 3


def test_rho_of_family_label_as_text(capsys):
    assert main(["rho", "G(0,0,0;0,0,0)"]) == 0
    first = capsys.readouterr().out.splitlines()[0]
    assert first.startswith("rho = 1.84775906502")


def test_rho_reads_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO("Bg\n"))
    assert main(["--format", "json", "rho", "-"]) == 0
    assert _json(capsys)["n"] == 3


def test_diss_json(capsys):
    assert main(["--format", "json", "diss", encode_graph6(path(7))]) == 0
    out = _json(capsys)
    assert out["diss"] == 5
    assert out["method"] == "tree-dp"
    assert len(out["certificate"]["set"]) == 5


def test_family_build(capsys):
    argv = ["--format", "json", "family", "build", "--type", "G", "--a", "1", "--p", "6", "--q", "5", "--r", "6"]
    assert main(argv) == 0
    out = _json(capsys)
    assert out["n"] == 42
    assert out["anchors"] == [0, 3, 6]
    assert out["dot"].startswith("graph G {")


def test_reduced_solve(capsys):
    assert main(["--format", "json", "reduced", "solve", "--spec", "G(0,0,0;2,1,2)"]) == 0
    out = _json(capsys)
    assert out["status"] == "PASS"
    assert out["n"] == 17
    assert out["difference"] <= 1e-9


def test_verify_suite(capsys):
    assert main(["verify", "star"]) == 0
    assert "star: PASS" in capsys.readouterr().out


def test_search_trees(capsys):
    assert main(["--format", "json", "search", "trees", "--n", "10", "--no-checkpoint"]) == 0
    out = _json(capsys)
    assert out["psi"] == 7
    assert is_isomorphic(decode_graph6(out["winner"]["g6"]), path(10))


def test_theorem1(capsys):
    assert main(["--format", "json", "theorem1", "--n", "17"]) == 0
    out = _json(capsys)
    assert out["spec"]["p"] == 2 and out["spec"]["q"] == 1 and out["spec"]["r"] == 2
    assert out["confirmed"] is None


def test_save_writes_report(tmp_path, capsys):
    assert main(["--save", "rho", "Bg"]) == 0
    saved = list(tmp_path.glob("rho_*.json"))
    assert len(saved) == 1
    assert json.loads(saved[0].read_text(encoding="utf-8"))["n"] == 3


def test_exit_codes(capsys):
    assert main(["rho", "B!"]) == 2
    assert main(["theorem1", "--n", "11"]) == 1
    assert main(["no-such-command"]) == 2
    assert main(["--workers", "0", "rho", "Bg"]) == 2
    assert main(["reduced", "solve", "--spec", "G(1,0,0;1,0,1)"]) == 1
    assert "ERROR" in capsys.readouterr().err


# ----------------------------------------------------------------------
# Configuration
# ----------------------------------------------------------------------

def test_config_from_env(monkeypatch, tmp_path):
    monkeypatch.setenv("DISSOC_WORKERS", "3")
    monkeypatch.setenv("DISSOC_SEED", "7")
    config = RunConfig.from_env()
    assert config.workers == 3
    assert config.seed == 7
    assert config.output_dir == tmp_path
    assert RunConfig.from_env(workers=2, seed=None).workers == 2


def test_config_rejects_bad_values(monkeypatch):
    monkeypatch.setenv("DISSOC_TOLERANCE", "-1")
    with pytest.raises(ValueError):
        RunConfig.from_env()


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))

import io
import json

import pytest

from curvemix import __version__
from curvemix.cli.commands import run_command
from curvemix.cli.config import CliConfig
from curvemix.cli.scripts import SCRIPTS, curvemix
from curvemix.core.errors import CurvemixError, ExitCode
from curvemix.core.margins import make_instance, regular_instance
from curvemix.statespace.enumeration import MAX_STATES_ENV


def _run(subcommand, path, **kwargs):
    out = io.StringIO()
    code = run_command(CliConfig(subcommand, instance=path, **kwargs), out)
    return code, out.getvalue()


@pytest.fixture
def perm3_path(perm3, write_instance):
    return write_instance(perm3, "perm3.json")


# settings

def test_config_validation(perm3_path, tmp_path, monkeypatch):
    cfg = CliConfig("mix", instance=perm3_path)
    assert cfg.chain_spec.describe() == "curveball"
    assert cfg.header() == dict(version=__version__, tol=cfg.tol, instance=perm3_path)
    for bad in (dict(fmt="xml"), dict(chain="swap"), dict(epsilon=0.0), dict(count=0), dict(max_states=0),
                dict(horizon=-1), dict(tol=-1.0)):
        with pytest.raises(CurvemixError):
            CliConfig("mix", instance=perm3_path, **bad)
    with pytest.raises(CurvemixError):
        CliConfig("explode", instance=perm3_path)
    with pytest.raises(CurvemixError):
        CliConfig("mix", instance=str(tmp_path / "missing.json"))
    monkeypatch.setenv(MAX_STATES_ENV, "5")
    assert CliConfig("enumerate", instance=perm3_path).max_states == 5


# subcommands

def test_enumerate_formats(perm3_path):
    code, text = _run("enumerate", perm3_path, fmt="table")
    lines = text.splitlines()
    assert code == ExitCode.OK and lines[0] == "N=6" and len(lines) == 7
    code, text = _run("enumerate", perm3_path, fmt="json")
    data = json.loads(text)
    assert data["N"] == 6 and data["states"][0] == [[0, 0, 1], [0, 1, 0], [1, 0, 0]]
    assert data["version"] == __version__
    code, text = _run("enumerate", perm3_path, fmt="csv")
    assert text.splitlines()[0] == "index,key,rows" and len(text.splitlines()) == 7


def test_enumerate_errors(perm3_path, write_instance):
    code, text = _run("enumerate", write_instance(make_instance([2, 0], [2, 0]), "empty.json"))
    assert code == ExitCode.EMPTY_SPACE and text == ""
    code, text = _run("enumerate", perm3_path, max_states=3)
    assert code == ExitCode.TOO_LARGE and text == ""


def test_sample(perm3_path):
    first = _run("sample", perm3_path, chain="ktv", steps=30, count=4, seed=11, fmt="json")
    assert first == _run("sample", perm3_path, chain="ktv", steps=30, count=4, seed=11, fmt="json")
    assert first[0] == ExitCode.OK and len(json.loads(first[1])["samples"]) == 4
    code, text = _run("sample", perm3_path, steps=5, count=2, fmt="table")
    assert text.count("\n\n") == 1 and len(text.split()) == 6
    code, text = _run("sample", perm3_path, steps=5, count=2, fmt="csv")
    assert text.splitlines()[0] == "sample,row,bits" and len(text.splitlines()) == 7


def test_sample_rejects_bad_chains(perm3_path):
    assert _run("sample", perm3_path, chain="kcurveball:2")[0] == ExitCode.USAGE
    # u = l = 1 everywhere, so gamma = 1 breaks the holding assumption
    assert _run("sample", perm3_path, chain="gamma:1")[0] == ExitCode.CHECK_FAILED
    assert _run("sample", perm3_path, chain="ktv-classic", steps=3)[0] == ExitCode.OK


def test_matrix(perm3_path):
    code, text = _run("matrix", perm3_path, fmt="csv")
    rows = text.splitlines()
    assert code == ExitCode.OK and len(rows) == 6
    assert rows[0] == "1/2,1/6,1/6,0/1,0/1,1/6"
    data = json.loads(_run("matrix", perm3_path, chain="ktv", fmt="json")[1])
    assert data["entries"][0][0] == "2/3" and data["chain"] == "ktv"


def test_spectrum(perm3_path):
    data = json.loads(_run("spectrum", perm3_path, full=True)[1])
    assert data["relaxation_1"] == pytest.approx(2.0)
    assert len(data["eigenvalues"]) == 6
    data = json.loads(_run("spectrum", perm3_path, chain="edge")[1])
    assert data["periodic"] and data["relaxation"] is None
    code, text = _run("spectrum", perm3_path, fmt="csv")
    assert text.splitlines()[0] == "index,eigenvalue" and len(text.splitlines()) == 7


def test_mix(perm3_path):
    code, text = _run("mix", perm3_path, epsilon=0.05)
    data = json.loads(text)
    assert code == ExitCode.OK and data["tau"] == 4 and data["passed"]
    code, text = _run("mix", perm3_path, fmt="csv")
    assert text.splitlines()[0] == "t,d" and len(text.splitlines()) == 4
    assert _run("mix", perm3_path, chain="edge")[0] == ExitCode.REDUCIBLE
    assert _run("mix", perm3_path, epsilon=0.01, horizon=2)[0] == ExitCode.CHECK_FAILED


def test_compare(perm3_path):
    code, text = _run("compare", perm3_path, fmt="table")
    assert code == ExitCode.OK
    assert text.rstrip().splitlines()[-1] == "PASS"
    assert "[PASS] Curveball vs KTV relaxation" in text


def test_verify(perm3_path, regular4_2, write_instance):
    code, text = _run("verify", perm3_path, fmt="json")
    data = json.loads(text)
    assert code == ExitCode.OK and data["passed"]
    theorems = [r["theorem"] for r in data["reports"]]
    assert "heat-bath identity" in theorems and "switch block decomposition" in theorems
    assert sum(t.startswith("mixing bounds") for t in theorems) == 3
    code, _ = _run("verify", write_instance(regular4_2, "regular.json"), fmt="csv")
    assert code == ExitCode.OK


@pytest.mark.parametrize("rows,cols", [([2], [1, 1]), ([0], [0, 0, 0]), ([3], [1, 1, 1])])
def test_verify_single_row(write_instance, rows, cols):
    code, text = _run("verify", write_instance(make_instance(rows, cols), "row.json"), fmt="json")
    data = json.loads(text)
    assert code == ExitCode.OK and data["passed"]
    assert any(r["theorem"] == "mixing bounds (curveball)" for r in data["reports"])


def test_verify_reducible(write_instance):
    code, text = _run("verify", write_instance(regular_instance(3, 1), "cycles.json"), fmt="json", full=True)
    data = json.loads(text)
    assert code == ExitCode.REDUCIBLE and not data["passed"]
    assert [s["N"] for s in data["component_spectra"]] == [1, 1]
    assert data["reports"][-1]["reducible"]


# console entry points

def test_dispatcher_usage(capsys):
    assert curvemix([]) == ExitCode.USAGE
    assert curvemix(["bogus"]) == ExitCode.USAGE
    assert "usage: curvemix" in capsys.readouterr().err
    assert curvemix(["enumerate"]) == ExitCode.USAGE
    assert curvemix(["enumerate", "--help"]) == ExitCode.OK
    assert set(SCRIPTS) == {"enumerate", "sample", "matrix", "spectrum", "compare", "mix", "verify"}


def test_dispatcher_runs_subcommands(perm3_path, capsys):
    assert curvemix(["enumerate", perm3_path, "--fmt", "table"]) == ExitCode.OK
    assert capsys.readouterr().out.startswith("N=6\n")
    assert curvemix(["mix", perm3_path, "--epsilon", "0.01", "--fmt", "json"]) == ExitCode.OK
    assert json.loads(capsys.readouterr().out)["tau"] == 7
    assert curvemix(["sample", perm3_path, "--chain", "swap"]) == ExitCode.USAGE
    assert curvemix(["enumerate", perm3_path, "--max_states", "2"]) == ExitCode.TOO_LARGE

import json
import os
import subprocess
import sys

import pytest

from leonard_trio.cli import main

LIT = {"q": "3/5", "alpha": "1/3", "beta": "1/7", "delta": "2", "s": "1/2", "N": 3}


def _cfg(tmp_path, **doc):
    p = tmp_path / "cfg.json"
    p.write_text(json.dumps(doc))
    return str(p)


def test_verify_pass_and_deterministic(tmp_path):
    cfg = _cfg(tmp_path, parameter_sets=[LIT], battery={"seed": 2, "count": 2, "N_choices": [2]},
               suites=["qaskey", "heun", "r1"], output={"format": "json"})
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify", "--config", cfg, "--out", str(a)]) == 0
    assert main(["verify", "--config", cfg, "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert all(c["status"] == "pass" for c in json.loads(a.read_text()))


def test_verify_formats(tmp_path):
    cfg = _cfg(tmp_path, parameter_sets=[LIT], suites=["biorthogonality"])
    for fmt, probe in (("csv", "identity,anchor"), ("md", "| identity |")):
        out = tmp_path / f"r.{fmt}"
        assert main(["verify", "--config", cfg, "--format", fmt, "--out", str(out)]) == 0
        assert out.read_text().startswith(probe)


@pytest.mark.parametrize("doc", [
    {"suites": []},
    {"suites": ["nope"], "parameter_sets": [LIT]},
    {"suites": ["heun"], "parameter_sets": [dict(LIT, q="3/x")]},
    {"suites": ["heun"], "parameter_sets": [dict(LIT, q=0.6)]},
    {"suites": ["heun"], "mode": "float:256"},
    {"suites": ["r1"], "mode": "float:abc"},
    {"suites": ["r1"]},
])
def test_config_errors_exit_2(tmp_path, doc):
    assert main(["verify", "--config", _cfg(tmp_path, **doc)]) == 2


def test_bad_json_exit_2(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{")
    assert main(["verify", "--config", str(p)]) == 2


def test_genericity_exhausted_exit_3(tmp_path):
    cfg = _cfg(tmp_path, suites=["heun"], battery={"seed": 0, "count": 1, "height": 1, "max_resample": 3})
    assert main(["verify", "--config", cfg]) == 3


def test_failing_identity_exit_1(tmp_path, monkeypatch):
    from leonard_trio import battery
    from leonard_trio.report import VerificationReport

    def broken(ps):
        rep = VerificationReport()
        rep.residual("planted", "1 = 0", [1], ps.as_strings(), ps.N)
        return rep

    monkeypatch.setitem(battery.SUITE_FUNCS, "heun", broken)
    cfg = _cfg(tmp_path, parameter_sets=[LIT], suites=["heun", "r1"])
    assert main(["verify", "--config", cfg, "--out", str(tmp_path / "o.json")]) == 1


def test_float_mode(tmp_path):
    cfg = _cfg(tmp_path, suites=["reduced"])
    out = tmp_path / "f.json"
    assert main(["verify", "--config", cfg, "--mode", "float:128", "--out", str(out)]) == 0
    assert [c["identity"] for c in json.loads(out.read_text())] == ["limit-beta-to-0-r"]


def test_report_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("REPORT_DIR", str(tmp_path / "reports"))
    cfg = _cfg(tmp_path, parameter_sets=[LIT], suites=["r3"])
    assert main(["verify", "--config", cfg, "--out", "r3.json"]) == 0
    assert (tmp_path / "reports" / "r3.json").exists()


def _params(tmp_path):
    p = tmp_path / "p.json"
    p.write_text(json.dumps(LIT))
    return str(p)


def test_table_w_first_entry(tmp_path):
    out = tmp_path / "w.csv"
    assert main(["table", "--fn", "w", "--params", _params(tmp_path), "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "n,x,value"
    assert lines[1] == "0,0,7046154505/1022329"


def test_table_qracah_first_row(tmp_path):
    out = tmp_path / "q.csv"
    assert main(["table", "--fn", "qracah", "--params", _params(tmp_path), "--out", str(out)]) == 0
    rows = [r.split(",") for r in out.read_text().splitlines()[1:]]
    assert all(v == "1" for n, x, v in rows if n == "0")


def test_table_r1_routes_identical(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    p = _params(tmp_path)
    assert main(["table", "--fn", "r1", "--params", p, "--out", str(a)]) == 0
    assert main(["table", "--fn", "r1", "--params", p, "--route", "sum", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize("fn", ["wilson", "w-partner", "h1", "r3"])
def test_table_other_functions(tmp_path, fn):
    out = tmp_path / "t.json"
    assert main(["table", "--fn", fn, "--params", _params(tmp_path), "--format", "json", "--out", str(out)]) == 0
    assert len(json.loads(out.read_text())) == 16


def test_table_non_generic_exit_2(tmp_path):
    p = tmp_path / "p.json"
    p.write_text(json.dumps(dict(LIT, s="7/2")))
    assert main(["table", "--fn", "w", "--params", str(p)]) == 2


def test_module_entry_point_default_config(tmp_path):
    env = {**os.environ, "REPORT_DIR": str(tmp_path)}
    r = subprocess.run([sys.executable, "-m", "leonard_trio", "verify"], env=env, capture_output=True, text=True)
    assert r.returncode == 0, r.stderr
    assert (tmp_path / "report.json").exists()

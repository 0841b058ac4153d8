import io
import json
import subprocess
import sys

import pytest
from jsonschema import Draft202012Validator

from doa.cli import run
from doa.schemas import OBSTRUCTION_SYSTEM, SCHEMAS, report_schema_version


def invoke(*argv):
    buf = io.StringIO()
    code = run(list(argv), stdout=buf)
    text = buf.getvalue()
    report = json.loads(text) if text else None
    if report is not None:
        Draft202012Validator(SCHEMAS[report["verb"]]).validate(report)
        assert report["schema_version"] == report_schema_version()
    return code, report, text


def write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(json.dumps(data), encoding="utf-8")
    return str(p)


def test_schema_version():
    assert report_schema_version() == "1.0"
    for schema in SCHEMAS.values():
        Draft202012Validator.check_schema(schema)


def test_verify_pass():
    code, rep, _ = invoke("verify", "--family", "refl-tri", "--n", "4")
    assert code == 0 and rep["status"] == "pass" and rep["family"] == "refl-tri"


def test_verify_conditional_with_bindings(tmp_path):
    code, rep, _ = invoke("verify", "--family", "refl-full", "--n", "4")
    assert code == 1 and rep["status"] == "conditional" and rep["residual"]["generators"]
    b = write(tmp_path, "b.json", {"alpha": "0", "beta": "0"})
    code, rep, _ = invoke("verify", "--family", "refl-full", "--n", "4", "--bindings", b, "--compact")
    assert code == 0 and rep["status"] == "pass"


def test_verify_std_lie_certificate():
    code, rep, _ = invoke("verify", "--family", "std-lie", "--n", "4")
    assert code == 1
    cert = rep["certificate"]
    assert cert["linear_part_vanishes"] and cert["membership"]["a7^2"]


def test_verify_family_file(tmp_path):
    spec = write(tmp_path, "fam.json", {"name": "combined", "n": 4,
                                        "bindings": {"aperp": "1", "bperp": "0", "a4": "1", "b4": "0",
                                                     "alpha": "1", "c": "1"}})
    code, rep, _ = invoke("verify", "--family", spec)
    assert code == 0 and rep["n"] == 4
    code, _, _ = invoke("verify", "--family", spec, "--n", "5")
    assert code == 2


def test_extract_and_compare(tmp_path):
    out = str(tmp_path / "lie4.json")
    code, rep, _ = invoke("extract", "--family", "lie", "--n", "4", "--out", out)
    assert code == 1 and rep["count"] == 22
    saved = json.loads(open(out, encoding="utf-8").read())
    Draft202012Validator(OBSTRUCTION_SYSTEM).validate(saved)
    code, rep, _ = invoke("compare", "--left", out, "--right", "ledger:LOA-full", "--mode", "ideal")
    assert code == 0 and rep["equal"]
    code, rep, _ = invoke("compare", "--left", out, "--right", "ledger:Obstr1", "--mode", "ideal")
    assert code == 1 and not rep["equal"] and rep["left_only"]


def test_extract_empty_system_exit_zero():
    code, rep, _ = invoke("extract", "--family", "refl-tri", "--n", "4")
    assert code == 0 and rep["count"] == 0


def test_compare_family_set_mode():
    code, rep, _ = invoke("compare", "--left", "family:refl-full", "--right", "ledger:Obstr2PhiC1C2C3L2",
                          "--mode", "set", "--n", "5")
    assert code == 0 and rep["left_count"] == rep["right_count"] == 4


def test_groebner_dimension():
    code, rep, _ = invoke("groebner", "--in", "family:refl-full", "--n", "4", "--dimension", "--degree", "--show")
    assert code == 0
    assert (rep["affine_dim"], rep["projective_dim"], rep["degree"]) == (5, 4, 1)
    assert rep["symbols"] == ["alpha", "beta", "c", "a", "aperp", "b", "bperp"]
    code, rep, _ = invoke("groebner", "--in", "ledger:Obstr2PhiC1C2C3L2", "--n", "4", "--dimension",
                          "--symbols", "alpha,beta,a,aperp,b,bperp")
    assert (rep["affine_dim"], rep["projective_dim"]) == (4, 3)
    code, _, _ = invoke("groebner", "--in", "ledger:Obstr2PhiC1C2C3L2", "--n", "4", "--symbols", "zeta")
    assert code == 2


def test_groebner_timeout_reported():
    code, rep, _ = invoke("groebner", "--in", "ledger:LOA-full", "--n", "4", "--budget", "0")
    assert code == 1 and rep["timeout"]


def test_oracle(tmp_path):
    ok = write(tmp_path, "ok.json", {"alpha": 1, "beta": 0, "c": 2})
    code, rep, _ = invoke("oracle", "--family", "rca-perm", "--n", "4", "--point", ok, "--cross-check")
    assert code == 0 and rep["pass"] and rep["symbolic_agrees"]
    lie_point = {s: 0 for s in ("a1", "a2", "a3", "a4", "a5", "a6", "a7", "b1", "b2", "b3", "b5", "b6", "b7", "beta", "c")}
    lie_point.update(b4=1, alpha=1)
    bad = write(tmp_path, "bad.json", lie_point)
    code, rep, _ = invoke("oracle", "--family", "lie", "--n", "4", "--point", bad, "--cross-check")
    assert code == 1 and not rep["pass"] and rep["symbolic_agrees"]
    partial = write(tmp_path, "partial.json", {"alpha": 1})
    assert invoke("oracle", "--family", "rca-perm", "--n", "4", "--point", partial)[0] == 2


def test_invariants():
    code, rep, _ = invoke("invariants", "--n", "4")
    assert code == 0 and rep["pass"] and len(rep["checks"]) > 5


@pytest.mark.parametrize("argv", [
    ["verify", "--family", "nope", "--n", "4"],
    ["verify", "--family", "refl", "--n", "3"],
    ["verify", "--family", "refl"],
    ["compare", "--left", "ledger:Nope", "--right", "ledger:Obstr1", "--n", "4"],
    ["frobnicate"],
    [],
    ["invariants"],
])
def test_usage_errors(argv, capsys):
    assert run(argv, stdout=io.StringIO()) == 2


def test_malformed_json(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{not json", encoding="utf-8")
    assert invoke("compare", "--left", str(p), "--right", "ledger:Obstr1", "--n", "4")[0] == 2
    assert invoke("verify", "--family", "refl", "--n", "4", "--bindings", str(p))[0] == 2


def test_jobs_env(monkeypatch):
    monkeypatch.setenv("DOA_JOBS", "two")
    assert invoke("verify", "--family", "zero", "--n", "4")[0] == 2
    monkeypatch.setenv("DOA_JOBS", "2")
    code, rep, _ = invoke("verify", "--family", "refl-tri", "--n", "4")
    assert code == 0


def _strip_time(text):
    data = json.loads(text)
    data.pop("elapsed_ms")
    return json.dumps(data)


def test_deterministic_and_round_trip():
    _, rep1, t1 = invoke("verify", "--family", "lie", "--n", "4")
    _, rep2, t2 = invoke("verify", "--family", "lie", "--n", "4")
    assert _strip_time(t1) == _strip_time(t2)
    assert json.loads(json.dumps(rep1)) == rep1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "doa", "verify", "--family", "zero", "--n", "4", "--compact"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["status"] == "pass"

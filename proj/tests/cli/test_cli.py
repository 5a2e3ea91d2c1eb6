import json
import os
import subprocess
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[2]
CLI = os.environ.get("WLPKIT_CLI", str(ROOT / "build" / "wlpkit"))
SPECS = ROOT / "specs"


def run(*args, stdin=None, env=None, cache=None):
    full_env = {k: v for k, v in os.environ.items() if not k.startswith("WLPKIT_")}
    full_env.update(env or {})
    cmd = [CLI, *args]
    cmd += ["--cache-dir", str(cache)] if cache else ["--no-cache"]
    return subprocess.run(cmd, input=stdin, capture_output=True, text=True, env=full_env, timeout=300)


def report(*args, **kw):
    proc = run(*args, "--output", "json", **kw)
    return proc.returncode, json.loads(proc.stdout)


def test_hilbert_of_square_complete_intersection():
    code, rep = report("hilbert", "--spec", str(SPECS / "squares_ci_5.json"))
    assert code == 0
    assert [r["dim"] for r in rep["records"]] == [1, 5, 10, 10, 5, 1]
    assert all(r["dim"] == r["oracle"] for r in rep["records"])
    assert rep["summary"]["oracle"] == "hf_square_ci"
    assert rep["certified"] is True


def test_spec_from_stdin():
    text = (SPECS / "general_squares_7.json").read_text()
    code, rep = report("hilbert", "--spec", "-", stdin=text)
    assert code == 0
    assert [r["dim"] for r in rep["records"]] == [1, 7, 20, 28, 14]


def test_wlp_exit_codes():
    assert run("wlp", "--spec", str(SPECS / "general_squares_7.json")).returncode == 0
    failing = run("wlp", "--spec", str(SPECS / "general_squares_6.json"))
    assert failing.returncode == 2
    assert "verdict: fails" in failing.stdout


def test_cubes_example_fails_in_degree_four():
    code, rep = report("wlp", "--spec", str(SPECS / "cubes_plus_general_cube_4.json"))
    assert code == 2
    bad = [r for r in rep["records"] if not r["maximal"]]
    assert [(r["i"], r["dim_prev"], r["dim_cur"]) for r in bad] == [(4, 15, 15)]


def test_verify_hss_small_range():
    code, rep = report("verify-hss", "--r-min", "2", "--r-max", "7")
    assert code == 0
    assert [r["wlp"] for r in rep["records"]] == ["holds"] * 4 + ["fails", "holds"]
    assert all(r["agrees"] and r["certified"] for r in rep["records"])


def test_output_formats():
    spec = str(SPECS / "xyz_squares.json")
    csv = run("wlp", "--spec", spec, "--output", "csv")
    assert csv.returncode == 0
    assert csv.stdout.splitlines()[0].startswith("i,")
    text = run("wlp", "--spec", spec)
    assert "certified: true" in text.stdout


def test_syntax_error_reports_position(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"vars": 3,\n "generators": [ {"form": 1,}\n]}')
    proc = run("hilbert", "--spec", str(bad))
    assert proc.returncode == 1
    assert "line 2, column" in proc.stderr


def test_semantic_error_names_field():
    proc = run("hilbert", "--spec", "-", stdin='{"vars": 2, "generators": [{"power_of_linear": {"coeffs": [1], "exp": 2}}]}')
    assert proc.returncode == 1
    assert "/generators/0/power_of_linear/coeffs" in proc.stderr


def test_not_artinian():
    proc = run("hilbert", "--spec", "-", stdin='{"vars": 2, "generators": [{"power_of_linear": {"coeffs": [1, 0], "exp": 2}}]}')
    assert proc.returncode == 1
    assert "not artinian" in proc.stderr


def test_usage_errors():
    assert run().returncode == 1
    assert run("wlp").returncode == 1
    assert run("apolar", "--r", "12").returncode == 1
    proc = run("oracle", "nope")
    assert proc.returncode == 1
    assert "hf_acm_squares" in proc.stderr
    assert subprocess.run([CLI, "--help"], capture_output=True).returncode == 0


def test_oracles():
    code, rep = report("oracle", "hf_acm_squares", "--r", "7")
    assert code == 0
    assert rep["records"][0]["values"] == [1, 7, 20, 28, 14]
    code, rep = report("oracle", "inequality", "--q-min", "4", "--q-max", "50")
    assert code == 0
    assert rep["verdict"] == "holds"


def test_apolar_and_probe():
    code, rep = report("apolar", "--r", "5")
    assert code == 0
    assert rep["verdict"] == "holds"
    assert run("probe", "--r", "4", "--s", "5", "--exp", "3").returncode == 2
    assert run("probe", "--r", "2", "--s", "4", "--exp", "2,3,4,5").returncode == 0


def test_seed_determinism_and_environment():
    spec = str(SPECS / "general_squares_6.json")
    a = run("wlp", "--spec", spec, "--seed", "9", "--output", "json")
    b = run("wlp", "--spec", spec, "--seed", "9", "--output", "json")
    assert a.stdout == b.stdout
    c = run("wlp", "--spec", spec, "--output", "json", env={"WLPKIT_SEED": "9"})
    assert c.stdout == a.stdout
    d = run("wlp", "--spec", spec, "--seed", "10", "--output", "json")
    assert json.loads(d.stdout)["meta"]["primes"] != json.loads(a.stdout)["meta"]["primes"]
    assert run("wlp", "--spec", spec, env={"WLPKIT_SEED": "x"}).returncode == 1


def test_cache_round_trip(tmp_path):
    spec = str(SPECS / "general_squares_7.json")
    first = run("wlp", "--spec", spec, "--output", "json", cache=tmp_path)
    second = run("wlp", "--spec", spec, "--output", "json", cache=tmp_path)
    assert first.stdout == second.stdout
    stats = json.loads(run("cache", "stats", "--output", "json", cache=tmp_path).stdout)
    assert stats["entries"] == 1
    cleared = run("cache", "clear", cache=tmp_path)
    assert cleared.returncode == 0
    assert "removed 1" in cleared.stdout
    stats = json.loads(run("cache", "stats", "--output", "json", cache=tmp_path).stdout)
    assert stats["entries"] == 0


@pytest.mark.parametrize("flag", ["--certify", "--trials=5", "--prime-bits=40"])
def test_engine_flags_keep_verdicts(flag):
    code, rep = report("wlp", "--spec", str(SPECS / "general_squares_6.json"), flag)
    assert code == 2
    assert rep["certified"] is True

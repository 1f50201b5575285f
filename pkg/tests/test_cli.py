import json
import shutil
import subprocess

import pytest

from zetaladder import cli


def run(argv, capsys):
    code = cli.run(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_zeta_eval_json(capsys):
    code, out, _ = run(["zeta", "eval", "--sigma", "2", "--t", "10"], capsys)
    assert code == 0
    d = json.loads(out)
    assert d["method"].startswith("dirichlet") and d["abs_sq"] > 0


def test_zeta_eval_critical_line(capsys):
    code, out, _ = run(["zeta", "eval", "--sigma", "0.5", "--t", "100"], capsys)
    d = json.loads(out)
    assert code == 0 and d["method"] == "riemann-siegel"


def test_primes_pi(capsys):
    code, out, _ = run(["primes", "pi", "--x", "1000", "--limit", "2000"], capsys)
    assert code == 0 and out.strip() == "168"
    code, _, err = run(["primes", "pi", "--x", "5000", "--limit", "2000"], capsys)
    assert code == 3 and json.loads(err)["error"] == "RangeError"


def test_mvt_bounds(capsys):
    code, out, _ = run(["mvt", "bounds", "--sigma", "2", "--nmax", "1000"], capsys)
    d = json.loads(out)
    assert code == 0 and d["s1_within_limit"] and d["s2_within_envelope"]


def test_usage_errors(capsys):
    assert run(["frobnicate"], capsys)[0] == 2
    assert run(["zeta", "eval", "--sigma", "2", "--t", "1", "--bogus", "3"], capsys)[0] == 2
    assert run(["aa", "run", "--out", "x.csv", "--jobs", "0"], capsys)[0] == 2


def test_sigma0_precondition(tmp_path, capsys):
    code, _, err = run(["aa", "run", "--sigma0", "0.9", "--out", str(tmp_path / "a.csv")], capsys)
    assert code == 3
    assert "1.1" in json.loads(err)["message"]


def test_missing_table_is_io_error(tmp_path, capsys):
    code, _, err = run(["aa", "run", "--table", str(tmp_path / "none.tbl"), "--out", str(tmp_path / "a.csv")],
                       capsys)
    assert code == 5 and json.loads(err)["exit_code"] == 5


def test_ladder_build_and_eval(tmp_path, capsys):
    tbl = tmp_path / "l.tbl"
    code, out, _ = run(["ladder", "build", "--t-min", "1000", "--t-max", "1200", "--points", "201",
                        "--out", str(tbl)], capsys)
    assert code == 0 and tbl.exists()
    manifest = (tmp_path / "l.tbl.manifest").read_text()
    assert "quadrature.panel_scale = 0.5" in manifest and "sha256:" in manifest
    code, out, _ = run(["ladder", "eval", "--table", str(tbl), "--t", "1100"], capsys)
    d = json.loads(out)
    assert code == 0 and 1000 < d["phi1"] < 1100 and d["phi1_prime"] >= 0
    code, _, _ = run(["ladder", "eval", "--table", str(tbl), "--t", "5000"], capsys)
    assert code == 3


def test_config_file_layer(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# overrides\nsigma = 3\nt = 5\n")
    code, out, _ = run(["zeta", "eval", "--config", str(cfg)], capsys)
    assert code == 0 and json.loads(out)["sigma"] == 3.0
    code, out, _ = run(["zeta", "eval", "--config", str(cfg), "--sigma", "2"], capsys)
    assert json.loads(out)["sigma"] == 2.0
    cfg.write_text("no_such_key = 1\n")
    assert run(["zeta", "eval", "--config", str(cfg), "--sigma", "2", "--t", "1"], capsys)[0] == 2
    assert run(["zeta", "eval", "--config", str(tmp_path / "nope.cfg")], capsys)[0] == 2


def test_jobs_from_environment(monkeypatch):
    monkeypatch.setenv("ZLL_JOBS", "3")
    parser, _ = cli.build_parser()
    args = parser.parse_args(["mvt", "bounds", "--sigma", "2"])
    assert args.jobs == 3


def test_mvt_scan_csv(tmp_path, capsys):
    out = tmp_path / "m.csv"
    code, _, _ = run(["mvt", "scan", "--sigmas", "2", "--t", "1e3,2e3", "--u", "lnln,10", "--out", str(out)],
                     capsys)
    lines = out.read_text().splitlines()
    assert code == 0 and lines[0] == "sigma,T,U,integral,zeta2sigma,residual" and len(lines) == 5


def test_aa_run_outputs(tmp_path, capsys):
    csv = tmp_path / "aa.csv"
    code, out, _ = run(["aa", "run", "--sigma0", "2", "--t0", "1e4", "--n", "4", "--out", str(csv),
                        "--json", str(tmp_path / "aa.json"), "--svg", str(tmp_path / "r.svg")], capsys)
    assert code == 0
    assert csv.read_text().splitlines()[0] == "n,K_n,K_n1,u_n,v_n,residual,envelope,rho,predicted_rho,flag"
    js = json.loads((tmp_path / "aa.json").read_text())
    assert len(js) == 4 and js[0]["n"] == 0
    assert (tmp_path / "r.svg").read_text().startswith("<svg")


def test_entry_point_installed():
    exe = shutil.which("zll")
    if exe is None:
        pytest.skip("console script not installed")
    res = subprocess.run([exe, "aa", "run", "--sigma0", "0.9", "--out", "/dev/null"], capture_output=True, text=True)
    assert res.returncode == 3

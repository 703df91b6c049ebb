from __future__ import annotations

import csv
import io
import json
import math
import subprocess
import sys

import pytest

from trigapprox.cli import main, to_json


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def run_subprocess(args):
    proc = subprocess.run([sys.executable, "-m", "trigapprox.cli", *args],
                          capture_output=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_uniform_spot_value(capsys):
    code, out, _ = run(["error", "--psi", "geometric:q=0.5", "--method", "interp", "--n", "1",
                        "--uniform"], capsys)
    assert code == 0
    assert abs(json.loads(out)["value"] - 0.32322) <= 1e-4


def test_node_value(capsys):
    code, out, _ = run(["error", "--psi", "geometric:q=0.5", "--method", "interp", "--n", "1",
                        "--x", "0"], capsys)
    assert code == 0
    d = json.loads(out)
    assert d["value"] == 0.0
    assert set(d) == {"value", "truncation_bound", "terms_used", "params"}


def test_bad_q_is_usage_error(capsys):
    code, _, err = run(["error", "--psi", "geometric:q=1.5", "--method", "interp", "--n", "1",
                        "--x", "0"], capsys)
    assert code == 1
    assert "q must lie in (0,1)" in err


@pytest.mark.parametrize("args", [
    ["error", "--psi", "geometric:q=0.5", "--n", "1"],
    ["error", "--psi", "nonsense", "--n", "1", "--x", "0"],
    ["error", "--psi", "geometric:q=0.5", "--method", "fejer", "--n", "1", "--x", "0"],
    ["error", "--psi", "geometric:q=0.5", "--method", "zero", "--n", "1", "--uniform"],
    ["error", "--psi", "geometric:q=0.5", "--n", "1", "--x", "0", "--tol", "-1"],
    ["sweep", "--psi", "geometric:q=0.5", "--n", "1", "--x-from", "1", "--x-to", "0",
     "--points", "5"],
    ["sweep", "--psi", "geometric:q=0.5", "--n", "1", "--x-from", "0", "--x-to", "1",
     "--points", "1"],
    ["sweep", "--psi", "geometric:q=0.5", "--n-from", "4", "--n-to", "2", "--uniform"],
    ["sweep", "--psi", "geometric:q=0.5", "--n", "1"],
])
def test_usage_errors(args, capsys):
    code, out, err = run(args, capsys)
    assert code == 1
    assert out == ""
    assert err


def test_argparse_errors_exit_1():
    code, _, err = run_subprocess(["error", "--n", "notanint"])
    assert code == 1
    code, _, _ = run_subprocess(["bogus"])
    assert code == 1


def test_precondition_exit_2(tmp_path, capsys, monkeypatch):
    # a psi whose alpha sequence is not convex reaches the convexity check
    import trigapprox.cli as cli
    from trigapprox import PreconditionError

    def fail(*a, **k):
        raise PreconditionError("alpha_m is not convex", index=3)

    monkeypatch.setattr(cli, "sobolev_uniform", fail)
    code, out, err = run(["error", "--psi", "power:r=1", "--n", "1", "--uniform"], capsys)
    assert code == 2 and "precondition" in err and out == ""


def test_truncation_exit_2(capsys):
    code, _, err = run(["error", "--psi", "power:r=0.51", "--method", "zero", "--n", "1",
                        "--x", "1e-9", "--tol", "1e-15"], capsys)
    assert code == 2


def test_sweep_x(capsys):
    code, out, _ = run(["sweep", "--psi", "geometric:q=0.5", "--method", "interp", "--n", "1",
                        "--x-from", "0", "--x-to", repr(2 * math.pi / 3), "--points", "61"],
                       capsys)
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["x", "value", "truncation_bound"]
    data = [[float(v) for v in r] for r in rows[1:]]
    assert len(data) == 61
    vals = [r[1] for r in data]
    assert vals[0] == 0.0 and vals[-1] == 0.0
    # 12 significant digits in the file
    assert abs(data[vals.index(max(vals))][0] - math.pi / 3) < 1e-10
    # plain-ASCII scientific notation, lowercase e
    assert "E" not in out and all("e" in cell for cell in rows[1][0:3])


def test_sweep_n_decreasing(capsys):
    code, out, _ = run(["sweep", "--psi", "geometric:q=0.5", "--n-from", "1", "--n-to", "8",
                        "--uniform"], capsys)
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "value", "truncation_bound"]
    vals = [float(r[1]) for r in rows[1:]]
    assert all(b < a for a, b in zip(vals, vals[1:]))


def test_sweep_json_and_out(tmp_path, capsys):
    path = tmp_path / "s.json"
    code, out, _ = run(["sweep", "--psi", "power:r=2", "--n", "2", "--x-from", "0",
                        "--x-to", "1", "--points", "3", "--format", "json", "--out", str(path)],
                       capsys)
    assert code == 0 and out == ""
    rows = json.loads(path.read_text())
    assert [r["x"] for r in rows] == [0.0, 0.5, 1.0]


def test_custom_method(tmp_path, capsys):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"lambda": [1, 0.5, 0.2], "mu": [0, 0.3, -0.1]}))
    code, out, _ = run(["error", "--psi", "geometric:q=0.7", "--method", f"custom:{path}",
                        "--n", "2", "--x", "0.4"], capsys)
    assert code == 0
    assert json.loads(out)["params"]["formula"] == "general"


@pytest.mark.parametrize("suite", ["aliasing", "crossform", "duality"])
def test_verify_suites(suite, capsys):
    code, out, _ = run(["verify", "--suite", suite, "--seed", "7"], capsys)
    d = json.loads(out)
    assert code == 0 and d["pass"]
    assert d["checks"] and all(c["suite"] == suite and c["pass"] for c in d["checks"])


def test_verify_duality_fields(capsys):
    code, out, _ = run(["verify", "--suite", "duality", "--psi", "power:r=2", "--n", "2",
                        "--method", "zero"], capsys)
    assert code == 0
    (check,) = json.loads(out)["checks"]
    assert {"theoretical", "achieved", "mc_max", "delta", "pass"} <= set(check)


def test_byte_identical_runs():
    for args in (["verify", "--suite", "all", "--seed", "3"],
                 ["sweep", "--psi", "power:r=1", "--n", "2", "--x-from", "0", "--x-to", "2",
                  "--points", "9"],
                 ["error", "--psi", "geometric:q=0.3", "--method", "zero", "--n", "4",
                  "--x", "0.123"]):
        first = run_subprocess(args)
        second = run_subprocess(args)
        assert first[0] == 0
        assert first == second


def test_seed_changes_verify_output():
    a = run_subprocess(["verify", "--suite", "aliasing", "--seed", "1"])[1]
    b = run_subprocess(["verify", "--suite", "aliasing", "--seed", "2"])[1]
    assert a != b


def test_json_float_format():
    text = to_json({"a": 0.1, "b": 0.0, "c": 1e-20, "d": 3, "e": [True, None]})
    d = json.loads(text)
    assert d == {"a": 0.1, "b": 0.0, "c": 1e-20, "d": 3, "e": [True, None]}
    assert '"a": 0.10000000000000001' in text
    assert '"b": 0.0' in text

import json
import subprocess
import sys

import pytest

from fockweyl import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, "--json", *argv)
    return code, json.loads(out)


@pytest.mark.parametrize("expr, operand, expected", [
    ("d1^2", "z1^4", "12*z1^2"),
    ("z1*d1", "z1^3", "3*z1^3"),
    ("d1*d2", "z1^2*z2^3", "6*z1*z2^2"),
])
def test_eval(capsys, expr, operand, expected):
    code, out = run(capsys, "eval", expr, operand)
    assert code == 0 and out.strip() == expected


def test_eval_reports_parse_position(capsys):
    code, data = run_json(capsys, "eval", "d1 +* z1", "z1")
    assert code == 2 and data["error"] == "DSLSyntaxError" and "position 4" in data["message"]


def test_eval_dimension_conflict(capsys):
    code, data = run_json(capsys, "eval", "d3", "z1", "--n", "2")
    assert code == 2 and data["error"] == "DimensionError"


def test_check_comm11(capsys):
    code, data = run_json(capsys, "check", "comm11", "--random", "100", "--seed", "7")
    assert code == 0 and data["passed"] == 100 and data["failed"] == 0 and data["seed"] == 7


def test_check_d_squared_family(capsys):
    code, data = run_json(capsys, "check", "d_squared", "--family", "d1*d2; d1^2+d2^2",
                          "--random", "50")
    assert code == 0 and data["passed"] == 50


@pytest.mark.parametrize("identity", cli.IDENTITIES)
def test_check_default_trials(capsys, identity):
    code, data = run_json(capsys, "--trials", "15", "check", identity)
    assert code == 0 and data["trials"] == 15 and data["first_failure"] is None


def test_check_energy_explicit_form(capsys):
    code, data = run_json(capsys, "check", "energy", "--family", "d1^2+d2; d1+d2^2",
                          "--form", "z2^8; -z2^7")
    assert code == 0 and data["trials"] == 1
    inst = data["instance"]
    assert inst["inputs"]["q"] == "115920" and inst["lhs"] == inst["rhs"]


def test_check_form_file(capsys, tmp_path):
    from fockweyl.dsl import parse_poly
    from fockweyl.forms import PForm
    u = PForm.from_list(2, 1, [parse_poly("z1*z2", 2), parse_poly("i*z2^2", 2)])
    path = tmp_path / "u.json"
    path.write_text(json.dumps(u.to_json()))
    code, data = run_json(capsys, "check", "energy", "--family", "d1*d2; d1^2+d2^2",
                          "--form-file", str(path))
    assert code == 0 and data["passed"] == 1


def test_check_duality_explicit(capsys):
    code, data = run_json(capsys, "check", "duality", "--family", "d1; d2", "--form", "z1*z2",
                          "--degree", "0", "--form-v", "z1; z2^2")
    assert code == 0 and data["instance"]["lhs"] == data["instance"]["rhs"]


def test_check_comm11_and_hamil_explicit(capsys):
    code, data = run_json(capsys, "check", "comm11", "--coeffs", "1,i,2", "--poly", "1 + z1^2")
    assert code == 0 and data["trials"] == 1
    code, data = run_json(capsys, "check", "hamil", "--family", "d1^2; d1^2")
    assert code == 0 and data["instance"]["lhs"] == "2 + 4*z1*d1 + z1^2*d1^2"
    assert data["unit"] is None


def test_check_failure_sets_exit_code(capsys, monkeypatch):
    calls = iter(range(100))

    def flaky(rng, args):
        i = next(calls)
        return i != 2, {"i": i}, str(i), "0"

    monkeypatch.setitem(cli.TRIALS, "hamil", flaky)
    code, data = run_json(capsys, "check", "hamil", "--random", "5")
    assert code == 1 and data["failed"] == 1
    assert data["first_failure"] == {"trial": 2, "inputs": {"i": 2}, "lhs": "2", "rhs": "0"}


def test_check_unknown_identity(capsys):
    code, data = run_json(capsys, "check", "jacobi")
    assert code == 2 and "unknown identity" in data["message"]


def test_conditions(capsys):
    code, data = run_json(capsys, "conditions", "d1*d2; d1^2+d2^2")
    dim2 = data["verdicts"][0]
    assert code == 0 and dim2["passed"] and dim2["sign"] == 1
    assert (dim2["C1"], dim2["C2"], dim2["estimate_constant"]) == ("1", "4", "1")
    code, data = run_json(capsys, "conditions", "d1^2; d2^2")
    assert data["verdicts"][1]["passed"] and data["verdicts"][1]["C1"] == "2"
    code, data = run_json(capsys, "conditions", "d1^2+d2; d1+d2^2")
    assert not any(v["passed"] for v in data["verdicts"])
    assert all(v["failures"] for v in data["verdicts"])


def test_conditions_table(capsys):
    code, out = run(capsys, "conditions", "d1^2; d2^2")
    assert "dim23: pass" in out and "constant=1/2" in out


def test_conditions_needs_two_variables(capsys):
    code, data = run_json(capsys, "conditions", "d1; d2; d3")
    assert code == 2


def test_scan(capsys):
    code, data = run_json(capsys, "scan", "d1*d2; d1^2+d2^2", "--max-degree", "6")
    assert code == 0 and data["count"] == 0 and data["hits"] == []
    code, data = run_json(capsys, "scan", "d1^2; d1", "--max-degree", "2")
    assert data["count"] > 0 and data["hits"][0]["value"]["re"].startswith("-")


def test_solve(capsys):
    code, data = run_json(capsys, "solve", "--coeffs", "0,1", "--alpha", "1", "--cutoff", "16")
    assert code == 0 and data["residual_norm"] < 1e-12
    assert data["u0_monomial"]["re"][1] == pytest.approx(1.0)
    code, data = run_json(capsys, "solve", "--coeffs", "0,0,1", "--alpha", "1")
    assert data["u0_monomial"]["re"][2] == pytest.approx(0.5)
    code, data = run_json(capsys, "solve", "--coeffs", "1", "--alpha", "z1")
    assert data["u0_monomial"]["re"][:2] == pytest.approx([0.0, 1.0])


def test_solve_table_uses_full_precision(capsys):
    code, out = run(capsys, "solve", "--coeffs", "0,0,1", "--alpha", "1")
    assert "0.49999999999999994" in out or "0.5" in out
    assert "bound ok" in out


def test_examples(capsys):
    code, data = run_json(capsys, "examples", "--max-degree", "4")
    assert code == 0 and set(data["families"]) == {"a", "b", "c", "d"}
    assert [r["q"]["re"] for r in data["example_d_forms"]] == ["115920", "1048320", "10523520"]


def test_json_is_deterministic(capsys):
    argv = ["--json", "--seed", "3", "check", "energy", "--random", "10"]
    cli.main(argv)
    first = capsys.readouterr().out
    cli.main(argv)
    assert capsys.readouterr().out == first


def test_seed_position_is_flexible(capsys):
    _, a = run_json(capsys, "--seed", "4", "check", "duality", "--random", "5")
    _, b = run_json(capsys, "check", "duality", "--random", "5", "--seed", "4")
    assert a == b


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fockweyl", "eval", "d1^2", "z1^4"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "12*z1^2"

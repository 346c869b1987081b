import json
import shutil
import subprocess

import pytest

from innerisotope import checks, cli


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(argv, capsys):
    code, out, _ = run(argv, capsys)
    return code, json.loads(out)


def test_admissible_prime(capsys):
    code, data = run_json(["admissible-prime", "--perm", "2 3 1"], capsys)
    assert code == 0
    assert data["prime"] == 43 and data["roots"] == {"3": 36, "7": 41}


def test_cycle_notation_input(capsys):
    code, data = run_json(["admissible-prime", "--perm-cycles", "(1 2)", "--degree", "4"], capsys)
    assert code == 0 and data["cycle_type"] == [2, 1, 1] and data["prime"] == 7


@pytest.mark.parametrize("oracle", ["formula", "chain", "brute"])
def test_idempotent_oracles(oracle, capsys):
    code, data = run_json(["idempotents", "--perm", "2 3 1", "--oracle", oracle], capsys)
    assert code == 0 and len(data["idempotents"]) == 8


@pytest.mark.parametrize(
    "command", ["algebra", "spectra", "fusion", "quasigroup", "automorphisms", "category-check", "report"]
)
def test_commands_succeed(command, capsys):
    code, data = run_json([command, "--perm", "2 3 1"], capsys)
    assert code == 0, data


def test_quasigroup_bruteforce_flag(capsys):
    code, data = run_json(["automorphisms", "--perm", "2 3 1", "--quasigroup-bruteforce"], capsys)
    assert code == 0 and data["quasigroup_bruteforce_order"] == data["quasigroup_order"] == 42


def test_regular(capsys):
    code, data = run_json(["regular", "--n", "4", "--resultants"], capsys)
    assert code == 0 and data["status"] is True


def test_invalid_input_exit_2(capsys):
    code, _, err = run(["algebra", "--perm", "2 2 1"], capsys)
    assert code == 2 and "error" in err
    code, _, _ = run(["algebra", "--perm", "2 3 1", "--prime", "7"], capsys)
    assert code == 2
    code, _, _ = run(["algebra"], capsys)
    assert code == 2


def test_cap_exit_3(capsys):
    code, _, _ = run(["idempotents", "--perm", "2 3 1", "--oracle", "brute", "--cap", "100"], capsys)
    assert code == 3


def test_property_failure_exit_1(capsys, monkeypatch):
    monkeypatch.setattr(checks, "run_acceptance", lambda names: [checks.CheckResult("x", False)])
    code, data = run_json(["verify", "--check", "x"], capsys)
    assert code == 1 and data["checks"][0]["pass"] is False


def test_verify_small(capsys):
    code, data = run_json(["verify", "--n-max", "3", "--no-acceptance"], capsys)
    assert code == 0 and data["status"] == 0


def test_verify_named_check(capsys):
    code, data = run_json(["verify", "--check", "acceptance-3"], capsys)
    assert code == 0 and data["checks"][0]["pass"]
    code, _, err = run(["verify", "--check", "nonexistent"], capsys)
    assert code == 2 and "unknown check" in err


def test_report_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert cli.main(["report", "--perm", "2 1 3", "--out", str(a)]) == 0
    assert cli.main(["report", "--perm", "2 1 3", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_markdown(capsys):
    code, out, _ = run(["report", "--perm", "2 3 1", "--format", "md"], capsys)
    assert code == 0 and out.startswith("# Isotope report") and "| ∗ |" in out
    code, out, _ = run(["quasigroup", "--perm", "2 3 1", "--format", "md"], capsys)
    assert code == 0 and out.startswith("# quasigroup")


@pytest.mark.skipif(shutil.which("innerisotope") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["innerisotope", "admissible-prime", "--perm", "2 1"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["prime"] == 7

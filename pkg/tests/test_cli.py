"""Command-line interface: outputs, schemas, exit codes, determinism."""

import io
import json

import jsonschema
import pytest

from confcohom import ZeroWitnessError, cli
from confcohom.schemas import CLI_SCHEMAS


def run(capsys, argv, stdin=None, monkeypatch=None):
    """Invoke main() in process; returns (exit_code, stdout, stderr)."""
    if stdin is not None:
        assert monkeypatch is not None
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def check_schema(key, payload):
    jsonschema.validate(payload, CLI_SCHEMAS[key])


def test_basis_text_and_json(capsys):
    code, out, err = run(capsys, ["basis", "--m", "2", "--n", "1", "--d", "2", "--step", "2"])
    assert code == 0 and err == ""
    assert out.splitlines()[0] == "w(1,2)*w(1,3)"
    assert len(out.splitlines()) == 8

    code, out, _ = run(capsys, ["basis", "--m", "2", "--n", "1", "--d", "2", "--step", "2", "--json"])
    assert code == 0
    payload = json.loads(out)
    check_schema("basis", payload)
    assert payload["count"] == 8
    assert payload["mode"] == "two-copy"


def test_reduce_element_text(capsys):
    code, out, _ = run(
        capsys, ["reduce", "--m", "2", "--n", "1", "--d", "2", "--element", "w(1,3)*w(2,3)"]
    )
    assert code == 0
    assert out.strip() == "-w(1,2)*w(1,3) + w(1,2)*w(2,3)"


def test_reduce_json_output_schema(capsys):
    code, out, _ = run(
        capsys,
        ["reduce", "--m", "2", "--n", "1", "--d", "2", "--element", "w(1,3)*w(2,3)", "--json"],
    )
    assert code == 0
    payload = json.loads(out)
    check_schema("reduce", payload)
    assert len(payload["element"]) == 2
    assert payload["text"] == "-w(1,2)*w(1,3) + w(1,2)*w(2,3)"


def test_reduce_from_stdin_and_json_input(capsys, monkeypatch):
    code, out, _ = run(
        capsys, ["reduce", "--m", "2", "--n", "1", "--d", "2"],
        stdin="w(1,3)*w(2,3)", monkeypatch=monkeypatch,
    )
    assert code == 0
    assert out.strip() == "-w(1,2)*w(1,3) + w(1,2)*w(2,3)"

    terms = [
        {"coeff": "1", "factors": [
            {"copy": "w", "i": 1, "j": 3}, {"copy": "w", "i": 2, "j": 3}]}
    ]
    code, out2, _ = run(
        capsys, ["reduce", "--m", "2", "--n", "1", "--d", "2"],
        stdin=json.dumps(terms), monkeypatch=monkeypatch,
    )
    assert code == 0
    assert out2 == out


def test_reduce_from_file(capsys, tmp_path):
    f = tmp_path / "elt.txt"
    f.write_text("w(1,3)*w(2,3)\n")
    code, out, _ = run(
        capsys, ["reduce", "--m", "2", "--n", "1", "--d", "2", "--file", str(f)]
    )
    assert code == 0
    assert out.strip() == "-w(1,2)*w(1,3) + w(1,2)*w(2,3)"


def test_expand_matches_reduce(capsys):
    code, out, _ = run(
        capsys, ["expand", "--m", "2", "--n", "1", "--d", "2", "--J", "1,2", "--r", "3"]
    )
    assert code == 0
    assert out.strip() == "-w(1,2)*w(1,3) + w(1,2)*w(2,3)"
    code, out, _ = run(
        capsys,
        ["expand", "--m", "2", "--n", "1", "--d", "2", "--J", "1,2", "--r", "3", "--json"],
    )
    payload = json.loads(out)
    check_schema("expand", payload)
    assert payload["J"] == [1, 2] and payload["r"] == 3


def test_admissible_output(capsys):
    code, out, _ = run(capsys, ["admissible", "--J", "2,5,6"])
    assert code == 0
    assert out.splitlines() == [
        "I=2,2,2  distinct=1",
        "I=2,2,6  distinct=2",
        "I=2,5,5  distinct=2",
        "I=2,5,6  distinct=3",
    ]
    code, out, _ = run(capsys, ["admissible", "--J", "2,5,6", "--json"])
    payload = json.loads(out)
    check_schema("admissible", payload)
    assert payload["count"] == 4


def test_poincare_output(capsys):
    code, out, _ = run(
        capsys, ["poincare", "--m", "2", "--n", "1", "--d", "2", "--space", "EXBE", "--json"]
    )
    assert code == 0
    payload = json.loads(out)
    check_schema("poincare", payload)
    assert payload["coefficients"] == [1, 5, 8, 4]


def test_oracle_verify_ok(capsys):
    code, out, _ = run(
        capsys,
        ["oracle-verify", "--m", "2", "--n", "1", "--d", "2", "--json",
         "--spot-check", "5", "--seed", "11"],
    )
    assert code == 0
    payload = json.loads(out)
    check_schema("oracle-verify", payload)
    assert payload["ok"] is True
    assert [s["dimension"] for s in payload["steps"]] == [1, 5, 8, 4]
    assert payload["spot_checks"] == 5


def test_oracle_verify_text_mode(capsys):
    code, out, _ = run(capsys, ["oracle-verify", "--m", "2", "--n", "1", "--d", "2"])
    assert code == 0
    assert "ok" in out


def test_psi_output(capsys):
    code, out, _ = run(capsys, ["psi", "--m", "2", "--n", "1", "--d", "2", "--json"])
    assert code == 0
    payload = json.loads(out)
    check_schema("psi", payload)
    assert payload["witness_coefficient"] == "-1"
    assert payload["factor_count"] == 2
    assert len(payload["element"]) == 6


def test_cuplength_output(capsys):
    code, out, _ = run(capsys, ["cuplength", "--m", "2", "--n", "1", "--d", "2", "--json"])
    assert code == 0
    payload = json.loads(out)
    check_schema("cuplength", payload)
    assert payload["verdict"] == 2


def test_ptc_output(capsys):
    code, out, _ = run(capsys, ["ptc", "--m", "2", "--n", "2", "--d", "2", "--json"])
    assert code == 0
    payload = json.loads(out)
    check_schema("ptc", payload)
    assert payload["value"] == 4

    code, out, _ = run(capsys, ["ptc", "--m", "2", "--n", "2", "--d", "2"])
    assert code == 0
    assert "4" in out


def test_trivialize_roundtrip(capsys, monkeypatch):
    pts = [[1, 0], [3, 0], [5, 0], [7, 0]]
    code, out, _ = run(capsys, ["trivialize"], stdin=json.dumps(pts), monkeypatch=monkeypatch)
    assert code == 0
    payload = json.loads(out)
    check_schema("trivialize", payload)
    assert payload == {"base": [[1.0, 0.0], [3.0, 0.0]], "moved": [[2.0, 0.0], [3.0, 0.0]]}

    code, out, _ = run(
        capsys, ["trivialize", "--inverse"], stdin=json.dumps(payload), monkeypatch=monkeypatch
    )
    assert code == 0
    back = json.loads(out)
    check_schema("trivialize-inverse", back)
    assert back["points"] == [[1.0, 0.0], [3.0, 0.0], [5.0, 0.0], [7.0, 0.0]]


def test_trivialize_from_file(capsys, tmp_path):
    f = tmp_path / "pts.json"
    f.write_text(json.dumps([[0, 0], [1, 0], [0, 1]]))
    code, out, _ = run(capsys, ["trivialize", "--file", str(f)])
    assert code == 0
    assert json.loads(out)["base"] == [[0.0, 0.0], [1.0, 0.0]]


def test_deterministic_output(capsys):
    argv = ["cuplength", "--m", "2", "--n", "1", "--d", "2", "--json"]
    _, first, _ = run(capsys, argv)
    _, second, _ = run(capsys, argv)
    assert first == second


def test_usage_errors_exit_1(capsys):
    code, _, err = run(capsys, ["basis", "--m", "2", "--n", "1", "--d", "2"])
    assert code == 1
    code, _, err = run(capsys, ["frobnicate"])
    assert code == 1
    code, _, err = run(capsys, ["basis", "--m", "0", "--n", "1", "--d", "2", "--step", "0"])
    assert code == 1 and err
    code, _, err = run(capsys, ["ptc", "--m", "2", "--n", "1", "--d", "3"])
    assert code == 1 and err
    code, _, err = run(
        capsys, ["reduce", "--m", "2", "--n", "1", "--d", "2", "--element", "w(1,2)*"]
    )
    assert code == 1 and err


def test_failed_certificate_exits_2(capsys, monkeypatch):
    def boom(ctx, budget=None):
        raise ZeroWitnessError("witness coefficient is zero")

    monkeypatch.setattr(cli.certificates, "cup_length_bounds", boom)
    code, _, err = run(capsys, ["cuplength", "--m", "2", "--n", "1", "--d", "2"])
    assert code == 2
    assert "certificate failed" in err


def test_trivialize_collision_exits_1(capsys, monkeypatch):
    pts = [[0, 0], [0, 0], [1, 1]]
    code, _, err = run(capsys, ["trivialize"], stdin=json.dumps(pts), monkeypatch=monkeypatch)
    assert code == 1 and err


def test_env_overrides(capsys, monkeypatch):
    # a tiny cap forces the spanning-set guard to fire
    monkeypatch.setenv("CONFCOHOM_CAP", "2")
    code, _, err = run(
        capsys, ["oracle-verify", "--m", "2", "--n", "2", "--d", "2", "--max-step", "3"]
    )
    assert code == 1 and "cap" in err.lower()
    monkeypatch.delenv("CONFCOHOM_CAP")

    monkeypatch.setenv("CONFCOHOM_BUDGET", "0")
    code, out, _ = run(capsys, ["cuplength", "--m", "2", "--n", "2", "--d", "2", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["vanishing_reason"].startswith("not checked")
    assert payload["upper_bound"] is None


def test_console_main_is_wired():
    import importlib.metadata as md

    eps = md.entry_points(group="console_scripts")
    ours = [e for e in eps if e.name == "confcohom"]
    assert ours and ours[0].value == "confcohom.cli:console_main"

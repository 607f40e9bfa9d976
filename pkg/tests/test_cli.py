"""The kderiv command-line interface: subcommands, JSON output, exit codes."""

import json

import pytest

from kderiv.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_k0_s_model(capsys):
    code, out, _ = run(["k0", "--model", "s", "--base", "vect-iso",
                        "--bound", "1"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["command"] == "k0"
    assert rep["model"] == "s"
    assert rep["invariant_factors"] == [] and rep["free_rank"] == 0


def test_k0_waldhausen_with_oracle(capsys):
    code, out, _ = run(["k0", "--model", "waldhausen", "--cof", "monos",
                        "--bound", "1", "--oracle"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["free_rank"] == 1
    assert rep["comparisons"][0]["verdict"] == "iso"


def test_k0_trivial_base(capsys):
    code, out, _ = run(["k0", "--base", "trivial", "--bound", "2"], capsys)
    assert code == 0
    assert json.loads(out)["bounds"]["bound"] == 0


def test_check_simplicial_suite(capsys):
    code, out, _ = run(["check", "--suite", "simplicial"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["pass"] is True
    assert all(c["pass"] for c in rep["checks"])
    assert {c["suite"] for c in rep["checks"]} == {"simplicial"}


def test_check_axioms_suite(capsys):
    code, out, _ = run(["check", "--suite", "axioms", "--bound", "1"], capsys)
    assert code == 0
    rep = json.loads(out)
    names = [c["name"] for c in rep["checks"]]
    assert "Der1" in names and "Der5" in names


def test_dump_nerve_deterministic(capsys):
    code1, out1, _ = run(["dump", "--what", "nerve", "--trunc", "1"], capsys)
    code2, out2, _ = run(["dump", "--what", "nerve", "--trunc", "1"], capsys)
    assert code1 == code2 == 0
    assert out1 == out2
    body = json.loads(out1)["body"]
    assert len(body["levels"][0]) == 6


def test_dump_presentation(capsys):
    code, out, _ = run(["dump", "--what", "presentation", "--bound", "1"],
                       capsys)
    assert code == 0
    body = json.loads(out)["body"]
    assert "generators" in body and "relators" in body


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(["dump", "--what", "category", "--trunc", "1",
                        "--out", str(target)], capsys)
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["command"] == "dump"
    assert target.read_text().endswith("\n")


def test_invalid_configuration_exits_2(capsys):
    code, _, err = run(["k0", "--model", "derivator", "--base", "chain-qis"],
                       capsys)
    assert code == 2
    assert "invalid configuration" in err
    code, _, _ = run(["k0", "--degrees", "zero-one"], capsys)
    assert code == 2
    code, _, _ = run(["k0", "--bound", "-1"], capsys)
    assert code == 2


def test_cap_exceeded_exits_3(capsys):
    code, _, err = run(["k0", "--model", "s", "--bound", "2", "--cap", "10"],
                       capsys)
    assert code == 3
    assert "cap exceeded" in err


def test_cap_env(monkeypatch, capsys):
    monkeypatch.setenv("KDERIV_CAP", "10")
    code, _, _ = run(["k0", "--model", "s", "--bound", "2"], capsys)
    assert code == 3


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2

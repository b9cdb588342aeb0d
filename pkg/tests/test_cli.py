import json

import pytest

from trisum.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["trep", "--n", "7", "--r", "2"], "2"),
        (["divsum", "--n", "1"], "-1"),
        (["divsum", "--n", "3"], "-4/3"),
        (["bell", "--n", "3", "--k", "2"], "0"),
        (["bell", "--n", "3", "--k", "1"], "6"),
        (["rhs", "--n", "2"], "1/2"),
        (["psi", "--order", "10"], "[1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1]"),
        (["trep", "--n", "3"], "[1, 2, 4]"),
        (["trep", "--n", "0", "--r", "5"], "1"),
    ],
)
def test_compute(capsys, argv, expected):
    code, out, _ = run(capsys, "compute", *argv)
    assert code == 0
    assert out.strip() == expected


@pytest.mark.parametrize(
    "argv, fragment",
    [
        (["bell", "--n", "3"], "--k"),
        (["divsum"], "--n"),
        (["psi"], "--order"),
        (["divsum", "--n", "0"], "--n"),
        (["bell", "--n", "3", "--k", "4"], "--k"),
        (["trep", "--n", "3", "--r", "0"], "--r"),
    ],
)
def test_compute_usage_errors(capsys, argv, fragment):
    code, _, err = run(capsys, "compute", *argv)
    assert code == 2
    assert fragment in err


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "theorem", "--bound", "3", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["check"] == "theorem" and obj["total_cases"] == 3 and obj["failures"] == []
    assert set(obj) == {"check", "bound", "total_cases", "failures", "elapsed_ms"}


def test_verify_table(capsys):
    code, out, _ = run(capsys, "verify", "binomial", "--bound", "10")
    assert code == 0
    assert "PASS" in out and "binomial" in out


def test_verify_fault_injection(capsys):
    code, out, _ = run(
        capsys, "verify", "theorem", "--bound", "5", "--format", "csv", "--inject-fault", "trep:2:3"
    )
    assert code == 1
    assert out.splitlines()[1].startswith("theorem,5,3,")


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "nope"],
        ["verify", "theorem", "--bound", "0"],
        ["verify", "theorem", "--jobs", "0"],
        ["verify", "theorem", "--format", "xml"],
        ["verify", "theorem", "--inject-fault", "trep:999:1"],
        ["verify", "theorem", "--inject-fault", "garbage"],
        ["compute", "zeta", "--n", "1"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_repeatable_output(capsys):
    args = ["verify", "lemma2", "--bound", "10", "--format", "json"]
    first = json.loads(run(capsys, *args)[1])
    second = json.loads(run(capsys, *args)[1])
    first.pop("elapsed_ms"), second.pop("elapsed_ms")
    assert first == second

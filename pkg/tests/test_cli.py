"""
End-to-end runs of the command-line entry point
"""
import json
from pathlib import Path

import pytest

from src.main import EXIT_FAIL, EXIT_INVALID, EXIT_PASS, main

SPECS = Path(__file__).resolve().parents[1] / "specs"


def spec(name: str) -> str:
    return str(SPECS / f"{name}.json")


def run_json(capsys, *argv):
    code = main([*argv, "--json"])
    return code, json.loads(capsys.readouterr().out)


def test_h1dr_on_an_elliptic_curve(capsys):
    code, report = run_json(capsys, "h1dr", "--spec", spec("elliptic_q"))
    assert code == EXIT_PASS
    assert report["results"]["dim_h1_dr"] == 2
    assert report["results"]["hodge_dimension"] == 1
    assert report["passed"] is True


def test_h1dr_on_genus_two(capsys):
    code, report = run_json(capsys, "h1dr", "--spec", spec("genus2_q"))
    assert code == EXIT_PASS
    assert report["results"]["genus"] == 2
    assert report["results"]["dim_h1_dr"] == 4


def test_h1dr_on_the_projective_line(capsys):
    code, report = run_json(capsys, "h1dr", "--spec", spec("p1_q"))
    assert code == EXIT_PASS
    assert report["results"]["dim_h1_dr"] == 0


def test_gram_matrix(capsys):
    code, report = run_json(capsys, "pairing", "--spec", spec("elliptic_q"), "--gram", "--precision", "8")
    assert code == EXIT_PASS
    assert report["results"]["gram"] == [["0", "4"], ["-4", "0"]]
    assert report["results"]["determinant"] == "16"


def test_pairing_of_two_forms(capsys):
    code, report = run_json(
        capsys, "pairing", "--spec", spec("elliptic_q"), "--omega", "x**2/y", "--omega2", "x/y", "--precision", "8"
    )
    assert code == EXIT_PASS
    # x^2 dx/y ~ (1/3) dx/y and <dx/y, x dx/y> = 4
    assert report["results"]["pairing"] == "4/3"


def test_residues_sum_to_zero(capsys):
    code, report = run_json(capsys, "residues", "--spec", spec("p1_q"), "--omega", "1/x")
    assert code == EXIT_PASS
    assert report["results"]["sum"] == "0"
    assert sorted(entry["local"] for entry in report["results"]["residues"]) == ["-1", "1"]


def test_cartier_in_characteristic_five(capsys):
    code, report = run_json(capsys, "cartier", "--spec", spec("elliptic_f5"), "--omega", "1/y")
    assert code == EXIT_PASS
    assert {check["name"] for check in report["checks"]} == {
        "cartier_of_inverse_is_identity",
        "cartier_of_log_form",
        "kills_exact_forms",
    }


def test_di_check_on_the_projective_line(capsys):
    code, report = run_json(capsys, "di-check", "--spec", spec("p1_f3"), "--precision", "6")
    assert code == EXIT_PASS
    checks = {check["name"]: check for check in report["checks"]}
    assert checks["quasi_iso"]["status"] == "pass"
    assert "form[0].lift_independence" in checks
    assert "a.f_h_closure[x]" in checks


def test_example1_text_output(capsys):
    code = main(["example1", "--spec", spec("elliptic_q"), "--samples", "2", "--precision", "6"])
    out = capsys.readouterr().out
    assert code == EXIT_PASS
    assert "[PASS] naive_decomposition_fails" in out
    assert out.rstrip().endswith("all checks passed")


def test_report_written_to_out(tmp_path, capsys):
    path = tmp_path / "reports" / "h1dr.json"
    assert main(["h1dr", "--spec", spec("elliptic_q"), "--out", str(path)]) == EXIT_PASS
    capsys.readouterr()
    assert json.loads(path.read_text())["command"] == "h1dr"


@pytest.mark.parametrize(
    "argv",
    [
        ["di-check", "--spec", spec("p1_f2")],
        ["di-check", "--spec", spec("p1_q")],
        ["cartier", "--spec", spec("elliptic_q"), "--omega", "1/y"],
        ["example1", "--spec", spec("p1_q"), "--samples", "1"],
        ["pairing", "--spec", spec("elliptic_q"), "--omega", "1/y"],
        ["h1dr", "--spec", spec("elliptic_q"), "--precision", "2"],
        ["residues", "--spec", spec("elliptic_q"), "--omega", "1/(x - x)"],
    ],
)
def test_invalid_input_exits_with_two(argv, capsys):
    assert main(argv) == EXIT_INVALID
    capsys.readouterr()


def test_unreadable_and_malformed_specs(tmp_path, capsys):
    assert main(["h1dr", "--spec", str(tmp_path / "missing.json")]) == EXIT_INVALID
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"characteristic": 4, "model": "P1"}))
    assert main(["h1dr", "--spec", str(bad)]) == EXIT_INVALID
    singular = tmp_path / "singular.json"
    singular.write_text(json.dumps({"characteristic": 0, "model": {"hyperelliptic_f": [0, 0, 1, 1]}}))
    assert main(["h1dr", "--spec", str(singular)]) == EXIT_INVALID
    error = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert error["code"] in ("singular-model", "invalid-spec")


def test_argparse_errors_exit_with_two(capsys):
    with pytest.raises(SystemExit) as exit_info:
        main(["residues", "--spec", spec("p1_q")])
    assert exit_info.value.code == EXIT_INVALID
    capsys.readouterr()


def test_failing_exit_code_is_distinct():
    assert EXIT_FAIL not in (EXIT_PASS, EXIT_INVALID)

#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for the twisted-cohomology command-line tool."""

import io
import json

import pandas
import pytest

from twisted_cohomology import TwistedCohomology
from twisted_cohomology.problem_parameters import parameters
from twisted_cohomology.verify import CHECKS, VerificationSuite

CUBIC = ["--poly", "x^3 + y^3", "--vars", "x,y"]
QUADRIC = ["--poly", "x^2 + y^2", "--vars", "x,y"]


def run(config_path, *argv):
    """Run the tool, returning the exit status, stdout and stderr."""
    stdout, stderr = io.StringIO(), io.StringIO()
    tool = TwistedCohomology(stdout=stdout, stderr=stderr)
    status = tool.run([*argv, "--config", str(config_path)])
    return status, stdout.getvalue(), stderr.getvalue()


def run_json(config_path, *argv):
    status, out, _ = run(config_path, *argv, "--json")
    return status, json.loads(out)


def test_milnor(config_path):
    status, document = run_json(config_path, "milnor", *CUBIC)
    assert status == 0
    assert document["command"] == "milnor"
    results = document["results"]
    assert results["milnor_number"] == 4
    assert results["basis"] == ["1", "x", "y", "x*y"]
    assert document["inputs"]["weights"] == [1, 1]


def test_text_report(config_path):
    status, out, _ = run(config_path, "milnor", *CUBIC, "--text")
    assert status == 0
    assert "Milnor algebra basis" in out
    assert "x*y" in out
    assert "+--" in out


def test_configuration_file_is_created(config_path):
    assert not config_path.exists()
    run(config_path, "milnor", *CUBIC)
    assert config_path.exists()
    assert "[twisted-cohomology]" in config_path.read_text()


def test_configuration_sets_the_format(config_path):
    config_path.write_text("[twisted-cohomology]\nformat = json\n")
    status, out, _ = run(config_path, "hodge", *CUBIC)
    assert status == 0
    document = json.loads(out)
    assert document["results"]["hodge"] == {"0": 0, "1": 2, "2": 0}
    assert document["results"]["poincare_series"] == [1, 2, 1]


def test_parse_errors_are_input_errors(config_path):
    status, document = run_json(
        config_path, "milnor", "--poly", "x^2 + $y", "--vars", "x,y"
    )
    assert status == 2
    error = document["error"]
    assert error["code"] == "ParseError"
    assert error["offset"] == 6


def test_parse_errors_in_text_mode(config_path):
    status, out, err = run(config_path, "milnor", "--poly", "x^2 +", "--vars", "x")
    assert status == 2
    assert out == ""
    assert "ParseError" in err


def test_missing_polynomial(config_path):
    status, document = run_json(config_path, "milnor", "--vars", "x,y")
    assert status == 2
    assert document["error"]["code"] == "InvalidProblem"


def test_not_quasi_homogeneous(config_path):
    status, document = run_json(
        config_path, "milnor", "--poly", "x^3 + y^2", "--vars", "x,y"
    )
    assert status == 1
    assert document["error"]["code"] == "NotQuasiHomogeneous"


def test_unknown_command(config_path):
    status, _, _ = run(config_path, "homology", *CUBIC)
    assert status == 2


def test_predict(config_path):
    status, document = run_json(
        config_path, "predict", "--betti-m", "1,0,0,0", "--betti-s", "1,0,1"
    )
    assert status == 0
    assert document["results"]["dimensions"] == [1, 1, 0, 1]


def test_predict_needs_betti_numbers(config_path):
    status, _ = run_json(config_path, "predict", "--betti-m", "1,0")
    assert status == 2


def test_problem_file_and_flags(config_path, tmp_path):
    problem = tmp_path / "problem.json"
    problem.write_text(
        json.dumps({"vars": ["x", "y"], "poly": "x^2 + y^2", "p": 5, "max_degree": 6})
    )
    status, document = run_json(
        config_path, "cohom", "--problem", str(problem), "-p", "0", "-k", "1"
    )
    assert status == 0
    results = document["results"]
    assert results["p"] == 0
    assert results["max_degree"] == 6
    assert results["groups"][0]["total"] == 2

    # a report can be read back as a problem file
    report = tmp_path / "report.json"
    report.write_text(json.dumps(document))
    status, again = run_json(config_path, "cohom", "--problem", str(report))
    assert status == 0
    assert again["inputs"] == document["inputs"]
    assert again["results"] == results


def test_unknown_field_in_problem_file(config_path, tmp_path):
    problem = tmp_path / "problem.json"
    problem.write_text(json.dumps({"poly": "x^2", "colour": "red"}))
    status, document = run_json(config_path, "milnor", "--problem", str(problem))
    assert status == 2
    assert document["error"]["code"] == "InvalidProblem"


def test_csv(config_path, tmp_path):
    path = tmp_path / "dims.csv"
    status, _, _ = run(
        config_path,
        "cohom",
        *QUADRIC,
        "-k",
        "2",
        "-p",
        "1",
        "--max-degree",
        "5",
        "--csv",
        str(path),
    )
    assert status == 0
    frame = pandas.read_csv(path)
    assert list(frame.columns) == ["k", "weight", "dim", "cumulative"]
    assert list(frame["dim"]) == [0, 0, 1, 2, 2, 2]


def test_table1(config_path):
    status, document = run_json(
        config_path, "table1", *QUADRIC, "--p-range", "0:3", "--max-degree", "10"
    )
    assert status == 0
    results = document["results"]
    assert results["agrees"]
    assert [row["p"] for row in results["rows"]] == [0, 1, 2, 3]


def test_h0(config_path):
    status, document = run_json(config_path, "h0", *QUADRIC, "-p", "-2")
    assert status == 0
    results = document["results"]
    assert results["dimension"] == 1
    assert results["agrees"]


def test_normal_form(config_path):
    status, document = run_json(config_path, "nf", *CUBIC, "--eta", "x*dx^dy")
    assert status == 0
    results = document["results"]
    assert results["h"]["2"] == "x"
    assert results["representative"] == "x*dx^dy"


def test_normal_form_needs_eta(config_path):
    status, _ = run_json(config_path, "nf", *CUBIC)
    assert status == 2


def test_germ_quotient_probe(config_path):
    status, document = run_json(
        config_path, "probe-quotient", *QUADRIC, "--max-degree", "4"
    )
    assert status == 0
    assert document["results"]["dimensions"] == [1, 2, 2, 2, 2]


@pytest.mark.parametrize("name", list(CHECKS))
def test_verification_check(name):
    report = VerificationSuite(seed=7, samples=5, only=[name]).run()
    assert [check.name for check in report.checks] == [name]
    (result,) = report.checks
    assert result.passed, result.failures
    assert result.instances > 0
    assert report.to_dict()["seed"] == 7


def test_default_instance_counts():
    suite = VerificationSuite()
    assert suite.count_for("cochain") >= 1000
    for name in (
        "scaling",
        "singular-forms",
        "pullback",
        "poisson",
        "nambu",
        "algebroid",
    ):
        assert suite.count_for(name) >= 500
    assert suite.count_for("normal-form") >= 200


def test_pullback_check_at_the_default_seed():
    report = VerificationSuite(only=["pullback"]).run()
    (result,) = report.checks
    assert result.instances == 600
    assert result.passed, result.failures


def test_problem_file_is_a_directory(config_path, tmp_path):
    status, document = run_json(config_path, "milnor", "--problem", str(tmp_path))
    assert status == 2
    assert document["error"]["code"] == "InvalidProblem"


def test_problem_file_is_not_utf8(config_path, tmp_path):
    problem = tmp_path / "problem.json"
    problem.write_bytes(b'{"poly": "x\xff"}')
    status, document = run_json(config_path, "milnor", "--problem", str(problem))
    assert status == 2
    assert document["error"]["code"] == "InvalidProblem"


def test_text_report_lists_the_given_parameters(config_path):
    status, out, _ = run(
        config_path,
        "cohom",
        *QUADRIC,
        "-p",
        "1",
        "-k",
        "2",
        "--max-degree",
        "5",
        "--text",
    )
    assert status == 0
    assert "Twist p:" in out
    assert "Form degree k:" in out
    assert "Maximal weight D:" in out
    assert "Filtration index q:" not in out


def test_parameters_declare_only_what_is_used():
    for data in parameters.values():
        assert set(data) == {"default", "kind", "flag", "description", "help_text"}

"""CLI contract: exit codes, output formats, determinism."""

import json

import pytest

from npseq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_type21_example(self, capsys):
        code, out, _ = run(
            capsys, "analyze", "--p", "3", "--seq", "Z,Z,1,1,1", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["results"]["nps_type"] == [2, 1]
        assert payload["results"]["pdpds"] == [5, 3, 3, 1, 0, 2, 0, 0]
        assert all(payload["checks"].values())

    def test_type_minus2_0_example(self, capsys):
        code, out, _ = run(
            capsys, "analyze", "--p", "3", "--seq", "Z,Z,2,1,0,1,2", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["results"]["nps_type"] == [-2, 0]
        assert payload["results"]["pdpds"] == [7, 3, 5, 1, 0, 0, 1, 2]

    def test_non_integral_profile_renders_vectors(self, capsys):
        code, out, _ = run(
            capsys, "analyze", "--p", "3", "--seq", "Z,Z,0,1,1", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["results"]["nps_type"] is None
        assert any(isinstance(v, list) for v in payload["results"]["profile"])

    def test_parse_error_exit2(self, capsys):
        code, _, err = run(capsys, "analyze", "--p", "3", "--seq", "Z,9")
        assert code == 2
        assert "error" in err

    def test_envelope_keys(self, capsys):
        _, out, _ = run(
            capsys, "analyze", "--p", "3", "--seq", "Z,Z,1,1,1", "--format", "json"
        )
        payload = json.loads(out)
        assert set(payload) == {"version", "inputs", "results", "checks"}


class TestVerifyPdpds:
    def test_classifies_paper_subset(self, capsys):
        code, out, _ = run(
            capsys,
            "verify-pdpds", "--N", "5", "--p", "3", "--set", "(2,1);(3,1);(4,1)",
            "--format", "json",
        )
        assert code == 0
        assert json.loads(out)["results"]["pdpds"] == [5, 3, 3, 1, 0, 2, 0, 0]

    def test_perturbed_params_nonzero_residual(self, capsys):
        code, out, _ = run(
            capsys,
            "verify-pdpds", "--N", "5", "--p", "3", "--set", "(2,1);(3,1);(4,1)",
            "--params", "5,3,3,2,0,2,0,0",
        )
        assert code == 1
        assert "nonzero" in out

    def test_correct_params_zero_residual(self, capsys):
        code, _, _ = run(
            capsys,
            "verify-pdpds", "--N", "5", "--p", "3", "--set", "(2,1);(3,1);(4,1)",
            "--params", "5,3,3,1,0,2,0,0",
        )
        assert code == 0

    def test_non_pdpds_reports_class(self, capsys):
        code, out, _ = run(
            capsys, "verify-pdpds", "--N", "5", "--p", "3", "--set", "(0,0);(1,0);(2,1)"
        )
        assert code == 1
        assert "not a PDPDS" in out

    def test_out_of_range_exit2(self, capsys):
        code, _, _ = run(
            capsys, "verify-pdpds", "--N", "5", "--p", "3", "--set", "(9,0)"
        )
        assert code == 2


class TestBounds:
    def test_table_row(self, capsys):
        code, out, _ = run(
            capsys,
            "bounds", "--n", "15", "--p", "5", "--gamma1", "-10", "--gamma2", "-8",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["results"]["B"] == -1
        assert payload["results"]["status"] == "divisibility-fail"

    def test_existing_sequence_undecided(self, capsys):
        code, out, _ = run(
            capsys,
            "bounds", "--n", "3", "--p", "3", "--gamma1", "2", "--gamma2", "1",
            "--format", "json",
        )
        assert code == 0
        assert json.loads(out)["results"]["status"] == "undecided"


class TestTable:
    def test_csv_grid(self, capsys):
        code, out, _ = run(
            capsys,
            "table", "--n", "15",
            "--gamma1-list=-10,-7,-4,-1,2,5,8",
            "--gamma2-list=-8,-5,-2,1,4,7,10",
            "--format", "csv",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "gamma1,gamma2,B,verdict"
        assert len(lines) == 50  # header + 7x7 grid
        assert "-10,-8,-1,not exist" in lines

    def test_empty_lists(self, capsys):
        code, out, _ = run(
            capsys, "table", "--n", "15", "--gamma1-list", "", "--gamma2-list", "",
            "--format", "csv",
        )
        assert code == 0
        assert out.splitlines() == ["gamma1,gamma2,B,verdict"]


class TestSearch:
    def test_single_match(self, capsys):
        code, out, _ = run(
            capsys,
            "search", "--p", "3", "--period", "5", "--zeros", "2",
            "--type", "2,1", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["total_enumerated"] == 9
        assert len(payload["matches"]) == 1
        assert payload["matches"][0]["pdpds"] == [5, 3, 3, 1, 0, 2, 0, 0]

    def test_budget_exit3(self, capsys):
        code, _, err = run(
            capsys, "search", "--p", "7", "--period", "20", "--zeros", "2"
        )
        assert code == 3
        assert "budget" in err

    def test_roundtrip_clean(self, capsys):
        code, out, _ = run(
            capsys,
            "roundtrip", "--p", "3", "--period", "7", "--zeros", "2",
            "--jobs", "4", "--format", "json",
        )
        assert code == 0
        assert json.loads(out)["violations"] == []

    def test_output_identical_across_jobs(self, capsys):
        outputs = []
        for jobs in ("1", "8"):
            code, out, _ = run(
                capsys,
                "roundtrip", "--p", "3", "--period", "6", "--zeros", "2",
                "--jobs", jobs, "--format", "json",
            )
            assert code == 0
            outputs.append(out)
        assert outputs[0] == outputs[1]


class TestUsageErrors:
    def test_unknown_subcommand(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_bad_flag_value(self, capsys):
        assert main(["analyze", "--p", "x", "--seq", "Z,1"]) == 2

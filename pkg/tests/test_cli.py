import json

import pytest

from src.main import EXIT_BAD_INPUT, EXIT_BUDGET, EXIT_OK, EXIT_USAGE, run
from src.vest import instance_to_json
from tests.conftest import Z2, scalar_instance


@pytest.fixture
def z2_instance(tmp_path):
    path = tmp_path / "inst.json"
    path.write_text(json.dumps(instance_to_json(scalar_instance(Z2, [1, 0]), 2)), encoding="utf-8")
    return str(path)


@pytest.fixture
def triangle(tmp_path):
    path = tmp_path / "k3.txt"
    path.write_text("3 3\n0 1\n1 2\n0 2\n", encoding="utf-8")
    return str(path)


class TestSolve:
    @pytest.mark.parametrize("method", ["brute", "dp", "dp-rows"])
    def test_methods_agree(self, z2_instance, capsys, method):
        assert run(["solve", "--in", z2_instance, "--k", "2", "--method", method]) == EXIT_OK
        assert "M_k = 3" in capsys.readouterr().out.splitlines()

    def test_k_from_instance(self, z2_instance, capsys):
        assert run(["solve", "--in", z2_instance, "--method", "dp"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "M_k = 3"

    def test_trace(self, z2_instance, capsys):
        assert run(["solve", "--in", z2_instance, "--method", "dp", "--trace"]) == EXIT_OK
        assert capsys.readouterr().out.splitlines() == [
            "level 1: states=2, total=2",
            "level 2: states=2, total=4",
            "M_k = 3",
        ]

    def test_budget(self, z2_instance):
        assert run(["solve", "--in", z2_instance, "--k", "20", "--method", "brute", "--budget", "100"]) == EXIT_BUDGET

    def test_malformed(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"dim": 1}', encoding="utf-8")
        assert run(["solve", "--in", str(path), "--k", "1"]) == EXIT_BAD_INPUT

    def test_usage(self):
        assert run(["solve"]) == EXIT_USAGE
        assert run(["frobnicate"]) == EXIT_USAGE

    def test_zero_denominator(self, tmp_path):
        data = instance_to_json(scalar_instance(Z2, [1, 0]), 2)
        data["field"] = {"kind": "rational"}
        data["v"] = ["1/0"]
        path = tmp_path / "div.json"
        path.write_text(json.dumps(data), encoding="utf-8")
        assert run(["solve", "--in", str(path), "--method", "brute"]) == EXIT_BAD_INPUT
        data["field"], data["v"] = {"kind": "prime", "p": 2}, ["1/2"]
        path.write_text(json.dumps(data), encoding="utf-8")
        assert run(["solve", "--in", str(path), "--method", "brute"]) == EXIT_BAD_INPUT

    def test_negative_k(self, z2_instance):
        assert run(["solve", "--in", z2_instance, "--k", "-1", "--method", "dp"]) == EXIT_USAGE
        assert run(["solve", "--in", z2_instance, "--k", "two"]) == EXIT_USAGE

    def test_k_zero_allowed(self, z2_instance, capsys):
        assert run(["solve", "--in", z2_instance, "--k", "0", "--method", "dp"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "M_k = 0"

    def test_deterministic(self, z2_instance, capsys):
        run(["solve", "--in", z2_instance, "--k", "6", "--method", "dp", "--trace"])
        first = capsys.readouterr().out
        run(["solve", "--in", z2_instance, "--k", "6", "--method", "dp", "--trace"])
        assert capsys.readouterr().out == first


class TestMinK:
    def test_found(self, tmp_path, capsys):
        path = tmp_path / "zero.json"
        path.write_text(json.dumps(instance_to_json(scalar_instance(Z2, [0]))), encoding="utf-8")
        assert run(["min-k", "--in", str(path)]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "min_k = 1"

    def test_none(self, tmp_path, capsys):
        path = tmp_path / "one.json"
        path.write_text(json.dumps(instance_to_json(scalar_instance(Z2, [1]))), encoding="utf-8")
        assert run(["min-k", "--in", str(path)]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "min_k = none"


class TestGen:
    def test_dominating_set_then_solve(self, triangle, tmp_path, capsys):
        out = tmp_path / "k3.json"
        assert run(["gen", "dominating-set", "--in", triangle, "--k", "1", "--out", str(out)]) == EXIT_OK
        cert = json.loads((tmp_path / "k3.cert.json").read_text(encoding="utf-8"))
        assert cert["reduction"] == "dominating-set"
        assert cert["parameter_map"] == {"k": 1, "k_prime": 1}
        capsys.readouterr()
        assert run(["solve", "--in", str(out), "--method", "brute"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "M_k = 3"

    def test_at_most_k_sum_payload(self, tmp_path, capsys):
        source = tmp_path / "sys.json"
        source.write_text(json.dumps({"universe": 2, "sets": [[1, 2]]}), encoding="utf-8")
        assert run(["gen", "at-most-k-sum", "--in", str(source), "--k", "1"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload == {"kind": "at_most_k_sum", "numbers": [-39, 40], "k": 2}

    def test_pcp_alphabet(self, tmp_path):
        source = tmp_path / "pcp.json"
        source.write_text(json.dumps([["0", "2"]]), encoding="utf-8")
        assert run(["gen", "pcp", "--in", str(source), "--k", "1"]) == EXIT_BAD_INPUT

    def test_unknown_reduction(self, triangle):
        assert run(["gen", "no-such", "--in", triangle, "--k", "1"]) == EXIT_USAGE

    def test_bad_field(self, triangle):
        assert run(["gen", "dominating-set", "--in", triangle, "--k", "1", "--field", "4"]) == EXIT_USAGE

    def test_k_must_be_positive(self, triangle):
        assert run(["gen", "dominating-set", "--in", triangle, "--k", "0"]) == EXIT_USAGE

    def test_empty_pcp(self, tmp_path):
        source = tmp_path / "pcp.json"
        source.write_text("[]", encoding="utf-8")
        assert run(["gen", "pcp", "--in", str(source), "--k", "1"]) == EXIT_BAD_INPUT


class TestVerify:
    def test_pcp(self, capsys):
        assert run(["verify-reduction", "pcp", "--trials", "20", "--max-size", "3", "--seed", "7"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[-1] == "all passed"
        assert not any(line.startswith("FAIL") for line in lines)

    def test_same_seed_same_output(self, capsys):
        run(["verify-reduction", "vest-identity-s", "--trials", "5", "--max-size", "1", "--seed", "3"])
        first = capsys.readouterr().out
        run(["verify-reduction", "vest-identity-s", "--trials", "5", "--max-size", "1", "--seed", "3"])
        assert capsys.readouterr().out == first

    @pytest.mark.slow
    def test_all(self, capsys):
        assert run(["verify-reduction", "all", "--trials", "10", "--max-size", "1", "--seed", "1"]) == EXIT_OK


class TestBench:
    def test_csv(self, z2_instance, capsys):
        assert run(["bench", "--in", z2_instance, "--kmax", "3", "--budget", "4"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "k,method,millis,count"
        assert lines[5] == "3,brute,,skipped"
        assert lines[6].startswith("3,dp,") and lines[6].endswith(",7")
        assert lines[3].startswith("2,brute,") and lines[3].endswith(",3")

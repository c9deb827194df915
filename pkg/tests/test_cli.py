import json
from fractions import Fraction

import pytest

from subtrop import build_cnf, main
from subtrop.cli import decide_system, parse_coefficient_bindings

from conftest import DATA, load


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDecide:
    def test_example2_sat_json(self, capsys):
        code, out, _ = run(capsys, "decide", DATA / "example2.spp", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["status"] == "sat"
        assert build_cnf(load("example2.spp")).satisfied_by(tuple(payload["n"]))

    def test_example3_unsat_json(self, capsys):
        code, out, _ = run(capsys, "decide", DATA / "example3.spp", "--format", "json")
        assert code == 1
        assert json.loads(out) == {"status": "unsat"}

    def test_zero_row_reports_reason(self, capsys):
        code, out, _ = run(capsys, "decide", DATA / "zero_row.spp", "--format", "json")
        assert code == 1
        assert json.loads(out) == {"status": "unsat", "reason": "zero-row", "row": 0}

    def test_zero_row_text_diagnostic(self, capsys):
        code, out, _ = run(capsys, "decide", DATA / "zero_row.spp")
        assert code == 1
        assert "identically zero polynomial in row 0" in out

    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "decide", DATA / "example2.spp")
        assert code == 0
        assert out.splitlines()[0] == "SAT"
        assert out.splitlines()[1].startswith("n = (")

    def test_check_agrees_on_golden_inputs(self, capsys):
        for name, expected in [("example2.spp", 0), ("example3.spp", 1),
                               ("intro_f.spp", 0), ("intro_g.spp", 1)]:
            code, _, err = run(capsys, "decide", DATA / name, "--check")
            assert code == expected, err

    def test_check_seed_changes_nothing_visible(self, capsys):
        a = run(capsys, "decide", DATA / "example2.spp", "--check", "--seed", "1")
        b = run(capsys, "decide", DATA / "example2.spp", "--check", "--seed", "99")
        assert a == b

    def test_shrink_gives_smaller_vector(self, capsys):
        code, out, _ = run(capsys, "decide", DATA / "example2.spp", "--format", "json",
                           "--shrink")
        assert code == 0
        n = tuple(json.loads(out)["n"])
        assert n == (-6, -5)
        assert build_cnf(load("example2.spp")).satisfied_by(n)

    def test_parse_error_exits_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.spp"
        bad.write_text("vars x\npoly f = ^\n")
        code, out, err = run(capsys, "decide", bad)
        assert code == 2
        assert out == ""
        assert "line 2" in err

    def test_missing_file_exits_2(self, capsys, tmp_path):
        code, _, err = run(capsys, "decide", tmp_path / "nope.spp")
        assert code == 2
        assert err

    def test_json_is_byte_stable(self, capsys):
        first = run(capsys, "decide", DATA / "example2.spp", "--format", "json")
        second = run(capsys, "decide", DATA / "example2.spp", "--format", "json")
        assert first == second

    def test_json_is_byte_stable_across_processes(self):
        import subprocess
        import sys

        def once(command):
            return subprocess.run(
                [sys.executable, "-m", "subtrop.cli", command,
                 str(DATA / "example2.spp"), "--format", "json"],
                capture_output=True,
            ).stdout

        assert once("decide") == once("decide")
        assert once("witness") == once("witness")


class TestWitness:
    def test_example2_json_shape(self, capsys):
        code, out, _ = run(capsys, "witness", DATA / "example2.spp", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["t"]["one"] == 1
        assert payload["t"]["terms"] == [
            ["c11", "c12"], ["c11", "c15"], ["c13", "c12"], ["c13", "c15"],
            ["c24", "c21"], ["c24", "c22"], ["c24", "c23"],
        ]
        assert build_cnf(load("example2.spp")).satisfied_by(tuple(payload["n"]))

    def test_intro_f_display_text(self, capsys):
        code, out, _ = run(capsys, "witness", DATA / "intro_f.spp", "--shrink")
        assert code == 0
        assert out == "t = 1 + c1/c2 + c1/c0; z = (t^1)\n"

    def test_all_positive_witness_is_one(self, capsys, tmp_path):
        path = tmp_path / "pos.spp"
        path.write_text("vars x y\npoly f = a*x + b*y^2\n")
        code, out, _ = run(capsys, "witness", path)
        assert code == 0
        assert out == "t = 1; z = (t^0, t^0)\n"

    def test_unsat_input_exits_1(self, capsys):
        code, out, err = run(capsys, "witness", DATA / "intro_g.spp", "--format", "json")
        assert code == 1
        assert json.loads(out) == {"status": "unsat"}
        assert "no witness" in err


class TestVerify:
    def test_concrete_intro(self, capsys):
        code, out, _ = run(capsys, "verify", DATA / "intro_f_ones.spp", "--shrink")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "t = 3"
        assert lines[1] == "r = 3"
        assert lines[2] == "n = (1)"
        assert lines[3] == "point = (3)"
        assert lines[4] == "f1 = 7"
        assert lines[-1] == "ok"

    def test_parametric_with_coefficient_file(self, capsys):
        code, out, _ = run(
            capsys, "verify", DATA / "example2.spp",
            "--coeffs", DATA / "example2_ones.coeffs", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["status"] == "ok"
        assert payload["t"] == "8"
        assert payload["r"] == "8"
        assert all(Fraction(v) > 0 for v in payload["values"])

    def test_parametric_needs_coeffs(self, capsys):
        code, _, err = run(capsys, "verify", DATA / "example2.spp")
        assert code == 2
        assert "--coeffs" in err

    def test_missing_binding_exits_2(self, capsys, tmp_path):
        partial = tmp_path / "partial.coeffs"
        partial.write_text("c2 = 1\nc1 = 1\n")
        code, _, err = run(capsys, "verify", DATA / "intro_f.spp", "--coeffs", partial)
        assert code == 2
        assert "c0" in err

    def test_uniform_bound_flag(self, capsys):
        code, out, _ = run(
            capsys, "verify", DATA / "intro_f_ones.spp", "--use-uniform-bound", "--shrink"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "t = 3"
        assert lines[1] == "r = 4"  # 1 + 3 * 1
        assert lines[-1] == "ok"

    def test_uniform_bound_needs_integer_coefficients(self, capsys, tmp_path):
        path = tmp_path / "frac.spp"
        path.write_text("vars x\npoly f = 1/2*x^2 - x + 2\n")
        code, _, err = run(capsys, "verify", path, "--use-uniform-bound")
        assert code == 2
        assert "integer" in err

    def test_unsat_input_exits_1(self, capsys):
        code, out, _ = run(capsys, "verify", DATA / "intro_g.spp",
                           "--coeffs", DATA / "intro_ones.coeffs")
        assert code == 1

    def test_max_bits_guard(self, capsys, tmp_path):
        path = tmp_path / "big.spp"
        path.write_text("vars x\npoly f = 100*x^5 - 99*x + 1\n")
        code, _, err = run(capsys, "verify", path, "--max-bits", "16")
        assert code == 2
        assert "bits" in err
        code, out, _ = run(capsys, "verify", path, "--max-bits", "100000")
        assert code == 0


class TestExplain:
    def test_example2_debug_text(self, capsys):
        code, out, _ = run(capsys, "explain", DATA / "example2.spp")
        assert code == 0
        assert out == (
            "clause 0 0: [1: -3 1] [3: -5 2]\n"
            "clause 0 2: [1: 0 1] [3: -2 2]\n"
            "clause 1 4: [0: 5 -3] [1: 2 -2] [2: 2 -3]\n"
        )

    def test_json_shape(self, capsys):
        code, out, _ = run(capsys, "explain", DATA / "intro_g.spp", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["num_vars"] == 1
        assert payload["clauses"] == [
            {"row": 0, "neg": 0, "literals": [{"pos": 1, "coeffs": [-1]}]},
            {"row": 0, "neg": 2, "literals": [{"pos": 1, "coeffs": [1]}]},
        ]


class TestDefectExitCodes:
    def test_oracle_disagreement_exits_3(self, capsys, monkeypatch):
        import subtrop.cli as cli

        monkeypatch.setattr(cli, "exhaustive_decide", lambda cond: False)
        code, out, err = run(capsys, "decide", DATA / "example2.spp", "--check")
        assert code == 3
        assert out == ""
        assert "disagrees" in err

    def test_witness_failure_exits_4(self, capsys, monkeypatch):
        import subtrop.cli as cli
        from subtrop import WitnessFailure

        def boom(*args, **kwargs):
            raise WitnessFailure("forced for the test")

        monkeypatch.setattr(cli, "verify_witness", boom)
        code, _, err = run(capsys, "decide", DATA / "example2.spp", "--check")
        assert code == 4
        assert "witness failure" in err

    def test_verify_zero_row_exits_1(self, capsys):
        code, out, _ = run(capsys, "verify", DATA / "zero_row.spp", "--format", "json")
        assert code == 1
        assert json.loads(out)["reason"] == "zero-row"

    def test_check_skips_oracle_on_zero_rows(self, capsys, monkeypatch):
        import subtrop.cli as cli

        def explode(cond):
            raise AssertionError("oracle must not run for zero-row systems")

        monkeypatch.setattr(cli, "exhaustive_decide", explode)
        code, out, _ = run(capsys, "decide", DATA / "zero_row.spp", "--check")
        assert code == 1
        assert "identically zero" in out


class TestCoefficientBindings:
    def test_parses_integers_and_fractions(self):
        text = "# unit values\na = 1\nb = 7/2\n\nc=4\n"
        assert parse_coefficient_bindings(text) == {
            "a": Fraction(1),
            "b": Fraction(7, 2),
            "c": Fraction(4),
        }

    def test_rejects_bad_lines(self):
        for text in ["a 1\n", "a = \n", "a = x\n", "a = 1/0\n", "a = 0\n", "a = 1\na = 2\n"]:
            with pytest.raises(Exception):
                parse_coefficient_bindings(text)


class TestDecideSystem:
    def test_single_row_dnf_matches_cnf_on_goldens(self, capsys):
        # --check exercises the branch comparison on one-row inputs
        for name in ["intro_f.spp", "intro_g.spp", "intro_f_ones.spp"]:
            code, _, err = run(capsys, "decide", DATA / name, "--check")
            assert code in (0, 1)
            assert "disagrees" not in err

    def test_decision_carries_certifying_vector(self):
        decision = decide_system(load("example2.spp"))
        assert decision.status == "sat"
        assert decision.condition.satisfied_by(decision.n.n)
        assert decision.condition.satisfied_by(decision.model.n)

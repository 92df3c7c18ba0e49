import json

import pytest

from superlie.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestValidate:
    def test_bundled_sl2(self, capsys):
        code, out, _ = run(capsys, "validate", "@sl2")
        assert code == 0
        assert "command: validate" in out
        assert "verdict: valid" in out

    def test_invalid_algebra_exits_one(self, capsys, tmp_path):
        bad = tmp_path / "bad.alg"
        bad.write_text("algebra bad\ndim 2 0\nbracket 1 2 1 1\n")
        code, out, _ = run(capsys, "validate", str(bad))
        assert code == 1
        assert "antisymmetry: false" in out
        assert "verdict: invalid" in out
        assert "witnesses: antisymmetry fails on (x1, x2)" in out

    def test_malformed_file_exits_two(self, capsys, tmp_path):
        bad = tmp_path / "dup.alg"
        bad.write_text("algebra a\ndim 2 0\nbracket 1 2 1 1\nbracket 1 2 1 2\n")
        code, out, err = run(capsys, "validate", str(bad))
        assert code == 2
        assert out == ""
        assert f"{bad}:4: duplicate entry" in err

    def test_missing_path_exits_two(self, capsys, tmp_path):
        code, _, err = run(capsys, "validate", str(tmp_path / "absent.alg"))
        assert code == 2
        assert "error:" in err

    def test_unknown_fixture_exits_two(self, capsys):
        code, _, err = run(capsys, "validate", "@absent")
        assert code == 2
        assert "no bundled file" in err

    @pytest.mark.parametrize("fixture", ["@sl2", "@gl11", "@gl22",
                                         "@mixed_jordan", "@aff1"])
    def test_all_bundled_fixtures_valid(self, capsys, fixture):
        code, out, _ = run(capsys, "validate", fixture)
        assert code == 0
        assert "verdict: valid" in out


class TestAnalyze:
    def test_sl2_summary(self, capsys):
        code, out, _ = run(capsys, "analyze", "@sl2")
        assert code == 0
        assert "commutant_dim: 3" in out
        assert "even_radical_dim: 0" in out
        assert "quasireductive: true" in out

    def test_affine_line_is_solvable(self, capsys):
        code, out, _ = run(capsys, "analyze", "@aff1")
        assert code == 0
        assert "solvable: true" in out
        assert "quasireductive: false" in out

    def test_invalid_algebra_reports_and_exits_one(self, capsys, tmp_path):
        bad = tmp_path / "bad.alg"
        bad.write_text("algebra bad\ndim 2 0\nbracket 1 2 1 1\n")
        code, out, _ = run(capsys, "analyze", str(bad))
        assert code == 1
        assert "verdict: invalid" in out


class TestDerivations:
    def test_sl2_all_inner(self, capsys):
        code, out, _ = run(capsys, "derivations", "@sl2")
        assert code == 0
        assert "derivation_dim: 3" in out
        assert "outer_dim: 0" in out

    def test_gl11_has_outer_part(self, capsys):
        code, out, _ = run(capsys, "derivations", "@gl11")
        assert code == 0
        assert "derivation_dim: 5" in out
        assert "outer_dim: 2" in out


class TestJordan:
    def test_demo_block(self, capsys):
        code, out, _ = run(capsys, "jordan", "@jordan_demo")
        assert code == 0
        assert "semisimple: 2 0 0 ; 0 2 0 ; 0 0 2" in out
        assert "nilpotent: 0 1 0 ; 0 0 1 ; 0 0 0" in out
        assert "nilpotent_index: 3" in out
        assert "semisimple_minpoly: x - 2" in out
        assert "minpoly_squarefree: true" in out

    def test_malformed_matrix_exits_two(self, capsys, tmp_path):
        bad = tmp_path / "bad.mat"
        bad.write_text("matrix 2\n1 2\n")
        code, _, err = run(capsys, "jordan", str(bad))
        assert code == 2
        assert "expected 2 rows" in err


class TestKac:
    def test_full_derivation_algebra_passes(self, capsys):
        code, out, _ = run(capsys, "kac", "@sl2", "@der_sl2_sym2")
        assert code == 0
        assert "subspace_dim: 20" in out
        assert "verdict: semisimple" in out

    def test_example_subalgebra_passes(self, capsys):
        code, out, _ = run(capsys, "kac", "@sl2", "@example_h")
        assert code == 0
        assert "subspace_dim: 15" in out

    def test_inner_copy_alone_fails(self, capsys):
        code, out, _ = run(capsys, "kac", "@sl2", "@inner_only")
        assert code == 1
        assert "constant_derivative_rank: 0" in out
        assert "verdict: not semisimple" in out


class TestCounterexamples:
    def test_folded_group_report(self, capsys):
        code, out, _ = run(capsys, "counterexample", "sec10")
        assert code == 0
        assert "command: counterexample sec10" in out
        assert "[v,v] = 2x + 4y" in out
        assert "verdict: NotAlgebraic" in out
        assert "randomized_pairs: 20" in out
        assert "commutator_identity: true" in out

    def test_folded_group_seed_independent_verdict(self, capsys):
        code1, out1, _ = run(capsys, "counterexample", "sec10", "--seed", "7")
        code2, out2, _ = run(capsys, "counterexample", "sec10", "--seed", "8")
        assert code1 == code2 == 0
        strip = lambda s: [l for l in s.splitlines()
                           if not l.startswith("elapsed")]
        assert strip(out1) == strip(out2)

    def test_unitriangular_coaction_report(self, capsys):
        code, out, _ = run(capsys, "counterexample", "sec8",
                           "--truncation", "3")
        assert code == 0
        assert "coaction_axioms: true" in out
        assert "no_proper_subgroup: true" in out
        assert "ideal_exclusion: true" in out
        assert "verdict: confirmed" in out

    def test_nonalgebraic_subalgebra_report(self, capsys):
        code, out, _ = run(capsys, "counterexample", "notalg")
        assert code == 0
        assert "subalgebra_dim: 15" in out
        assert "semisimple_part_in_image: false" in out
        assert "nilpotent_part_in_image: false" in out
        assert "verdict: NotAlgebraic" in out

    def test_unknown_name_rejected_by_parser(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["counterexample", "sec99"])
        assert info.value.code == 2


class TestReports:
    def test_json_round_trips_and_keeps_order(self, capsys):
        _, out, _ = run(capsys, "analyze", "@sl2", "--format", "json")
        data = json.loads(out)
        keys = list(data)
        assert keys[0] == "command"
        assert keys[-2:] == ["ok", "elapsed_seconds"]
        assert data["ok"] is True
        assert data["commutant_dim"] == 3

    def test_json_matrices_are_exact_strings(self, capsys):
        _, out, _ = run(capsys, "jordan", "@jordan_demo", "--format", "json")
        data = json.loads(out)
        assert data["semisimple"][0] == ["2", "0", "0"]

    def test_text_report_is_stable_across_runs(self, capsys):
        _, out1, _ = run(capsys, "counterexample", "sec10")
        _, out2, _ = run(capsys, "counterexample", "sec10")
        strip = lambda s: [l for l in s.splitlines()
                           if not l.startswith("elapsed")]
        assert strip(out1) == strip(out2)

import random
from fractions import Fraction

import pytest

from superlie import liealg
from superlie.derivations import (
    kac_semisimple_check,
    nonalgebraic_subalgebra_example,
)
from superlie.formats import (
    FormatError,
    data_text,
    format_rational,
    list_data,
    load_algebra,
    load_matrix,
    load_subspace,
    parse_algebra,
    parse_matrix,
    parse_rational,
    parse_subspace,
    realize_subspace,
    resolve_input,
    serialize_algebra,
    serialize_matrix,
)

from manifest import SEEDS

FACTORIES = {
    "sl2.alg": liealg.make_sl2,
    "gl11.alg": lambda: liealg.make_gl(1, 1),
    "gl22.alg": lambda: liealg.make_gl(2, 2),
    "mixed_jordan.alg": liealg.make_mixed_pair_line,
    "aff1.alg": liealg.make_affine_line,
}


class TestRationals:
    def test_accepted_forms(self):
        assert parse_rational("7") == 7
        assert parse_rational("-3") == -3
        assert parse_rational("2/4") == Fraction(1, 2)
        assert parse_rational("-10/4") == Fraction(-5, 2)

    @pytest.mark.parametrize("bad", ["1.5", "1e2", "+1", "1/ 2", "1/-2",
                                     "", "a", "1//2"])
    def test_rejected_forms(self, bad):
        with pytest.raises(ValueError):
            parse_rational(bad)

    def test_zero_denominator(self):
        with pytest.raises(ValueError, match="denominator"):
            parse_rational("3/0")

    def test_formatting_round_trip(self):
        for x in (Fraction(0), Fraction(5), Fraction(-7, 3), Fraction(22, 4)):
            assert parse_rational(format_rational(x)) == x


class TestAlgebraFiles:
    @pytest.mark.parametrize("filename", sorted(FACTORIES))
    def test_bundled_fixtures_round_trip(self, filename):
        L = FACTORIES[filename]()
        text = data_text(filename)
        back = parse_algebra(text, filename)
        assert back == L
        assert back.labels == L.labels
        assert parse_algebra(serialize_algebra(back)) == L

    def test_seeded_round_trip(self):
        # random parity-homogeneous constants, not required to satisfy Jacobi
        rng = random.Random(SEEDS["format_roundtrip"])
        for _ in range(25):
            m = rng.randrange(0, 3)
            n = rng.randrange(0, 3)
            d = m + n
            brackets = {}
            for _ in range(rng.randrange(0, 2 * d * d + 1) if d else 0):
                i, j = rng.randrange(d), rng.randrange(d)
                par = (int(i >= m) + int(j >= m)) % 2
                ks = [k for k in range(d) if int(k >= m) == par]
                if not ks:
                    continue
                k = rng.choice(ks)
                value = Fraction(rng.randrange(-9, 10), rng.randrange(1, 7))
                if value:
                    brackets.setdefault((i, j), {})[k] = value
            L = liealg.LieSuperAlgebra(m, n, brackets, name="random")
            assert parse_algebra(serialize_algebra(L)) == L

    def test_labels_survive(self):
        text = serialize_algebra(liealg.make_sl2())
        assert "label 1 h" in text
        assert parse_algebra(text).labels == ["h", "e", "f"]

    def test_name_whitespace_collapsed(self):
        L = liealg.LieSuperAlgebra(1, 0, {}, name="two words")
        assert "algebra two-words" in serialize_algebra(L)

    def test_comments_and_blanks_ignored(self):
        text = "# header\nalgebra a\n\ndim 1 1   # one of each\nbracket 2 2 1 2\n"
        L = parse_algebra(text)
        assert (L.m, L.n) == (1, 1)
        assert L.bracket_basis(1, 1) == {0: Fraction(2)}

    def test_duplicate_triple_rejected(self):
        text = ("algebra a\ndim 2 0\n"
                "bracket 1 2 1 1\nbracket 1 2 1 2\n")
        with pytest.raises(FormatError, match=r"f:4: duplicate entry"):
            parse_algebra(text, "f")

    def test_duplicate_with_equal_value_still_rejected(self):
        text = "algebra a\ndim 2 0\nbracket 1 2 1 1\nbracket 1 2 1 1\n"
        with pytest.raises(FormatError, match="duplicate"):
            parse_algebra(text, "f")

    def test_parity_violation_rejected(self):
        text = "algebra a\ndim 1 1\nbracket 1 2 1 1\n"
        with pytest.raises(FormatError, match=r"f:3: .*parity"):
            parse_algebra(text, "f")

    def test_index_out_of_range(self):
        text = "algebra a\ndim 1 0\nbracket 1 2 1 1\n"
        with pytest.raises(FormatError, match="out of range"):
            parse_algebra(text, "f")

    def test_decimal_value_rejected(self):
        text = "algebra a\ndim 2 0\nbracket 1 2 1 0.5\n"
        with pytest.raises(FormatError, match=r"f:3: not a rational"):
            parse_algebra(text, "f")

    @pytest.mark.parametrize("text,pattern", [
        ("dim 1 0\n", "before the algebra line"),
        ("algebra a\nbracket 1 1 1 1\n", "before the dim line"),
        ("algebra a\nalgebra b\n", "second algebra line"),
        ("algebra a\ndim 1 0\ndim 1 0\n", "second dim line"),
        ("algebra a\ndim 1 0\nlabel 2 y\n", "out of range"),
        ("algebra a\ndim 1 0\nlabel 1 y\nlabel 1 z\n", "duplicate label"),
        ("algebra a\ndim -1 0\n", "nonnegative"),
        ("algebra a\ndim 1 0\nspam\n", "unknown directive"),
        ("algebra a\n", "missing dim"),
        ("# nothing\n", "missing algebra"),
    ])
    def test_structural_errors(self, text, pattern):
        with pytest.raises(FormatError, match=pattern):
            parse_algebra(text, "f")

    def test_error_carries_position(self):
        try:
            parse_algebra("algebra a\ndim 2 0\nbracket 9 1 1 1\n", "some.alg")
        except FormatError as e:
            assert (e.path, e.line) == ("some.alg", 3)
        else:
            pytest.fail("expected a FormatError")


class TestMatrixFiles:
    def test_round_trip(self):
        rows = [[Fraction(1, 2), Fraction(-3)], [Fraction(0), Fraction(7, 5)]]
        assert parse_matrix(serialize_matrix(rows)) == rows

    def test_bundled_demo(self):
        rows = load_matrix("@jordan_demo")
        assert len(rows) == 3
        assert rows[0] == [2, 1, 0]

    @pytest.mark.parametrize("text,pattern", [
        ("matrix 2\n1 2\n", "expected 2 rows"),
        ("matrix 2\n1 2 3\n1 2\n", "expected 2 entries"),
        ("matrix 1\n1\n2\n", "more than 1 rows"),
        ("matrix 0\n", "positive"),
        ("1 2\n", "expected: matrix"),
        ("matrix 1\n0.5\n", "not a rational"),
        ("", "missing matrix"),
    ])
    def test_errors(self, text, pattern):
        with pytest.raises(FormatError, match=pattern):
            parse_matrix(text, "f")


class TestSubspaceFiles:
    def test_example_fixture_parses(self):
        spec = load_subspace("@example_h")
        assert spec.nodd == 2
        assert spec.basis_kind == "adjoint"
        assert spec.include_inner and not spec.include_full
        assert spec.elements[0] == [(Fraction(1), 1, 0)]
        assert spec.elements[2] == [(Fraction(1), 1, 1), (Fraction(1), 1, 2),
                                    (Fraction(1), 2, 2)]

    def test_signs_and_coefficients(self):
        spec = parse_subspace("sym 3\nelement -2 d1 z2 + d3 - 1/2 d2 z1 z3\n")
        assert spec.elements == [[(Fraction(-2), 1, 2), (Fraction(1), 3, 0),
                                  (Fraction(-1, 2), 2, 5)]]

    @pytest.mark.parametrize("text,pattern", [
        ("inner\n", "first directive must be sym"),
        ("sym 2\nsym 2\n", "second sym"),
        ("sym x\n", "integer"),
        ("sym 2\nbasis other\n", "derivations|adjoint"),
        ("sym 2\nelement\n", "empty element"),
        ("sym 2\nelement d3\n", "out of range"),
        ("sym 2\nelement d1 z9\n", "out of range"),
        ("sym 2\nelement d1 z2 z2\n", "repeated generator"),
        ("sym 2\nelement d1 +\n", "dangling sign"),
        ("sym 2\nelement 3\n", "coefficient without an operator"),
        ("sym 2\nelement z1\n", "expected a derivative"),
        ("sym 2\nelement d1 d2\n", "expected \\+ or -"),
        ("sym 2\nfull extra\n", "no arguments"),
        ("", "missing sym"),
    ])
    def test_errors(self, text, pattern):
        with pytest.raises(FormatError, match=pattern):
            parse_subspace(text, "f")

    def test_realized_dimensions_and_verdicts(self):
        L = load_algebra("@sl2")
        expected = {"der_sl2_sym2": (20, True), "example_h": (15, True),
                    "inner_only": (12, False)}
        for name, (dim, verdict) in expected.items():
            tda, H = realize_subspace(L, load_subspace("@" + name))
            assert H.dim == dim
            assert kac_semisimple_check(tda, H).semisimple is verdict

    def test_example_fixture_matches_builtin_subalgebra(self):
        L = load_algebra("@sl2")
        _, H = realize_subspace(L, load_subspace("@example_h"))
        assert H == nonalgebraic_subalgebra_example().h


class TestResolution:
    def test_at_names_bundled_files(self):
        name, text = resolve_input("@sl2", ".alg")
        assert name == "@sl2.alg"
        assert text.startswith("algebra sl2")

    def test_explicit_suffix_allowed(self):
        assert load_algebra("@sl2.alg") == liealg.make_sl2()

    def test_missing_fixture(self):
        with pytest.raises(FileNotFoundError, match="no bundled file"):
            resolve_input("@absent", ".alg")

    def test_filesystem_path(self, tmp_path):
        target = tmp_path / "tiny.alg"
        target.write_text("algebra t\ndim 1 0\n")
        assert load_algebra(str(target)).dim == 1

    def test_data_listing(self):
        names = list_data()
        for filename in FACTORIES:
            assert filename in names

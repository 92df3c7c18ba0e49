from fractions import Fraction

import pytest

from superlie.coaction import (
    CoactionData,
    NonNilpotentError,
    build_coaction,
    ideal_exclusion_report,
    subgroup_residue_report,
    unitriangular_coaction_data,
    unitriangular_fixture,
    trivial_coaction_data,
    verify_coaction,
)
from superlie.hopf import AbelianHopfAlgebra, FreeHopfSuperalgebra, tensor


@pytest.fixture(scope="module")
def tri_data():
    return unitriangular_coaction_data()


@pytest.fixture(scope="module")
def tri_rho(tri_data):
    return build_coaction(tri_data)


def xmon(X, n, *zexp):
    return X.monomial((n,) + tuple(zexp))


class TestEvaluator:
    def test_coordinate_images(self, tri_data, tri_rho):
        X, G = tri_data.source, tri_data.target
        u, v = G.by_name("u"), G.by_name("v")
        z1, z2, z3 = (X.coordinate(i) for i in (1, 2, 3))
        assert tri_rho.apply(z1) == tensor(z1, G.one())
        assert tri_rho.apply(z2) == tensor(z1, -v) + tensor(z2, G.one())
        assert tri_rho.apply(z3) == tensor(z1, u) + tensor(z3, G.one())

    def test_torus_image_matches_frozen_expansion(self, tri_data, tri_rho):
        # the four displayed degree <= 1 terms plus the forced quadratic
        # correction; the correction's sign is pinned by the morphism law
        X, G = tri_data.source, tri_data.target
        u, v = G.by_name("u"), G.by_name("v")
        t = X.character((1,))
        z1, z2, z3 = (X.coordinate(i) for i in (1, 2, 3))
        want = (tensor(t, G.one()) + tensor(t * z1, u * v)
                + tensor(t * z2, u) + tensor(t * z3, v)
                - tensor(t * z2 * z3, u * v))
        assert tri_rho.apply(t) == want

    def test_torus_square_coefficients(self, tri_data, tri_rho):
        X, G = tri_data.source, tri_data.target
        tsq = X.character((2,))
        got = tri_rho.apply(tsq)
        u = G.by_name("u")
        at_z2 = got.terms.get(((2, 0, 1, 0), next(iter(u.terms))))
        assert at_z2 == 2
        assert got == tri_rho.apply(X.character((1,))) * tri_rho.apply(X.character((1,)))

    def test_inverse_character_is_consistent(self, tri_data, tri_rho):
        X, G = tri_data.source, tri_data.target
        one = tensor(X.one(), G.one())
        assert tri_rho.apply(X.character((1,))) * tri_rho.apply(X.character((-1,))) == one

    def test_round_trip_recovers_character_values(self, tri_data, tri_rho):
        for i in range(1, 4):
            assert tri_rho.read_back_f(i, (1,)) == tri_rho.f(i, (1,))
            assert tri_rho.read_back_f(i, (2,)) == 2 * tri_rho.f(i, (1,))
            assert tri_rho.read_back_f(i, (-1,)) == -tri_rho.f(i, (1,))

    def test_primitive_stability(self, tri_data, tri_rho):
        X = tri_data.source
        for i in range(1, 4):
            image = tri_rho.apply(X.coordinate(i))
            for (mx, _), _c in image.terms.items():
                assert mx[0] == 0
                assert sum(mx[1:]) == 1

    def test_torus_action_trivial_modulo_nilpotents(self, tri_data, tri_rho):
        # every term beyond g (x) 1 carries a nilpotent factor
        X, G = tri_data.source, tri_data.target
        t = X.character((1,))
        tkey = next(iter(t.terms))
        for (mx, mg), _c in tri_rho.apply(t).terms.items():
            if (mx, mg) == (tkey, G.unit_monomial()):
                continue
            assert sum(mx[X.r:]) > 0 or sum(mg[G.r + G.l:]) > 0

    def test_trivial_coaction(self):
        X = AbelianHopfAlgebra(1, 1, 2)
        G = FreeHopfSuperalgebra(odd=("u", "v"))
        rho = build_coaction(trivial_coaction_data(X, G))
        for mon in X.basis_monomials(2):
            el = X.monomial(mon)
            assert rho.apply(el) == tensor(el, G.one())


class TestValidation:
    def test_non_nilpotent_character_value_rejected(self):
        X = AbelianHopfAlgebra(1, 1, 0)
        G = FreeHopfSuperalgebra(even=[("w", "primitive")])
        data = CoactionData.build(X, G, [[G.one()]], [[G.by_name("w")]])
        with pytest.raises(NonNilpotentError):
            build_coaction(data)

    def test_wrong_parity_rejected(self):
        X = AbelianHopfAlgebra(1, 1, 2)
        G = FreeHopfSuperalgebra(odd=("u", "v"))
        u, v = G.by_name("u"), G.by_name("v")
        good = unitriangular_coaction_data()
        bad_chars = [list(r) for r in good.char_values]
        bad_chars[1] = [u * v]  # even value on an odd coordinate
        with pytest.raises(ValueError):
            build_coaction(CoactionData.build(X, G, good.matrix, bad_chars))
        bad_matrix = [list(r) for r in good.matrix]
        bad_matrix[0][1] = u * v
        with pytest.raises(ValueError):
            build_coaction(CoactionData.build(X, G, bad_matrix, good.char_values))

    def test_shape_errors(self):
        X = AbelianHopfAlgebra(1, 1, 2)
        G = FreeHopfSuperalgebra(odd=("u", "v"))
        with pytest.raises(ValueError):
            CoactionData.build(X, G, [[G.one()]], [[G.zero()]] * 3)
        with pytest.raises(ValueError):
            CoactionData.build(X, G, [[G.one()] * 3] * 3, [[G.zero()]] * 2)


class TestVerify:
    def test_counterexample_data_passes(self, tri_data):
        report = verify_coaction(tri_data, max_degree=3)
        assert report.ok, report.failures
        assert report.checked > 50

    def test_trivial_data_passes(self):
        X = AbelianHopfAlgebra(1, 1, 2)
        G = FreeHopfSuperalgebra(odd=("u", "v"))
        report = verify_coaction(trivial_coaction_data(X, G), max_degree=2)
        assert report.ok, report.failures

    def test_sign_mutation_breaks_character_compatibility(self, tri_data):
        X, G = tri_data.source, tri_data.target
        v = G.by_name("v")
        matrix = [list(r) for r in tri_data.matrix]
        matrix[0][1] = v  # flip the sign of the only off-diagonal odd entry
        bad = CoactionData.build(X, G, matrix, tri_data.char_values)
        report = verify_coaction(bad, max_degree=2)
        assert not report.ok
        assert any("character compatibility fails for coordinate 1" in f
                   for f in report.failures)

    def test_matrix_mutation_breaks_supermodule_condition(self, tri_data):
        X, G = tri_data.source, tri_data.target
        u = G.by_name("u")
        matrix = [list(r) for r in tri_data.matrix]
        matrix[2][0] = u  # extra entry breaks the matrix comultiplication law
        bad = CoactionData.build(X, G, matrix, tri_data.char_values)
        report = verify_coaction(bad, max_degree=2)
        assert not report.ok
        assert any("matrix comultiplication" in f for f in report.failures)


class TestSubgroupResidue:
    def test_report_passes(self, tri_data):
        report = subgroup_residue_report(tri_data)
        assert report.ok
        assert report.line_rank == 2
        assert report.structure_rank == 3
        assert report.full_space_residue_zero
        assert len(report.sampled_lines) == 5
        assert all(not c.residue_is_zero for c in report.cases)

    def test_full_odd_part_leaves_even_witness(self, tri_data):
        report = subgroup_residue_report(tri_data)
        case = next(c for c in report.cases
                    if c.even_part == "0" and c.odd_part == "span{z2,z3}")
        # the surviving residue is the even coordinate against both odd
        # generators: monomial (0,1,0,0) tensor (1,1)
        assert case.witness == "((0, 1, 0, 0), (1, 1))"


class TestIdealExclusion:
    def test_report_passes(self, tri_data):
        report = ideal_exclusion_report(tri_data)
        assert report.ok
        assert report.generator_rank == 2
        assert len(report.cases) == 3
        for case in report.cases:
            assert case.ideal_dim == 2
            assert case.degree_one_dim == 1
            assert case.contains_uv
            assert not (case.contains_u and case.contains_v)
            assert not case.all_inside


def test_fixture_bundle_agrees():
    data, residue, exclusion = unitriangular_fixture()
    assert residue.ok and exclusion.ok
    assert verify_coaction(data, max_degree=3).ok

import random
from fractions import Fraction

import pytest

from superlie.hopf import (
    AbelianHopfAlgebra,
    FreeHopfSuperalgebra,
    HopfElement,
    TensorElement,
    standard_inversions,
    tensor,
    verify_hopf,
)

from manifest import SEEDS


def mon(alg, **exps):
    m = [0] * alg.nslots
    for name, e in exps.items():
        m[alg.names.index(name)] = e
    return alg.monomial(m)


def random_element(rng, alg, max_degree=2, group_range=1, terms=3):
    pool = list(alg.basis_monomials(max_degree, group_range))
    out = alg.zero()
    for _ in range(terms):
        c = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        out = out + alg.monomial(rng.choice(pool), c)
    return out


class TestProduct:
    def test_odd_coordinates_anticommute(self):
        X = AbelianHopfAlgebra(0, 0, 2)
        z1, z2 = X.coordinate(1), X.coordinate(2)
        assert z1 * z2 == -(z2 * z1)
        assert (z1 * z1).is_zero()

    def test_even_coordinates_commute(self):
        X = AbelianHopfAlgebra(1, 1, 1)
        t, z, w = X.by_name("t"), X.coordinate(1), X.coordinate(2)
        assert t * z == z * t
        assert z * w == w * z
        assert (z * z).coefficient((0, 2, 0)) == 1

    def test_character_inverse(self):
        X = AbelianHopfAlgebra(1, 0, 0)
        t = X.character((1,))
        tinv = X.character((-1,))
        assert t * tinv == X.one()

    def test_parity_and_degree(self):
        X = AbelianHopfAlgebra(1, 1, 2)
        t, z1 = X.by_name("t"), X.coordinate(1)
        z2, z3 = X.coordinate(2), X.coordinate(3)
        assert (t * z1).parity() == 0
        assert z2.parity() == 1
        assert (z2 * z3).parity() == 0
        assert (z1 + z2).parity() is None
        assert (t + z1 * z2 * z2).z_degree() == 0
        assert (z1 * z2 * z3).z_degree() == 3

    def test_nilpotency_criterion(self):
        X = AbelianHopfAlgebra(1, 1, 2)
        t, z1 = X.by_name("t"), X.coordinate(1)
        z2, z3 = X.coordinate(2), X.coordinate(3)
        assert z2.is_nilpotent()
        assert (z1 * z2 + 3 * z2 * z3).is_nilpotent()
        assert not z1.is_nilpotent()
        assert not (t + z2).is_nilpotent()
        nil = t * z2 + z1 * z3
        assert nil.is_nilpotent()
        assert (nil * nil * nil).is_zero()

    def test_scalar_ops(self):
        X = AbelianHopfAlgebra(0, 1, 0)
        z = X.coordinate(1)
        assert 2 * z - z == z
        assert (z / 2) * 2 == z
        assert z - z == X.zero()
        assert X.coerce(5) == 5 * X.one()


class TestCoproduct:
    def test_coordinates_primitive(self):
        X = AbelianHopfAlgebra(1, 2, 3)
        for i in range(1, 6):
            z = X.coordinate(i)
            got = X.comultiply(z)
            want = tensor(z, X.one()) + tensor(X.one(), z)
            assert got == want

    def test_characters_grouplike(self):
        X = AbelianHopfAlgebra(2, 1, 1)
        g = X.character((2, -1))
        assert X.comultiply(g) == tensor(g, g)

    def test_odd_pair_coproduct(self):
        # frozen expansion: the signed shuffle of two odd coordinates
        X = AbelianHopfAlgebra(0, 0, 2)
        z1, z2 = X.coordinate(1), X.coordinate(2)
        one = X.one()
        got = X.comultiply(z1 * z2)
        want = (tensor(one, z1 * z2) + tensor(z1, z2)
                - tensor(z2, z1) + tensor(z1 * z2, one))
        assert got == want

    def test_even_power_binomials(self):
        X = AbelianHopfAlgebra(0, 1, 0)
        z = X.coordinate(1)
        one = X.one()
        got = X.comultiply(z * z * z)
        want = (tensor(one, z * z * z) + 3 * tensor(z, z * z)
                + 3 * tensor(z * z, z) + tensor(z * z * z, one))
        assert got == want

    def test_morphism_on_seeded_elements(self):
        rng = random.Random(SEEDS["hopf_elements"])
        X = AbelianHopfAlgebra(1, 1, 2)
        for _ in range(25):
            a = random_element(rng, X)
            b = random_element(rng, X)
            assert X.comultiply(a * b) == X.comultiply(a) * X.comultiply(b)

    def test_sign_rule_counts_crossings(self):
        lam = (0, 0, 1, 1, 1)
        assert standard_inversions(lam, (0, 0, 0, 0, 1), 1, 1) == 2
        assert standard_inversions(lam, (0, 0, 1, 0, 1), 1, 1) == 1
        assert standard_inversions(lam, (0, 0, 1, 1, 1), 1, 1) == 0


class TestCounitAntipode:
    def test_counit_values(self):
        X = AbelianHopfAlgebra(1, 1, 1)
        t, z1, z2 = X.by_name("t"), X.coordinate(1), X.coordinate(2)
        assert X.counit(t) == 1
        assert X.counit(3 * t - 2 * X.one()) == 1
        assert X.counit(z1) == 0
        assert X.counit(t * z2) == 0

    def test_antipode_values(self):
        X = AbelianHopfAlgebra(1, 1, 2)
        t, z1 = X.by_name("t"), X.coordinate(1)
        z2, z3 = X.coordinate(2), X.coordinate(3)
        tinv = X.character((-1,))
        assert X.antipode(t) == tinv
        assert X.antipode(z1) == -z1
        assert X.antipode(t * z2) == -(tinv * z2)
        assert X.antipode(z2 * z3) == z2 * z3
        assert X.antipode(z1 * z1) == z1 * z1

    def test_antipode_is_convolution_inverse_of_identity(self):
        X = AbelianHopfAlgebra(1, 1, 2)
        z2, z3 = X.coordinate(2), X.coordinate(3)
        el = X.by_name("t") * z2 * z3
        delta = X.comultiply(el)
        folded = delta.antipode_slot(0).multiply_slots(0)
        assert folded == X.counit(el) * TensorElement.one((X,))


class TestTensorElement:
    def test_koszul_sign_in_products(self):
        X = AbelianHopfAlgebra(0, 0, 2)
        z1, z2 = X.coordinate(1), X.coordinate(2)
        one = X.one()
        assert tensor(one, z1) * tensor(z2, one) == -tensor(z2, z1)
        assert tensor(z1, one) * tensor(z2, one) == tensor(z1 * z2, one)
        assert tensor(one, z1) * tensor(one, z2) == tensor(one, z1 * z2)

    def test_mixed_algebra_tensors(self):
        X = AbelianHopfAlgebra(1, 0, 1)
        G = FreeHopfSuperalgebra(odd=("u", "v"))
        zx = X.coordinate(1)
        u = G.by_name("u")
        te = tensor(zx, u)
        assert (te * te).is_zero()
        tf = tensor(X.one(), u) * tensor(zx, G.one())
        assert tf == -tensor(zx, u)

    def test_slot_operations_compose(self):
        X = AbelianHopfAlgebra(1, 1, 1)
        el = X.by_name("t") * X.coordinate(2)
        delta = X.comultiply(el)
        assert delta.counit_slot(1).slot_element() == el
        triple = delta.comultiply_slot(0)
        assert len(triple.algebras) == 3
        assert triple.counit_slot(0).counit_slot(0).slot_element() == el


class TestVerify:
    @pytest.mark.parametrize("r,l,k", [(0, 0, 2), (1, 1, 2), (0, 2, 1), (1, 0, 3)])
    def test_axioms_hold(self, r, l, k):
        report = verify_hopf(AbelianHopfAlgebra(r, l, k), 3)
        assert report.ok, report.failures
        assert report.checked > 0

    def test_free_hopf_axioms(self):
        G = FreeHopfSuperalgebra(even=[("t", "grouplike")], odd=("u", "v"))
        report = verify_hopf(G, 4)
        assert report.ok, report.failures

    def test_free_hopf_rejects_bad_kind(self):
        with pytest.raises(ValueError):
            FreeHopfSuperalgebra(even=[("t", "central")])
        with pytest.raises(ValueError):
            FreeHopfSuperalgebra(odd=("u", "u"))

    def test_seeded_mutation_detected_with_witness(self):
        # corrupt counting rule: compares against the full left exponent
        # instead of what remains after splitting off the right factor
        def corrupted(lam, mu, r, l):
            count = 0
            first = r + l
            for i in range(first, len(lam)):
                if mu[i]:
                    for j in range(first, i):
                        if lam[j] == 1:
                            count += 1
            return count

        rng = random.Random(SEEDS["hopf_mutation"])
        r = rng.choice((0, 1))
        l = rng.choice((0, 1, 2))
        k = rng.choice((2, 3))
        bad = AbelianHopfAlgebra(r, l, k, sign_rule=corrupted)
        report = verify_hopf(bad, 4)
        assert not report.ok
        witness = report.first_failure()
        assert witness is not None and "coassociativity" in witness
        # the witness monomial must involve at least two odd coordinates
        assert witness.count("z") >= 2

    def test_mutation_leaves_single_generators_primitive(self):
        def corrupted(lam, mu, r, l):
            count = 0
            first = r + l
            for i in range(first, len(lam)):
                if mu[i]:
                    count += sum(1 for j in range(first, i) if lam[j] == 1)
            return count

        bad = AbelianHopfAlgebra(0, 0, 2, sign_rule=corrupted)
        z1 = bad.coordinate(1)
        got = bad.comultiply(z1)
        assert got == tensor(z1, bad.one()) + tensor(bad.one(), z1)


class TestBasisEnumeration:
    def test_degree_bound_and_count(self):
        X = AbelianHopfAlgebra(1, 1, 2)
        mons = list(X.basis_monomials(2, group_range=1))
        assert len(mons) == len(set(mons))
        assert all(X.monomial_degree(m) <= 2 for m in mons)
        # 3 characters x (even exponent, odd pair) patterns of degree <= 2:
        # degree 0:1, degree 1: z even + 2 odd = 3, degree 2: z^2, z*odd x2,
        # odd pair = 4, so 8 z-patterns per character
        assert len(mons) == 24

    def test_bad_monomials_rejected(self):
        X = AbelianHopfAlgebra(1, 1, 1)
        with pytest.raises(ValueError):
            X.monomial((0, -1, 0))
        with pytest.raises(ValueError):
            X.monomial((0, 0, 2))
        with pytest.raises(ValueError):
            X.monomial((0, 0))
        X.monomial((-2, 0, 0))  # negative character exponents are fine

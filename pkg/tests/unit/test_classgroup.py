"""
Unit tests for forms, the class group and its characters.

Tests cover:
- Reduction, enumeration and composition of forms
- Group structure against reference class numbers
- Genus theory
- Exact cyclotomic arithmetic and character orthogonality
"""

from fractions import Fraction

import pytest


class TestForms:
    """Tests for binary quadratic forms."""

    def test_enumerate_reduced_d23(self):
        """Test the reduced forms of discriminant -23."""
        from thetalift.classgroup import enumerate_reduced

        assert [f.as_tuple() for f in enumerate_reduced(-23)] == [(1, 1, 6), (2, 1, 3), (2, -1, 3)]

    def test_enumerate_reduced_d47(self):
        """Test principal form first and h = 5."""
        from thetalift.classgroup import enumerate_reduced, principal_form

        forms = enumerate_reduced(-47)
        assert len(forms) == 5
        assert forms[0] == principal_form(-47)
        assert all(f.is_reduced() and f.disc == -47 for f in forms)

    def test_reduce_is_class_invariant(self):
        """Test reduction is unchanged by SL2(Z) transformations."""
        import numpy as np

        from thetalift.arith import random_modular_matrix
        from thetalift.classgroup import QuadForm, reduce_form

        rng = np.random.default_rng(1)
        f = QuadForm(2, 1, 3)
        for _ in range(10):
            g = random_modular_matrix(rng, length=4, spread=2)
            assert reduce_form(f.transform(g)) == f

    def test_not_positive_definite(self):
        """Test indefinite or negative forms are rejected."""
        from thetalift.classgroup import QuadForm

        with pytest.raises(ValueError):
            QuadForm(1, 3, 1)
        with pytest.raises(ValueError):
            QuadForm(-1, 1, 6)

    def test_compose_inverse_is_principal(self):
        """Test [a,b,c] composed with [a,-b,c] is principal."""
        from thetalift.classgroup import QuadForm, compose

        assert compose(QuadForm(2, 1, 3), QuadForm(2, -1, 3)) == QuadForm(1, 1, 6)

    def test_compose_rejects_mixed_discriminants(self):
        """Test forms of different discriminants cannot be composed."""
        from thetalift.classgroup import QuadForm, compose

        with pytest.raises(ValueError, match="discriminants differ"):
            compose(QuadForm(1, 1, 6), QuadForm(1, 1, 2))

    def test_cm_point(self):
        """Test the CM point is the root in the upper half plane."""
        import mpmath as mp

        from thetalift.classgroup import QuadForm, cm_point

        p = cm_point(QuadForm(2, 1, 3))
        assert p.v > 0
        with mp.workprec(128):
            assert abs(2 * p.tau ** 2 + p.tau + 3) < mp.mpf(10) ** -30


class TestClassGroup:
    """Tests for the class group."""

    @pytest.mark.parametrize("D", [-7, -15, -23, -47, -71])
    def test_class_number_matches_reference(self, D):
        """Test h and structure against the reference table and the oracle."""
        from thetalift.arith import class_number_oracle
        from thetalift.classgroup import class_group
        from thetalift.config import get_expected

        G = class_group(D)
        expected = get_expected(D)
        assert G.h == expected["class_number"] == class_number_oracle(D)
        assert G.cyclic_orders == expected["cyclic_orders"]

    def test_group_axioms(self, cl47):
        """Test identity, inverses and associativity of the table."""
        G = cl47
        for x in range(G.h):
            assert G.multiply(0, x) == x
            assert G.multiply(x, G.inverse(x)) == 0
            for y in range(G.h):
                assert G.multiply(x, y) == G.multiply(y, x)
                for z in range(G.h):
                    assert G.multiply(G.multiply(x, y), z) == G.multiply(x, G.multiply(y, z))

    def test_inverse_is_conjugate_form(self, cl23):
        """Test the inverse class is represented by [a, -b, c]."""
        G = cl23
        for x in range(G.h):
            assert G.index_of(G.form(x).conjugate()) == G.inverse(x)

    def test_coordinates_roundtrip(self, cl47):
        """Test generator coordinates reconstruct every class."""
        G = cl47
        for x in range(G.h):
            assert G.from_coordinates(G.coordinates[x]) == x

    def test_class_action(self, cl23):
        """Test [h]^2 [a]."""
        G = cl23
        assert G.class_action(0, 1) == 1
        assert G.class_action(1, 0) == G.square(1)

    def test_index_of_wrong_discriminant(self, cl23):
        """Test forms of another discriminant are rejected."""
        from thetalift.classgroup import QuadForm

        with pytest.raises(ValueError, match="expected -23"):
            cl23.index_of(QuadForm(1, 1, 2))

    def test_cached(self):
        """Test class groups are built once per discriminant."""
        from thetalift.classgroup import class_group

        assert class_group(-23) is class_group(-23)


class TestGenus:
    """Tests for genus theory."""

    def test_genus_count(self, cl15, cl23, cl47):
        """Test 2^(t-1) genera."""
        from thetalift.classgroup import genus_data

        assert genus_data(cl15).genus_count == 2
        assert genus_data(cl23).genus_count == 1
        assert genus_data(cl47).genus_count == 1

    def test_squares_d15(self, cl15):
        """Test Cl^2 is trivial for D = -15."""
        from thetalift.classgroup import genus_data, genus_of

        assert genus_data(cl15).squares == (0,)
        assert genus_of(cl15, 1) == [1]

    def test_genus_of_odd_class_number(self, cl23):
        """Test a single genus when h is odd."""
        from thetalift.classgroup import genus_of

        assert genus_of(cl23, 0) == [0, 1, 2]

    def test_coprime_representative(self, cl15):
        """Test the representative stays in its class with a coprime to M."""
        from math import gcd

        from thetalift.classgroup import coprime_representative

        for cls in range(cl15.h):
            f = coprime_representative(cl15, cls, 2)
            assert gcd(f.a, 2) == 1
            assert cl15.index_of(f) == cls


class TestCyclotomic:
    """Tests for exact cyclotomic arithmetic."""

    def test_roots_of_unity(self):
        """Test zeta^m = 1 and the minimal relation."""
        from thetalift.classgroup import CyclotomicNumber

        z = CyclotomicNumber.root_of_unity(5, 1)
        assert z * z * z * z * z == 1
        assert (1 + z + z * z + z * z * z + z * z * z * z).is_zero()

    def test_conjugate_product_is_rational(self):
        """Test z * conj(z) = 1 exactly."""
        from thetalift.classgroup import CyclotomicNumber

        z = CyclotomicNumber.root_of_unity(7, 3)
        product = z * z.conjugate()
        assert product.is_rational()
        assert product.rational_value() == Fraction(1)

    def test_mixed_orders(self):
        """Test arithmetic across Q(zeta_3) and Q(zeta_2)."""
        from thetalift.classgroup import CyclotomicNumber

        w = CyclotomicNumber.root_of_unity(3, 1)
        minus_one = CyclotomicNumber.root_of_unity(2, 1)
        assert minus_one == -1
        assert (w * minus_one + w).is_zero()

    def test_numerical_value(self):
        """Test to_complex against e(k/m)."""
        import mpmath as mp

        from thetalift.classgroup import CyclotomicNumber

        z = CyclotomicNumber.root_of_unity(3, 1)
        with mp.workprec(128):
            assert abs(z.to_complex(128) - mp.expjpi(mp.mpf(2) / 3)) < mp.mpf(10) ** -30

    def test_rational_value_of_irrational(self):
        """Test rational_value refuses non-rational numbers."""
        from thetalift.classgroup import CyclotomicNumber

        with pytest.raises(ValueError, match="not rational"):
            CyclotomicNumber.root_of_unity(3, 1).rational_value()


class TestCharacters:
    """Tests for class group characters."""

    def test_canonical_order(self, cl23):
        """Test trivial first, then lexicographic exponents."""
        from thetalift.classgroup import character_from_index, characters

        chars = characters(cl23)
        assert [psi.exponents for psi in chars] == [(0,), (1,), (2,)]
        assert chars[0].is_trivial()
        for i, psi in enumerate(chars):
            assert psi.index == i
            assert character_from_index(cl23, i) == psi

    def test_unknown_index(self, cl23):
        """Test indices outside 0..h-1 are rejected."""
        from thetalift.classgroup import character_from_index

        with pytest.raises(ValueError, match="Unknown character index"):
            character_from_index(cl23, 3)

    def test_homomorphism(self, cl47):
        """Test psi(xy) = psi(x) psi(y)."""
        from thetalift.classgroup import characters

        G = cl47
        for psi in characters(G):
            for x in range(G.h):
                for y in range(G.h):
                    assert psi(G.multiply(x, y)) == psi(x) * psi(y)

    def test_orthogonality(self, cl47):
        """Test (1/h) sum psi conj(chi) = [psi = chi] exactly."""
        from thetalift.classgroup import characters, orthogonality_sum

        chars = characters(cl47)
        for psi in chars:
            for chi in chars:
                assert orthogonality_sum(psi, chi) == (1 if psi == chi else 0)

    def test_real_characters(self, cl15, cl23):
        """Test genus characters are real and cubic ones are not."""
        from thetalift.classgroup import characters

        assert all(psi.is_real() for psi in characters(cl15))
        chars = characters(cl23)
        assert [psi.is_real() for psi in chars] == [True, False, False]
        assert chars[1].conjugate() == chars[2]
        assert chars[1].order == 3

    def test_square_roots(self, cl15, cl23):
        """Test chi with chi^2 = psi."""
        from thetalift.classgroup import characters, square_roots

        chars15 = characters(cl15)
        assert len(square_roots(chars15[0], chars15)) == 2
        chars23 = characters(cl23)
        assert square_roots(chars23[0], chars23) == [chars23[0]]
        assert square_roots(chars23[2], chars23) == [chars23[1]]

    def test_conjugation_representatives(self, cl47):
        """Test (h + r)/2 representatives."""
        from thetalift.classgroup import characters, conjugation_representatives

        assert len(conjugation_representatives(characters(cl47))) == 3

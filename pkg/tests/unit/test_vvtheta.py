"""
Unit tests for vector-valued theta functions and the space they span.
"""

from fractions import Fraction

import pytest


class TestVVTheta:
    """Tests for Theta_P(tau, h)."""

    def test_constant_term(self, cl23):
        """Test only lambda = 0 contributes a constant term."""
        from thetalift.vvtheta import vv_theta

        th = vv_theta(cl23, 0, 1, 5)
        assert th.component(0).coefficient(0) == 1
        assert all(th.component(r).coefficient(0) == 0 for r in range(1, 23))
        assert th.form.meta == {"kind": "vv_theta", "a": 0, "h": 1}
        assert th.form.prec == 5 * 23

    def test_component_zero_is_scalar_theta(self, cl23):
        """Test component 0 of Theta_P(tau, h) is theta_{a h^2}."""
        from thetalift.scalartheta import theta_ideal
        from thetalift.vvtheta import vv_theta

        n_max = 8
        for a in range(cl23.h):
            for h in range(cl23.h):
                comp = vv_theta(cl23, a, h, n_max).component(0)
                scalar = theta_ideal(cl23, cl23.class_action(h, a), n_max)
                assert all(n % 23 == 0 for n in comp.coeffs)
                assert [comp.coefficient(23 * n) for n in range(n_max + 1)] == scalar.coefficient_list()

    def test_support(self, cl15, cl23):
        """Test components only carry exponents n = N Q(r) mod N."""
        from thetalift.vvtheta import vv_theta

        for G in (cl15, cl23):
            for h in range(G.h):
                assert vv_theta(G, 0, h, 6).form.check_support()

    def test_lattice_data(self, cl23):
        """Test the lattice representative has A prime to D."""
        from thetalift.vvtheta import lattice_discform, vv_theta

        form, df = lattice_discform(cl23, 1)
        assert form.a % 23 != 0
        assert df.A == form.a
        th = vv_theta(cl23, 1, 2, 3)
        assert th.A == form.a
        assert th.df == df

    def test_symmetric_for_prime_discriminant(self, cl23):
        """Test O(P'/P) = {+-1} already fixes Theta_P for prime |D|."""
        from thetalift.vvtheta import vv_theta, vv_theta_sym

        F = vv_theta(cl23, 0, 1, 6).form
        assert F.is_symmetric()
        assert vv_theta_sym(cl23, 0, 1, 6).equals(F.scale(2))

    def test_negative_truncation_rejected(self, cl7):
        """Test n_max must be non-negative."""
        from thetalift.vvtheta import vv_theta

        with pytest.raises(ValueError, match="non-negative"):
            vv_theta(cl7, 0, 0, -1)


class TestCharacterThetas:
    """Tests for Theta_P(tau, psi) and E_P."""

    def test_nontrivial_characters_give_cusp_forms(self, cl23):
        """Test Theta_P(tau, psi) is cuspidal for psi != 1."""
        from thetalift.classgroup import characters
        from thetalift.vvtheta import vv_theta_psi, vv_theta_sym_psi

        for psi in characters(cl23):
            F = vv_theta_psi(cl23, 0, psi, 5)
            assert F.meta["character"] == psi.index
            if psi.is_trivial():
                assert not F.is_cuspidal()
            else:
                assert F.is_cuspidal()
                assert vv_theta_sym_psi(cl23, 0, psi, 5).is_cuspidal()

    def test_eisenstein_constant_term(self, cl23):
        """Test E_P has constant term h in component 0."""
        from thetalift.vvtheta import eisenstein_vv

        E = eisenstein_vv(cl23, 0, 4)
        assert E.coefficient(0, 0) == cl23.h
        assert E.check_support()

    def test_eisenstein_is_trivial_character_sum(self, cl15):
        """Test E_P = Theta_P(tau, 1)."""
        from thetalift.classgroup import characters
        from thetalift.vvtheta import eisenstein_vv, vv_theta_psi

        trivial = next(psi for psi in characters(cl15) if psi.is_trivial())
        assert eisenstein_vv(cl15, 1, 5).equals(vv_theta_psi(cl15, 1, trivial, 5))

    @pytest.mark.parametrize("disc", [-23, -47])
    def test_conjugate_character_scales_by_psi_of_a(self, disc, request):
        """Test Theta_P(tau, conj psi) = psi(a) Theta_P(tau, psi) for every class a and character."""
        from thetalift.classgroup import characters
        from thetalift.vvtheta import vv_theta_psi

        G = request.getfixturevalue(f"cl{-disc}")
        for psi in characters(G):
            for a_class in range(G.h):
                lhs = vv_theta_psi(G, a_class, psi.conjugate(), 4)
                rhs = vv_theta_psi(G, a_class, psi, 4).scale(psi(a_class))
                assert lhs.equals(rhs)


class TestThetaSpace:
    """Tests for the rank of Theta(P)."""

    def test_exact_rank(self):
        """Test rank over repeated and zero columns."""
        from thetalift.vvtheta import exact_rank

        assert exact_rank([[1, 2, 0], [2, 4, 0]]) == 1
        assert exact_rank([[1, 0], [0, 1]]) == 2
        assert exact_rank([]) == 0
        assert exact_rank([[0, 0]]) == 0

    def test_dimension_formula(self, cl7, cl15, cl23, cl47):
        """Test (h + 2^(t-1)) / 2 on the reference discriminants."""
        from thetalift.config import TEST_DISCRIMINANTS
        from thetalift.vvtheta import dimension_formula

        for G in (cl7, cl15, cl23, cl47):
            assert dimension_formula(G) == Fraction(TEST_DISCRIMINANTS[G.D]["theta_dim"])

    @pytest.mark.parametrize("D", [-7, -15, -23])
    def test_rank_matches_formula(self, D):
        """Test the rank of Theta(P) equals the dimension formula."""
        from thetalift.classgroup import class_group
        from thetalift.vvtheta import theta_space

        G = class_group(D)
        space = theta_space(G, 0, 12)
        assert space.rank == space.rank_half
        assert space.matches_formula
        assert len(space.basis) == len(space.basis_characters)
        assert len(space.sym_basis) == len(space.sym_basis_characters)
        assert space.to_dict()["dimension_formula"] == str(space.dimension_formula)

    def test_stability_needs_room(self, cl7):
        """Test n_max below 2 is rejected."""
        from thetalift.vvtheta import theta_space

        with pytest.raises(ValueError, match="at least 2"):
            theta_space(cl7, 0, 1)

"""
Unit tests for discriminants, Kronecker symbols and the modular group.

Tests cover:
- Discriminant validation and prime data
- The class number formula
- Kronecker symbols
- S/T factorization, Gamma_0(N) cosets and fundamental-domain reduction
"""

import numpy as np
import pytest


class TestFundamentalDiscriminant:
    """Tests for discriminant validation."""

    @pytest.mark.parametrize("D", [-3, -7, -15, -23, -47, -71, -35])
    def test_accepts_odd_fundamental(self, D):
        """Test odd squarefree D = 1 mod 4 are accepted."""
        from thetalift.arith import FundamentalDiscriminant, is_fundamental

        assert is_fundamental(D)
        assert FundamentalDiscriminant(D).D == D

    @pytest.mark.parametrize("D", [5, -4, -8, -5, -75, -63])
    def test_rejects_others(self, D):
        """Test positive, even, 3 mod 4 and non-squarefree values are rejected."""
        from thetalift.arith import FundamentalDiscriminant
        from thetalift.exceptions import InvalidDiscriminantError

        with pytest.raises(InvalidDiscriminantError):
            FundamentalDiscriminant(D)

    def test_invalid_discriminant_is_value_error(self):
        """Test the error can be caught as ValueError."""
        from thetalift.arith import FundamentalDiscriminant

        with pytest.raises(ValueError, match="Invalid discriminant -75"):
            FundamentalDiscriminant(-75)

    def test_prime_data(self):
        """Test level, prime factors, t and roots of unity."""
        from thetalift.arith import FundamentalDiscriminant

        disc = FundamentalDiscriminant(-15)
        assert disc.N == 15
        assert disc.prime_factors == (3, 5)
        assert disc.t == 2
        assert disc.w_k == 2
        assert FundamentalDiscriminant(-3).w_k == 6

    def test_genus_prime_discriminants(self):
        """Test prime discriminants multiply to D."""
        from thetalift.arith import genus_prime_discriminants

        assert genus_prime_discriminants(-15) == [-3, 5]
        assert genus_prime_discriminants(-23) == [-23]
        parts = genus_prime_discriminants(-35)
        assert parts[0] * parts[1] == -35


class TestClassNumberOracle:
    """Tests for the analytic class number formula."""

    @pytest.mark.parametrize("D,h", [(-3, 1), (-7, 1), (-15, 2), (-23, 3), (-47, 5), (-71, 7)])
    def test_known_class_numbers(self, D, h):
        """Test class numbers of the reference discriminants."""
        from thetalift.arith import class_number_oracle

        assert class_number_oracle(D) == h


class TestKronecker:
    """Tests for the Kronecker symbol."""

    def test_values(self):
        """Test known values."""
        from thetalift.arith import chi_D, kronecker

        assert kronecker(-23, 2) == 1
        assert kronecker(-23, 23) == 0
        assert kronecker(-23, 5) == -1
        assert chi_D(-1, -23) == -1
        assert kronecker(-7, 1) == 1

    def test_completely_multiplicative(self):
        """Test (D | mn) = (D | m)(D | n)."""
        from thetalift.arith import kronecker

        for D in (-7, -15, -23):
            for m in range(1, 20):
                for n in range(1, 20):
                    assert kronecker(D, m * n) == kronecker(D, m) * kronecker(D, n)

    def test_periodic_mod_level(self):
        """Test chi_D has period |D|."""
        from thetalift.arith import chi_D

        for n in range(1, 40):
            assert chi_D(n, -23) == chi_D(n + 23, -23)


class TestModularMatrices:
    """Tests for SL2(Z) matrices and S/T words."""

    def test_determinant_checked(self):
        """Test non-unimodular matrices are rejected."""
        from thetalift.arith import ModularMatrix

        with pytest.raises(ValueError, match="Determinant"):
            ModularMatrix(2, 0, 0, 1)

    def test_generator_relations(self):
        """Test S^2 = -1 and (ST)^3 = S^2."""
        from thetalift.arith import IDENTITY, S, T

        assert S @ S == -IDENTITY
        assert (S @ T) @ (S @ T) @ (S @ T) == S @ S

    def test_decomposition_reproduces_matrix(self):
        """Test st_decompose(g) multiplies back to g."""
        from thetalift.arith import random_modular_matrix, st_decompose

        rng = np.random.default_rng(0)
        for _ in range(25):
            g = random_modular_matrix(rng)
            assert st_decompose(g).to_matrix() == g

    def test_decomposition_of_generators(self):
        """Test words for S, T and -1."""
        from thetalift.arith import IDENTITY, S, T, st_decompose

        assert str(st_decompose(S)) == "S"
        assert str(st_decompose(T)) == "T^1"
        assert st_decompose(-IDENTITY).to_matrix() == -IDENTITY


class TestGamma0Cosets:
    """Tests for right coset representatives of Gamma_0(N)."""

    @pytest.mark.parametrize("N,index", [(7, 8), (15, 24), (23, 24), (35, 48)])
    def test_index(self, N, index):
        """Test the number of cosets matches the index."""
        from thetalift.arith import coset_reps_gamma0, gamma0_index

        assert gamma0_index(N) == index
        assert len(coset_reps_gamma0(N)) == index

    def test_representatives_are_distinct(self):
        """Test each representative lies in its own coset."""
        from thetalift.arith import coset_index, coset_reps_gamma0

        reps = coset_reps_gamma0(15)
        for i, r in enumerate(reps):
            assert coset_index(r, reps, 15) == i

    def test_rejects_non_squarefree_level(self):
        """Test squarefree levels only."""
        from thetalift.arith import coset_reps_gamma0

        with pytest.raises(ValueError, match="squarefree"):
            coset_reps_gamma0(12)

    @pytest.mark.parametrize("N", [7, 15, 23, 35])
    def test_representatives_have_determinant_one(self, N):
        """Test lifted bottom rows give integer matrices of determinant one."""
        from thetalift.arith import coset_reps_gamma0, igcdex

        for r in coset_reps_gamma0(N):
            assert all(isinstance(x, int) for x in (r.a, r.b, r.c, r.d))
            assert r.a * r.d - r.b * r.c == 1
        x, y, g = igcdex(35, 15)
        assert (g, 35 * x + 15 * y) == (5, 5)


class TestFundamentalDomain:
    """Tests for fundamental-domain reduction."""

    @pytest.mark.parametrize("tau", [5 + 1j, 0.3 + 0.01j, -2.7 + 0.2j, 0.1 + 3j])
    def test_reduction(self, tau):
        """Test the reduced point lies in F and equals gamma(tau)."""
        import mpmath as mp

        from thetalift.arith import in_fundamental_domain, reduce_to_fundamental_domain

        z, gamma = reduce_to_fundamental_domain(tau)
        assert in_fundamental_domain(z)
        assert abs(gamma.act(mp.mpc(tau)) - z) < 1e-10

    def test_lower_half_plane_rejected(self):
        """Test points with Im(tau) <= 0 are rejected."""
        from thetalift.arith import reduce_to_fundamental_domain

        with pytest.raises(ValueError):
            reduce_to_fundamental_domain(0.5 - 1j)

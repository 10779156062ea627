"""
Unit tests for discriminant forms, the Weil representation and the lift S_P.

Tests cover:
- Cyclic discriminant forms, O(P'/P), signs and nu counts
- Relations of rho, the character chi_L on Gamma_0(N), dual and unitarity
- Vector-valued forms and symmetrization
- The lift on genus thetas, its routes and their agreement
"""

import mpmath as mp
import numpy as np
import pytest

LIFT_TOL = 1e-12


def max_gap(u, v):
    return max(abs(mp.mpc(x) - mp.mpc(y)) for x, y in zip(u, v))


def theta_with_decomposition(G, c, n_max):
    from thetalift.scalartheta import theta_ideal

    return theta_ideal(G, c, n_max)


def bare_theta(G, c, n_max):
    """theta_c with its decomposition dropped, so slashes use the q-series."""
    from dataclasses import replace

    return replace(theta_with_decomposition(G, c, n_max), theta_decomposition=None)


def form_gap(F, H, ctx, n_top):
    """Largest coefficient difference of two vector-valued forms up to n_top."""
    from thetalift.scalartheta import to_complex

    worst = mp.mpf(0)
    with ctx.workprec():
        for r in range(F.N):
            for n in range(n_top + 1):
                diff = abs(
                    to_complex(F.coefficient(r, n), ctx.bits) - to_complex(H.coefficient(r, n), ctx.bits)
                )
                worst = max(worst, diff)
    return worst


class TestDiscriminantForm:
    """Tests for the cyclic discriminant form of a class."""

    def test_norms_for_minus_seven(self):
        """Test Q(r) = r^2 / 7 modulo one."""
        from thetalift.weilrep import build_discform

        df = build_discform(-7, 1)
        assert df.N == 7
        assert [str(df.Q(r)) for r in range(7)] == ["0", "1/7", "4/7", "2/7", "2/7", "4/7", "1/7"]
        assert df.supports(1, 8)
        assert not df.supports(1, 2)

    def test_bilinear_form(self):
        """Test (r, s) = Q(r + s) - Q(r) - Q(s) modulo one."""
        from thetalift.weilrep import build_discform

        df = build_discform(-23, 2)
        for r, s in [(1, 2), (5, 17), (11, 11)]:
            expected = df.Q(r + s) - df.Q(r) - df.Q(s)
            assert (df.bilinear(r, s) - expected).denominator == 1

    def test_multiplier_must_be_prime_to_d(self):
        """Test gcd(A, D) != 1 is rejected."""
        from thetalift.weilrep import build_discform

        with pytest.raises(ValueError):
            build_discform(-15, 3)

    def test_discform_for_class_matches_representative(self, cl23):
        """Test the class model uses the coprime representative."""
        from thetalift.classgroup import coprime_representative
        from thetalift.weilrep import discform_for_class

        for cls in range(cl23.h):
            df = discform_for_class(cl23, cls)
            assert df.A == coprime_representative(cl23, cls, 23).a
            assert df.N == 23

    def test_orthogonal_group(self, cl15, cl23):
        """Test O(P'/P) has 2^t elements."""
        from thetalift.weilrep import build_discform, orthogonal_group

        assert orthogonal_group(build_discform(-15, 1)) == (1, 4, 11, 14)
        assert orthogonal_group(build_discform(-23, 1)) == (1, 22)
        assert len(orthogonal_group(build_discform(-15, 2))) == 2 ** cl15.disc.t

    def test_orbit(self):
        """Test orbits under O(P'/P)."""
        from thetalift.weilrep import build_discform, orbit

        df = build_discform(-15, 1)
        assert orbit(df, 1) == [1, 4, 11, 14]
        assert orbit(df, 0) == [0]

    def test_epsilon_signs(self):
        """Test the local signs are Legendre symbols of A."""
        from thetalift.weilrep import build_discform, epsilon_signs

        assert epsilon_signs(build_discform(-15, 1)) == {3: 1, 5: 1}
        assert epsilon_signs(build_discform(-15, 2)) == {3: -1, 5: -1}

    def test_nu_counts(self):
        """Test nu counts and their total."""
        from thetalift.weilrep import build_discform, nu

        df = build_discform(-23, 1)
        assert nu(df, 0) == 1
        assert nu(df, 1) == 2
        assert nu(df, 5) == 0
        assert sum(nu(df, m) for m in range(df.N)) == df.N


class TestWeilRepresentation:
    """Tests for rho_L and its dual."""

    @pytest.fixture
    def df7(self):
        from thetalift.weilrep import build_discform

        return build_discform(-7, 1)

    def test_s_phase(self, df7):
        """Test rho(S)[0, 0] = -i / sqrt(N)."""
        from thetalift.weilrep import rho_generator

        M = rho_generator(df7, "S")
        assert abs(M[0, 0] - mp.mpc(0, -1) / mp.sqrt(7)) < 1e-14

    def test_t_is_diagonal(self, df7):
        """Test rho(T) e_r = e(Q(r)) e_r."""
        from thetalift.weilrep import rho_generator

        M = rho_generator(df7, "T")
        for r in range(7):
            assert abs(M[r, r] - mp.expjpi(2 * mp.mpf(df7.norm_numerator(r)) / 7)) < 1e-14
            assert all(M[s, r] == 0 for s in range(7) if s != r)

    def test_unknown_generator(self, df7):
        """Test only S and T are generators."""
        from thetalift.weilrep import rho_generator

        with pytest.raises(ValueError, match="Unknown generator"):
            rho_generator(df7, "U")

    def test_modular_relations(self, df7):
        """Test S^4 = 1, S^2 e_r = -e_{-r} and (ST)^3 = S^2."""
        from thetalift.weilrep import matrix_distance, rho_generator

        S = rho_generator(df7, "S")
        T = rho_generator(df7, "T")
        S2 = S * S
        assert matrix_distance(S2 * S2, mp.eye(7)) < 1e-12
        for r in range(7):
            for s in range(7):
                expected = -1 if s == (-r) % 7 else 0
                assert abs(S2[s, r] - expected) < 1e-12
        ST = S * T
        assert matrix_distance(ST * ST * ST, S2) < 1e-12

    def test_homomorphism_on_random_words(self, df7):
        """Test rho(g h) = rho(g) rho(h)."""
        from thetalift.arith import random_modular_matrix
        from thetalift.weilrep import matrix_distance, rho

        rng = np.random.default_rng(11)
        for _ in range(3):
            g = random_modular_matrix(rng, length=4)
            h = random_modular_matrix(rng, length=4)
            assert matrix_distance(rho(df7, g @ h), rho(df7, g) * rho(df7, h)) < 1e-10

    def test_chi_l_on_gamma0(self):
        """Test rho(gamma) e_0 = chi_L(gamma) e_0 on Gamma_0(N)."""
        from thetalift.arith import ModularMatrix
        from thetalift.weilrep import build_discform, chi_L, weil_representation

        df = build_discform(-23, 1)
        rep = weil_representation(df)
        e0 = rep.basis_vector(0)
        cases = [(ModularMatrix(12, 1, 23, 2), 1), (ModularMatrix(14, 3, 23, 5), -1)]
        for gamma, expected in cases:
            assert chi_L(gamma, df) == expected
            assert max_gap(rep.apply(gamma, e0), [expected * x for x in e0]) < 1e-10
            minus = -gamma
            assert chi_L(minus, df) == -expected
            assert max_gap(rep.apply(minus, e0), [-expected * x for x in e0]) < 1e-10

    def test_chi_l_outside_gamma0(self):
        """Test chi_L is only defined on Gamma_0(N)."""
        from thetalift.arith import S
        from thetalift.weilrep import build_discform, chi_L

        with pytest.raises(ValueError, match="Gamma_0"):
            chi_L(S, build_discform(-23, 1))

    def test_dual_is_conjugate(self, df7):
        """Test the dual representation is the complex conjugate."""
        from thetalift.arith import ModularMatrix
        from thetalift.weilrep import rho

        gamma = ModularMatrix(2, 1, 3, 2)
        M = rho(df7, gamma)
        Md = rho(df7, gamma, dual=True)
        for i in range(7):
            for j in range(7):
                assert abs(Md[i, j] - mp.conj(M[i, j])) < 1e-12

    def test_unitarity(self, small_ctx):
        """Test rho(gamma) preserves the norm."""
        from thetalift.arith import ModularMatrix
        from thetalift.weilrep import build_discform, unitarity_defect, weil_representation

        rep = weil_representation(build_discform(-15, 2), ctx=small_ctx)
        v = [mp.mpc(r, 1 - r) for r in range(15)]
        for gamma in (ModularMatrix(1, 2, 0, 1), ModularMatrix(3, 2, 4, 3), ModularMatrix(0, -1, 1, 3)):
            assert unitarity_defect(rep, gamma, v) < 1e-20

    def test_lift_vector(self, df7):
        """Test lift vectors are rho(gamma^-1) e_0."""
        from thetalift.arith import ModularMatrix
        from thetalift.weilrep import lift_vectors, weil_representation

        rep = weil_representation(df7)
        gamma = ModularMatrix(1, 0, 7, 1)
        vectors = lift_vectors(rep, [gamma])
        # gamma^-1 lies in Gamma_0(7) with d = 1
        assert max_gap(vectors[0], rep.basis_vector(0)) < 1e-12


class TestVectorValuedForm:
    """Tests for vector-valued expansions."""

    def test_component_count_checked(self):
        """Test one component per element of the discriminant form."""
        from thetalift.scalartheta import QExpansion
        from thetalift.weilrep import VectorValuedForm, build_discform

        df = build_discform(-7, 1)
        with pytest.raises(ValueError, match="Expected 7 components"):
            VectorValuedForm(df=df, components=[QExpansion.zero(N=7, prec=5)])

    def test_zero_form(self):
        """Test the zero form is cuspidal and symmetric."""
        from thetalift.weilrep import VectorValuedForm, build_discform, symmetrize

        F = VectorValuedForm.zero(build_discform(-23, 1), 10)
        assert F.is_cuspidal()
        assert F.check_support()
        assert symmetrize(F).is_symmetric()

    def test_support_violations(self):
        """Test coefficients off n = N Q(r) mod N are reported."""
        from thetalift.weilrep import build_discform, from_component_coefficients

        df = build_discform(-7, 1)
        coeffs = [dict() for _ in range(7)]
        coeffs[1] = {1: 1, 8: 2}
        coeffs[2] = {3: 5}
        F = from_component_coefficients(df, coeffs, prec=14)
        assert F.support_violations() == [(2, 3)]
        assert not F.check_support()

    def test_permuted_and_symmetrize(self):
        """Test F^sym = sum over O(P'/P) of F^sigma."""
        from thetalift.weilrep import build_discform, from_component_coefficients, symmetrize

        df = build_discform(-15, 1)
        coeffs = [dict() for _ in range(15)]
        coeffs[1] = {1: 1}
        F = from_component_coefficients(df, coeffs, prec=15)
        assert F.permuted(4).coefficient(4, 1) == 1
        sym = symmetrize(F)
        assert sym.is_symmetric()
        assert [sym.coefficient(r, 1) for r in (1, 4, 11, 14)] == [1, 1, 1, 1]
        assert sym.meta["symmetrized"] is True

    def test_arithmetic(self):
        """Test addition, scaling and incompatible forms."""
        from thetalift.weilrep import VectorValuedForm, build_discform, from_component_coefficients

        df = build_discform(-7, 1)
        coeffs = [dict() for _ in range(7)]
        coeffs[0] = {0: 1, 7: 2}
        F = from_component_coefficients(df, coeffs, prec=14)
        assert (F + F).equals(F.scale(2))
        assert (F - F).equals(VectorValuedForm.zero(df, 14))
        assert (3 * F).coefficient(0, 7) == 6
        with pytest.raises(ValueError, match="cannot be combined"):
            F + VectorValuedForm.zero(build_discform(-7, 2), 14)

    def test_coefficient_rows(self):
        """Test rows are flattened component by component."""
        from thetalift.weilrep import build_discform, from_component_coefficients

        df = build_discform(-7, 1)
        coeffs = [dict() for _ in range(7)]
        coeffs[0] = {0: 1}
        coeffs[1] = {1: 4}
        F = from_component_coefficients(df, coeffs, prec=2)
        row = F.coefficient_rows()
        assert len(row) == 7 * 3
        assert row[0] == 1
        assert row[3 + 1] == 4


class TestLift:
    """Tests for the lift S_P of genus thetas."""

    def test_lift_of_theta_is_symmetrized_theta(self, cl7, small_ctx):
        """Test S_P(theta_a) = Theta^sym_P(tau, 1) for D = -7."""
        from thetalift.scalartheta import theta_ideal
        from thetalift.vvtheta import vv_theta_sym
        from thetalift.weilrep import LiftOperator

        n_max = 4
        op = LiftOperator(cl7, 0, small_ctx)
        lifted = op.lift_coefficients(theta_ideal(cl7, 0, n_max))
        target = vv_theta_sym(cl7, 0, 0, n_max)
        assert lifted.meta == {"kind": "lift", "route": "parent"}
        assert lifted.prec == n_max * 7
        assert form_gap(lifted, target, small_ctx, n_max * 7) < LIFT_TOL

    @pytest.mark.slow
    def test_lift_of_acted_theta(self, cl23, small_ctx):
        """Test S_P(theta_{a h^2}) = Theta^sym_P(tau, h) for D = -23."""
        from thetalift.scalartheta import theta_ideal
        from thetalift.vvtheta import vv_theta_sym
        from thetalift.weilrep import LiftOperator

        n_max = 3
        op = LiftOperator(cl23, 0, small_ctx)
        for h in range(cl23.h):
            f = theta_ideal(cl23, cl23.class_action(h, 0), n_max)
            lifted = op.lift_coefficients(f, route="parent")
            assert form_gap(lifted, vv_theta_sym(cl23, 0, h, n_max), small_ctx, n_max * 23) < LIFT_TOL

    def test_evaluation_matches_expansion(self, cl7, small_ctx):
        """Test lift_eval through parent matrices, per-coset parent slashes and the expansion."""
        from thetalift.scalartheta import theta_ideal
        from thetalift.weilrep import LiftOperator

        op = LiftOperator(cl7, 0, small_ctx)
        f = theta_ideal(cl7, 0, 6)
        tau = mp.mpc(0.1, 1.1)
        by_parent = op.lift_eval(f, tau)
        by_cosets = op.lift_eval(f, tau, reps=op.reps)
        by_series = op.lift_coefficients(f).evaluate(tau, small_ctx)
        with small_ctx.workprec():
            assert max_gap(by_parent, by_cosets) < LIFT_TOL
            assert max_gap(by_parent, by_series) < LIFT_TOL

    def test_coset_sum_of_bare_series(self, cl7, small_ctx):
        """Test sum_gamma j(gamma, tau)^-1 f(gamma tau) rho(gamma^-1) e_0 against the parent route."""
        from thetalift.weilrep import LiftOperator

        op = LiftOperator(cl7, 0, small_ctx)
        f = bare_theta(cl7, 0, 600)
        assert f.theta_decomposition is None
        tau = mp.mpc(0.1, 1.1)
        direct = op.lift_eval(f, tau, reps=op.reps, tolerance=1e-15)
        by_parent = op.lift_eval(theta_with_decomposition(cl7, 0, 600), tau)
        with small_ctx.workprec():
            assert max_gap(direct, by_parent) < LIFT_TOL

    @pytest.mark.parametrize("seed", range(5))
    def test_coset_sum_independent_of_representatives(self, cl7, small_ctx, seed):
        """Test replacing each gamma by delta gamma, delta in Gamma_0(N), leaves the lift unchanged."""
        from thetalift.arith import ModularMatrix, T_power
        from thetalift.weilrep import LiftOperator

        op = LiftOperator(cl7, 0, small_ctx)
        N = op.N
        rng = np.random.default_rng(seed)
        lower = {-1: ModularMatrix(1, 0, -N, 1), 0: ModularMatrix(1, 0, 0, 1), 1: ModularMatrix(1, 0, N, 1)}
        reps = []
        for gamma in op.reps:
            delta = T_power(int(rng.integers(-2, 3))) @ lower[int(rng.integers(-1, 2))]
            if rng.integers(2):
                delta = -delta
            assert delta.in_gamma0(N)
            reps.append(delta @ gamma)

        f = bare_theta(cl7, 0, 600)
        tau = mp.mpc(0.1, 1.1)
        moved = op.lift_eval(f, tau, reps=reps, tolerance=1e-15)
        default = op.lift_eval(f, tau, reps=op.reps, tolerance=1e-15)
        with small_ctx.workprec():
            assert max_gap(moved, default) < 1e-10

    @pytest.mark.slow
    def test_coset_sum_of_bare_series_nonprincipal(self, cl23, small_ctx):
        """Test the direct coset sum for a non-principal class of D = -23."""
        from thetalift.weilrep import LiftOperator

        n_max = 5000
        op = LiftOperator(cl23, 0, small_ctx)
        tau = mp.mpc(0.1, 1.1)
        direct = op.lift_eval(bare_theta(cl23, 1, n_max), tau, reps=op.reps, tolerance=1e-15)
        by_parent = op.lift_eval(theta_with_decomposition(cl23, 1, n_max), tau)
        with small_ctx.workprec():
            assert max_gap(direct, by_parent) < 1e-10

    def test_routes_are_validated(self, cl7, small_ctx):
        """Test unknown routes and the parent route without a decomposition."""
        from thetalift.scalartheta import QExpansion, theta_ideal
        from thetalift.weilrep import LiftOperator

        op = LiftOperator(cl7, 0, small_ctx)
        with pytest.raises(ValueError, match="Unknown lift route"):
            op.lift_coefficients(theta_ideal(cl7, 0, 2), route="fourier")
        bare = QExpansion.from_list([1, 2, 4])
        with pytest.raises(ValueError, match="theta decomposition"):
            op.lift_coefficients(bare, route="parent")
        with pytest.raises(ValueError, match="theta decomposition"):
            op.slash_expansion(bare, op.reps[0])

    def test_slash_expansion_at_identity(self, cl7, small_ctx):
        """Test f | 1 is f written over denominator N."""
        from thetalift.arith import IDENTITY
        from thetalift.scalartheta import theta_ideal, to_complex
        from thetalift.weilrep import LiftOperator

        op = LiftOperator(cl7, 0, small_ctx)
        f = theta_ideal(cl7, 0, 4)
        g = op.slash_expansion(f, IDENTITY)
        with small_ctx.workprec():
            for n in range(5):
                assert abs(to_complex(g.coefficient(7 * n), small_ctx.bits) - f.coefficient(n)) < LIFT_TOL
            for n in range(4):
                assert abs(to_complex(g.coefficient(7 * n + 1), small_ctx.bits)) < LIFT_TOL

    @pytest.mark.slow
    def test_extraction_route_matches_parent(self, cl7, small_ctx):
        """Test coefficients recovered from samples agree with the parent route."""
        from thetalift.scalartheta import theta_ideal
        from thetalift.weilrep import lift_coefficients

        f = theta_ideal(cl7, 0, 2)
        parent = lift_coefficients(f, cl7, 0, ctx=small_ctx, route="parent")
        extracted = lift_coefficients(f, cl7, 0, ctx=small_ctx, route="extraction")
        assert extracted.meta["route"] == "extraction"
        assert form_gap(parent, extracted, small_ctx, 2 * 7) < 1e-8

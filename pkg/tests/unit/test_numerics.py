"""
Unit tests for eta, coefficient extraction and quadrature.

Tests cover:
- Dedekind eta values and modular behaviour
- The SL2(Z)-invariant log(v^(1/2) |eta|^2)
- Fourier coefficient extraction and aliasing detection
- Gauss-Legendre quadrature on the fundamental domain
"""

import mpmath as mp
import pytest


class TestEta:
    """Tests for the Dedekind eta function."""

    def test_eta_at_i(self, ctx):
        """Test eta(i) = Gamma(1/4) / (2 pi^(3/4))."""
        from thetalift.numerics import dedekind_eta

        with ctx.workprec():
            expected = mp.gamma(mp.mpf(1) / 4) / (2 * mp.pi ** (mp.mpf(3) / 4))
            result = dedekind_eta(mp.mpc(0, 1), ctx)
            assert abs(result.value - expected) < mp.mpf(10) ** -30
            assert abs(result.log_abs - mp.log(expected)) < mp.mpf(10) ** -30

    def test_translation(self, ctx):
        """Test eta(tau + 1) = e(1/24) eta(tau)."""
        from thetalift.numerics import dedekind_eta, e_of

        with ctx.workprec():
            tau = mp.mpc("0.2", "0.9")
            shifted = dedekind_eta(tau + 1, ctx).value
            assert abs(shifted - e_of(mp.mpf(1) / 24, ctx) * dedekind_eta(tau, ctx).value) < mp.mpf(10) ** -30

    def test_low_points_need_reduction(self, ctx):
        """Test the product is refused below Im(tau) = 1/2."""
        from thetalift.numerics import dedekind_eta

        with pytest.raises(ValueError, match="Im\\(tau\\) >= 0.5"):
            dedekind_eta(mp.mpc(0.1, 0.2), ctx)

    def test_log_abs_eta_low_point(self, ctx):
        """Test |eta(-1/tau)| = |tau|^(1/2) |eta(tau)| through reduction."""
        from thetalift.numerics import log_abs_eta

        with ctx.workprec():
            tau = mp.mpc("0.05", "0.3")
            lhs = log_abs_eta(-1 / tau, ctx).log_abs
            rhs = log_abs_eta(tau, ctx).log_abs + mp.log(abs(tau)) / 2
            assert abs(lhs - rhs) < mp.mpf(10) ** -25

    def test_invariant_under_modular_group(self, ctx):
        """Test log(v^(1/2)|eta|^2) is SL2(Z)-invariant."""
        import numpy as np

        from thetalift.arith import random_modular_matrix
        from thetalift.numerics import invariant_log_eta

        rng = np.random.default_rng(3)
        with ctx.workprec():
            tau = mp.mpc("0.31", "1.7")
            base = invariant_log_eta(tau, ctx).log_abs
            for _ in range(5):
                g = random_modular_matrix(rng, length=3, spread=2)
                moved = g.act(tau)
                assert abs(invariant_log_eta(moved, ctx).log_abs - base) < mp.mpf(10) ** -25

    def test_tail_bound_small(self, ctx):
        """Test the truncation bound is below the working precision."""
        from thetalift.numerics import dedekind_eta

        result = dedekind_eta(mp.mpc(0, 0.6), ctx)
        assert result.tail_bound < mp.mpf(2) ** -100
        assert result.terms == ctx.eta_terms_for(0.6)


class TestExponential:
    """Tests for e(x) and the Euler constant."""

    def test_e_of_half(self, ctx):
        """Test e(1/2) = -1."""
        from thetalift.numerics import e_of

        assert abs(e_of(mp.mpf(1) / 2, ctx) + 1) < mp.mpf(10) ** -30

    def test_euler_gamma(self, ctx):
        """Test the constant and Gamma'(1) = -gamma."""
        from thetalift.numerics import euler_gamma, gamma_prime_one

        with ctx.workprec():
            assert abs(euler_gamma(ctx) - mp.mpf("0.5772156649015328606065")) < mp.mpf(10) ** -20
            assert abs(gamma_prime_one(ctx) - mp.diff(mp.gamma, 1)) < mp.mpf(10) ** -20


class TestExtraction:
    """Tests for Fourier coefficient extraction."""

    def test_polynomial_in_q(self, ctx):
        """Test exact recovery of 1 + 2q + 3q^2."""
        from thetalift.numerics import extract_coefficients

        def F(tau):
            q = mp.exp(2j * mp.pi * tau)
            return 1 + 2 * q + 3 * q ** 2

        result = extract_coefficients(F, 1, 3, v0=1.0, ctx=ctx)
        for n, expected in enumerate([1, 2, 3, 0]):
            assert abs(result.coeffs[n] - expected) < 1e-20
        assert result.samples == 12

    def test_fractional_exponents(self, ctx):
        """Test e(tau/3) + 5 e(4 tau/3) with denominator 3."""
        from thetalift.numerics import extract_coefficients

        def F(tau):
            return mp.exp(2j * mp.pi * tau / 3) + 5 * mp.exp(8j * mp.pi * tau / 3)

        result = extract_coefficients(F, 3, 2, v0=1.0, ctx=ctx, tolerance=1e-15)
        assert result.n_top == 6
        assert abs(result.coeffs[1] - 1) < 1e-20
        assert abs(result.coeffs[4] - 5) < 1e-20
        assert abs(result.coeffs[2]) < 1e-20

    def test_aliasing_detected(self, ctx):
        """Test content far above n_max trips the tolerance."""
        from thetalift.exceptions import AliasingError
        from thetalift.numerics import extract_coefficients

        def F(tau):
            return 1 + mp.exp(20j * mp.pi * tau)

        with pytest.raises(AliasingError):
            extract_coefficients(F, 1, 1, v0=0.1, ctx=ctx, tolerance=1e-10)

    def test_invalid_arguments(self, ctx):
        """Test N, n_max and v0 validation."""
        from thetalift.numerics import extract_coefficients

        with pytest.raises(ValueError):
            extract_coefficients(lambda t: 1, 0, 2, ctx=ctx)
        with pytest.raises(ValueError):
            extract_coefficients(lambda t: 1, 1, 2, v0=-1.0, ctx=ctx)

    def test_sample_height_cap(self, ctx):
        """Test max_sample_height keeps the amplification bounded."""
        from math import exp, pi

        from thetalift.numerics import max_sample_height

        v0 = max_sample_height(10.0, ctx)
        assert v0 <= ctx.sample_height
        assert exp(2 * pi * 10.0 * v0) <= 2.0 ** (ctx.bits / 2) * 1.0001


class TestQuadrature:
    """Tests for quadrature over the fundamental domain."""

    def test_area(self, small_ctx):
        """Test the hyperbolic area pi/3."""
        from thetalift.numerics import petersson_quadrature

        result = petersson_quadrature(lambda tau: mp.mpf(1), small_ctx, strip=lambda T: 1 / T)
        assert abs(result.value - mp.pi / 3) < 1e-10
        assert result.nodes == (32, 32)

    @pytest.mark.parametrize("n", [8, 24])
    def test_nodes_exact_on_polynomials_at_working_precision(self, n):
        """Test refined nodes integrate x^(2n-2) exactly far beyond double precision."""
        from thetalift.numerics import gauss_legendre

        xs, ws = gauss_legendre(n, 128)
        with mp.workprec(128):
            assert abs(mp.fsum(ws) - 2) < mp.mpf(10) ** -35
            moment = mp.fsum(w * x ** (2 * n - 2) for x, w in zip(xs, ws))
            assert abs(moment - mp.mpf(2) / (2 * n - 1)) < mp.mpf(10) ** -35

    def test_double_precision_nodes_match_leggauss(self):
        """Test 53-bit nodes are the numpy values."""
        import numpy as np

        from thetalift.numerics import gauss_legendre

        xs, ws = gauss_legendre(12)
        nodes, weights = np.polynomial.legendre.leggauss(12)
        assert [float(x) for x in xs] == list(nodes)
        assert [float(w) for w in ws] == list(weights)

    def test_area_beyond_double_precision(self, small_ctx):
        """Test the area pi/3 to well below the double-precision rounding level."""
        from thetalift.numerics import petersson_quadrature

        result = petersson_quadrature(lambda tau: mp.mpf(1), small_ctx, strip=lambda T: 1 / T)
        with small_ctx.workprec():
            assert abs(result.value - mp.pi / 3) < mp.mpf(10) ** -22

    def test_decaying_integrand_without_strip(self, small_ctx):
        """Test panels above T for exp(-4 pi v) v^2."""
        from thetalift.numerics import petersson_quadrature

        def integrand(tau):
            v = tau.imag
            return mp.exp(-4 * mp.pi * v) * v * v

        with small_ctx.workprec():
            # int_F e^{-4 pi v} du dv over v >= sqrt(1-u^2)
            exact = mp.quad(
                lambda u: mp.exp(-4 * mp.pi * mp.sqrt(1 - u * u)) / (4 * mp.pi), [-0.5, 0.5]
            )
        result = petersson_quadrature(integrand, small_ctx, decay=4 * float(mp.pi))
        assert abs(result.value - exact) < 1e-12
        assert result.error_estimate < 1e-8

    def test_non_decaying_rejected(self, small_ctx):
        """Test decay <= 0 raises NonCuspidalError."""
        from thetalift.exceptions import NonCuspidalError
        from thetalift.numerics import petersson_quadrature

        with pytest.raises(NonCuspidalError):
            petersson_quadrature(lambda tau: mp.mpf(1), small_ctx, decay=0)

    def test_domain_nodes_inside_domain(self, small_ctx):
        """Test nodes lie in the truncated fundamental domain with positive weights."""
        from thetalift.arith import in_fundamental_domain
        from thetalift.numerics import domain_nodes

        for tau, weight in domain_nodes(small_ctx, 8, 8):
            assert in_fundamental_domain(tau)
            assert tau.imag <= small_ctx.height_T
            assert weight > 0

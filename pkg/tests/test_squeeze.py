import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from squeezed_vacuum import (
    BelowGroundStateError,
    InvalidArgumentError,
    InvalidParamsError,
    ModeSample,
    SqueezeParams,
    analytic_vacuum_trajectory,
    closed_form_xi_sq,
    constant,
    energy_expectation,
    init_minimum_uncertainty,
    ladder_bogoliubov,
    mix_mode,
    mix_trajectory,
    polar_to_bogoliubov,
    squeeze_from_energy,
    uncertainty_extrema,
    uncertainty_product,
    wronskian_residual,
)
from squeezed_vacuum.states import energies, products

SQ2 = math.sqrt(0.5)
params_st = st.builds(polar_to_bogoliubov, st.floats(0.0, 2.5), st.floats(0.0, 2 * math.pi, exclude_max=True))


class TestPolar:
    def test_identity(self):
        p = polar_to_bogoliubov(0.0, 1.3)
        assert (p.mu, p.nu, p.delta) == (1.0, 0.0, 0.0)

    def test_real(self):
        p = polar_to_bogoliubov(1.0, 0.0)
        assert p.mu == pytest.approx(1.5430806348152437, rel=1e-15)
        assert p.nu == pytest.approx(1.1752011936438014, rel=1e-15)

    def test_imaginary_phase(self):
        p = polar_to_bogoliubov(1.0, math.pi / 2)
        assert p.nu == pytest.approx(1.1752011936438014j, abs=1e-15)

    def test_delta_reduced(self):
        assert polar_to_bogoliubov(0.5, -math.pi / 2).delta == pytest.approx(1.5 * math.pi)

    def test_negative_r(self):
        with pytest.raises(InvalidArgumentError):
            polar_to_bogoliubov(-0.1, 0.0)

    @given(params_st)
    def test_normalization(self, p):
        assert abs(p.norm_defect) <= 1e-12 * max(1, abs(p.mu) ** 2)

    def test_from_bogoliubov(self):
        p = SqueezeParams.from_bogoliubov(math.sqrt(1.5), math.sqrt(0.5))
        assert p.r == pytest.approx(math.asinh(math.sqrt(0.5)))
        assert p.delta == 0.0
        with pytest.raises(InvalidParamsError):
            SqueezeParams.from_bogoliubov(1.0, 0.1)

    def test_csv(self, tmp_path):
        path = tmp_path / "p.csv"
        polar_to_bogoliubov(1.0, math.pi / 2).to_csv(path)
        header, row = path.read_text().splitlines()
        assert header == "mu_re,mu_im,nu_re,nu_im,r,delta"
        vals = [float(x) for x in row.split(",")]
        assert vals[3] == pytest.approx(math.sinh(1.0))


class TestLadder:
    def test_identity(self):
        assert ladder_bogoliubov(polar_to_bogoliubov(0.0)) == (1.0, 0.0)

    def test_sign_flip(self):
        mu_t, nu_t = ladder_bogoliubov(polar_to_bogoliubov(1.0, 0.0))
        assert mu_t == pytest.approx(1.5430806348152437)
        assert nu_t == pytest.approx(-1.1752011936438014)

    def test_phase_pi(self):
        # exp(i(delta + pi)) sinh r with delta = pi
        _, nu_t = ladder_bogoliubov(polar_to_bogoliubov(1.0, math.pi))
        assert nu_t == pytest.approx(1.1752011936438014, abs=1e-15)

    @given(params_st)
    def test_matches_phase_shift_form(self, p):
        mu_t, nu_t = ladder_bogoliubov(p)
        assert nu_t == pytest.approx(np.exp(1j * (p.delta + math.pi)) * math.sinh(p.r), abs=1e-12)
        assert abs(mu_t) ** 2 - abs(nu_t) ** 2 == pytest.approx(1.0, abs=1e-11)

    def test_squeezed_annihilator_is_bogoliubov_combination(self):
        # A_nu = mu~ A + nu~ A^dagger, checked on ladder coefficients
        from squeezed_vacuum import ladder_coefficients
        base = init_minimum_uncertainty(constant(1.3), 0.0)
        p = polar_to_bogoliubov(0.7, 2.0)
        a = ladder_coefficients(base)
        a_nu = ladder_coefficients(mix_mode(base, p))
        mu_t, nu_t = ladder_bogoliubov(p)
        assert a_nu.c_p == pytest.approx(mu_t * a.c_p + nu_t * np.conj(a.c_p), abs=1e-14)
        assert a_nu.c_q == pytest.approx(mu_t * a.c_q + nu_t * np.conj(a.c_q), abs=1e-14)


class TestMixMode:
    def test_identity(self):
        base = init_minimum_uncertainty(constant(1.0), 0.0)
        assert mix_mode(base, polar_to_bogoliubov(0.0)) == base

    @pytest.mark.parametrize("eps", [0.5, 1.0, 3.0])
    def test_real_combination(self, eps):
        base = init_minimum_uncertainty(constant(1.0), 0.0)
        p = squeeze_from_energy(eps, 1.0)
        mixed = mix_mode(base, p)
        assert mixed.u == pytest.approx((p.mu + p.nu) * SQ2, rel=1e-15)

    @settings(max_examples=200)
    @given(params_st, st.floats(0.2, 5.0), st.floats(0, 20))
    def test_wronskian_preserved(self, p, omega, t):
        base = init_minimum_uncertainty(constant(omega), 0.0)
        phase = np.exp(-1j * omega * t)
        base = ModeSample(t, base.u * phase, base.du * phase, 1.0)
        assert wronskian_residual(mix_mode(base, p)) <= wronskian_residual(base) + 1e-12 * max(1, abs(p.mu) ** 2)

    def test_invalid_params(self):
        base = init_minimum_uncertainty(constant(1.0), 0.0)
        with pytest.raises(InvalidParamsError):
            mix_mode(base, SqueezeParams(1.0, 1.0, 0.0, 0.0))

    @settings(max_examples=50)
    @given(params_st, params_st)
    def test_composition_is_a_bogoliubov_map(self, p1, p2):
        base = init_minimum_uncertainty(constant(1.0), 0.0)
        twice = mix_mode(mix_mode(base, p1), p2)
        # compose the maps u -> mu u + conj(nu) conj(u) directly
        mu = p2.mu * p1.mu + np.conj(p2.nu) * p1.nu
        nu_c = p2.mu * np.conj(p1.nu) + np.conj(p2.nu) * np.conj(p1.mu)
        composed = SqueezeParams(mu, np.conj(nu_c), 0.0, 0.0)
        once = mix_mode(base, composed)
        scale = abs(p1.mu) * abs(p2.mu)
        assert twice.u == pytest.approx(once.u, abs=1e-12 * scale)
        assert twice.du == pytest.approx(once.du, abs=1e-12 * scale)

    @settings(max_examples=100)
    @given(params_st, st.floats(0, 10))
    def test_reverse_triangle_bounds(self, p, t):
        base = init_minimum_uncertainty(constant(1.0), 0.0)
        phase = np.exp(-1j * t)
        base = ModeSample(t, base.u * phase, base.du * phase, 1.0)
        mixed = mix_mode(base, p)
        f = abs(p.mu) - abs(p.nu)
        assert abs(mixed.u) >= f * abs(base.u) - 1e-15
        assert abs(mixed.du) >= f * abs(base.du) - 1e-15


class TestClosedForms:
    def test_ground_state_amplitude(self):
        np.testing.assert_allclose(closed_form_xi_sq(0.5, 1.0, np.linspace(0, 7, 11)), 1.0, rtol=1e-15)

    def test_values(self):
        assert closed_form_xi_sq(1.0, 1.0, 0.0) == pytest.approx(2 + math.sqrt(3), rel=1e-15)
        assert closed_form_xi_sq(1.0, 1.0, math.pi / 2) == pytest.approx(2 - math.sqrt(3), rel=1e-14)

    def test_below_ground(self):
        with pytest.raises(BelowGroundStateError):
            closed_form_xi_sq(0.49, 1.0, 0.0)
        with pytest.raises(BelowGroundStateError):
            squeeze_from_energy(0.9, 2.0)

    def test_squeeze_from_energy(self):
        p = squeeze_from_energy(0.5, 1.0)
        assert (p.mu, p.nu) == (1.0, 0.0)
        p = squeeze_from_energy(2.0, 2.0)
        assert (p.mu.real, p.nu.real) == pytest.approx((math.sqrt(1.5), math.sqrt(0.5)), rel=1e-15)
        p = squeeze_from_energy(3.0, 1.0)
        assert (p.mu.real, p.nu.real) == pytest.approx((1.8708286933869707, 1.5811388300841898), rel=1e-15)
        assert p.mu.real**2 - p.nu.real**2 == pytest.approx(1.0, abs=1e-15)

    @pytest.mark.parametrize("eps,omega", [(0.5, 1.0), (1.0, 1.0), (2.0, 2.0), (3.0, 1.0), (5.0, 0.7)])
    def test_mixing_reproduces_closed_form(self, eps, omega):
        spec = constant(omega)
        t = np.linspace(0, 2 * math.pi / omega, 301)
        mixed = mix_trajectory(analytic_vacuum_trajectory(spec, t), squeeze_from_energy(eps, omega))
        np.testing.assert_allclose(2 * spec.m0 * np.abs(mixed.u) ** 2, closed_form_xi_sq(eps, omega, t),
                                   rtol=1e-10)
        np.testing.assert_allclose(energies(mixed), eps, rtol=1e-12)


class TestExtrema:
    def test_vacuum(self):
        assert uncertainty_extrema(polar_to_bogoliubov(0.0)) == (0.5, 0.5)

    @pytest.mark.parametrize("r,expected", [(0.5, math.cosh(1.0) / 2), (1.0, math.cosh(2.0) / 2)])
    def test_max(self, r, expected):
        assert uncertainty_extrema(polar_to_bogoliubov(r))[1] == pytest.approx(expected, rel=1e-14)

    @pytest.mark.parametrize("r,delta", [(0.5, 0.0), (1.0, 2.0), (0.2, 4.5)])
    def test_attained_over_a_period(self, r, delta):
        t = np.linspace(0, math.pi, 200001)
        p = polar_to_bogoliubov(r, delta)
        prod = products(mix_trajectory(analytic_vacuum_trajectory(constant(1.0), t), p))
        lo, hi = uncertainty_extrema(p)
        assert prod.min() == pytest.approx(lo, rel=1e-8)
        assert prod.max() == pytest.approx(hi, rel=1e-8)

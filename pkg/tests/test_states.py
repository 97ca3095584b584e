import math

import numpy as np
import pytest
from hypothesis import given, settings
from scipy.integrate import trapezoid
from hypothesis import strategies as st

from squeezed_vacuum import (
    DecompositionError,
    GaussianState,
    InsufficientDataError,
    InvalidParamsError,
    ModeSample,
    ModeTrajectory,
    SqueezeParams,
    UnsupportedKindError,
    analytic_vacuum_trajectory,
    constant,
    desitter_mode,
    energy_expectation,
    ermakov_frame,
    ermakov_residual,
    excitation_number,
    gaussian_wavefunction,
    init_minimum_uncertainty,
    integrate_mode,
    ladder_coefficients,
    mix_mode,
    mix_trajectory,
    moments,
    polar_to_bogoliubov,
    squeeze_from_energy,
    uncertainty_product,
)
from squeezed_vacuum.states import ermakov_energy, ermakov_residual_from_amplitude, gaussian_norm, products

squeeze_r = st.floats(0.0, 2.0)
squeeze_delta = st.floats(0.0, 2 * math.pi, exclude_max=True)


def squeezed_unit_sample(r, delta=0.0, t=0.0):
    base = init_minimum_uncertainty(constant(1.0), 0.0)
    phase = np.exp(-1j * t)
    base = ModeSample(t, base.u * phase, base.du * phase, 1.0)
    return mix_mode(base, polar_to_bogoliubov(r, delta))


class TestErmakovFrame:
    def test_unit_vacuum(self):
        t = np.linspace(0, 10, 1001)
        frames = ermakov_frame(analytic_vacuum_trajectory(constant(1.0), t))
        np.testing.assert_allclose([f.xi for f in frames], 1.0, rtol=1e-15)
        np.testing.assert_allclose([f.theta for f in frames], t, atol=1e-12)
        np.testing.assert_allclose([f.dxi for f in frames], 0.0, atol=1e-15)

    def test_xi_definition(self, vacuum_ode):
        traj = mix_trajectory(vacuum_ode, polar_to_bogoliubov(0.7, 1.3))
        xi = [f.xi for f in ermakov_frame(traj)]
        np.testing.assert_allclose(xi, math.sqrt(2.0) * np.abs(traj.u), rtol=1e-15)

    def test_squeezed_initial_amplitude(self, vacuum_ode):
        traj = mix_trajectory(vacuum_ode, squeeze_from_energy(1.0, 1.0))
        # closed form at t = 0: 2 + sqrt(3)
        assert ermakov_frame(traj)[0].xi ** 2 == pytest.approx(2 + math.sqrt(3), rel=1e-12)

    def test_angular_relation(self, fine_vacuum_ode):
        traj = mix_trajectory(fine_vacuum_ode, polar_to_bogoliubov(0.5, 0.4))
        frames = ermakov_frame(traj)
        xi = np.array([f.xi for f in frames])
        theta = np.array([f.theta for f in frames])
        dtheta = np.gradient(theta, 1e-3, edge_order=2)
        np.testing.assert_allclose((xi**2 * dtheta)[1:-1], 1.0, atol=1e-5)

    def test_dxi_analytic_matches_difference(self, fine_vacuum_ode):
        traj = mix_trajectory(fine_vacuum_ode, polar_to_bogoliubov(0.5, 0.4))
        frames = ermakov_frame(traj)
        xi = np.array([f.xi for f in frames])
        dxi = np.array([f.dxi for f in frames])
        np.testing.assert_allclose(np.gradient(xi, 1e-3)[1:-1], dxi[1:-1], atol=1e-5)

    def test_coarse_grid_rejected(self):
        traj = analytic_vacuum_trajectory(constant(1.0), np.linspace(0, 10, 5))
        with pytest.raises(DecompositionError):
            ermakov_frame(traj)

    def test_zero_mode_rejected(self):
        traj = ModeTrajectory.from_arrays(constant(1.0), [0.0, 0.1], [0.0, 0.1], [1.0, 1.0])
        with pytest.raises(DecompositionError):
            ermakov_frame(traj)

    def test_desitter_kind_rejected(self):
        spec = desitter_mode(1.0, 2.0, 1.0)
        s = init_minimum_uncertainty(spec, 0.0)
        traj = ModeTrajectory.from_arrays(spec, [0.0], [s.u], [s.du])
        with pytest.raises(UnsupportedKindError):
            ermakov_frame(traj)


class TestErmakovResidual:
    def test_vacuum_trajectory(self, fine_vacuum_ode):
        assert ermakov_residual(fine_vacuum_ode) < 1e-6

    def test_constant_amplitude_frame(self):
        omega = 1.7
        xi = np.full(50, omega**-0.5)
        # stencil rounding ~ eps / h^2, so hold it to an h^2-level bound
        assert ermakov_residual_from_amplitude(xi, omega**2, 1e-3) < 1e-3**2

    def test_perturbed_amplitude(self):
        xi = np.full(50, 1.01)
        assert ermakov_residual_from_amplitude(xi, 1.0, 1e-3) > 1e-2

    def test_too_few_samples(self):
        traj = analytic_vacuum_trajectory(constant(1.0), [0.0, 0.001])
        with pytest.raises(InsufficientDataError):
            ermakov_residual(traj)

    def test_nonuniform_grid(self):
        traj = analytic_vacuum_trajectory(constant(1.0), [0.0, 0.001, 0.003, 0.004, 0.006, 0.007])
        with pytest.raises(InsufficientDataError):
            ermakov_residual(traj)

    @pytest.mark.parametrize("r,delta", [(0.25, 0.0), (0.5, 2.0), (0.6584789484624084, 0.0), (1.0, 4.0)])
    def test_squeezed_amplitude_obeys_auxiliary_equation(self, fine_vacuum_ode, r, delta):
        assert ermakov_residual(mix_trajectory(fine_vacuum_ode, polar_to_bogoliubov(r, delta))) < 1e-6


class TestGaussianState:
    def test_peak_value(self):
        state = GaussianState(init_minimum_uncertainty(constant(math.pi), 0.0))
        assert gaussian_wavefunction(state, 0.0) == pytest.approx(1.0, rel=1e-15)

    def test_vacuum_exponent(self):
        state = GaussianState(init_minimum_uncertainty(constant(1.0), 0.0))
        assert state.exp_coeff == pytest.approx(-0.5, rel=1e-15)

    @pytest.mark.parametrize("r,delta,t", [(0.0, 0.0, 0.0), (0.8, 1.0, 0.3), (2.0, 5.0, 1.7)])
    def test_normalized(self, r, delta, t):
        state = GaussianState(squeezed_unit_sample(r, delta, t))
        assert state.exp_coeff.real < 0
        assert gaussian_norm(state) == pytest.approx(1.0, abs=1e-6)

    def test_annihilated_by_ladder_operator(self):
        # A psi = c_p (-i psi') + c_q q psi must vanish
        sample = squeezed_unit_sample(0.6, 2.1, 0.4)
        state = GaussianState(sample)
        lad = ladder_coefficients(sample)
        q = np.linspace(-3, 3, 13)
        psi = gaussian_wavefunction(state, q)
        dpsi = 2 * state.exp_coeff * q * psi
        np.testing.assert_allclose(lad.c_p * (-1j) * dpsi + lad.c_q * q * psi, 0, atol=1e-14)

    def test_commutator_normalized(self):
        lad = ladder_coefficients(squeezed_unit_sample(1.2, 0.3, 2.0))
        assert lad.commutator == pytest.approx(1.0, abs=1e-14)

    def test_position_variance_matches_density(self):
        sample = squeezed_unit_sample(0.9, 1.1, 0.5)
        state = GaussianState(sample)
        q = np.linspace(-15, 15, 200001)
        dens = np.abs(gaussian_wavefunction(state, q)) ** 2
        var = trapezoid(q**2 * dens, q)
        assert var == pytest.approx(moments(sample).var_q, rel=1e-8)


class TestMoments:
    def test_vacuum_omega_two(self):
        rep = moments(init_minimum_uncertainty(constant(2.0), 0.0))
        assert rep.var_q == pytest.approx(0.25, rel=1e-15)
        assert rep.var_p == pytest.approx(1.0, rel=1e-15)
        assert rep.cov_qp == pytest.approx(0.0, abs=1e-16)

    @pytest.mark.parametrize("r", [0.1, 0.5, 1.5])
    def test_squeezed_position_variance(self, r):
        assert moments(squeezed_unit_sample(r)).var_q == pytest.approx(math.exp(2 * r) / 2, rel=1e-13)

    @settings(max_examples=100)
    @given(squeeze_r, squeeze_delta, st.floats(0, 10))
    def test_robertson_schroedinger_saturated(self, r, delta, t):
        rep = moments(squeezed_unit_sample(r, delta, t))
        assert rep.var_q * rep.var_p - rep.cov_qp**2 == pytest.approx(0.25, abs=1e-12 * max(1, rep.var_q * rep.var_p))
        assert rep.product >= 0.5 - 1e-12


class TestUncertaintyProduct:
    @pytest.mark.parametrize("omega", [0.3, 1.0, 2.0, 7.5])
    def test_vacuum(self, omega):
        assert uncertainty_product(init_minimum_uncertainty(constant(omega), 0.0)) == pytest.approx(0.5, abs=1e-15)

    def test_squeezed_real_at_origin(self):
        assert uncertainty_product(squeezed_unit_sample(0.8)) == pytest.approx(0.5, abs=1e-14)

    def test_squeezed_quarter_period(self):
        assert uncertainty_product(squeezed_unit_sample(0.5, 0.0, math.pi / 4)) == pytest.approx(
            math.cosh(1.0) / 2, rel=1e-14)


class TestEnergy:
    def test_vacuum_minimum(self):
        spec = constant(2.0)
        rep = energy_expectation(init_minimum_uncertainty(spec, 0.0), spec)
        assert rep.epsilon == pytest.approx(1.0, rel=1e-15)
        assert rep.epsilon == pytest.approx(rep.kinetic + rep.potential, rel=1e-15)

    @pytest.mark.parametrize("omega,r", [(1.0, 0.3), (2.5, 1.0), (0.4, 2.0)])
    def test_squeezed(self, omega, r):
        spec = constant(omega)
        base = init_minimum_uncertainty(spec, 0.0)
        rep = energy_expectation(mix_mode(base, polar_to_bogoliubov(r, 0.9)), spec)
        assert rep.epsilon == pytest.approx(omega * math.cosh(2 * r) / 2, rel=1e-13)

    def test_roundtrip(self):
        spec = constant(1.0)
        base = init_minimum_uncertainty(spec, 0.0)
        eps = energy_expectation(mix_mode(base, squeeze_from_energy(3.0, 1.0)), spec).epsilon
        assert eps == pytest.approx(3.0, abs=1e-10)

    def test_energy_above_ground_state(self, vacuum_ode):
        for r in (0.0, 0.3, 1.2):
            traj = mix_trajectory(vacuum_ode, polar_to_bogoliubov(r, 0.5))
            for s in traj.samples[::100]:
                # ODE samples carry ~1e-12 normalization error
                assert energy_expectation(s, traj.spec).epsilon >= 0.5 - 1e-9

    def test_conserved_along_constant_profile(self, vacuum_ode):
        from squeezed_vacuum.states import energies
        traj = mix_trajectory(vacuum_ode, polar_to_bogoliubov(0.8, 2.0))
        eps = energies(traj)
        assert np.ptp(eps) / eps.mean() < 1e-9

    def test_matches_amplitude_form(self, vacuum_ode):
        for m0 in (1.0, 0.3):
            spec = constant(1.4, m0=m0)
            base = integrate_mode(spec, init_minimum_uncertainty(spec, 0.0), 5.0, 1e-12, np.linspace(0, 5, 51))
            traj = mix_trajectory(base, polar_to_bogoliubov(0.9, 1.0))
            from squeezed_vacuum.states import energies
            np.testing.assert_allclose(ermakov_energy(traj), energies(traj), rtol=1e-8)


class TestExcitationNumber:
    def test_vacuum(self):
        assert excitation_number(polar_to_bogoliubov(0.0)) == 0.0

    def test_r_one(self):
        assert excitation_number(polar_to_bogoliubov(1.0)) == pytest.approx(math.sinh(1.0) ** 2, rel=1e-15)

    @pytest.mark.parametrize("delta", [0.0, 1.0, 3.0, 6.0])
    def test_phase_independent(self, delta):
        assert excitation_number(polar_to_bogoliubov(0.5, delta)) == pytest.approx(0.27154031, rel=1e-7)

    def test_invalid(self):
        with pytest.raises(InvalidParamsError):
            excitation_number(SqueezeParams(1.0, 0.5, 0.0, 0.0))


def test_products_vectorized_matches_scalar(vacuum_ode):
    traj = mix_trajectory(vacuum_ode, polar_to_bogoliubov(0.4, 0.2))
    vec = products(traj)
    for i in (0, 17, 800):
        assert vec[i] == pytest.approx(uncertainty_product(traj[i]), rel=1e-15)

"""Gaussian states built from a normalized mode, with their second moments,
uncertainty product, energy, and the amplitude-phase (Ermakov) form of
the mode.

For a mode written as u = xi / sqrt(2 m0) * exp(-i theta), the amplitude
xi obeys xi'' + omega^2 xi = 1 / xi^3 and the phase obeys xi^2 theta' = 1.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from ._csvio import fmt, open_output
from .errors import DecompositionError, InsufficientDataError, UnsupportedKindError
from .modes import ModeSample, ModeTrajectory
from .oscillator import OscillatorSpec, eval_frequency_sq
from .squeeze import SqueezeParams

REPORT_HEADER = ("t", "var_q", "var_p", "cov_qp", "product", "epsilon")


@dataclass(frozen=True)
class ErmakovFrame:
    xi: float
    dxi: float
    theta: float


@dataclass(frozen=True)
class LadderCoefficients:
    """A = c_p p + c_q q for the annihilation invariant."""

    c_p: complex
    c_q: complex

    @property
    def commutator(self) -> complex:
        # [A, A^dagger] with [q, p] = i
        return 1j * (self.c_q * np.conj(self.c_p) - self.c_p * np.conj(self.c_q))


@dataclass(frozen=True)
class GaussianState:
    sample: ModeSample

    @property
    def norm_coeff(self) -> complex:
        u = self.sample.u
        return complex((1.0 / (2.0 * math.pi * np.conj(u) * u)) ** 0.25)

    @property
    def exp_coeff(self) -> complex:
        s = self.sample
        return complex(1j * s.mass * np.conj(s.du) / (2.0 * np.conj(s.u)))

    @property
    def width(self) -> float:
        """Standard deviation of |psi|^2 in q."""
        return abs(self.sample.u)


@dataclass(frozen=True)
class UncertaintyReport:
    var_q: float
    var_p: float
    cov_qp: float
    product: float


@dataclass(frozen=True)
class EnergyReport:
    epsilon: float
    kinetic: float
    potential: float


def ladder_coefficients(sample: ModeSample) -> LadderCoefficients:
    return LadderCoefficients(1j * np.conj(sample.u), -1j * sample.mass * np.conj(sample.du))


def gaussian_wavefunction(state: GaussianState, q):
    return state.norm_coeff * np.exp(state.exp_coeff * np.asarray(q) ** 2)


def gaussian_norm(state: GaussianState, n_sigma: float = 8.0, tol: float = 1e-8) -> float:
    """Integral of |psi|^2 over +-n_sigma standard deviations (adaptive quadrature)."""
    half = n_sigma * state.width
    value, _ = quad(lambda q: abs(gaussian_wavefunction(state, q)) ** 2, -half, half,
                    epsabs=tol, epsrel=tol, limit=200)
    return value


def _moments(u, du, mass):
    var_q = (np.conj(u) * u).real
    var_p = mass**2 * (np.conj(du) * du).real
    cov = mass * (u * np.conj(du)).real
    return var_q, var_p, cov


def moments(sample: ModeSample) -> UncertaintyReport:
    var_q, var_p, cov = _moments(sample.u, sample.du, sample.mass)
    return UncertaintyReport(float(var_q), float(var_p), float(cov), math.sqrt(var_q * var_p))


def uncertainty_product(sample: ModeSample) -> float:
    return float(sample.mass * abs(sample.u) * abs(sample.du))


def energy_expectation(sample: ModeSample, spec: OscillatorSpec) -> EnergyReport:
    """<H> = (m/2)(|u'|^2 + omega^2 |u|^2) in the Gaussian state of ``sample``."""
    omega_sq = eval_frequency_sq(spec, sample.t)
    kinetic = 0.5 * sample.mass * abs(sample.du) ** 2
    potential = 0.5 * sample.mass * omega_sq * abs(sample.u) ** 2
    return EnergyReport(kinetic + potential, kinetic, potential)


def excitation_number(params: SqueezeParams) -> float:
    """Mean number of base-vacuum quanta in the squeezed state, |nu|^2."""
    params.validate()
    return abs(params.nu) ** 2


# trajectory-level (vectorized) versions

def products(traj: ModeTrajectory) -> np.ndarray:
    return traj.mass * np.abs(traj.u) * np.abs(traj.du)


def energies(traj: ModeTrajectory) -> np.ndarray:
    omega_sq = traj.spec.frequency_sq(traj.t)
    return 0.5 * traj.mass * (np.abs(traj.du) ** 2 + omega_sq * np.abs(traj.u) ** 2)


def write_report_csv(traj: ModeTrajectory, dest) -> None:
    var_q, var_p, cov = _moments(traj.u, traj.du, traj.mass)
    prod = np.sqrt(var_q * var_p)
    eps = energies(traj)
    with open_output(dest) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(REPORT_HEADER)
        for row in zip(traj.t, var_q, var_p, cov, prod, eps):
            w.writerow([fmt(v) for v in row])


# Ermakov amplitude-phase form

def _require_constant_mass(traj: ModeTrajectory) -> None:
    if not traj.spec.constant_mass:
        raise UnsupportedKindError(
            f"amplitude-phase form assumes constant mass; got kind {traj.spec.kind!r}")


def ermakov_arrays(traj: ModeTrajectory) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(xi, xi', theta) along the trajectory.

    theta = -arg(u) is continued to the nearest branch sample by sample; a
    jump of pi/2 or more between neighbours means the grid is too coarse.
    """
    _require_constant_mass(traj)
    absu = np.abs(traj.u)
    if np.any(absu == 0) or not np.all(np.isfinite(absu)):
        raise DecompositionError("mode passes through zero; amplitude-phase form undefined")
    m0 = traj.spec.m0
    xi = math.sqrt(2.0 * m0) * absu
    dxi = math.sqrt(2.0 * m0) * (traj.du * np.conj(traj.u)).real / absu
    raw = -np.angle(traj.u)
    step = np.diff(raw)
    step = (step + math.pi) % (2 * math.pi) - math.pi
    if np.any(np.abs(step) >= math.pi / 2):
        raise DecompositionError("phase changes by >= pi/2 between samples; refine the grid")
    theta = raw[0] + np.concatenate(([0.0], np.cumsum(step)))
    return xi, dxi, theta


def ermakov_frame(traj: ModeTrajectory) -> list[ErmakovFrame]:
    xi, dxi, theta = ermakov_arrays(traj)
    return [ErmakovFrame(float(a), float(b), float(c)) for a, b, c in zip(xi, dxi, theta)]


def _uniform_step(t: np.ndarray) -> float:
    h = np.diff(t)
    if not np.allclose(h, h[0], rtol=1e-9, atol=0):
        raise InsufficientDataError("finite-difference residuals need a uniform grid")
    return float(h[0])


def second_derivative(y: np.ndarray, h: float) -> np.ndarray:
    """Fourth-order central second difference at interior points y[2:-2]."""
    return (-y[4:] + 16 * y[3:-1] - 30 * y[2:-2] + 16 * y[1:-3] - y[:-4]) / (12 * h * h)


def first_derivative(y: np.ndarray, h: float) -> np.ndarray:
    """Fourth-order central first difference at interior points y[2:-2]."""
    return (-y[4:] + 8 * y[3:-1] - 8 * y[1:-3] + y[:-4]) / (12 * h)


def ermakov_residual_from_amplitude(xi, omega_sq, h: float) -> float:
    """max |xi'' + omega^2 xi - 1/xi^3| over interior points of a uniform grid."""
    xi = np.asarray(xi, dtype=float)
    if xi.size < 5:
        raise InsufficientDataError("need at least 5 samples for the difference stencil")
    omega_sq = np.broadcast_to(np.asarray(omega_sq, dtype=float), xi.shape)
    inner = xi[2:-2]
    res = second_derivative(xi, h) + omega_sq[2:-2] * inner - inner**-3
    return float(np.max(np.abs(res)))


def ermakov_residual(traj: ModeTrajectory) -> float:
    if len(traj) < 3:
        raise InsufficientDataError("need at least 3 samples")
    h = _uniform_step(traj.t)
    xi, _, _ = ermakov_arrays(traj)
    return ermakov_residual_from_amplitude(xi, traj.spec.frequency_sq(traj.t), h)


def ermakov_energy(traj: ModeTrajectory) -> np.ndarray:
    """(xi'^2 + omega^2 xi^2 + 1/xi^2) / 4, the energy in amplitude form."""
    xi, dxi, _ = ermakov_arrays(traj)
    return 0.25 * (dxi**2 + traj.spec.frequency_sq(traj.t) * xi**2 + xi**-2)

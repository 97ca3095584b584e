"""Bogoliubov mixing of a mode with its conjugate, u_nu = mu u + conj(nu) conj(u),
and the closed forms that hold for a time-independent oscillator."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np

from ._csvio import fmt, open_output
from .errors import BelowGroundStateError, InvalidArgumentError, InvalidParamsError
from .modes import ModeSample, ModeTrajectory

PARAMS_HEADER = ("mu_re", "mu_im", "nu_re", "nu_im", "r", "delta")
NORM_TOL = 1e-12
TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class SqueezeParams:
    mu: complex
    nu: complex
    r: float
    delta: float

    @classmethod
    def from_bogoliubov(cls, mu, nu) -> "SqueezeParams":
        """Wrap an arbitrary pair; r and delta are read off |nu| and arg(nu)."""
        mu, nu = complex(mu), complex(nu)
        r = math.asinh(abs(nu))
        delta = 0.0 if nu == 0 else math.atan2(nu.imag, nu.real) % TWO_PI
        params = cls(mu, nu, r, delta)
        params.validate()
        return params

    @property
    def norm_defect(self) -> float:
        return abs(self.mu) ** 2 - abs(self.nu) ** 2 - 1.0

    def validate(self) -> None:
        scale = max(1.0, abs(self.mu) ** 2)
        if not abs(self.norm_defect) <= NORM_TOL * scale:
            raise InvalidParamsError(f"|mu|^2 - |nu|^2 - 1 = {self.norm_defect:.3g}")

    @property
    def mu_tilde(self) -> complex:
        return self.mu

    @property
    def nu_tilde(self) -> complex:
        return -self.nu

    def to_csv(self, dest) -> None:
        with open_output(dest) as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(PARAMS_HEADER)
            w.writerow([fmt(self.mu.real), fmt(self.mu.imag), fmt(self.nu.real), fmt(self.nu.imag),
                        fmt(self.r), fmt(self.delta)])


def polar_to_bogoliubov(r: float, delta: float = 0.0) -> SqueezeParams:
    """mu = cosh r, nu = exp(i delta) sinh r. delta is reduced to [0, 2 pi)
    and set to 0 when r = 0."""
    if not r >= 0:
        raise InvalidArgumentError(f"squeeze magnitude must be nonnegative, got {r}")
    if r == 0:
        return SqueezeParams(1.0 + 0j, 0j, 0.0, 0.0)
    delta = float(delta) % TWO_PI
    nu = complex(math.cos(delta), math.sin(delta)) * math.sinh(r)
    if delta == 0.0:
        nu = complex(math.sinh(r), 0.0)
    return SqueezeParams(complex(math.cosh(r)), nu, float(r), delta)


def ladder_bogoliubov(params: SqueezeParams) -> tuple[complex, complex]:
    """Coefficients of A_nu = mu~ A + nu~ A^dagger: (mu, -nu)."""
    return params.mu_tilde, params.nu_tilde


def _mix(u, du, params: SqueezeParams):
    mu, nu_c = params.mu, np.conj(params.nu)
    return mu * u + nu_c * np.conj(u), mu * du + nu_c * np.conj(du)


def mix_mode(base: ModeSample, params: SqueezeParams) -> ModeSample:
    params.validate()
    u, du = _mix(base.u, base.du, params)
    return ModeSample(base.t, complex(u), complex(du), base.mass)


def mix_trajectory(base: ModeTrajectory, params: SqueezeParams) -> ModeTrajectory:
    params.validate()
    u, du = _mix(base.u, base.du, params)
    return ModeTrajectory.from_arrays(base.spec, base.t, u, du, base.mass, tol=base.tol)


def _check_ground(epsilon: float, omega: float) -> float:
    if not omega > 0:
        raise InvalidArgumentError(f"omega must be positive, got {omega}")
    if not epsilon >= 0.5 * omega:
        raise BelowGroundStateError(f"energy {epsilon} below ground state omega/2 = {0.5 * omega}")
    return epsilon / omega


def closed_form_xi_sq(epsilon: float, omega: float, t):
    """xi^2(t) = (2 eps / omega^2) [1 + sqrt(1 - omega^2 / (4 eps^2)) cos(2 omega t)]."""
    _check_ground(epsilon, omega)
    root = math.sqrt(max(0.0, 1.0 - omega**2 / (4.0 * epsilon**2)))
    return 2.0 * epsilon / omega**2 * (1.0 + root * np.cos(2.0 * omega * np.asarray(t, dtype=float)))


def squeeze_from_energy(epsilon: float, omega: float) -> SqueezeParams:
    """Real Bogoliubov pair whose squeezed vacuum has energy ``epsilon``."""
    ratio = _check_ground(epsilon, omega)
    nu = math.sqrt(ratio - 0.5)
    return SqueezeParams(complex(math.sqrt(ratio + 0.5)), complex(nu), math.asinh(nu), 0.0)


def uncertainty_extrema(params: SqueezeParams) -> tuple[float, float]:
    """Range of the uncertainty product over one period when mixing the
    stationary vacuum of a time-independent oscillator."""
    params.validate()
    return 0.5, 0.5 * (abs(params.mu) ** 2 + abs(params.nu) ** 2)

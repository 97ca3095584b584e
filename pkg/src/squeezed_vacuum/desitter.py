"""Bunch-Davies modes of a minimally coupled massive scalar in de Sitter space.

Each Fourier mode is an oscillator with mass exp(3 H0 t) and frequency
omega^2 = m^2 + k^2 exp(-2 H0 t). In terms of z = (k/H0) exp(-H0 t) and
chi = sqrt(9/4 - m^2/H0^2) the mode is

    u(t) = sqrt(pi / (4 H0)) exp(-3 H0 t / 2) conj(H^(2)_chi(z)).

The conjugate (i.e. H^(1)) is what carries positive frequency and a
Wronskian of +i in our sign convention; H^(2) itself gives -i.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np

from ._csvio import fmt, open_output
from .bessel import hankel_h2, hankel_h2_asymptotic
from .errors import AsymptoticRegimeError, ImaginaryOrderError, InsufficientDataError, InvalidArgumentError
from .modes import ModeSample, ModeTrajectory, integrate_mode
from .oscillator import OscillatorSpec, desitter_mode
from .states import first_derivative, second_derivative

KSCAN_HEADER = ("k", "t", "z", "re_u", "im_u", "product", "epsilon", "wronskian_residual")
COMPARISON_HEADER = ("z", "t", "re_u_analytic", "im_u_analytic", "re_u_ode", "im_u_ode", "rel_dev")
MIN_ASYMPTOTIC_Z = 50.0


@dataclass(frozen=True)
class DeSitterSpec:
    H0: float
    msq: float
    k: float
    parity: str = "cos"

    def __post_init__(self):
        if not self.H0 > 0:
            raise InvalidArgumentError(f"H0 must be positive, got {self.H0}")
        if not self.k > 0:
            raise InvalidArgumentError(f"k must be positive, got {self.k}")
        if self.msq < 0:
            raise InvalidArgumentError(f"mass squared must be nonnegative, got {self.msq}")
        if self.parity not in ("cos", "sin"):
            raise InvalidArgumentError(f"parity must be 'cos' or 'sin', got {self.parity!r}")

    @property
    def m(self) -> float:
        return math.sqrt(self.msq)

    @property
    def chi_sq(self) -> float:
        return 2.25 - self.msq / self.H0**2

    @property
    def light(self) -> bool:
        return self.chi_sq >= 0

    @property
    def chi(self) -> float:
        if not self.light:
            raise ImaginaryOrderError(
                f"m^2 = {self.msq} exceeds (9/4) H0^2; Hankel order is imaginary")
        return math.sqrt(self.chi_sq)

    def z(self, t):
        return self.k / self.H0 * np.exp(-self.H0 * np.asarray(t, dtype=float))

    def t_of_z(self, z):
        return -np.log(self.H0 * np.asarray(z, dtype=float) / self.k) / self.H0

    def oscillator(self) -> OscillatorSpec:
        return desitter_mode(self.H0, self.msq, self.k, m0=1.0)


def derive_spec(H0: float, m: float, k: float, parity: str = "cos") -> DeSitterSpec:
    """Spec for field mass ``m``; refuses heavy fields (m > 3/2 H0), which
    have no real Hankel order."""
    if m < 0:
        raise InvalidArgumentError(f"field mass must be nonnegative, got {m}")
    spec = DeSitterSpec(float(H0), float(m) ** 2, float(k), parity)
    spec.chi  # raises for heavy fields
    return spec


def _mode_from_hankel(spec: DeSitterSpec, t: float, h, dh) -> ModeSample:
    H0 = spec.H0
    z = float(spec.z(t))
    c = math.sqrt(math.pi / (4.0 * H0)) * math.exp(-1.5 * H0 * t)
    h, dh = np.conj(h), np.conj(dh)
    u = c * h
    # dz/dt = -H0 z
    du = c * (-1.5 * H0 * h - H0 * z * dh)
    return ModeSample(float(t), complex(u), complex(du), math.exp(3.0 * H0 * t))


def bunch_davies_mode(spec: DeSitterSpec, t: float) -> ModeSample:
    hv = hankel_h2(spec.chi, float(spec.z(t)))
    return _mode_from_hankel(spec, t, hv.value, hv.derivative)


def bunch_davies_trajectory(spec: DeSitterSpec, t) -> ModeTrajectory:
    t = np.asarray(t, dtype=float)
    samples = [bunch_davies_mode(spec, float(ti)) for ti in t]
    return ModeTrajectory.from_arrays(spec.oscillator(), t, [s.u for s in samples],
                                      [s.du for s in samples], [s.mass for s in samples])


def bd_init_sample(spec: DeSitterSpec, z_start: float) -> ModeSample:
    """Early-time Bunch-Davies data from the large-argument Hankel expansion.

    Works for heavy fields too (the expansion only needs chi^2).
    """
    if not z_start >= MIN_ASYMPTOTIC_Z:
        raise AsymptoticRegimeError(f"z_start = {z_start} < {MIN_ASYMPTOTIC_Z}")
    t = float(spec.t_of_z(z_start))
    hv = hankel_h2_asymptotic(spec.chi_sq, float(z_start))
    return _mode_from_hankel(spec, t, hv.value, hv.derivative)


def integrate_bunch_davies(spec: DeSitterSpec, z_start: float, z_grid, tol: float = 1e-12) -> ModeTrajectory:
    """Integrate the mode equation forward from the early-time data at
    ``z_start`` and sample it at the times corresponding to ``z_grid``."""
    init = bd_init_sample(spec, z_start)
    z_grid = np.asarray(z_grid, dtype=float)
    t_grid = spec.t_of_z(z_grid)
    t_end = float(np.max(t_grid))
    # t_of_z(z_start) may differ from init.t in the last bit
    t_grid = np.clip(t_grid, init.t, t_end)
    return integrate_mode(spec.oscillator(), init, t_end, tol=tol, output_grid=t_grid)


def mode_equation_residual(traj: ModeTrajectory, spec: DeSitterSpec) -> float:
    """max |u'' + 3 H0 u' + omega^2 u| / max|u| over interior grid points,
    with fourth-order central differences on a uniform grid."""
    if len(traj) < 5:
        raise InsufficientDataError("need at least 5 uniformly spaced samples")
    h = np.diff(traj.t)
    if not np.allclose(h, h[0], rtol=1e-9, atol=0):
        raise InsufficientDataError("mode equation residual needs a uniform grid")
    h = float(h[0])
    u = traj.u
    t = traj.t[2:-2]
    omega_sq = spec.msq + spec.k**2 * np.exp(-2.0 * spec.H0 * t)
    res = second_derivative(u, h) + 3.0 * spec.H0 * first_derivative(u, h) + omega_sq * u[2:-2]
    return float(np.max(np.abs(res)) / np.max(np.abs(u)))


def write_kscan_csv(rows, dest) -> None:
    with open_output(dest) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(KSCAN_HEADER)
        for row in rows:
            w.writerow([fmt(v) for v in row])

"""Complex mode functions of the classical oscillator equation.

The mode u(t) solves d/dt(m u') + m omega^2 u = 0 and is normalized by the
Wronskian condition m (conj(u') u - conj(u) u') = i, which is what makes the
first-order invariants a proper pair of ladder operators.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np
from scipy.integrate import solve_ivp

from ._csvio import fmt, open_output
from .errors import DomainError, IntegrationError, InvalidArgumentError, NoInstantaneousVacuumError
from .oscillator import OscillatorSpec, eval_frequency_sq, eval_mass

TRAJECTORY_HEADER = ("t", "re_u", "im_u", "re_du", "im_du", "mass", "wronskian_residual")


@dataclass(frozen=True)
class ModeSample:
    t: float
    u: complex
    du: complex
    mass: float


def wronskian(u, du, mass):
    """m (conj(du) u - conj(u) du); equals i for a properly normalized mode."""
    return mass * (np.conj(du) * u - np.conj(u) * du)


def wronskian_residual(sample: ModeSample) -> float:
    return float(abs(wronskian(sample.u, sample.du, sample.mass) - 1j))


@dataclass(frozen=True, eq=False)
class ModeTrajectory:
    """Time-ordered samples of a mode together with the profile it solves.

    Samples are stored column-wise; iterate or index to get
    :class:`ModeSample` objects.
    """

    spec: OscillatorSpec
    t: np.ndarray
    u: np.ndarray
    du: np.ndarray
    mass: np.ndarray
    tol: float
    max_wronskian_drift: float

    def __post_init__(self):
        for name in ("t", "u", "du", "mass"):
            getattr(self, name).setflags(write=False)
        if self.t.size > 1 and np.any(np.diff(self.t) <= 0):
            raise InvalidArgumentError("trajectory samples must be strictly increasing in t")

    @classmethod
    def from_arrays(cls, spec, t, u, du, mass=None, tol=0.0):
        t = np.array(t, dtype=float)
        u = np.array(u, dtype=complex)
        du = np.array(du, dtype=complex)
        mass = spec.mass(t) if mass is None else np.array(mass, dtype=float)
        mass = np.array(np.broadcast_to(mass, t.shape), dtype=float)
        drift = float(np.max(np.abs(wronskian(u, du, mass) - 1j))) if t.size else 0.0
        return cls(spec, t, u, du, mass, float(tol), drift)

    @property
    def samples(self) -> list[ModeSample]:
        return list(self)

    @property
    def wronskian_residuals(self) -> np.ndarray:
        return np.abs(wronskian(self.u, self.du, self.mass) - 1j)

    def __len__(self) -> int:
        return self.t.size

    def __getitem__(self, i) -> ModeSample:
        return ModeSample(float(self.t[i]), complex(self.u[i]), complex(self.du[i]), float(self.mass[i]))

    def __iter__(self) -> Iterator[ModeSample]:
        for i in range(len(self)):
            yield self[i]

    def window(self, t_lo: float, t_hi: float) -> "ModeTrajectory":
        """Sub-trajectory with t_lo <= t <= t_hi."""
        sel = (self.t >= t_lo) & (self.t <= t_hi)
        return ModeTrajectory(self.spec, self.t[sel], self.u[sel], self.du[sel], self.mass[sel],
                              self.tol, self.max_wronskian_drift)

    def to_csv(self, dest) -> None:
        res = self.wronskian_residuals
        with open_output(dest) as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(TRAJECTORY_HEADER)
            for i in range(len(self)):
                w.writerow([fmt(self.t[i]), fmt(self.u[i].real), fmt(self.u[i].imag),
                            fmt(self.du[i].real), fmt(self.du[i].imag), fmt(self.mass[i]), fmt(res[i])])


def init_minimum_uncertainty(spec: OscillatorSpec, t0: float) -> ModeSample:
    """Instantaneous positive-frequency vacuum mode at ``t0``:
    u = 1/sqrt(2 m omega), du = -i omega u."""
    omega_sq = eval_frequency_sq(spec, t0)
    if not omega_sq > 0:
        raise NoInstantaneousVacuumError(f"omega^2({t0}) = {omega_sq} is not positive")
    omega = math.sqrt(omega_sq)
    mass = float(eval_mass(spec, t0))
    u = 1.0 / math.sqrt(2.0 * mass * omega)
    return ModeSample(float(t0), complex(u), -1j * omega * u, mass)


def integrate_mode(spec: OscillatorSpec, init: ModeSample, t_end: float, tol: float = 1e-12,
                   output_grid: Sequence[float] | None = None, *, strict: bool = True) -> ModeTrajectory:
    """Integrate the mode equation from ``init`` to ``t_end`` (either direction).

    Uses an adaptive 8(5,3) Dormand-Prince scheme on (u, u'); samples on
    ``output_grid`` come from its dense interpolant. The Wronskian is only
    monitored: with ``strict`` a drift above 1e3*tol raises
    :class:`IntegrationError`, and ``init`` must be normalized to 10*tol.
    ``strict=False`` allows unnormalized data (e.g. for linearity checks).
    """
    if not tol > 0:
        raise InvalidArgumentError(f"tolerance must be positive, got {tol}")
    t0 = float(init.t)
    t_end = float(t_end)
    spec.check_domain([t0, t_end])
    if output_grid is None:
        output_grid = [t0, t_end]
    grid = np.unique(np.asarray(output_grid, dtype=float))
    lo, hi = min(t0, t_end), max(t0, t_end)
    if grid.size == 0 or grid[0] < lo or grid[-1] > hi:
        raise DomainError(f"output grid must lie within [{lo}, {hi}]")
    if strict:
        res0 = wronskian_residual(init)
        if res0 > 10 * tol:
            raise InvalidArgumentError(f"initial Wronskian residual {res0:.3g} exceeds 10*tol")

    y0 = np.array([init.u, init.du], dtype=complex)
    scale = max(abs(init.u), abs(init.du)) or 1.0
    if t0 == t_end:
        u, du = np.array([init.u]), np.array([init.du])
    else:
        freq_sq, rate = spec.frequency_sq, spec.mass_rate

        def rhs(t, y):
            return np.array([y[1], -rate(t) * y[1] - freq_sq(t) * y[0]])

        t_eval = grid if t_end > t0 else grid[::-1]
        sol = solve_ivp(rhs, (t0, t_end), y0, method="DOP853", t_eval=t_eval,
                        rtol=tol, atol=1e-3 * tol * scale)
        if not sol.success:
            raise IntegrationError(f"integration failed: {sol.message}")
        u, du = sol.y
        if t_end < t0:
            u, du = u[::-1], du[::-1]

    traj = ModeTrajectory.from_arrays(spec, grid, u, du, tol=tol)
    if strict and traj.max_wronskian_drift > 1e3 * tol:
        raise IntegrationError(
            f"Wronskian drift {traj.max_wronskian_drift:.3g} exceeds 1e3*tol = {1e3 * tol:.3g}")
    return traj


def analytic_vacuum_trajectory(spec: OscillatorSpec, t) -> ModeTrajectory:
    """Exact minimum-uncertainty mode exp(-i omega (t - t0)) / sqrt(2 m0 omega)
    of a constant profile, phase-referenced to the first grid time."""
    if spec.kind != "constant":
        raise InvalidArgumentError("analytic vacuum trajectory needs a constant profile")
    t = np.asarray(t, dtype=float)
    first = init_minimum_uncertainty(spec, float(t[0]))
    omega = math.sqrt(spec.omega_sq)
    phase = np.exp(-1j * omega * (t - t[0]))
    return ModeTrajectory.from_arrays(spec, t, first.u * phase, first.du * phase)

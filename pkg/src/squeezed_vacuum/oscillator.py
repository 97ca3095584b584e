"""Oscillator profiles: the time-dependent mass m(t) and squared frequency
omega^2(t) of H = p^2 / (2 m) + m omega^2 q^2 / 2, with hbar = 1.

Three kinds are supported:

``constant``
    m(t) = m0 and omega^2(t) = omega^2.
``tabulated``
    omega^2(t) given on monotone knots, cubic spline in between, no
    extrapolation; m(t) = m0.
``desitter-mode``
    one Fourier mode of a massive scalar in de Sitter space,
    m(t) = m0 exp(3 H0 t) and omega^2(t) = msq + k^2 exp(-2 H0 t).

``custom`` wraps an arbitrary smooth callable omega^2(t) with constant mass.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

import numpy as np
from scipy.interpolate import CubicSpline

from .errors import DomainError, InvalidArgumentError

KINDS = ("constant", "tabulated", "desitter-mode", "custom")


@dataclass(frozen=True)
class OscillatorSpec:
    """Immutable oscillator profile. Build it with one of the module-level
    constructors rather than directly."""

    kind: str
    m0: float
    t_min: float = -math.inf
    t_max: float = math.inf
    omega_sq: float | None = None
    H0: float | None = None
    field_msq: float | None = None
    k: float | None = None
    knots: tuple[np.ndarray, np.ndarray] | None = field(default=None, repr=False)
    _freq_fn: Callable | None = field(default=None, repr=False, compare=False)

    @property
    def domain(self) -> tuple[float, float]:
        return (self.t_min, self.t_max)

    @property
    def constant_mass(self) -> bool:
        return self.kind != "desitter-mode"

    def frequency_sq(self, t):
        """omega^2(t) without a domain check; accepts scalars or arrays."""
        scalar = np.ndim(t) == 0
        if self.kind == "constant":
            return self.omega_sq if scalar else np.full(np.shape(t), self.omega_sq)
        if self.kind == "desitter-mode":
            if scalar:
                return self.field_msq + self.k**2 * math.exp(-2.0 * self.H0 * t)
            return self.field_msq + self.k**2 * np.exp(-2.0 * self.H0 * np.asarray(t, dtype=float))
        value = self._freq_fn(t)
        return float(value) if np.ndim(t) == 0 else np.asarray(value, dtype=float)

    def mass(self, t):
        scalar = np.ndim(t) == 0
        if self.kind == "desitter-mode":
            if scalar:
                return self.m0 * math.exp(3.0 * self.H0 * t)
            return self.m0 * np.exp(3.0 * self.H0 * np.asarray(t, dtype=float))
        return self.m0 if scalar else np.full(np.shape(t), self.m0)

    def mass_rate(self, t):
        """Logarithmic mass derivative m'(t) / m(t)."""
        if self.kind == "desitter-mode":
            return 3.0 * self.H0
        return 0.0

    def check_domain(self, t) -> None:
        ta = np.asarray(t, dtype=float)
        if np.any(np.isnan(ta)) or np.any(ta < self.t_min) or np.any(ta > self.t_max):
            raise DomainError(f"time {t!r} outside oscillator domain [{self.t_min}, {self.t_max}]")


def _check_domain_bounds(t_min: float, t_max: float) -> None:
    if not t_min < t_max:
        raise InvalidArgumentError(f"empty time domain [{t_min}, {t_max}]")


def constant(omega: float | None = None, m0: float = 1.0, *, omega_sq: float | None = None,
             domain: tuple[float, float] = (-math.inf, math.inf)) -> OscillatorSpec:
    """Time-independent oscillator. Give either ``omega`` or ``omega_sq``
    (the latter may be negative for an inverted oscillator)."""
    if (omega is None) == (omega_sq is None):
        raise InvalidArgumentError("give exactly one of omega, omega_sq")
    if omega_sq is None:
        omega_sq = float(omega) ** 2
    if not m0 > 0:
        raise InvalidArgumentError(f"mass must be positive, got {m0}")
    _check_domain_bounds(*domain)
    return OscillatorSpec("constant", float(m0), float(domain[0]), float(domain[1]),
                          omega_sq=float(omega_sq))


def desitter_mode(H0: float, msq: float, k: float, m0: float = 1.0,
                  domain: tuple[float, float] = (-math.inf, math.inf)) -> OscillatorSpec:
    """Per-mode oscillator of a scalar with mass^2 ``msq`` in de Sitter space."""
    if not H0 > 0:
        raise InvalidArgumentError(f"H0 must be positive, got {H0}")
    if not k > 0:
        raise InvalidArgumentError(f"k must be positive, got {k}")
    if msq < 0:
        raise InvalidArgumentError(f"field mass squared must be nonnegative, got {msq}")
    if not m0 > 0:
        raise InvalidArgumentError(f"mass must be positive, got {m0}")
    _check_domain_bounds(*domain)
    return OscillatorSpec("desitter-mode", float(m0), float(domain[0]), float(domain[1]),
                          H0=float(H0), field_msq=float(msq), k=float(k))


def tabulated(t_knots, omega_sq_knots, m0: float = 1.0) -> OscillatorSpec:
    """Cubic-spline profile through ``(t_knots, omega_sq_knots)``.

    The domain is exactly the knot span; evaluation outside it is an error.
    """
    t = np.array(t_knots, dtype=float)
    w2 = np.array(omega_sq_knots, dtype=float)
    if t.ndim != 1 or t.shape != w2.shape:
        raise InvalidArgumentError("knot arrays must be 1-D and of equal length")
    if t.size < 2:
        raise InvalidArgumentError("need at least two knots")
    if np.any(np.diff(t) <= 0):
        raise InvalidArgumentError("knot times must be strictly increasing")
    if not m0 > 0:
        raise InvalidArgumentError(f"mass must be positive, got {m0}")
    t.setflags(write=False)
    w2.setflags(write=False)
    spline = CubicSpline(t, w2, extrapolate=False)
    return OscillatorSpec("tabulated", float(m0), float(t[0]), float(t[-1]),
                          knots=(t, w2), _freq_fn=spline)


def custom(frequency_sq: Callable, m0: float = 1.0,
           domain: tuple[float, float] = (-math.inf, math.inf)) -> OscillatorSpec:
    """Constant-mass oscillator with an arbitrary smooth omega^2(t).

    ``frequency_sq`` must accept both floats and numpy arrays.
    """
    if not m0 > 0:
        raise InvalidArgumentError(f"mass must be positive, got {m0}")
    _check_domain_bounds(*domain)
    return OscillatorSpec("custom", float(m0), float(domain[0]), float(domain[1]),
                          _freq_fn=frequency_sq)


def load_profile_csv(path, m0: float = 1.0) -> OscillatorSpec:
    """Read a tabulated profile from a CSV with header ``t,omega_sq``."""
    path = Path(path)
    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        header = [h.strip() for h in next(reader, [])]
        if header != ["t", "omega_sq"]:
            raise InvalidArgumentError(f"{path}: expected header 't,omega_sq', got {','.join(header)!r}")
        rows = [row for row in reader if row and any(c.strip() for c in row)]
    try:
        data = np.array([[float(a), float(b)] for a, b in rows])
    except ValueError as exc:
        raise InvalidArgumentError(f"{path}: malformed row ({exc})") from None
    if data.size == 0:
        raise InvalidArgumentError(f"{path}: no data rows")
    return tabulated(data[:, 0], data[:, 1], m0=m0)


def eval_frequency_sq(spec: OscillatorSpec, t):
    spec.check_domain(t)
    return spec.frequency_sq(t)


def eval_mass(spec: OscillatorSpec, t):
    spec.check_domain(t)
    return spec.mass(t)

"""Vacuum selection by minimum uncertainty over the squeezed family of a base mode."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

import numpy as np

from ._csvio import fmt, open_output
from .errors import DomainError, InvalidArgumentError
from .modes import ModeTrajectory
from .squeeze import SqueezeParams, mix_trajectory, polar_to_bogoliubov
from .states import energies, products

FUNCTIONALS = ("max-over-window", "mean-over-window", "at-time")
TIE_TOL = 1e-12
PROVABLE_TOL = 1e-12
EMPIRICAL_TOL = 1e-9

SELECTION_HEADER = ("r", "delta", "value")
VERIFY_HEADER = ("t", "product_margin_a", "product_margin_b", "energy_margin_a", "energy_margin_b")


@dataclass(frozen=True)
class SelectionReport:
    grid: list[tuple[float, float]]
    functional: str
    values: list[float]
    argmin: tuple[float, float]
    argmin_value: float
    margin: float

    def summary(self) -> str:
        return (f"functional={self.functional},argmin_r={fmt(self.argmin[0])},"
                f"argmin_delta={fmt(self.argmin[1])},argmin_value={fmt(self.argmin_value)},"
                f"margin={fmt(self.margin)}")

    def to_csv(self, dest) -> None:
        with open_output(dest) as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(SELECTION_HEADER)
            for (r, d), v in zip(self.grid, self.values):
                w.writerow([fmt(r), fmt(d), fmt(v)])
            fh.write(f"# {self.summary()}\n")


def canonical_grid(r_grid, delta_grid) -> list[tuple[float, float]]:
    """All (r, delta) pairs with delta reduced to [0, 2 pi), delta = 0 at r = 0,
    duplicates removed, sorted by (r, delta)."""
    pts = set()
    for r in r_grid:
        for d in delta_grid:
            p = polar_to_bogoliubov(float(r), float(d))
            pts.add((p.r, p.delta))
    return sorted(pts)


def select_argmin(grid, values) -> tuple[int, float]:
    """Index of the minimum (ties within 1e-12 go to the first, i.e. smallest
    (r, delta) for a sorted grid) and the margin to the runner-up."""
    values = np.asarray(values, dtype=float)
    best = float(np.min(values))
    idx = int(np.flatnonzero(values <= best + TIE_TOL)[0])
    rest = np.delete(values, idx)
    margin = float(np.min(rest) - values[idx]) if rest.size else math.inf
    return idx, max(margin, 0.0)


def _functional(prod: np.ndarray, t: np.ndarray, functional: str, t_star: float | None) -> float:
    if functional == "max-over-window":
        return float(np.max(prod))
    if functional == "mean-over-window":
        return float(np.mean(prod))
    i = int(np.argmin(np.abs(t - t_star)))
    return float(prod[i])


def scan_squeeze_grid(base: ModeTrajectory, r_grid, delta_grid, functional: str = "max-over-window",
                      window: tuple[float, float] | None = None, t_star: float | None = None) -> SelectionReport:
    """Evaluate a functional of the uncertainty product over ``window`` for every
    squeezed version of ``base`` and pick the minimizer."""
    if functional not in FUNCTIONALS:
        raise InvalidArgumentError(f"unknown functional {functional!r}; choose from {FUNCTIONALS}")
    if len(r_grid) == 0 or len(delta_grid) == 0:
        raise InvalidArgumentError("squeeze grids must be non-empty")
    if window is None:
        window = (float(base.t[0]), float(base.t[-1]))
    lo, hi = window
    if not lo <= hi or lo < base.t[0] or hi > base.t[-1]:
        raise DomainError(f"window {window} outside trajectory span [{base.t[0]}, {base.t[-1]}]")
    sub = base.window(lo, hi)
    if len(sub) == 0:
        raise DomainError(f"no samples inside window {window}")
    if functional == "at-time":
        if t_star is None or not lo <= t_star <= hi:
            raise DomainError("at-time functional needs t_star inside the window")

    grid = canonical_grid(r_grid, delta_grid)
    values = []
    for r, d in grid:
        mixed = mix_trajectory(sub, polar_to_bogoliubov(r, d))
        values.append(_functional(products(mixed), sub.t, functional, t_star))
    idx, margin = select_argmin(grid, values)
    return SelectionReport(grid, functional, values, grid[idx], values[idx], margin)


@dataclass(frozen=True)
class InequalityReport:
    t: np.ndarray
    product_margin_a: np.ndarray
    product_margin_b: np.ndarray
    energy_margin_a: np.ndarray
    energy_margin_b: np.ndarray
    params: SqueezeParams = field(repr=False)

    @property
    def worst_a(self) -> float:
        return float(min(self.product_margin_a.min(), self.energy_margin_a.min()))

    @property
    def worst_b(self) -> float:
        return float(min(self.product_margin_b.min(), self.energy_margin_b.min()))

    @property
    def pass_a(self) -> bool:
        return self.worst_a >= -PROVABLE_TOL

    @property
    def pass_b(self) -> bool:
        return self.worst_b >= -EMPIRICAL_TOL

    def to_csv(self, dest) -> None:
        with open_output(dest) as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(VERIFY_HEADER)
            for row in zip(self.t, self.product_margin_a, self.product_margin_b,
                           self.energy_margin_a, self.energy_margin_b):
                w.writerow([fmt(v) for v in row])


def verify_inequalities(base: ModeTrajectory, params: SqueezeParams, t_grid=None) -> InequalityReport:
    """Compare the squeezed state against its base at each time.

    (a) the provable bounds X_nu >= (|mu| - |nu|)^2 X_0, from the reverse
    triangle inequality; (b) the stronger X_nu >= X_0. X is the uncertainty
    product or the energy. Margins are X_nu minus the right-hand side.
    ``t_grid`` selects base samples (matched to 1e-9); default is all of them.
    """
    params.validate()
    if t_grid is not None:
        t_grid = np.asarray(t_grid, dtype=float)
        idx = np.searchsorted(base.t, t_grid)
        idx = np.clip(idx, 0, len(base) - 1)
        left = np.clip(idx - 1, 0, len(base) - 1)
        idx = np.where(np.abs(base.t[left] - t_grid) < np.abs(base.t[idx] - t_grid), left, idx)
        if np.any(np.abs(base.t[idx] - t_grid) > 1e-9 * np.maximum(1.0, np.abs(t_grid))):
            raise DomainError("t_grid entries must coincide with trajectory sample times")
        sel = np.unique(idx)
        base = ModeTrajectory.from_arrays(base.spec, base.t[sel], base.u[sel], base.du[sel],
                                          base.mass[sel], base.tol)
    mixed = mix_trajectory(base, params)
    factor = (abs(params.mu) - abs(params.nu)) ** 2
    p0, pn = products(base), products(mixed)
    e0, en = energies(base), energies(mixed)
    return InequalityReport(base.t.copy(), pn - factor * p0, pn - p0, en - factor * e0, en - e0, params)

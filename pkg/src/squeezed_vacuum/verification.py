"""Invariant suite run by ``squeezed-vacuum verify``.

Each check returns a :class:`Check` with the measured quantity, the bound it
is held to, and whether it passed. ``gating=False`` checks are reported but
do not affect the exit status.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import bessel, desitter, oscillator, selection, squeeze, states
from .modes import analytic_vacuum_trajectory, init_minimum_uncertainty, integrate_mode


@dataclass(frozen=True)
class Check:
    name: str
    measured: float
    bound: float
    passed: bool
    gating: bool = True

    @property
    def margin(self) -> float:
        return self.bound - self.measured


def _upper(name, measured, bound, gating=True) -> Check:
    return Check(name, float(measured), float(bound), bool(measured < bound), gating)


def check_wronskian_conservation(tol: float = 1e-12) -> Check:
    spec = oscillator.custom(lambda t: (1.0 + 0.5 * np.sin(0.3 * t)) ** 2)
    init = init_minimum_uncertainty(spec, 0.0)
    traj = integrate_mode(spec, init, 100.0, tol=tol, output_grid=np.linspace(0, 100, 2001))
    return _upper("wronskian_drift", traj.max_wronskian_drift, 1e-9)


def check_closed_form_xi_sq(tol: float = 1e-12) -> Check:
    worst = 0.0
    for eps, omega in ((0.5, 1.0), (1.0, 1.0), (2.0, 2.0), (3.0, 1.0)):
        spec = oscillator.constant(omega)
        t = np.linspace(0.0, math.pi / omega, 401)
        base = integrate_mode(spec, init_minimum_uncertainty(spec, 0.0), t[-1], tol=tol, output_grid=t)
        mixed = squeeze.mix_trajectory(base, squeeze.squeeze_from_energy(eps, omega))
        xi_sq = 2 * spec.m0 * np.abs(mixed.u) ** 2
        closed = squeeze.closed_form_xi_sq(eps, omega, t)
        worst = max(worst, float(np.max(np.abs(xi_sq / closed - 1))))
    return _upper("closed_form_xi_sq_rel", worst, 1e-8)


def check_energy_roundtrip() -> Check:
    worst = 0.0
    for ratio in (0.5, 1.0, 3.5):
        for omega in (1.0, 2.0):
            spec = oscillator.constant(omega)
            base = init_minimum_uncertainty(spec, 0.0)
            mixed = squeeze.mix_mode(base, squeeze.squeeze_from_energy(ratio * omega, omega))
            eps = states.energy_expectation(mixed, spec).epsilon
            worst = max(worst, abs(eps / (ratio * omega) - 1))
    return _upper("energy_roundtrip_rel", worst, 1e-10)


def check_vacuum_product(tol: float = 1e-12) -> list[Check]:
    spec = oscillator.constant(1.0)
    t = np.linspace(0.0, 2 * math.pi, 1601)
    exact = analytic_vacuum_trajectory(spec, t)
    ode = integrate_mode(spec, init_minimum_uncertainty(spec, 0.0), t[-1], tol=tol, output_grid=t)
    scan = selection.scan_squeeze_grid(ode, [0.0, 0.25, 0.5, 1.0], [0.0])
    want_margin = 0.5 * (math.cosh(0.5) - 1)
    return [
        _upper("vacuum_product_analytic", np.max(np.abs(states.products(exact) - 0.5)), 1e-12),
        _upper("vacuum_product_ode", np.max(np.abs(states.products(ode) - 0.5)), 1e-9),
        Check("selection_argmin_r", scan.argmin[0], 0.0, scan.argmin[0] == 0.0),
        Check("selection_margin_shortfall", want_margin - scan.margin, 1e-9,
              scan.margin >= want_margin - 1e-9),
    ]


def check_uncertainty_extrema() -> list[Check]:
    spec = oscillator.constant(1.0)
    t = np.linspace(0.0, math.pi, 801)
    base = analytic_vacuum_trajectory(spec, t)
    prod = states.products(squeeze.mix_trajectory(base, squeeze.polar_to_bogoliubov(0.5)))
    return [
        _upper("extrema_max_err", abs(prod.max() - 0.5 * math.cosh(1.0)), 1e-8),
        _upper("extrema_min_err", abs(prod.min() - 0.5), 1e-8),
    ]


def check_ermakov(tol: float = 1e-12) -> Check:
    spec = oscillator.constant(1.0)
    t = np.arange(0, 10001) * 1e-3
    base = integrate_mode(spec, init_minimum_uncertainty(spec, 0.0), t[-1], tol=tol, output_grid=t)
    worst = states.ermakov_residual(base)
    for r in (0.25, 0.5):
        worst = max(worst, states.ermakov_residual(
            squeeze.mix_trajectory(base, squeeze.polar_to_bogoliubov(r, 1.0))))
    return _upper("ermakov_residual", worst, 1e-6)


def check_hankel() -> list[Check]:
    worst_oracle = 0.0
    for z in np.geomspace(0.1, 100, 61):
        exact = 1j * math.sqrt(2 / (math.pi * z)) * complex(math.cos(z), -math.sin(z))
        worst_oracle = max(worst_oracle, abs(bessel.hankel_h2(0.5, z).value / exact - 1))
    worst_w = 0.0
    for chi in (0.0, 0.25, 0.5, 1.0, 1.118033988749895, 1.5):
        for z in np.geomspace(1e-2, 1e4, 31):
            b = bessel.bessel_jy(chi, z)
            worst_w = max(worst_w, abs((b.j * b.dy - b.dj * b.y) * math.pi * z / 2 - 1))
    return [_upper("hankel_half_order_rel", worst_oracle, 1e-10),
            _upper("bessel_wronskian_rel", worst_w, 1e-10)]


def check_bunch_davies(tol: float = 1e-12) -> list[Check]:
    spec = desitter.DeSitterSpec(1.0, 2.0, 1.0)
    z = np.geomspace(50.0, 0.5, 400)
    ode = desitter.integrate_bunch_davies(spec, 50.0, z, tol=tol)
    exact = desitter.bunch_davies_trajectory(spec, ode.t)
    dev = float(np.max(np.abs(ode.u - exact.u) / np.abs(exact.u)))
    p2, p3 = (states.uncertainty_product(desitter.bunch_davies_mode(spec, float(spec.t_of_z(zz))))
              for zz in (1e2, 1e3))
    return [
        _upper("bd_analytic_vs_ode_rel", dev, 1e-6),
        _upper("bd_wronskian", max(exact.max_wronskian_drift, ode.max_wronskian_drift), 1e-8),
        _upper("bd_early_product_err", abs(p3 - 0.5), 1e-3),
        Check("bd_early_monotone", abs(p3 - 0.5) - abs(p2 - 0.5), 0.0, abs(p3 - 0.5) < abs(p2 - 0.5)),
    ]


def check_inequalities(n: int = 200, seed: int = 0) -> list[Check]:
    rng = np.random.default_rng(seed)
    draws = [squeeze.polar_to_bogoliubov(rng.uniform(0, 2), rng.uniform(0, 2 * math.pi)) for _ in range(n)]
    const = analytic_vacuum_trajectory(oscillator.constant(1.0), np.linspace(0, 2 * math.pi, 401))
    ds = desitter.DeSitterSpec(1.0, 2.0, 1.0)
    bd = desitter.bunch_davies_trajectory(ds, ds.t_of_z(np.geomspace(50.0, 5.0, 200)))
    out = []
    for label, base, b_gating in (("const", const, True), ("bd", bd, False)):
        reps = [selection.verify_inequalities(base, p) for p in draws]
        wa = min(r.worst_a for r in reps)
        wb = min(r.worst_b for r in reps)
        out.append(Check(f"ineq_provable_{label}", -wa, selection.PROVABLE_TOL, wa >= -selection.PROVABLE_TOL))
        out.append(Check(f"ineq_empirical_{label}", -wb, selection.EMPIRICAL_TOL,
                         wb >= -selection.EMPIRICAL_TOL, gating=b_gating))
    return out


def run_all() -> list[Check]:
    checks = [check_wronskian_conservation(), check_closed_form_xi_sq(), check_energy_roundtrip()]
    checks += check_vacuum_product()
    checks += check_uncertainty_extrema()
    checks.append(check_ermakov())
    checks += check_hankel()
    checks += check_bunch_davies()
    checks += check_inequalities()
    return checks

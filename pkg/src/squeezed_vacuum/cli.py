"""Command-line front end.

Parameters come from an INI file (``--config``) with sections
``[oscillator]``, ``[squeeze]``, ``[grid]``, ``[selection]`` and ``[run]``;
command-line flags override file values. Exit status: 0 success, 1 failed
verification, 2 bad configuration or domain error.
"""

from __future__ import annotations

import configparser
import functools
import math
import sys
from dataclasses import dataclass, fields
from pathlib import Path

import click
import numpy as np

from . import desitter, oscillator, selection, squeeze, states, verification
from ._csvio import fmt, write_rows
from .errors import ConfigError, SqueezedVacuumError
from .modes import init_minimum_uncertainty, integrate_mode

CLOSED_FORM_HEADER = ("t", "omega", "epsilon", "xi_sq", "mu", "nu", "r", "excitation",
                      "min_product", "max_product")
VERIFY_TABLE_HEADER = ("check", "measured", "bound", "margin", "status")


@dataclass
class RunConfig:
    kind: str = "constant"
    omega: float | None = None
    m0: float = 1.0
    profile: str | None = None
    H0: float = 1.0
    msq: float = 2.0
    k: str = "1"
    r: str | None = None
    delta: str | None = None
    epsilon: float | None = None
    t: float | None = None
    t0: float | None = None
    t_end: float | None = None
    samples: int | None = None
    z_start: float = 50.0
    z_end: float | None = None
    functional: str = "max-over-window"
    tol: float = 1e-12
    out: str | None = None
    plot: bool = False

    def floats(self, name: str) -> list[float]:
        raw = getattr(self, name)
        if raw is None:
            return []
        try:
            return [float(x) for x in str(raw).split(",") if x.strip()]
        except ValueError:
            raise ConfigError(f"{name}: expected comma-separated numbers, got {raw!r}") from None

    def single(self, name: str, default: float | None = None) -> float | None:
        vals = self.floats(name)
        if not vals:
            return default
        if len(vals) > 1:
            raise ConfigError(f"{name}: expected a single value, got {len(vals)}")
        return vals[0]


_FIELD_TYPES = {f.name: f.type for f in fields(RunConfig)}


def _coerce(name: str, value):
    kind = _FIELD_TYPES[name]
    try:
        if "bool" in kind:
            return value if isinstance(value, bool) else str(value).strip().lower() in ("1", "true", "yes", "on")
        if "int" in kind:
            return int(value)
        if "float" in kind:
            return float(value)
    except ValueError:
        raise ConfigError(f"{name}: cannot parse {value!r}") from None
    return str(value)


def load_config(path) -> dict:
    """Flatten an INI file into RunConfig keys; section names are organizational."""
    parser = configparser.ConfigParser()
    parser.optionxform = str
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file not found: {path}")
    try:
        parser.read(path)
    except configparser.Error as exc:
        raise ConfigError(f"{path}: {exc}") from None
    values = {}
    for section in parser.sections():
        for key, raw in parser.items(section):
            name = key.replace("-", "_")
            if name in ("r_grid", "delta_grid"):
                name = name[:-5]
            if name not in _FIELD_TYPES:
                raise ConfigError(f"{path}: unknown key {section}.{key}")
            values[name] = _coerce(name, raw)
    return values


def build_config(flags: dict) -> RunConfig:
    values = load_config(flags["config"]) if flags.get("config") else {}
    for name, value in flags.items():
        if name != "config" and value is not None and name in _FIELD_TYPES:
            values[name] = _coerce(name, value)
    if values.get("kind") == "desitter":
        values["kind"] = "desitter-mode"
    cfg = RunConfig(**values)
    if cfg.kind not in ("constant", "tabulated", "desitter-mode"):
        raise ConfigError(f"unknown oscillator kind {cfg.kind!r}")
    if cfg.profile is not None and not Path(cfg.profile).is_file():
        raise ConfigError(f"profile file not found: {cfg.profile}")
    if cfg.kind == "tabulated" and cfg.profile is None:
        raise ConfigError("tabulated oscillator needs a profile path")
    if cfg.functional not in selection.FUNCTIONALS[:2]:
        raise ConfigError(f"functional must be one of {selection.FUNCTIONALS[:2]}")
    return cfg


def _spec(cfg: RunConfig) -> oscillator.OscillatorSpec:
    if cfg.kind == "constant":
        return oscillator.constant(cfg.omega if cfg.omega is not None else 1.0, m0=cfg.m0)
    if cfg.kind == "tabulated":
        return oscillator.load_profile_csv(cfg.profile, m0=cfg.m0)
    return oscillator.desitter_mode(cfg.H0, cfg.msq, cfg.single("k"), m0=1.0)


def _omega(cfg: RunConfig) -> float:
    return cfg.omega if cfg.omega is not None else 1.0


def _out(cfg: RunConfig, default: str) -> Path:
    return Path(cfg.out if cfg.out else default)


def _sibling(path: Path, suffix: str) -> Path:
    return path.with_name(path.stem + suffix + path.suffix)


def common_options(fn):
    opts = [
        click.option("--config", "config", type=click.Path(dir_okay=False), help="INI config file."),
        click.option("--kind", type=click.Choice(["constant", "tabulated", "desitter"])),
        click.option("--omega", type=float),
        click.option("--m0", type=float),
        click.option("--profile", type=str, help="Two-column CSV 't,omega_sq'."),
        click.option("--epsilon", type=float),
        click.option("--r", type=str, help="Squeeze magnitude (comma list for scans)."),
        click.option("--delta", type=str, help="Squeeze phase (comma list for scans)."),
        click.option("--H0", "H0", type=float),
        click.option("--msq", type=float, help="Field mass squared."),
        click.option("--k", type=str, help="Wavenumber (comma list for k-scans)."),
        click.option("--t", type=float),
        click.option("--t0", type=float),
        click.option("--t-end", "t_end", type=float),
        click.option("--samples", type=int),
        click.option("--z-start", "z_start", type=float),
        click.option("--z-end", "z_end", type=float),
        click.option("--functional", type=click.Choice(list(selection.FUNCTIONALS[:2]))),
        click.option("--tol", type=float),
        click.option("--out", type=str, help="Output CSV path ('-' for stdout)."),
        click.option("--plot/--no-plot", default=None, help="Also write a PNG figure."),
    ]
    for opt in reversed(opts):
        fn = opt(fn)

    @functools.wraps(fn)
    def wrapper(**flags):
        try:
            cfg = build_config(flags)
            status = fn(cfg) or 0
        except (SqueezedVacuumError, OSError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
        sys.exit(status)

    return wrapper


@click.group()
def main():
    """Squeezed Gaussian states of time-dependent oscillators."""


@main.command()
@common_options
def evolve(cfg: RunConfig):
    """Integrate a (squeezed) vacuum mode and write trajectory and moment reports."""
    spec = _spec(cfg)
    t0 = cfg.t0 if cfg.t0 is not None else 0.0
    if cfg.t_end is not None:
        t_end = cfg.t_end
    elif spec.kind == "constant" and spec.omega_sq > 0:
        t_end = t0 + 2 * math.pi / math.sqrt(spec.omega_sq)
    else:
        t_end = min(spec.t_max, t0 + 10.0)
    if spec.kind == "tabulated" and cfg.t0 is None:
        t0 = spec.t_min
    grid = np.linspace(t0, t_end, cfg.samples or 1001)
    init = init_minimum_uncertainty(spec, t0)
    params = _squeeze_params(cfg, spec)
    if params is not None:
        init = squeeze.mix_mode(init, params)
    traj = integrate_mode(spec, init, t_end, tol=cfg.tol, output_grid=grid)
    out = _out(cfg, "trajectory.csv")
    traj.to_csv(out)
    reports = _sibling(out, "_reports")
    states.write_report_csv(traj, reports)
    click.echo(f"wrote {out} and {reports}; max Wronskian drift {traj.max_wronskian_drift:.3e}")
    if cfg.plot:
        from .plotting import figure_path, plot_evolution
        xi_sq = 2 * spec.m0 * np.abs(traj.u) ** 2 if spec.constant_mass else None
        fig = plot_evolution(traj.t, states.products(traj), states.energies(traj), xi_sq, figure_path(out))
        click.echo(f"wrote {fig}")


def _squeeze_params(cfg: RunConfig, spec) -> squeeze.SqueezeParams | None:
    r = cfg.single("r")
    if cfg.epsilon is not None:
        if r is not None:
            raise ConfigError("give either epsilon or r, not both")
        if spec.kind != "constant":
            raise ConfigError("epsilon parameterization needs a constant oscillator")
        return squeeze.squeeze_from_energy(cfg.epsilon, math.sqrt(spec.omega_sq))
    if r is None:
        return None
    return squeeze.polar_to_bogoliubov(r, cfg.single("delta", 0.0))


@main.command("closed-form")
@common_options
def closed_form(cfg: RunConfig):
    """Tabulate xi^2, (mu, nu) and uncertainty extrema from the time-independent closed forms."""
    omega = _omega(cfg)
    if cfg.epsilon is None:
        raise ConfigError("closed-form needs --epsilon")
    if cfg.t is not None:
        t = np.array([cfg.t])
    else:
        t0 = cfg.t0 if cfg.t0 is not None else 0.0
        t_end = cfg.t_end if cfg.t_end is not None else t0 + math.pi / omega
        t = np.linspace(t0, t_end, cfg.samples or 101)
    params = squeeze.squeeze_from_energy(cfg.epsilon, omega)
    xi_sq = squeeze.closed_form_xi_sq(cfg.epsilon, omega, t)
    lo, hi = squeeze.uncertainty_extrema(params)
    n = states.excitation_number(params)
    rows = [(float(ti), omega, cfg.epsilon, float(x), params.mu.real, params.nu.real, params.r, n, lo, hi)
            for ti, x in zip(t, xi_sq)]
    out = cfg.out if cfg.out else "-"
    write_rows(out, CLOSED_FORM_HEADER, rows)
    if cfg.plot and out != "-":
        from .plotting import figure_path, plot_closed_form
        plot_closed_form(t, xi_sq, figure_path(out))


@main.command("desitter")
@common_options
def desitter_cmd(cfg: RunConfig):
    """Bunch-Davies k-scan plus analytic-vs-ODE comparison."""
    ks = cfg.floats("k") or [1.0]
    z_end = cfg.z_end if cfg.z_end is not None else 0.5
    if not 0 < z_end < cfg.z_start:
        raise ConfigError("need 0 < z_end < z_start")
    z = np.geomspace(cfg.z_start, z_end, cfg.samples or 200)
    scan_rows, cmp_rows, curves = [], [], []
    worst = 0.0
    for k in ks:
        ds = desitter.DeSitterSpec(cfg.H0, cfg.msq, k)
        ode = desitter.integrate_bunch_davies(ds, cfg.z_start, z, tol=cfg.tol)
        z_ode = ds.z(ode.t)
        exact = desitter.bunch_davies_trajectory(ds, ode.t) if ds.light else None
        src = exact if exact is not None else ode
        prod, eps, res = states.products(src), states.energies(src), src.wronskian_residuals
        for i in range(len(src)):
            scan_rows.append((k, src.t[i], z_ode[i], src.u[i].real, src.u[i].imag, prod[i], eps[i], res[i]))
        if exact is not None:
            dev = np.abs(ode.u - exact.u) / np.abs(exact.u)
            worst = max(worst, float(dev.max()))
            for i in range(len(ode)):
                cmp_rows.append((z_ode[i], ode.t[i], exact.u[i].real, exact.u[i].imag,
                                 ode.u[i].real, ode.u[i].imag, dev[i]))
        curves.append((k, z_ode, states.products(exact) if exact is not None else None, states.products(ode)))
    out = _out(cfg, "kscan.csv")
    write_rows(out, desitter.KSCAN_HEADER, [tuple(map(float, r)) for r in scan_rows])
    msg = f"wrote {out}"
    if cmp_rows:
        cmp_path = _sibling(out, "_comparison")
        write_rows(cmp_path, desitter.COMPARISON_HEADER, [tuple(map(float, r)) for r in cmp_rows],
                   summary=f"max_rel_dev={fmt(worst)}")
        msg += f" and {cmp_path}; max rel. deviation analytic vs ODE {worst:.3e}"
    else:
        msg += "; heavy field (imaginary order): ODE only, no analytic comparison"
    click.echo(msg)
    if cfg.plot:
        from .plotting import figure_path, plot_desitter
        click.echo(f"wrote {plot_desitter(curves, figure_path(out))}")


@main.command("select-vacuum")
@common_options
def select_vacuum(cfg: RunConfig):
    """Scan squeeze parameters and report the minimum-uncertainty member."""
    r_grid = cfg.floats("r") or [0.0, 0.25, 0.5, 1.0]
    delta_grid = cfg.floats("delta") or [0.0]
    if 0.0 not in r_grid:
        raise ConfigError("r grid must contain 0")
    n = cfg.samples or 1601
    if cfg.kind == "desitter-mode":
        ds = desitter.DeSitterSpec(cfg.H0, cfg.msq, cfg.single("k"))
        z_hi = cfg.z_start
        z_lo = cfg.z_end if cfg.z_end is not None else 5.0
        if not 0 < z_lo < z_hi:
            raise ConfigError("need 0 < z_end < z_start")
        t = np.linspace(float(ds.t_of_z(z_hi)), float(ds.t_of_z(z_lo)), n)
        if ds.light:
            base = desitter.bunch_davies_trajectory(ds, t)
        else:
            init = desitter.bd_init_sample(ds, z_hi)
            base = integrate_mode(ds.oscillator(), init, float(t[-1]), tol=cfg.tol,
                                  output_grid=np.clip(t, init.t, t[-1]))
    else:
        spec = _spec(cfg)
        t0 = cfg.t0 if cfg.t0 is not None else (spec.t_min if spec.kind == "tabulated" else 0.0)
        if cfg.t_end is not None:
            t_end = cfg.t_end
        elif spec.kind == "constant":
            t_end = t0 + 2 * math.pi / math.sqrt(spec.omega_sq)
        else:
            t_end = spec.t_max
        t = np.linspace(t0, t_end, n)
        base = integrate_mode(spec, init_minimum_uncertainty(spec, t0), t_end, tol=cfg.tol, output_grid=t)
    report = selection.scan_squeeze_grid(base, r_grid, delta_grid, cfg.functional)
    out = cfg.out if cfg.out else "-"
    report.to_csv(out)
    if out != "-":
        click.echo(report.summary())
    if cfg.plot and out != "-":
        from .plotting import figure_path, plot_selection
        plot_selection(report, figure_path(out))


@main.command()
@common_options
def verify(cfg: RunConfig):
    """Run the invariant suite; exit 1 if any gating check fails."""
    checks = verification.run_all()
    width = max(len(c.name) for c in checks)
    click.echo(f"{'check':<{width}}  {'measured':>12}  {'bound':>10}  status")
    for c in checks:
        status = "PASS" if c.passed else ("FAIL" if c.gating else "info")
        click.echo(f"{c.name:<{width}}  {c.measured:>12.4e}  {c.bound:>10.2e}  {status}")
    if cfg.out:
        write_rows(cfg.out, VERIFY_TABLE_HEADER,
                   [(c.name, float(c.measured), float(c.bound), float(c.margin),
                     "pass" if c.passed else ("fail" if c.gating else "info")) for c in checks])
    failed = [c.name for c in checks if c.gating and not c.passed]
    if failed:
        click.echo(f"FAILED: {', '.join(failed)}", err=True)
        return 1
    click.echo("all gating checks passed")
    return 0


if __name__ == "__main__":
    main()

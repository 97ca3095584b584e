"""Figures written next to the CSV outputs when ``--plot`` is given."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.labelsize": 9,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "figure.figsize": (6.0, 3.8),
    "figure.dpi": 120,
    "axes.grid": True,
    "grid.alpha": 0.3,
}


def figure_path(csv_path, suffix: str = "") -> Path:
    p = Path(csv_path)
    return p.with_name(p.stem + suffix + ".png")


def _save(fig, path) -> Path:
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return Path(path)


def plot_evolution(t, product, epsilon, xi_sq, path) -> Path:
    with plt.rc_context(STYLE):
        fig, axes = plt.subplots(2, 1, sharex=True)
        axes[0].plot(t, product, label=r"$\Delta q\,\Delta p$")
        axes[0].axhline(0.5, color="k", lw=0.6, ls="--")
        axes[0].set_ylabel("uncertainty")
        axes[0].legend(loc="upper right")
        axes[1].plot(t, epsilon, label=r"$\epsilon$")
        if xi_sq is not None:
            axes[1].plot(t, xi_sq, label=r"$\xi^2$")
        axes[1].set_xlabel("t")
        axes[1].legend(loc="upper right")
        return _save(fig, path)


def plot_closed_form(t, xi_sq, path) -> Path:
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        ax.plot(t, xi_sq)
        ax.set_xlabel("t")
        ax.set_ylabel(r"$\xi^2$")
        return _save(fig, path)


def plot_desitter(curves, path) -> Path:
    """``curves``: iterable of (k, z, product_analytic_or_None, product_ode)."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        for k, z, p_exact, p_ode in curves:
            ax.plot(z, np.asarray(p_ode) - 0.5, label=f"ODE, k={k:g}")
            if p_exact is not None:
                ax.plot(z, np.asarray(p_exact) - 0.5, ls=":", color="k", lw=0.8)
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.invert_xaxis()
        ax.set_xlabel("z = (k/H0) exp(-H0 t)")
        ax.set_ylabel(r"$\Delta q\,\Delta p - 1/2$")
        ax.legend(loc="upper left")
        return _save(fig, path)


def plot_selection(report, path) -> Path:
    grid = np.array(report.grid)
    values = np.array(report.values)
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        for d in np.unique(grid[:, 1]):
            sel = grid[:, 1] == d
            ax.plot(grid[sel, 0], values[sel], "o-", ms=3, label=f"delta={d:.3g}")
        ax.plot([report.argmin[0]], [report.argmin_value], "k*", ms=9)
        ax.set_xlabel("r")
        ax.set_ylabel(report.functional)
        ax.legend(loc="upper left")
        return _save(fig, path)

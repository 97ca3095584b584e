import math

import numpy as np
import pytest

from squeezed_vacuum import constant, init_minimum_uncertainty, integrate_mode


@pytest.fixture(scope="session")
def unit_oscillator():
    return constant(1.0)


@pytest.fixture(scope="session")
def vacuum_ode(unit_oscillator):
    """ODE-integrated omega = 1 vacuum over one period, grid containing the quarter points."""
    t = np.linspace(0.0, 2 * math.pi, 1601)
    init = init_minimum_uncertainty(unit_oscillator, 0.0)
    return integrate_mode(unit_oscillator, init, t[-1], tol=1e-12, output_grid=t)


@pytest.fixture(scope="session")
def fine_vacuum_ode(unit_oscillator):
    """h = 1e-3 grid on [0, 10]."""
    t = np.arange(10001) * 1e-3
    init = init_minimum_uncertainty(unit_oscillator, 0.0)
    return integrate_mode(unit_oscillator, init, t[-1], tol=1e-12, output_grid=t)

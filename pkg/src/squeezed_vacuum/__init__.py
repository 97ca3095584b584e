"""Squeezed Gaussian states of time-dependent harmonic oscillators built from
first-order invariants, and vacuum selection by minimum uncertainty."""

from .bessel import BesselJY, HankelValue, bessel_jy, hankel_h2
from .desitter import (
    DeSitterSpec,
    bd_init_sample,
    bunch_davies_mode,
    bunch_davies_trajectory,
    derive_spec,
    integrate_bunch_davies,
    mode_equation_residual,
)
from .errors import *  # noqa: F401,F403
from .modes import (
    ModeSample,
    ModeTrajectory,
    analytic_vacuum_trajectory,
    init_minimum_uncertainty,
    integrate_mode,
    wronskian,
    wronskian_residual,
)
from .oscillator import (
    OscillatorSpec,
    constant,
    custom,
    desitter_mode,
    eval_frequency_sq,
    eval_mass,
    load_profile_csv,
    tabulated,
)
from .selection import InequalityReport, SelectionReport, scan_squeeze_grid, verify_inequalities
from .squeeze import (
    SqueezeParams,
    closed_form_xi_sq,
    ladder_bogoliubov,
    mix_mode,
    mix_trajectory,
    polar_to_bogoliubov,
    squeeze_from_energy,
    uncertainty_extrema,
)
from .states import (
    EnergyReport,
    ErmakovFrame,
    GaussianState,
    LadderCoefficients,
    UncertaintyReport,
    energy_expectation,
    ermakov_frame,
    ermakov_residual,
    excitation_number,
    gaussian_wavefunction,
    ladder_coefficients,
    moments,
    uncertainty_product,
)

__version__ = "0.1.0"

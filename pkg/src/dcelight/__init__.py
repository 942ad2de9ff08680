"""Photon production from a time-dependent refractive index.

A bulk medium whose refractive index changes in time mixes positive- and
negative-frequency field modes, so an initial vacuum ends up populated
with photon pairs. This package evaluates that effect three ways:

* exact mode-mixing coefficients for a smooth tanh-shaped permittivity
  switch, with number spectra and regime classification
  (:mod:`dcelight.bogolubov`, :mod:`dcelight.spectrum`);
* sharp-cutoff photon/energy budgets and static vacuum-energy estimates
  for a bubble of changed index (:mod:`dcelight.spectrum`,
  :mod:`dcelight.casimir_static`), plus the inverse problem of which
  index step reproduces an observed photon count
  (:mod:`dcelight.inverse_solver`);
* per-cycle radiated energy of a pulsating bubble in the adiabatic
  limit (:mod:`dcelight.adiabatic_emitters`) and van der Waals-family
  equation-of-state diagnostics for the driving gas
  (:mod:`dcelight.eos`).

All quantities are SI unless a name says otherwise; frequencies named
``omega`` are angular.
"""

from .adiabatic_emitters import (
    SampledTrajectory,
    SinusoidTrajectory,
    eberlein_energy_by_parts_form,
    eberlein_energy_fifth_derivative_form,
    nth_derivative,
    read_trajectory_csv,
    schutzhold_energy,
)
from .bogolubov import (
    ModeAmplitudes,
    RegimeThresholds,
    alpha_sq_exact,
    beta_sq_adiabatic,
    beta_sq_exact,
    beta_sq_sudden,
    classify_regime,
    log_beta_sq_exact,
    log_sinh,
    mode_amplitudes,
    regime_thresholds,
)
from .casimir_static import (
    StaticBudget,
    general_dispersion_energy,
    schwinger_energy,
    schwinger_number,
    static_budget,
)
from .eos import (
    Berthelot,
    Dieterici,
    ModifiedAdiabatic,
    Moss,
    VanDerWaals,
    divergence_exponent,
    dp_dT,
    dp_drho,
    hard_core_radius,
    pressure,
    rho_max,
    sound_speed,
)
from .errors import (
    DcelightError,
    DegenerateProfileError,
    DifferentiationError,
    DomainError,
    HardCoreViolationError,
    MissingPeriodError,
    NoHardCoreError,
    NoSolutionError,
    QuadratureError,
    ThermodynamicInstabilityError,
    TrajectoryFormatError,
)
from .inverse_solver import (
    BranchApproximations,
    InversionProblem,
    branch_approximations,
    count_from_indices,
    solve_n_in,
    solve_n_out,
)
from .media import (
    MediumPair,
    SharpCutoff,
    TanhProfile,
    derived_t0,
    epsilon_of_pseudo_time,
    physical_time_of_pseudo_time,
)
from .quadrature import QuadResult, adaptive_simpson
from .spectrum import (
    PhotonBudget,
    SpectrumIntegral,
    SpectrumTable,
    integrate_spectrum,
    number_spectrum_exact,
    photon_budget_sharp_cutoff,
    photon_count_sharp_cutoff,
    planck_comparison_spectrum,
    planck_temperature,
    sample_number_spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # media / profiles
    "MediumPair", "TanhProfile", "SharpCutoff",
    "epsilon_of_pseudo_time", "physical_time_of_pseudo_time", "derived_t0",
    # mode mixing
    "ModeAmplitudes", "RegimeThresholds", "log_sinh", "log_beta_sq_exact",
    "beta_sq_exact", "alpha_sq_exact", "beta_sq_sudden", "beta_sq_adiabatic",
    "mode_amplitudes", "regime_thresholds", "classify_regime",
    # spectra and budgets
    "SpectrumTable", "SpectrumIntegral", "PhotonBudget",
    "number_spectrum_exact", "planck_temperature", "planck_comparison_spectrum",
    "photon_count_sharp_cutoff", "photon_budget_sharp_cutoff",
    "integrate_spectrum", "sample_number_spectrum",
    # static estimates
    "StaticBudget", "schwinger_energy", "schwinger_number", "static_budget",
    "general_dispersion_energy",
    # equations of state
    "VanDerWaals", "Dieterici", "Berthelot", "ModifiedAdiabatic", "Moss",
    "rho_max", "pressure", "dp_drho", "dp_dT", "sound_speed",
    "hard_core_radius", "divergence_exponent",
    # pulsating-bubble emitters
    "SinusoidTrajectory", "SampledTrajectory", "read_trajectory_csv",
    "nth_derivative", "eberlein_energy_fifth_derivative_form",
    "eberlein_energy_by_parts_form", "schutzhold_energy",
    # inverse problem
    "InversionProblem", "BranchApproximations", "count_from_indices",
    "solve_n_in", "solve_n_out", "branch_approximations",
    # numerics
    "QuadResult", "adaptive_simpson",
    # errors
    "DcelightError", "DomainError", "DegenerateProfileError", "QuadratureError",
    "HardCoreViolationError", "NoHardCoreError", "ThermodynamicInstabilityError",
    "DifferentiationError", "MissingPeriodError", "TrajectoryFormatError",
    "NoSolutionError",
]

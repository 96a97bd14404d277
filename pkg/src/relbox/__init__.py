"""Relativistic particle in a box: spin-0 (two-component first-order form)
versus spin-1/2 spectra, wavefunctions, charge densities and state counts.

Everything is dimensionless (natural units hbar = c = m = 1); the only free
parameters are the box side lengths in Compton-wavelength units.
"""

from .core import (
    BoxSpec,
    FVSpinor,
    ModeAmplitudes,
    QuantumNumbers,
    charge_conjugate,
    mode_amplitudes,
    nonrel_kinetic_energy,
    scaled_kinetic_energy,
)
from .errors import BracketError, CapacityError, ConvergenceError
from .fields import (
    BoxState,
    FieldSample,
    GridSpec,
    box_state_1d,
    box_state_3d,
    conjugated_state,
    normalization_check,
    stationarity_residual,
)
from .rootfind import (
    DEFAULT_CONFIG,
    RootBranch,
    SolverConfig,
    dirac_wavenumber_1d,
    dirac_wavenumbers_3d,
    kg_wavenumber_1d,
    kg_wavenumbers_3d,
    solve_bracketed,
    tangent_branch,
)
from .spectra import (
    MODELS,
    Level,
    SpectrumRequest,
    count_states,
    dispersion,
    enumerate_levels,
    figure_table,
    level_1d,
    level_3d,
)

__version__ = "0.1.0"

__all__ = [
    "BoxSpec",
    "QuantumNumbers",
    "FVSpinor",
    "ModeAmplitudes",
    "mode_amplitudes",
    "scaled_kinetic_energy",
    "nonrel_kinetic_energy",
    "charge_conjugate",
    "SolverConfig",
    "RootBranch",
    "DEFAULT_CONFIG",
    "solve_bracketed",
    "tangent_branch",
    "kg_wavenumber_1d",
    "dirac_wavenumber_1d",
    "kg_wavenumbers_3d",
    "dirac_wavenumbers_3d",
    "MODELS",
    "Level",
    "SpectrumRequest",
    "dispersion",
    "level_1d",
    "level_3d",
    "enumerate_levels",
    "count_states",
    "figure_table",
    "BoxState",
    "FieldSample",
    "GridSpec",
    "box_state_1d",
    "box_state_3d",
    "conjugated_state",
    "normalization_check",
    "stationarity_residual",
    "BracketError",
    "ConvergenceError",
    "CapacityError",
    "__version__",
]

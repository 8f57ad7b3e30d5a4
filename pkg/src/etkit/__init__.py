"""Variational-style eigenvalue estimates for N-body Hamiltonians.

The package computes approximate spectra of systems of N identical
particles with one-body and pairwise interactions, upgrades them with a
quantum-number weight extracted from a harmonic expansion around the
stationary point, and cross-checks two-body cases against an
independent radial shooting solver.
"""

from .dos import (
    RadialMode,
    compute_phi,
    dos_energy,
    improved_energy,
    improved_energy_at,
    radial_mode,
    slope_b,
)
from .errors import (
    AmbiguousSolution,
    ConvergenceError,
    DegenerateSlope,
    DomainError,
    EtkitError,
    NegativeStiffness,
    NoBoundState,
    NoSolution,
    PhiUndefined,
    ShapeError,
    UnboundRegime,
)
from .et_core import energy, solve_radius
from .model import (
    Bound,
    EtSolution,
    InteractionTriple,
    PhiResult,
    QuantumNumbers,
    SystemSpec,
    global_q,
    nu_lambda,
    q_phi,
    validate_derivatives,
)
from .oracle import radial_eigenvalue
from .specfun import QuarticSign, beta, lambert_w0, quartic_root_g
from .systems import (
    BaryonParams,
    ConfinedParams,
    GaussianParams,
    PowerLaw1Params,
    PowerLaw2Params,
    Table1Result,
    Table1Row,
    baryon_energy,
    baryon_phi,
    baryon_system,
    bsq_ratio_coeffs,
    confined_energy,
    confined_phi,
    confined_system,
    confined_y,
    gaussian_energy,
    gaussian_harmonic_limit,
    gaussian_phi,
    gaussian_system,
    gaussian_y,
    powerlaw1_energy,
    powerlaw1_phi,
    powerlaw1_system,
    powerlaw2_energy,
    powerlaw2_phi,
    powerlaw2_system,
    table1,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousSolution",
    "BaryonParams",
    "Bound",
    "ConfinedParams",
    "ConvergenceError",
    "DegenerateSlope",
    "DomainError",
    "EtSolution",
    "EtkitError",
    "GaussianParams",
    "InteractionTriple",
    "NegativeStiffness",
    "NoBoundState",
    "NoSolution",
    "PhiResult",
    "PhiUndefined",
    "PowerLaw1Params",
    "PowerLaw2Params",
    "QuantumNumbers",
    "QuarticSign",
    "RadialMode",
    "ShapeError",
    "SystemSpec",
    "Table1Result",
    "Table1Row",
    "UnboundRegime",
    "baryon_energy",
    "baryon_phi",
    "baryon_system",
    "beta",
    "bsq_ratio_coeffs",
    "compute_phi",
    "confined_energy",
    "confined_phi",
    "confined_system",
    "confined_y",
    "dos_energy",
    "energy",
    "gaussian_energy",
    "gaussian_harmonic_limit",
    "gaussian_phi",
    "gaussian_system",
    "gaussian_y",
    "global_q",
    "improved_energy",
    "improved_energy_at",
    "lambert_w0",
    "nu_lambda",
    "powerlaw1_energy",
    "powerlaw1_phi",
    "powerlaw1_system",
    "powerlaw2_energy",
    "powerlaw2_phi",
    "powerlaw2_system",
    "q_phi",
    "quartic_root_g",
    "radial_eigenvalue",
    "radial_mode",
    "slope_b",
    "solve_radius",
    "table1",
    "validate_derivatives",
]

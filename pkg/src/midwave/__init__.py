"""Spectral laboratory for the implicit midpoint rule on the semilinear
wave equation and its modified equations."""

from .midpoint import (
    FixedPointConfig,
    NonConvergenceError,
    StepReport,
    midpoint_evolve,
    midpoint_step,
    stability_function,
)
from .potentials import Potential, cosine, make_potential, quartic, zero_potential
from .spectral import Field, Grid, State
from .wave import energy, momentum, rhs, standard_state

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "Field",
    "Grid",
    "State",
    "Potential",
    "zero_potential",
    "quartic",
    "cosine",
    "make_potential",
    "FixedPointConfig",
    "StepReport",
    "NonConvergenceError",
    "stability_function",
    "midpoint_step",
    "midpoint_evolve",
    "rhs",
    "energy",
    "momentum",
    "standard_state",
]

"""The semilinear wave equation u_tt = u_xx + f(u) as a first order system.

With p = u_t the system conserves the energy

    H(p, u) = integral( p^2/2 + (u_x)^2/2 - V(u) )

and, by translation invariance, the momentum J = integral(p * u_x).
"""

from __future__ import annotations

import numpy as np

from .potentials import Potential
from .spectral import Field, Grid, State, dx, dxx, inner, integral

__all__ = ["rhs", "energy", "momentum", "standard_state"]


def rhs(state: State, pot: Potential) -> State:
    """Vector field (u, p) -> (p, u_xx + f(u))."""
    forcing = dxx(state.u) + Field(state.grid, pot.f(state.u.values))
    return State(state.p, forcing)


def energy(state: State, pot: Potential) -> float:
    u, p = state.u, state.p
    ux = dx(u)
    density = 0.5 * p.values**2 + 0.5 * ux.values**2 - pot.v(u.values)
    return integral(Field(state.grid, density))


def momentum(state: State) -> float:
    return inner(state.p, dx(state.u))


def standard_state(grid: Grid) -> State:
    """The fixed smooth test state u = sin(x) + cos(2x)/2, p = 0.

    All long-run experiments start here so results are reproducible.
    """
    u = Field(grid, np.sin(grid.x) + 0.5 * np.cos(2.0 * grid.x))
    p = Field(grid, np.zeros(grid.n))
    return State(u, p)

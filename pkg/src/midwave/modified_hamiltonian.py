"""Hamiltonian-side modified equations of the midpoint rule, at order h^2.

The modified vector field is F + h^2 F2 with

    F2(U) = (1/12) ( p_xx + f'(u) p,
                     (dxx + f'(u)) (u_xx + f(u)) )
          - (1/24) ( 0, f''(u) p^2 ),

a canonical Hamiltonian field for the modified energy below.  Its linear
dispersion omega(k) = |k| |1 - h^2 k^2 / 12| grows cubically in k, which
is what makes this system stiff under explicit integration.
"""

from __future__ import annotations

import numpy as np

from .potentials import Potential
from .spectral import Field, State, dx, dxx, integral
from .wave import energy, rhs

__all__ = ["rhs_correction", "rhs_modified", "modified_energy", "omega"]


def rhs_correction(state: State, pot: Potential) -> State:
    """The O(h^2) correction field F2."""
    grid = state.grid
    u, p = state.u, state.p
    fprime = pot.fp(u.values)

    comp_u = dxx(p) + Field(grid, fprime * p.values)
    w = dxx(u) + Field(grid, pot.f(u.values))
    comp_p = dxx(w) + Field(grid, fprime * w.values)

    correction_u = comp_u / 12.0
    correction_p = comp_p / 12.0 - Field(grid, pot.fpp(u.values) * p.values**2) / 24.0
    return State(correction_u, correction_p)


def rhs_modified(state: State, pot: Potential, h: float) -> State:
    return rhs(state, pot) + (h * h) * rhs_correction(state, pot)


def modified_energy(state: State, pot: Potential, h: float) -> float:
    """H plus the h^2/24 correction; conserved by the modified flow."""
    u, p = state.u, state.p
    w = dxx(u) + Field(state.grid, pot.f(u.values))
    px = dx(p)
    density = pot.fp(u.values) * p.values**2 - px.values**2 - w.values**2
    return energy(state, pot) + (h * h / 24.0) * integral(Field(state.grid, density))


def omega(k, h: float):
    """Dispersion frequency |k| |1 - h^2 k^2 / 12| of the linearized system."""
    k = np.asarray(k, dtype=float)
    out = np.abs(k) * np.abs(1.0 - h * h * k * k / 12.0)
    return out if out.ndim else float(out)

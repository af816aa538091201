"""Consistency maps between midpoint data (u, p) and modified-flow data.

Two ingredients are needed before a second-order-in-time modified system
can be compared against the midpoint iterates:

* the discrete Legendre transform links the scheme momentum p to the
  velocity u-dot of the modified flow,

      p     = u-dot - (h^2/12) (u-dot_xx + f'(u) u-dot)
      u-dot = p     + (h^2/12) (p_xx     + f'(u) p),

  each exact to the order the modified equations are valid;

* the near-identity change of configuration variables

      U_h = U - (h^2/24) U-ddot,

  where U-ddot = (u-ddot, p-ddot) are the second time derivatives along
  the variational modified flow.  U-ddot is obtained as the fixed point

      U-ddot = (1 - (h^2/6) dxx)^{-1} G(U, U-ddot)

  with G assembled from the equations of motion and their time
  derivative.  Inverting the change of variables is another fixed point,
  iterated as an outer loop over U with an inner acceleration solve.

The canonical comparison pipeline is: map midpoint momentum to velocity,
pull the state back with `untransform`, integrate the modified system,
push forward with `transform`, map velocity back to momentum, and only
then measure distances in L2 x L2.  Both round trips collapse to the
identity at h = 0 and differ from it by O(h^4) in general.
"""

from __future__ import annotations

import numpy as np

from .midpoint import FixedPointConfig, NonConvergenceError
from .potentials import Potential
from .spectral import Field, State, dxx, inv_helmholtz, norm_l2, state_norm

__all__ = [
    "velocity_from_momentum",
    "momentum_from_velocity",
    "flow_acceleration",
    "transform",
    "untransform",
]


def velocity_from_momentum(u: Field, p: Field, pot: Potential, h: float) -> Field:
    """u-dot = p + (h^2/12)(p_xx + f'(u) p)."""
    return p + (h * h / 12.0) * (dxx(p) + Field(u.grid, pot.fp(u.values) * p.values))


def momentum_from_velocity(u: Field, udot: Field, pot: Potential, h: float) -> Field:
    """p = u-dot - (h^2/12)(u-dot_xx + f'(u) u-dot)."""
    return udot - (h * h / 12.0) * (
        dxx(udot) + Field(u.grid, pot.fp(u.values) * udot.values)
    )


def flow_acceleration(
    state: State, pot: Potential, h: float, cfg: FixedPointConfig | None = None
) -> tuple[Field, Field]:
    """Second time derivatives (u-ddot, p-ddot) of the variational modified flow."""
    cfg = cfg or FixedPointConfig()
    grid = state.grid
    u, p = state.u.values, state.p.values
    mu = h * h / 6.0
    fprime = pot.fp(u)
    fsecond = pot.fpp(u)

    base_u = dxx(state.u).values + pot.f(u) + (h * h / 12.0) * fsecond * p**2
    base_p = dxx(state.p).values + fprime * p + (h * h / 12.0) * pot.fppp(u) * p**3

    au = np.zeros(grid.n)
    ap = np.zeros(grid.n)
    residual = np.inf
    for _ in range(cfg.max_iter):
        gu = base_u + mu * fprime * au
        gp = base_p + mu * fprime * ap + 2.0 * mu * fsecond * p * au
        au_next = inv_helmholtz(Field(grid, gu), mu).values
        ap_next = inv_helmholtz(Field(grid, gp), mu).values
        # residual of the defining equation at the new iterate equals
        # G(new) - G(old), which only involves the pointwise couplings
        du, dp = au_next - au, ap_next - ap
        residual = np.hypot(
            norm_l2(Field(grid, mu * fprime * du)),
            norm_l2(Field(grid, mu * fprime * dp + 2.0 * mu * fsecond * p * du)),
        )
        au, ap = au_next, ap_next
        if residual <= cfg.tol:
            return Field(grid, au), Field(grid, ap)
    raise NonConvergenceError(
        f"acceleration solve did not converge in {cfg.max_iter} iterations "
        f"(residual {residual:.3e}); reduce the step size",
        float(residual),
    )


def transform(
    state: State, pot: Potential, h: float, cfg: FixedPointConfig | None = None
) -> State:
    """Map modified-flow coordinates U to physical coordinates U_h = U - (h^2/24) U-ddot."""
    acc_u, acc_p = flow_acceleration(state, pot, h, cfg)
    scale = h * h / 24.0
    return State(state.u - scale * acc_u, state.p - scale * acc_p)


def untransform(
    state_h: State, pot: Potential, h: float, cfg: FixedPointConfig | None = None
) -> State:
    """Invert `transform`: find U with U - (h^2/24) U-ddot(U) = U_h."""
    cfg = cfg or FixedPointConfig()
    scale = h * h / 24.0
    current = state_h
    for _ in range(cfg.max_iter):
        acc_u, acc_p = flow_acceleration(current, pot, h, cfg)
        proposed = State(state_h.u + scale * acc_u, state_h.p + scale * acc_p)
        # || proposed - current || is exactly the forward-map residual of current
        residual = state_norm(proposed - current)
        if residual <= cfg.tol:
            return current
        current = proposed
    raise NonConvergenceError(
        f"coordinate-change inversion did not converge in {cfg.max_iter} iterations "
        f"(residual {residual:.3e}); reduce the step size",
        float(residual),
    )

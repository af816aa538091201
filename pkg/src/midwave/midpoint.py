"""Implicit midpoint rule for the first order wave system.

One step solves the half-stage equation

    W = (1 - (h/2) A)^{-1} (U_k + (h/2) B(W)),        A = [[0, 1], [dxx, 0]],
                                                      B(U) = (0, f(u)),

by fixed-point iteration and then advances through

    U_{k+1} = S(hA) U_k + h (1 - (h/2) A)^{-1} B(W),

where S(z) = (1 + z/2)/(1 - z/2) is the stability function.  Both the
half-stage inverse and S(hA) are diagonal 2x2 blocks per wave number and
are applied exactly in Fourier space; only the nonlinear part B is
iterated.  Written this way the right hand side contains only bounded
operators, so the update never loses derivatives and the iteration is a
contraction for moderate step sizes.

The iteration starts from W_0 = (1 - (h/2) A)^{-1} U_k (the B term set to
zero) and stops once the fixed-point residual || W - Phi(W) ||_{L2 x L2}
drops below the configured tolerance.  For the linear equation the first
iterate is already exact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .potentials import Potential
from .spectral import Field, State

__all__ = [
    "FixedPointConfig",
    "StepReport",
    "NonConvergenceError",
    "stability_function",
    "midpoint_step",
    "midpoint_evolve",
]


@dataclass(frozen=True)
class FixedPointConfig:
    """Stopping rule for fixed-point stage solves."""

    tol: float = 1e-12
    max_iter: int = 100

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be at least 1")


@dataclass(frozen=True)
class StepReport:
    iterations: int
    residual: float


class NonConvergenceError(RuntimeError):
    """Fixed-point iteration failed; the step size is too large."""

    def __init__(self, message: str, residual: float, step: int | None = None):
        super().__init__(message)
        self.residual = residual
        self.step = step


def stability_function(z: complex) -> complex:
    """S(z) = (1 + z/2) / (1 - z/2); |S| = 1 on the imaginary axis."""
    if z == 2:
        raise ValueError("stability function has a pole at z = 2")
    return (1.0 + z / 2.0) / (1.0 - z / 2.0)


def midpoint_step(
    state: State, pot: Potential, h: float, cfg: FixedPointConfig | None = None
) -> tuple[State, StepReport]:
    """Advance one step of size h (h < 0 steps backwards in time)."""
    if h == 0:
        raise ValueError("step size must be nonzero")
    cfg = cfg or FixedPointConfig()
    grid = state.grid
    n, dxg, k2 = grid.n, grid.dx, grid.k2
    den = 1.0 + 0.25 * h * h * k2

    su = np.fft.rfft(state.u.values)
    sp = np.fft.rfft(state.p.values)

    def half_inverse(bu, bp):
        # per-mode inverse of (1 - (h/2) A), computed in closed form
        return (bu + 0.5 * h * bp) / den, (bp - 0.5 * h * k2 * bu) / den

    # initial guess: stage with the nonlinear part dropped
    wu_s, wp_s = half_inverse(su, sp)
    wu = np.fft.irfft(wu_s, n=n)
    wp = np.fft.irfft(wp_s, n=n)

    iterations = 0
    residual = np.inf
    for iterations in range(1, cfg.max_iter + 1):
        bp = sp + np.fft.rfft(0.5 * h * pot.f(wu))
        nu_s, np_s = half_inverse(su, bp)
        nu = np.fft.irfft(nu_s, n=n)
        npv = np.fft.irfft(np_s, n=n)
        residual = np.sqrt(dxg * (np.sum((nu - wu) ** 2) + np.sum((npv - wp) ** 2)))
        wu, wp = nu, npv
        if residual <= cfg.tol:
            break
    else:
        raise NonConvergenceError(
            f"midpoint stage did not converge in {cfg.max_iter} iterations "
            f"(residual {residual:.3e}); reduce the step size",
            residual,
        )

    # advance: S(hA) U_k + h (1 - (h/2) A)^{-1} B(W)
    one_minus = 1.0 - 0.25 * h * h * k2
    fu = np.fft.rfft(pot.f(wu))
    out_u = (one_minus * su + h * sp + 0.5 * h * h * fu) / den
    out_p = (-h * k2 * su + one_minus * sp + h * fu) / den
    new = State(
        Field(grid, np.fft.irfft(out_u, n=n)),
        Field(grid, np.fft.irfft(out_p, n=n)),
    )
    return new, StepReport(iterations, float(residual))


def midpoint_evolve(
    state: State,
    pot: Potential,
    h: float,
    n_steps: int,
    cfg: FixedPointConfig | None = None,
    observer=None,
) -> list[State]:
    """Run n_steps midpoint steps and return the trajectory [U_0, ..., U_n].

    observer, when given, is called as observer(step_index, state, report)
    after every step.
    """
    if n_steps < 0:
        raise ValueError("n_steps must be nonnegative")
    trajectory = [state]
    current = state
    for step in range(1, n_steps + 1):
        try:
            current, report = midpoint_step(current, pot, h, cfg)
        except NonConvergenceError as err:
            raise NonConvergenceError(
                f"step {step}: {err}", err.residual, step=step
            ) from err
        trajectory.append(current)
        if observer is not None:
            observer(step, current, report)
    return trajectory

"""Acceptance suite.

One test per acceptance criterion, each printing a PASS line with the
measured quantities (run with -s to see them).  The convergence and
energy runs write their CSV outputs under results/acceptance/ so the
plotting front end can regenerate the figures from real data.
"""

from pathlib import Path

import numpy as np
import pytest

from midwave import modified_hamiltonian as modham
from midwave import modified_variational as modvar
from midwave.allorder import (
    SymbolPoint,
    effective_frequency,
    exact_evolve,
    init_velocity,
    transform_symbol,
    transform_symbol_coeffs,
)
from midwave.experiments import ExperimentSpec, rk4_step, run_convergence, run_energy_drift
from midwave.initialization import momentum_from_velocity, velocity_from_momentum
from midwave.midpoint import FixedPointConfig, midpoint_step
from midwave.potentials import quartic, zero_potential
from midwave.spectral import Field, Grid, State, norm_hs, norm_l2
from midwave.wave import momentum, standard_state

RESULTS = Path(__file__).resolve().parent.parent / "results" / "acceptance"


def report(name, ok, detail):
    print(f"{'PASS' if ok else 'FAIL'}: {name} ({detail})")
    assert ok, f"{name}: {detail}"


def test_criterion_1_fourth_order_gap():
    spec = ExperimentSpec(
        system="midpoint",
        n=128,
        t_final=0.5,
        potential="quartic:-0.1",
        h_list=(0.1, 0.07, 0.05, 0.035, 0.025),
        tol=1e-12,
    )
    result = run_convergence(spec, RESULTS / "converge")
    s_ham = result.slopes["slope_mod_ham"]
    s_var = result.slopes["slope_mod_var"]
    ok = not result.failures and abs(s_ham - 4.0) <= 0.3 and abs(s_var - 4.0) <= 0.3
    report(
        "fourth-order gap between midpoint and both modified systems",
        ok,
        f"slope_mod_ham={s_ham:.3f}, slope_mod_var={s_var:.3f}",
    )


def test_criterion_2_energy_stability_contrast():
    common = dict(n=512, h=0.037, rk4_dt=0.025, potential="quartic:-0.1", tol=1e-12)

    ham = run_energy_drift(
        ExperimentSpec(system="mod-ham", t_final=10.0, expect_blowup=True, **common),
        RESULTS / "energy_modham",
    )
    var = run_energy_drift(
        ExperimentSpec(system="mod-var", t_final=100.0, **common),
        RESULTS / "energy_modvar",
    )
    mid = run_energy_drift(
        ExperimentSpec(system="midpoint", t_final=100.0, **common),
        RESULTS / "energy_midpoint",
    )

    ok_ham = ham.blowup and ham.blowup_time < 10.0
    ok_var = (not var.blowup) and var.stats["emod_drift_rel"] <= 1e-4
    ok_mid = (not mid.blowup) and abs(mid.stats["h_drift_slope"]) <= 1e-6
    report(
        "energy stability contrast at N=512, h=0.037, dt=0.025",
        ok_ham and ok_var and ok_mid,
        f"mod-ham blowup at t={ham.blowup_time}, "
        f"mod-var rel E_mod drift={var.stats['emod_drift_rel']:.3e}, "
        f"midpoint H slope={mid.stats['h_drift_slope']:.3e}",
    )


def test_criterion_3_linear_midpoint_modified_exactness():
    grid = Grid(64)
    h = 0.05
    cfg = FixedPointConfig(tol=1e-13, max_iter=50)
    rng = np.random.default_rng(314)
    half = grid.n // 2 + 1
    kmax = 10

    def coeffs():
        c = np.zeros(half, dtype=complex)
        mags = rng.uniform(0.5, 1.0, size=kmax)
        phases = rng.uniform(0, 2 * np.pi, size=kmax)
        c[1 : kmax + 1] = mags * np.exp(1j * phases)
        return c

    cu, cp = coeffs(), coeffs()
    state = State(Field.from_spectrum(grid, cu), Field.from_spectrum(grid, cp))

    n_steps = 1000
    current = state
    for _ in range(n_steps):
        current, _ = midpoint_step(current, zero_potential(), h, cfg)
    exact = exact_evolve(init_velocity(state, h), n_steps * h, h)

    mid_u = current.u.spectrum()
    exa_u = exact.u.spectrum()
    a = effective_frequency(grid.k, h)
    worst_rel = 0.0
    worst_quiet = 0.0
    for k in range(half):
        err = abs(mid_u[k] - exa_u[k])
        if 1 <= k <= kmax:
            orbit = np.hypot(abs(cu[k]), abs(cp[k]) / a[k] * (a[k] / k))
            worst_rel = max(worst_rel, err / orbit)
        else:
            worst_quiet = max(worst_quiet, err)
    ok = worst_rel <= 1e-9 and worst_quiet <= 1e-12
    report(
        "linear midpoint iterates match the resummed flow per mode",
        ok,
        f"worst relative u error {worst_rel:.3e} over {n_steps} steps, "
        f"unseeded modes stay at {worst_quiet:.1e}",
    )


def test_criterion_4_quadratic_invariant_momentum():
    grid = Grid(64)
    pot = quartic(-0.1)
    tol = 1e-12
    cfg = FixedPointConfig(tol=tol, max_iter=100)
    state = State(
        Field(grid, np.sin(grid.x) + 0.5 * np.cos(2 * grid.x)),
        Field(grid, np.cos(grid.x)),
    )
    j0 = momentum(state)
    worst = 0.0
    for _ in range(1000):
        state, _ = midpoint_step(state, pot, 0.01, cfg)
        worst = max(worst, abs(momentum(state) - j0))
    ok = worst <= 100 * tol
    report(
        "midpoint conserves momentum over 1000 steps",
        ok,
        f"max |J - J0| = {worst:.3e} <= {100 * tol:.0e}",
    )


def test_criterion_5_inertia_solve_bounds():
    grid = Grid(64)
    pot = quartic(-0.1)
    h = 0.05
    cfg = FixedPointConfig(tol=1e-12, max_iter=200)
    rng = np.random.default_rng(2718)
    half = grid.n // 2 + 1

    def random_field(scale):
        c = np.zeros(half, dtype=complex)
        live = np.arange(1, 11)
        c[live] = (rng.normal(size=10) + 1j * rng.normal(size=10)) / live
        f = Field.from_spectrum(grid, c)
        return f * (scale / norm_hs(f, 1.0))

    worst_excess = -np.inf
    for _ in range(100):
        u = random_field(rng.uniform(0.2, 2.0))
        z = random_field(rng.uniform(0.5, 3.0))
        v = modvar.solve_inertia(u, z, pot, h, cfg)
        c = np.abs(pot.fp(u.values)).max() / 6.0
        bound = norm_l2(z) / (1.0 - c * h * h)
        worst_excess = max(worst_excess, norm_l2(v) - bound)
    ok = worst_excess <= 1e-12
    report(
        "inertia solve satisfies the L2 bound on 100 random pairs",
        ok,
        f"worst ||v|| - bound = {worst_excess:.3e}",
    )


def test_criterion_6_frequency_bounds():
    ks = np.arange(0, 1_000_001, dtype=float)
    ok = True
    details = []
    for h in (0.1, 0.037, 0.01):
        max_var = modvar.omega(ks, h).max()
        max_a = effective_frequency(ks, h).max()
        ok = ok and max_var <= np.sqrt(6.0) / h and max_a <= np.pi / h
        details.append(
            f"h={h}: max omega_var={max_var:.2f} <= {np.sqrt(6.0)/h:.2f}, "
            f"max a={max_a:.2f} <= {np.pi/h:.2f}"
        )
    report("frequency bounds sqrt(6)/h and pi/h", ok, "; ".join(details))


def test_criterion_7_symbol_near_identity_and_bounded():
    xs = np.concatenate([np.linspace(0.0, 10.0, 101), np.logspace(1.001, 4, 100)])
    worst_identity = max(abs(transform_symbol(SymbolPoint(0.0, x)) - 1.0) for x in xs)

    coeffs = np.array([transform_symbol_coeffs(x, 2) for x in xs])
    c1, c2 = np.abs(coeffs[:, 1]), np.abs(coeffs[:, 2])
    plateau1, plateau2 = c1[-1], c2[-1]
    ok = (
        worst_identity <= 1e-10
        and c1.max() <= 1.1 * plateau1
        and c2.max() <= 1.1 * plateau2
    )
    report(
        "transform symbol is near-identity with bounded coefficients",
        ok,
        f"max |phi(0,x)-1| = {worst_identity:.2e}, "
        f"max|c1|={c1.max():.4f} vs plateau {plateau1:.4f}, "
        f"max|c2|={c2.max():.4f} vs plateau {plateau2:.4f}",
    )


def test_criterion_8_drift_ratios():
    grid = Grid(32)
    pot = quartic(-0.1)
    h = 0.05
    cfg = FixedPointConfig(tol=1e-13, max_iter=100)
    state0 = standard_state(grid)

    def drift(rhs_fn, energy_fn, dt, t_final=1.0):
        state = state0
        e0 = energy_fn(state)
        worst = 0.0
        for _ in range(round(t_final / dt)):
            state = rk4_step(rhs_fn, state, dt)
            worst = max(worst, abs(energy_fn(state) - e0))
        return worst

    r_ham = drift(
        lambda s: modham.rhs_modified(s, pot, h),
        lambda s: modham.modified_energy(s, pot, h),
        0.02,
    ) / drift(
        lambda s: modham.rhs_modified(s, pot, h),
        lambda s: modham.modified_energy(s, pot, h),
        0.01,
    )
    r_var = drift(
        lambda s: modvar.rhs_modified(s, pot, h, cfg),
        lambda s: modvar.modified_energy(s, pot, h),
        0.02,
    ) / drift(
        lambda s: modvar.rhs_modified(s, pot, h, cfg),
        lambda s: modvar.modified_energy(s, pot, h),
        0.01,
    )

    p0 = Field(grid, np.cos(grid.x))

    def round_trip_defect(hh):
        udot = velocity_from_momentum(state0.u, p0, pot, hh)
        back = momentum_from_velocity(state0.u, udot, pot, hh)
        return norm_l2(back - p0)

    r_init = round_trip_defect(0.2) / round_trip_defect(0.1)

    ok = all(10 <= r <= 24 for r in (r_ham, r_var, r_init))
    report(
        "drift ratios under halving stay fourth order",
        ok,
        f"mod-ham energy {r_ham:.1f}, mod-var energy {r_var:.1f}, "
        f"legendre round trip {r_init:.1f}",
    )

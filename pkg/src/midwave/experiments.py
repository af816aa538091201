"""Experiment harness: RK4 driver, convergence study, energy drift, dispersion.

Every run is deterministic given its spec: randomized initial data comes
from a seeded generator and the seed is echoed into the run metadata.
CSV numbers are serialized with 17 significant digits so files are
bit-for-bit reproducible.

Comparison protocol for the convergence study ("error" below): midpoint
data (u, p) is mapped into modified-flow data, the modified system is
integrated with a highly resolved RK4, the result is mapped back to
midpoint variables, and the discrepancy is measured in L2 x L2.  For the
Hamiltonian modified system the map is the identity (it lives in the
scheme's own variables); the variational system goes through the
velocity and coordinate-change maps.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import modified_hamiltonian as modham
from . import modified_variational as modvar
from .allorder import effective_frequency, exact_evolve, init_velocity, quadratic_energy
from .initialization import (
    momentum_from_velocity,
    transform,
    untransform,
    velocity_from_momentum,
)
from .midpoint import FixedPointConfig, NonConvergenceError, midpoint_step
from .potentials import make_potential, with_dealiasing
from .spectral import Field, Grid, State, state_norm
from .wave import energy, momentum, standard_state

__all__ = [
    "BLOWUP_SUP",
    "RK4_IMAG_STABILITY",
    "ExperimentSpec",
    "TimeSeriesResult",
    "ConvergenceResult",
    "rk4_step",
    "initial_state",
    "run_simulate",
    "run_energy_drift",
    "run_convergence",
    "run_dispersion",
    "write_csv",
    "write_meta",
]

BLOWUP_SUP = 1e6
# RK4 is stable on the imaginary axis up to |dt * omega| = 2 sqrt(2)
RK4_IMAG_STABILITY = 2.0 * np.sqrt(2.0)

SYSTEMS = ("midpoint", "mod-ham", "mod-var", "linear-exact")

TIMESERIES_HEADER = ("t", "H", "J", "E_mod", "iterations", "blowup")
CONVERGENCE_HEADER = ("h", "err_mod_ham", "err_mod_var")
DISPERSION_HEADER = ("k", "k_exact", "omega_ham", "omega_var", "a_k")


@dataclass
class ExperimentSpec:
    """Declarative description of one run."""

    system: str = "midpoint"
    n: int = 128
    h: float = 0.1
    t_final: float = 0.5
    rk4_dt: float | None = None
    potential: object = "quartic:-0.1"
    init: dict = field(default_factory=lambda: {"kind": "standard"})
    tol: float = 1e-12
    max_iter: int = 100
    h_list: tuple[float, ...] | None = None
    seed: int = 0
    dealias: bool = False
    expect_blowup: bool = False

    def __post_init__(self):
        if self.system not in SYSTEMS:
            raise ValueError(f"unknown system {self.system!r}")
        if self.n < 4 or self.n % 2:
            raise ValueError("N must be even and >= 4")
        if not self.t_final > 0:
            raise ValueError("T must be positive")
        if self.rk4_dt is not None and not self.rk4_dt > 0:
            raise ValueError("rk4_dt must be positive")
        if self.h_list is not None and (
            len(self.h_list) == 0 or any(h <= 0 for h in self.h_list)
        ):
            raise ValueError("h_list must contain positive step sizes")

    def grid(self) -> Grid:
        return Grid(self.n)

    def fixed_point(self) -> FixedPointConfig:
        return FixedPointConfig(self.tol, self.max_iter)

    def resolved_potential(self, grid: Grid):
        pot = make_potential(self.potential)
        return with_dealiasing(pot, grid) if self.dealias else pot

    def canonical(self) -> dict:
        pot = make_potential(self.potential)
        out = {
            "schema": 1,
            "system": self.system,
            "N": self.n,
            "h": self.h,
            "T": self.t_final,
            "rk4_dt": self.rk4_dt,
            "potential": pot.name,
            "init": self.init,
            "tol": self.tol,
            "max_iter": self.max_iter,
            "seed": self.seed,
            "dealias": self.dealias,
            "expect_blowup": self.expect_blowup,
        }
        if self.h_list is not None:
            out["h_list"] = list(self.h_list)
        return out


@dataclass
class TimeSeriesResult:
    rows: list
    blowup: bool
    blowup_time: float | None
    stats: dict


@dataclass
class ConvergenceResult:
    rows: list
    slopes: dict
    failures: list


def rk4_step(rhs_fn, state: State, dt: float) -> State:
    """Classical fourth order Runge-Kutta step for a state vector field."""
    k1 = rhs_fn(state)
    k2 = rhs_fn(state + (0.5 * dt) * k1)
    k3 = rhs_fn(state + (0.5 * dt) * k2)
    k4 = rhs_fn(state + dt * k3)
    return state + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def initial_state(spec: ExperimentSpec, grid: Grid) -> State:
    kind = spec.init.get("kind", "standard")
    if kind == "standard":
        return standard_state(grid)
    if kind == "mode":
        k = int(spec.init["k"])
        if not 0 <= k <= grid.n // 2:
            raise ValueError(f"mode number {k} not representable on N={grid.n}")
        amp_u = float(spec.init.get("amp_u", 1.0))
        amp_p = float(spec.init.get("amp_p", 0.0))
        u = Field(grid, amp_u * np.cos(k * grid.x))
        p = Field(grid, amp_p * np.cos(k * grid.x))
        return State(u, p)
    if kind == "random":
        kmax = int(spec.init.get("kmax", grid.n // 3))
        amp = float(spec.init.get("amp", 1.0))
        rng = np.random.default_rng(spec.seed)
        half = grid.n // 2 + 1

        def draw():
            c = np.zeros(half, dtype=complex)
            live = np.arange(1, min(kmax, grid.n // 2 - 1) + 1)
            c[live] = amp * (rng.normal(size=live.size) + 1j * rng.normal(size=live.size)) / live
            return Field.from_spectrum(grid, c)

        return State(draw(), draw())
    raise ValueError(f"unknown init kind {kind!r}")


def _blown_up(state: State) -> bool:
    u, p = state.u.values, state.p.values
    if not (np.isfinite(u).all() and np.isfinite(p).all()):
        return True
    return max(np.abs(u).max(), np.abs(p).max()) > BLOWUP_SUP


def _linear_fit_slope(ts, ys) -> float:
    if len(ts) < 2:
        return 0.0
    return float(np.polyfit(ts, ys, 1)[0])


def _run_time_series(spec: ExperimentSpec) -> TimeSeriesResult:
    grid = spec.grid()
    pot = spec.resolved_potential(grid)
    cfg = spec.fixed_point()
    h = spec.h
    u0 = initial_state(spec, grid)

    rows = []
    blowup = False
    blowup_time = None

    def emod_fn(system):
        if system == "midpoint" or system == "mod-ham":
            return lambda s: modham.modified_energy(s, pot, h)
        if system == "mod-var":
            return lambda s: modvar.modified_energy(s, pot, h)
        return lambda s: quadratic_energy(s, h)

    emod = emod_fn(spec.system)

    def record(t, state, iterations):
        rows.append(
            [t, energy(state, pot), momentum(state), emod(state), iterations, 0]
        )

    if spec.system == "midpoint":
        n_steps = max(1, round(spec.t_final / h))
        record(0.0, u0, 0)
        current = u0
        for step in range(1, n_steps + 1):
            current, report = midpoint_step(current, pot, h, cfg)
            if _blown_up(current):
                blowup = True
                blowup_time = (step - 1) * h
                rows[-1][5] = 1
                break
            record(step * h, current, report.iterations)
    elif spec.system == "linear-exact":
        if make_potential(spec.potential).name != "zero":
            raise ValueError("linear-exact requires the zero potential")
        n_steps = max(1, round(spec.t_final / h))
        v0 = init_velocity(u0, h)
        record(0.0, v0, 0)
        for step in range(1, n_steps + 1):
            record(step * h, exact_evolve(v0, step * h, h), 0)
    else:
        dt = spec.rk4_dt if spec.rk4_dt is not None else h / 50.0
        n_steps = max(1, round(spec.t_final / dt))
        dt = spec.t_final / n_steps
        # iteration column for RK4 systems counts vector-field evaluations
        eval_count = [0]
        if spec.system == "mod-ham":
            current = u0
            base_rhs = lambda s: modham.rhs_modified(s, pot, h)
        else:
            udot0 = velocity_from_momentum(u0.u, u0.p, pot, h)
            current = untransform(State(u0.u, udot0), pot, h, cfg)
            base_rhs = lambda s: modvar.rhs_modified(s, pot, h, cfg)

        def rhs_fn(s):
            eval_count[0] += 1
            return base_rhs(s)

        record(0.0, current, 0)
        with np.errstate(over="ignore", invalid="ignore"):
            for step in range(1, n_steps + 1):
                before = eval_count[0]
                current = rk4_step(rhs_fn, current, dt)
                if _blown_up(current):
                    blowup = True
                    blowup_time = (step - 1) * dt
                    rows[-1][5] = 1
                    break
                record(step * dt, current, eval_count[0] - before)

    ts = [r[0] for r in rows]
    hs = [r[1] for r in rows]
    es = [r[3] for r in rows]
    h0 = hs[0] if hs else 0.0
    stats = {
        "blowup": blowup,
        "blowup_time": blowup_time,
        "h_drift_max": float(max(abs(v - h0) for v in hs)) if hs else None,
        "h_drift_slope": _linear_fit_slope(ts, hs),
        "emod_drift_max": float(max(abs(v - es[0]) for v in es)) if es else None,
        "emod_drift_rel": (
            float(max(abs(v - es[0]) for v in es) / abs(h0)) if es and h0 else None
        ),
    }
    return TimeSeriesResult(rows, blowup, blowup_time, stats)


def run_simulate(spec: ExperimentSpec, out_dir: Path | None = None) -> TimeSeriesResult:
    result = _run_time_series(spec)
    if out_dir is not None:
        _write_run(out_dir, "simulate", spec, result.stats, "simulate.csv", TIMESERIES_HEADER, result.rows)
    return result


def run_energy_drift(spec: ExperimentSpec, out_dir: Path | None = None) -> TimeSeriesResult:
    result = _run_time_series(spec)
    if out_dir is not None:
        _write_run(
            out_dir, "energy-drift", spec, result.stats, "energy_drift.csv", TIMESERIES_HEADER, result.rows
        )
    return result


def _rk4_integrate(rhs_fn, state: State, t_final: float, dt_target: float) -> State:
    n_steps = max(1, round(t_final / dt_target))
    dt = t_final / n_steps
    for _ in range(n_steps):
        state = rk4_step(rhs_fn, state, dt)
    return state


def run_convergence(spec: ExperimentSpec, out_dir: Path | None = None) -> ConvergenceResult:
    if spec.h_list is None:
        raise ValueError("convergence study needs h_list")
    grid = spec.grid()
    pot = spec.resolved_potential(grid)
    use_allorder = spec.system == "linear-exact"
    if use_allorder and make_potential(spec.potential).name != "zero":
        raise ValueError("linear-exact requires the zero potential")

    rows = []
    failures = []
    for h in spec.h_list:
        cfg = spec.fixed_point()
        n_steps = max(1, round(spec.t_final / h))
        t_eff = n_steps * h
        dt = spec.rk4_dt if spec.rk4_dt is not None else h / 50.0
        u0 = initial_state(spec, grid)
        try:
            mid = u0
            for _ in range(n_steps):
                mid, _report = midpoint_step(mid, pot, h, cfg)

            ham = _rk4_integrate(lambda s: modham.rhs_modified(s, pot, h), u0, t_eff, dt)
            err_ham = state_norm(ham - mid)

            if use_allorder:
                back = init_velocity(exact_evolve(init_velocity(u0, h), t_eff, h), h, inverse=True)
                err_var = state_norm(back - mid)
            else:
                udot0 = velocity_from_momentum(u0.u, u0.p, pot, h)
                v_state = untransform(State(u0.u, udot0), pot, h, cfg)
                v_state = _rk4_integrate(
                    lambda s: modvar.rhs_modified(s, pot, h, cfg), v_state, t_eff, dt
                )
                phys = transform(v_state, pot, h, cfg)
                back = State(phys.u, momentum_from_velocity(phys.u, phys.p, pot, h))
                err_var = state_norm(back - mid)

            if not (np.isfinite(err_ham) and np.isfinite(err_var)):
                raise NonConvergenceError("blow-up during convergence run", np.nan)
            rows.append((h, err_ham, err_var))
        except NonConvergenceError as err:
            failures.append({"h": h, "error": str(err)})
            rows.append((h, np.nan, np.nan))

    good = [r for r in rows if np.isfinite(r[1]) and np.isfinite(r[2])]
    slopes = {}
    if len(good) >= 2:
        lh = np.log([r[0] for r in good])
        slopes = {
            "slope_mod_ham": float(np.polyfit(lh, np.log([r[1] for r in good]), 1)[0]),
            "slope_mod_var": float(np.polyfit(lh, np.log([r[2] for r in good]), 1)[0]),
        }

    result = ConvergenceResult(rows, slopes, failures)
    if out_dir is not None:
        extras = {"slopes": slopes, "failures": failures}
        _write_run(out_dir, "converge", spec, extras, "converge.csv", CONVERGENCE_HEADER, rows)
    return result


def run_dispersion(spec: ExperimentSpec, out_dir: Path | None = None) -> list:
    ks = np.arange(spec.n // 2 + 1)
    h = spec.h
    rows = [
        (int(k), float(k), modham.omega(int(k), h), modvar.omega(int(k), h), effective_frequency(int(k), h))
        for k in ks
    ]
    if out_dir is not None:
        extras = {
            "bound_a_k": np.pi / h,
            "bound_omega_var": np.sqrt(6.0) / h,
        }
        _write_run(out_dir, "dispersion", spec, extras, "dispersion.csv", DISPERSION_HEADER, rows)
    return rows


def _fmt(value) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".17g")


def write_csv(path: Path, header, rows) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    path.write_text("\n".join(lines) + "\n")


def write_meta(path: Path, payload: dict) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=2, sort_keys=True, default=_json_default) + "\n")


def _json_default(value):
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    raise TypeError(f"not JSON serializable: {type(value)}")


def _write_run(out_dir, command, spec, extras, csv_name, header, rows) -> None:
    from . import __version__

    out_dir = Path(out_dir)
    write_csv(out_dir / csv_name, header, rows)
    payload = {
        "command": command,
        "config": spec.canonical(),
        "outputs": [csv_name],
        "version": __version__,
    }
    payload.update(extras)
    write_meta(out_dir / "meta.json", payload)

"""JSON config parsing for the command line harness (schema version 1)."""

from __future__ import annotations

import json
from pathlib import Path

from .experiments import SYSTEMS, ExperimentSpec
from .potentials import make_potential

__all__ = ["ConfigError", "spec_from_dict", "load_spec"]

_KNOWN_KEYS = {
    "schema",
    "system",
    "N",
    "h",
    "T",
    "rk4_dt",
    "potential",
    "init",
    "tol",
    "max_iter",
    "h_list",
    "seed",
    "dealias",
    "expect_blowup",
}


class ConfigError(ValueError):
    pass


def spec_from_dict(raw: dict) -> ExperimentSpec:
    if not isinstance(raw, dict):
        raise ConfigError("config must be a JSON object")
    unknown = set(raw) - _KNOWN_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    if raw.get("schema") != 1:
        raise ConfigError("config must declare schema: 1")
    system = raw.get("system", "midpoint")
    if system not in SYSTEMS:
        raise ConfigError(f"system must be one of {SYSTEMS}, got {system!r}")
    try:
        make_potential(raw.get("potential", "quartic:-0.1"))
    except (ValueError, KeyError) as err:
        raise ConfigError(f"bad potential: {err}") from err
    try:
        spec = ExperimentSpec(
            system=system,
            n=int(raw.get("N", 128)),
            h=float(raw.get("h", 0.1)),
            t_final=float(raw.get("T", 0.5)),
            rk4_dt=None if raw.get("rk4_dt") is None else float(raw["rk4_dt"]),
            potential=raw.get("potential", "quartic:-0.1"),
            init=raw.get("init", {"kind": "standard"}),
            tol=float(raw.get("tol", 1e-12)),
            max_iter=int(raw.get("max_iter", 100)),
            h_list=None if raw.get("h_list") is None else tuple(float(h) for h in raw["h_list"]),
            seed=int(raw.get("seed", 0)),
            dealias=bool(raw.get("dealias", False)),
            expect_blowup=bool(raw.get("expect_blowup", False)),
        )
    except (TypeError, ValueError) as err:
        raise ConfigError(str(err)) from err
    if not isinstance(spec.init, dict) or "kind" not in spec.init:
        raise ConfigError("init must be an object with a 'kind' field")
    if spec.tol <= 0 or spec.max_iter < 1:
        raise ConfigError("tol must be positive and max_iter at least 1")
    return spec


def load_spec(path: str | Path) -> ExperimentSpec:
    path = Path(path)
    try:
        raw = json.loads(path.read_text())
    except FileNotFoundError as err:
        raise ConfigError(f"config file not found: {path}") from err
    except json.JSONDecodeError as err:
        raise ConfigError(f"config is not valid JSON: {err}") from err
    return spec_from_dict(raw)

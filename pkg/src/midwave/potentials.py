"""Closed-form potential bundles V, f = V', f', f'', f'''.

The modified systems need the third derivative of f at full precision,
so potentials are analytic evaluator bundles, never finite-differenced.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .spectral import Field, Grid

__all__ = ["Potential", "zero_potential", "quartic", "cosine", "make_potential", "with_dealiasing"]

ArrayFn = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class Potential:
    """Pointwise evaluators for a smooth potential and its derivatives."""

    name: str
    v: ArrayFn
    f: ArrayFn       # V'
    fp: ArrayFn      # V''
    fpp: ArrayFn     # V'''
    fppp: ArrayFn    # V''''


def zero_potential() -> Potential:
    """V = 0, the linear wave equation."""
    z = lambda u: np.zeros_like(u)
    return Potential("zero", z, z, z, z, z)


def quartic(c: float) -> Potential:
    """V(u) = c * u^4."""
    return Potential(
        f"quartic:{c:g}",
        lambda u: c * u**4,
        lambda u: 4.0 * c * u**3,
        lambda u: 12.0 * c * u**2,
        lambda u: 24.0 * c * u,
        lambda u: 24.0 * c * np.ones_like(u),
    )


def cosine() -> Potential:
    """V(u) = cos(u), a smooth sine-Gordon style stress test."""
    return Potential(
        "cosine",
        np.cos,
        lambda u: -np.sin(u),
        lambda u: -np.cos(u),
        np.sin,
        np.cos,
    )


def make_potential(spec) -> Potential:
    """Resolve a potential from a config string or mapping.

    Accepted forms: "zero" | "quartic:c" | "cosine", or a mapping
    {"kind": ..., "c": ...}.
    """
    if isinstance(spec, Potential):
        return spec
    if isinstance(spec, dict):
        kind = spec.get("kind")
        if kind == "quartic":
            return quartic(float(spec["c"]))
        spec = kind
    if spec == "zero":
        return zero_potential()
    if spec == "cosine":
        return cosine()
    if isinstance(spec, str) and spec.startswith("quartic:"):
        return quartic(float(spec.split(":", 1)[1]))
    raise ValueError(f"unknown potential spec: {spec!r}")


def with_dealiasing(pot: Potential, grid: Grid) -> Potential:
    """Wrap the nonlinear term f so its output is 2/3-rule filtered.

    Only f is filtered; the derivative evaluators feed linearized
    operators and stay exact.
    """
    from .spectral import dealias

    def f_filtered(u: np.ndarray) -> np.ndarray:
        return dealias(Field(grid, pot.f(u))).values

    return Potential(pot.name + "+dealias", pot.v, f_filtered, pot.fp, pot.fpp, pot.fppp)

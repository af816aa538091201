"""Periodic Fourier grid, real fields, and diagonal spectral operators.

Conventions fixed once for the whole package:

* The spatial domain is [0, 2*pi); grids are uniform with an even number
  of points N >= 4.  Represented wave numbers are k in {-N/2+1, ..., N/2}.
* Spectra are true Fourier coefficients (the forward transform divides by
  N) stored one-sided for real fields.  Parseval therefore carries an
  explicit 2*pi factor:

      integral(v * v) == 2*pi * sum_k |v_k|^2

  with the sum running over all represented wave numbers.
* The Nyquist mode k = N/2 is zeroed by the first derivative (an odd
  symbol has no consistent sign there).  Even symbols, e.g. the second
  derivative or the inverse Helmholtz operator, treat it as a regular
  mode with k = N/2.

All operations are value-semantic: fields are immutable inputs, results
are fresh fields, and nothing here holds shared mutable state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

__all__ = [
    "Grid",
    "Field",
    "State",
    "dx",
    "dxx",
    "inv_helmholtz",
    "apply_symbol",
    "dealias",
    "integral",
    "inner",
    "norm_l2",
    "norm_hs",
    "norm_h1h",
    "state_norm",
]


class Grid:
    """Uniform periodic grid on [0, 2*pi)."""

    __slots__ = ("n", "dx", "x", "k", "k2", "mode_weights")

    def __init__(self, n: int):
        if n < 4 or n % 2 != 0:
            raise ValueError(f"grid size must be even and >= 4, got {n}")
        self.n = int(n)
        self.dx = 2.0 * np.pi / self.n
        self.x = self.dx * np.arange(self.n)
        self.k = np.arange(self.n // 2 + 1)
        self.k2 = self.k.astype(float) ** 2
        # Parseval weights for the one-sided spectrum: interior modes
        # stand for a conjugate pair, mean and Nyquist appear once.
        w = np.full(self.n // 2 + 1, 2.0)
        w[0] = 1.0
        w[-1] = 1.0
        self.mode_weights = w

    def __eq__(self, other):
        return isinstance(other, Grid) and other.n == self.n

    def __hash__(self):
        return hash(("Grid", self.n))

    def __repr__(self):
        return f"Grid(n={self.n})"


class Field:
    """Real-valued function sampled on a Grid, with a spectral view."""

    __slots__ = ("grid", "values")

    def __init__(self, grid: Grid, values):
        values = np.asarray(values, dtype=float)
        if values.shape != (grid.n,):
            raise ValueError(f"expected {grid.n} samples, got shape {values.shape}")
        self.grid = grid
        self.values = values

    @classmethod
    def from_spectrum(cls, grid: Grid, coeffs) -> "Field":
        """Build a field from one-sided Fourier coefficients v_k, k = 0..N/2."""
        coeffs = np.asarray(coeffs, dtype=complex)
        if coeffs.shape != (grid.n // 2 + 1,):
            raise ValueError("coefficient array has wrong length")
        return cls(grid, np.fft.irfft(coeffs * grid.n, n=grid.n))

    def spectrum(self) -> np.ndarray:
        """One-sided Fourier coefficients v_k for k = 0..N/2."""
        return np.fft.rfft(self.values) / self.grid.n

    def copy(self) -> "Field":
        return Field(self.grid, self.values.copy())

    def _check(self, other: "Field"):
        if self.grid != other.grid:
            raise ValueError("fields live on different grids")

    def __add__(self, other: "Field") -> "Field":
        self._check(other)
        return Field(self.grid, self.values + other.values)

    def __sub__(self, other: "Field") -> "Field":
        self._check(other)
        return Field(self.grid, self.values - other.values)

    def __mul__(self, other):
        if isinstance(other, Field):
            self._check(other)
            return Field(self.grid, self.values * other.values)
        return Field(self.grid, self.values * float(other))

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Field":
        return Field(self.grid, self.values / float(scalar))

    def __neg__(self) -> "Field":
        return Field(self.grid, -self.values)

    def __repr__(self):
        return f"Field(n={self.grid.n})"


@dataclass(frozen=True)
class State:
    """Pair (u, p) of fields on a common grid.

    The meaning of p depends on context: the momentum of the first order
    wave system, or the velocity u-dot of a modified flow.
    """

    u: Field
    p: Field

    def __post_init__(self):
        if self.u.grid != self.p.grid:
            raise ValueError("u and p live on different grids")

    @property
    def grid(self) -> Grid:
        return self.u.grid

    def __add__(self, other: "State") -> "State":
        return State(self.u + other.u, self.p + other.p)

    def __sub__(self, other: "State") -> "State":
        return State(self.u - other.u, self.p - other.p)

    def __mul__(self, scalar) -> "State":
        return State(self.u * scalar, self.p * scalar)

    __rmul__ = __mul__


def _apply_multiplier(v: Field, mult: np.ndarray) -> Field:
    coeffs = np.fft.rfft(v.values) * mult
    return Field(v.grid, np.fft.irfft(coeffs, n=v.grid.n))


def dx(v: Field) -> Field:
    """Spectral first derivative; the Nyquist multiplier is set to zero."""
    g = v.grid
    mult = 1j * g.k.astype(float)
    mult[-1] = 0.0
    return _apply_multiplier(v, mult)


def dxx(v: Field) -> Field:
    """Spectral second derivative, multiplier -k^2 (Nyquist included)."""
    return _apply_multiplier(v, -v.grid.k2)


def inv_helmholtz(v: Field, mu: float) -> Field:
    """Apply (1 - mu * dxx)^{-1}; mu = 0 gives the identity."""
    if mu < 0:
        raise ValueError("mu must be nonnegative")
    return _apply_multiplier(v, 1.0 / (1.0 + mu * v.grid.k2))


def apply_symbol(v: Field, sigma: Callable[[int], float]) -> Field:
    """Apply the Fourier multiplier v_k -> sigma(k) v_k.

    sigma must be even, sigma(-k) == sigma(k), otherwise realness of the
    output would break; a non-even symbol is rejected.
    """
    g = v.grid
    vals = np.array([float(sigma(int(k))) for k in g.k])
    if not np.all(np.isfinite(vals)):
        raise ValueError("symbol is not finite on all represented wave numbers")
    for k in range(1, g.n // 2):
        s_neg = float(sigma(-k))
        if abs(s_neg - vals[k]) > 1e-12 * max(1.0, abs(vals[k])):
            raise ValueError(f"symbol is not even at k={k}: {vals[k]} vs {s_neg}")
    return _apply_multiplier(v, vals)


def dealias(v: Field) -> Field:
    """Zero all modes with |k| > N/3 (the 2/3 rule)."""
    g = v.grid
    mult = np.ones(g.n // 2 + 1)
    mult[g.k > g.n // 3] = 0.0
    return _apply_multiplier(v, mult)


def integral(v: Field) -> float:
    """Integral over [0, 2*pi); the trapezoid rule is spectrally exact here."""
    return float(v.grid.dx * np.sum(v.values))


def inner(v: Field, w: Field) -> float:
    """L2 pairing integral(v * w)."""
    v._check(w)
    return float(v.grid.dx * np.dot(v.values, w.values))


def _weighted_spectral_sum(v: Field, factor: np.ndarray) -> float:
    c = v.spectrum()
    return float(2.0 * np.pi * np.sum(v.grid.mode_weights * factor * np.abs(c) ** 2))


def norm_l2(v: Field) -> float:
    return np.sqrt(_weighted_spectral_sum(v, np.ones_like(v.grid.k2)))


def norm_hs(v: Field, s: float) -> float:
    """Sobolev norm, squared sum of (1 + |k|^(2s)) |v_k|^2 (times 2*pi)."""
    g = v.grid
    return np.sqrt(_weighted_spectral_sum(v, 1.0 + g.k.astype(float) ** (2.0 * s)))


def norm_h1h(v: Field, h: float) -> float:
    """Step-size weighted H1 norm, squared sum of (1 + h^2 k^2 / 6) |v_k|^2."""
    return np.sqrt(_weighted_spectral_sum(v, 1.0 + (h * h / 6.0) * v.grid.k2))


def state_norm(a: State) -> float:
    """L2 x L2 norm of a state."""
    return float(np.hypot(norm_l2(a.u), norm_l2(a.p)))

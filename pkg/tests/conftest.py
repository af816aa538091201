import numpy as np
import pytest

from midwave.spectral import Field, Grid, State


@pytest.fixture
def grid32():
    return Grid(32)


def random_band_limited(grid, kmax, rng, amp=1.0, include_nyquist=False):
    """Random real field with spectral content on 1 <= k <= kmax."""
    half = grid.n // 2 + 1
    top = grid.n // 2 if include_nyquist else grid.n // 2 - 1
    kmax = min(kmax, top)
    c = np.zeros(half, dtype=complex)
    live = np.arange(1, kmax + 1)
    c[live] = amp * (rng.normal(size=live.size) + 1j * rng.normal(size=live.size)) / live
    if include_nyquist and kmax == grid.n // 2:
        c[-1] = c[-1].real
    return Field.from_spectrum(grid, c)


def random_state(grid, kmax, rng, amp=1.0):
    return State(
        random_band_limited(grid, kmax, rng, amp),
        random_band_limited(grid, kmax, rng, amp),
    )


def dense_first_derivative(n):
    """Cardinal-function first derivative matrix for an even periodic grid."""
    h = 2.0 * np.pi / n
    j = np.arange(n)
    diff = j[:, None] - j[None, :]
    out = np.zeros((n, n))
    mask = diff != 0
    out[mask] = 0.5 * (-1.0) ** diff[mask] / np.tan(diff[mask] * h / 2.0)
    return out


def dense_second_derivative(n):
    """Cardinal-function second derivative matrix for an even periodic grid."""
    h = 2.0 * np.pi / n
    j = np.arange(n)
    diff = j[:, None] - j[None, :]
    out = np.zeros((n, n))
    mask = diff != 0
    out[mask] = -((-1.0) ** diff[mask]) / (2.0 * np.sin(diff[mask] * h / 2.0) ** 2)
    np.fill_diagonal(out, -np.pi**2 / (3.0 * h**2) - 1.0 / 6.0)
    return out

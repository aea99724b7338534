"""Parameter sweeps over the three reference configurations.

Each sweep returns a ``CurveTable``: the product family over the ground
population, the Werner family over the mixing weight (with the p = 1/3
entanglement threshold inserted as a marker row), and plain phase scans of
the intensity pattern.  Undefined metrics (zero emission) are NaN rows.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import coherence, farfield
from .errors import ZeroEmissionError
from .qstate import DensityMatrix, product_state, werner_state

DEFAULT_GRID_POINTS = 101
WERNER_THRESHOLD = 1.0 / 3.0


@dataclass(frozen=True)
class CurveTable:
    """Ordered rows of (parameter, named metrics) with a fixed column set."""

    parameter_name: str
    metric_names: tuple[str, ...]
    rows: tuple[tuple[float, dict], ...]

    def __post_init__(self):
        params = [row[0] for row in self.rows]
        if any(b <= a for a, b in zip(params, params[1:])):
            raise ValueError("curve parameters must be strictly increasing")
        for _, metrics in self.rows:
            if tuple(metrics.keys()) != self.metric_names:
                raise ValueError(
                    f"row metrics {tuple(metrics.keys())} do not match "
                    f"{self.metric_names}"
                )

    def parameters(self) -> np.ndarray:
        return np.array([row[0] for row in self.rows])

    def column(self, name: str) -> np.ndarray:
        return np.array([row[1][name] for row in self.rows])


def _checked_grid(grid, default_points: int) -> np.ndarray:
    if grid is None:
        return np.linspace(0.0, 1.0, default_points)
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size < 1:
        raise ValueError("grid must be a non-empty 1-d array")
    if grid.min() < 0.0 or grid.max() > 1.0:
        raise ValueError("grid values must lie in [0, 1]")
    if np.any(np.diff(grid) <= 0.0):
        raise ValueError("grid values must be strictly increasing")
    return grid


def _visibility_or_nan(dm: DensityMatrix) -> float:
    try:
        return farfield.visibility_analytic(dm)
    except ZeroEmissionError:
        return float("nan")


def product_curve(grid=None) -> CurveTable:
    """Sweep the product family over the ground population alpha^2.

    Columns: visibility (NaN on the dark alpha^2 = 1 endpoint), the scalar
    dipole coefficient, concurrence, and quantum discord.
    """
    grid = _checked_grid(grid, DEFAULT_GRID_POINTS)
    rows = []
    for alpha_sq in grid:
        dm = product_state(alpha_sq)
        rows.append(
            (
                float(alpha_sq),
                {
                    "visibility": _visibility_or_nan(dm),
                    "dipole": farfield.dipole_expectation(dm).magnitude,
                    "concurrence": coherence.concurrence(dm).concurrence,
                    "discord": coherence.quantum_discord(dm).discord,
                },
            )
        )
    return CurveTable("alpha2", ("visibility", "dipole", "concurrence", "discord"), tuple(rows))


def werner_curve(grid=None) -> CurveTable:
    """Sweep the Werner family over the mixing weight p.

    The entanglement threshold p = 1/3 is inserted as an extra marker row
    when it is not already a grid point.  Columns: visibility, concurrence,
    optimizer discord, closed-form discord, dipole coefficient.
    """
    grid = _checked_grid(grid, DEFAULT_GRID_POINTS)
    values = list(grid)
    if WERNER_THRESHOLD not in values:
        values.append(WERNER_THRESHOLD)
        values.sort()
    rows = []
    for p in values:
        dm = werner_state(p)
        rows.append(
            (
                float(p),
                {
                    "visibility": farfield.visibility_analytic(dm),
                    "concurrence": coherence.concurrence(dm).concurrence,
                    "discord": coherence.quantum_discord(dm).discord,
                    "discord_closed_form": werner_discord_closed_form(p),
                    "dipole": farfield.dipole_expectation(dm).magnitude,
                },
            )
        )
    return CurveTable(
        "p",
        ("visibility", "concurrence", "discord", "discord_closed_form", "dipole"),
        tuple(rows),
    )


def werner_discord_closed_form(p: float) -> float:
    """Closed-form quantum discord of the Werner state, in bits.

    ``(1-p)/4 log2(1-p) - (1+p)/2 log2(1+p) + (1+3p)/4 log2(1+3p)`` with the
    ``p = 1`` limit of the first term taken as 0.
    """
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p!r}")
    first = 0.0 if p == 1.0 else (1.0 - p) / 4.0 * np.log2(1.0 - p)
    return float(
        first
        - (1.0 + p) / 2.0 * np.log2(1.0 + p)
        + (1.0 + 3.0 * p) / 4.0 * np.log2(1.0 + 3.0 * p)
    )


def intensity_scan(rho: DensityMatrix, delta_min: float, delta_max: float, n: int) -> CurveTable:
    """``n`` uniform samples of the intensity over ``[delta_min, delta_max]``."""
    if n < 2:
        raise ValueError(f"need at least 2 samples, got {n}")
    if not delta_min < delta_max:
        raise ValueError(f"delta_min must be below delta_max, got [{delta_min}, {delta_max}]")
    pattern = farfield.g1_terms(rho)
    rows = tuple(
        (float(d), {"intensity": pattern.intensity(float(d))})
        for d in np.linspace(delta_min, delta_max, n)
    )
    return CurveTable("delta", ("intensity",), rows)

"""Far-field intensity of two radiating atoms and the derived coherence signals.

The detected mean intensity at phase delta = k*d*sin(theta) splits into a
constant term and an interference term read directly off the density matrix:

    G1(delta) = rho_egeg + rho_gege + 2*rho_eeee + 2*Re[rho_geeg * e^{-i delta}]

in units where one fully excited atom contributes 1 at every angle.  The
fringe visibility and the collective dipole expectation come from the same
matrix entries.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import ZeroEmissionError
from .qstate import DensityMatrix

ZERO_EMISSION_TOL = 1e-15
FAR_FIELD_SEPARATION_FACTOR = 10.0


@dataclass(frozen=True)
class DetectorGeometry:
    """Wavelength, atom separation, and observation angle of the detector.

    Lengths share one arbitrary unit; ``angle`` is in radians measured from
    the normal of the atom axis.  The far-field treatment assumes the atoms
    are many wavelengths apart; a separation below 10 wavelengths only warns,
    it is not rejected.
    """

    wavelength: float
    separation: float
    angle: float

    def __post_init__(self):
        if not self.wavelength > 0:
            raise ValueError(f"wavelength must be positive, got {self.wavelength!r}")
        if not self.separation > 0:
            raise ValueError(f"separation must be positive, got {self.separation!r}")
        if not self.in_far_field_regime:
            warnings.warn(
                f"separation {self.separation} is below "
                f"{FAR_FIELD_SEPARATION_FACTOR} wavelengths; the independent-atom "
                "far-field treatment neglects dipole-dipole interaction",
                stacklevel=2,
            )

    @property
    def wavenumber(self) -> float:
        return 2.0 * np.pi / self.wavelength

    @property
    def in_far_field_regime(self) -> bool:
        return self.separation >= FAR_FIELD_SEPARATION_FACTOR * self.wavelength


def optical_phase(geometry: DetectorGeometry) -> float:
    """Relative optical phase delta = k * d * sin(angle) between the two atoms."""
    return geometry.wavenumber * geometry.separation * np.sin(geometry.angle)


@dataclass(frozen=True)
class IntensityPattern:
    """Decomposition ``I(delta) = constant_term + 2 Re[amplitude e^{-i delta}]``."""

    constant_term: float
    interference_amplitude: complex
    samples: tuple[tuple[float, float], ...] | None = None

    def intensity(self, delta):
        """Evaluate the pattern at phase ``delta`` (scalar or array)."""
        value = self.constant_term + 2.0 * np.real(
            self.interference_amplitude * np.exp(-1j * np.asarray(delta))
        )
        return float(value) if np.isscalar(delta) else value

    def sampled(self, deltas) -> "IntensityPattern":
        """Copy of the pattern with ``samples`` filled on the given phases."""
        pts = tuple((float(d), self.intensity(float(d))) for d in np.asarray(deltas))
        return IntensityPattern(self.constant_term, self.interference_amplitude, pts)


@dataclass(frozen=True)
class DipoleExpectation:
    """Coefficients of the single-atom dipole matrix elements d_eg and d_ge.

    The dipole matrix element itself is never assigned a number; the state
    only fixes these two (conjugate) multipliers.
    """

    coeff_eg: complex
    coeff_ge: complex

    @property
    def magnitude(self) -> float:
        """Scalar dipole strength |coeff_eg| reported in curve tables."""
        return abs(self.coeff_eg)


def g1_terms(rho: DensityMatrix) -> IntensityPattern:
    """Constant and interference parts of the intensity pattern of ``rho``."""
    m = rho.matrix
    constant = float(np.real(m[1, 1] + m[2, 2] + 2.0 * m[3, 3]))
    amplitude = complex(m[2, 1])  # <ge| rho |eg>, the inter-atom cross term
    return IntensityPattern(constant, amplitude)


def g1(rho: DensityMatrix, delta):
    """Mean detected intensity at phase ``delta`` (scalar or array)."""
    return g1_terms(rho).intensity(delta)


def visibility_analytic(rho: DensityMatrix) -> float:
    """Fringe visibility ``2 |cross term| / constant term``.

    Raises ``ZeroEmissionError`` when the state does not radiate (for
    instance both atoms in the ground state), where the contrast is 0/0.
    """
    pattern = g1_terms(rho)
    if pattern.constant_term <= ZERO_EMISSION_TOL:
        raise ZeroEmissionError(
            f"emission constant term {pattern.constant_term!r} is zero; "
            "visibility is undefined"
        )
    return 2.0 * abs(pattern.interference_amplitude) / pattern.constant_term


def visibility_numeric(rho: DensityMatrix, n: int = 1024) -> float:
    """Visibility ``(max - min)/(max + min)`` from a brute-force phase scan.

    Scans ``n`` uniform phases on [0, 2pi) plus the two analytic extremum
    phases, so the scan never straddles the true peak.  Serves as an
    independent cross-check of ``visibility_analytic``.
    """
    if n < 16:
        raise ValueError(f"need at least 16 scan points, got {n}")
    pattern = g1_terms(rho)
    if pattern.constant_term <= ZERO_EMISSION_TOL:
        raise ZeroEmissionError(
            f"emission constant term {pattern.constant_term!r} is zero; "
            "visibility is undefined"
        )
    deltas = np.linspace(0.0, 2.0 * np.pi, n, endpoint=False)
    peak = float(np.angle(pattern.interference_amplitude))
    deltas = np.concatenate([deltas, [peak, peak + np.pi]])
    values = pattern.intensity(deltas)
    hi, lo = float(values.max()), float(values.min())
    return (hi - lo) / (hi + lo)


def dipole_expectation(rho: DensityMatrix) -> DipoleExpectation:
    """Collective dipole-moment expectation of the two-atom state.

    A non-zero value signals phase coherence between the ground and excited
    populations of the individual atoms (classical, antenna-like coherence);
    it vanishes for every single-excitation symmetric state.
    """
    m = rho.matrix
    coeff_eg = complex(m[0, 1] + m[2, 3] + m[0, 2] + m[1, 3])
    coeff_ge = complex(m[1, 0] + m[3, 2] + m[2, 0] + m[3, 1])
    return DipoleExpectation(coeff_eg, coeff_ge)

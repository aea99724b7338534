"""Quantum-coherence measures for two-atom states.

Covers von Neumann entropy, mutual information, classical correlations via
rank-1 projective measurements on atom 1, quantum discord, the spin-flip
transform, Wootters concurrence, and entanglement of formation.  All
entropies and correlation measures are in bits (base-2 logarithms).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import NotPositiveSemidefiniteError, OptimizerConvergenceError
from .qstate import DensityMatrix

# Single-atom Pauli matrices in the basis (g, e); the excited state is
# spin-up, so sigma_z = |e><e| - |g><g|.
SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, 1.0j], [-1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[-1.0, 0.0], [0.0, 1.0]], dtype=complex)

IDENTITY_2 = np.eye(2, dtype=complex)

PROBABILITY_FLOOR = 1e-14
# rho * rho_tilde eigenvalues below this are eps-level noise; left alone they
# inflate to ~1e-8 under the square root and spoil rank-deficient states.
CONCURRENCE_EIGENVALUE_FLOOR = 1e-12


def binary_entropy(x: float) -> float:
    """Shannon entropy of a bit with probability ``x``, in bits."""
    x = float(x)
    if x < -1e-12 or x > 1.0 + 1e-12:
        raise ValueError(f"binary_entropy argument must lie in [0, 1], got {x!r}")
    x = min(max(x, 0.0), 1.0)
    if x == 0.0 or x == 1.0:
        return 0.0
    return float(-(x * np.log2(x) + (1.0 - x) * np.log2(1.0 - x)))


def _as_matrix(state) -> np.ndarray:
    return state.matrix if isinstance(state, DensityMatrix) else np.asarray(state, dtype=complex)


def von_neumann_entropy(state) -> float:
    """Entropy ``-sum(w log2 w)`` of a (possibly reduced) state, in bits.

    Accepts a ``DensityMatrix`` or a bare 2x2 / 4x4 Hermitian PSD array.
    Eigenvalues in ``[-1e-10, 0)`` are clamped to zero; anything lower
    raises ``NotPositiveSemidefiniteError``.
    """
    m = _as_matrix(state)
    w, _ = linalg.hermitian_eig(m)
    if w.min() < -linalg.NEGATIVITY_TOL:
        raise NotPositiveSemidefiniteError(w.min(), linalg.NEGATIVITY_TOL)
    w = w[w > 0.0]
    return float(-(w * np.log2(w)).sum()) if w.size else 0.0


def mutual_information(rho: DensityMatrix) -> float:
    """Total correlations ``S(A) + S(B) - S(AB)`` in bits."""
    m = rho.matrix
    s_a = von_neumann_entropy(linalg.partial_trace(m, "A"))
    s_b = von_neumann_entropy(linalg.partial_trace(m, "B"))
    return s_a + s_b - von_neumann_entropy(m)


@dataclass(frozen=True)
class MeasurementDirection:
    """Bloch direction (theta_b, phi_b) of a rank-1 projective measurement.

    The projectors ``E_+/- = (I +/- n.sigma)/2`` act on atom 1; ``theta_b``
    is the polar angle from the excited-state pole.
    """

    theta_b: float
    phi_b: float

    def __post_init__(self):
        if not 0.0 <= self.theta_b <= np.pi:
            raise ValueError(f"theta_b must lie in [0, pi], got {self.theta_b!r}")
        if not 0.0 <= self.phi_b < 2.0 * np.pi:
            raise ValueError(f"phi_b must lie in [0, 2*pi), got {self.phi_b!r}")

    @classmethod
    def canonical(cls, theta: float, phi: float) -> "MeasurementDirection":
        """Wrap arbitrary angles onto theta in [0, pi], phi in [0, 2*pi)."""
        theta = float(theta) % (2.0 * np.pi)
        if theta > np.pi:
            theta = 2.0 * np.pi - theta
            phi = phi + np.pi
        phi = float(phi) % (2.0 * np.pi)
        return cls(theta, phi)

    def bloch_vector(self) -> np.ndarray:
        st = np.sin(self.theta_b)
        return np.array(
            [st * np.cos(self.phi_b), st * np.sin(self.phi_b), np.cos(self.theta_b)]
        )

    def projectors(self) -> tuple[np.ndarray, np.ndarray]:
        """Single-qubit projectors ``(E_+, E_-)`` for the two outcomes."""
        n_sigma = sum(c * s for c, s in zip(self.bloch_vector(), (SIGMA_X, SIGMA_Y, SIGMA_Z)))
        return (IDENTITY_2 + n_sigma) / 2.0, (IDENTITY_2 - n_sigma) / 2.0


def conditional_state(rho: DensityMatrix, direction: MeasurementDirection, outcome):
    """Outcome probability and post-measurement state of atom 2.

    Measures atom 1 along ``direction``; ``outcome`` is ``"+"`` or ``"-"``
    (``+1``/``-1`` also accepted).  Returns ``(p, rho_b)`` where ``rho_b``
    is the normalized 2x2 conditional state, or ``None`` when the outcome
    probability is below 1e-14 (the branch carries no entropy weight).
    """
    plus, minus = direction.projectors()
    if outcome in ("+", +1):
        projector = plus
    elif outcome in ("-", -1):
        projector = minus
    else:
        raise ValueError(f"outcome must be '+' or '-', got {outcome!r}")
    op = linalg.tensor_product(projector, IDENTITY_2)
    sandwich = op @ rho.matrix @ op
    p = float(np.real(np.trace(sandwich)))
    if p < PROBABILITY_FLOOR:
        return p, None
    return p, linalg.partial_trace(sandwich, "B") / p


@dataclass(frozen=True)
class OptimizerConfig:
    """Grid-then-simplex search settings for the measurement optimization."""

    grid_theta: int = 32
    grid_phi: int = 64
    tolerance: float = 1e-10
    max_iterations: int = 500

    def __post_init__(self):
        if self.grid_theta < 2 or self.grid_phi < 2:
            raise ValueError("measurement grid needs at least 2 points per angle")
        if not self.tolerance > 0.0:
            raise ValueError("tolerance must be positive")
        if self.max_iterations < 0:
            raise ValueError("max_iterations must be non-negative")


@dataclass(frozen=True)
class DiscordResult:
    discord: float
    mutual_information: float
    classical_correlations: float
    optimal_direction: MeasurementDirection
    optimizer_iterations: int


def _measured_entropy_terms(t4: np.ndarray, theta: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """``sum_a p_a S(rho_B|a)`` for a batch of measurement directions.

    ``t4`` is the 4x4 state reshaped to (2, 2, 2, 2); the projector spinors
    are the up/down eigenvectors of ``n.sigma`` in the (g, e) basis, and the
    2x2 conditional blocks are diagonalized in closed form.
    """
    half = theta / 2.0
    phase = np.exp(-1j * phi)
    spinor_up = np.stack([np.sin(half), np.cos(half) * phase], axis=-1)
    spinor_down = np.stack([np.cos(half), -np.sin(half) * phase], axis=-1)

    total = np.zeros(theta.shape)
    for spinor in (spinor_up, spinor_down):
        block = np.einsum("nb,abcd,nd->nac", spinor.conj(), t4, spinor)
        p = np.real(block[:, 0, 0] + block[:, 1, 1])
        half_diff = np.real(block[:, 0, 0] - block[:, 1, 1]) / 2.0
        radius = np.sqrt(half_diff**2 + np.abs(block[:, 0, 1]) ** 2)
        ok = p > PROBABILITY_FLOOR
        x = np.clip((p[ok] / 2.0 + radius[ok]) / p[ok], 0.0, 1.0)
        entropy = np.zeros_like(x)
        for branch in (x, 1.0 - x):
            positive = branch > 0.0
            entropy[positive] -= branch[positive] * np.log2(branch[positive])
        total[ok] += p[ok] * entropy
    return total


def _objective_grid(t4, entropy_b, thetas, phis) -> np.ndarray:
    th, ph = np.meshgrid(thetas, phis, indexing="ij")
    values = entropy_b - _measured_entropy_terms(t4, th.ravel(), ph.ravel())
    return values.reshape(len(thetas), len(phis))


def _nelder_mead_max(f, x0, steps, tolerance, max_iterations):
    """Maximize ``f`` over R^2 by simplex descent from ``x0``.

    Converges when the simplex value spread falls below ``tolerance`` (no
    step can then improve by more than that).  Returns
    ``(x_best, f_best, iterations, converged)``.
    """
    x0 = np.asarray(x0, dtype=float)
    simplex = [x0, x0 + np.array([steps[0], 0.0]), x0 + np.array([0.0, steps[1]])]
    values = [f(x) for x in simplex]

    iterations = 0
    while True:
        order = sorted(range(3), key=lambda i: -values[i])
        simplex = [simplex[i] for i in order]
        values = [values[i] for i in order]
        if values[0] - values[2] < tolerance:
            return simplex[0], values[0], iterations, True
        if iterations >= max_iterations:
            return simplex[0], values[0], iterations, False
        iterations += 1

        centroid = (simplex[0] + simplex[1]) / 2.0
        reflected = centroid + (centroid - simplex[2])
        f_reflected = f(reflected)
        if f_reflected > values[0]:
            expanded = centroid + 2.0 * (centroid - simplex[2])
            f_expanded = f(expanded)
            if f_expanded > f_reflected:
                simplex[2], values[2] = expanded, f_expanded
            else:
                simplex[2], values[2] = reflected, f_reflected
        elif f_reflected > values[1]:
            simplex[2], values[2] = reflected, f_reflected
        else:
            if f_reflected > values[2]:
                contracted = centroid + 0.5 * (reflected - centroid)
            else:
                contracted = centroid - 0.5 * (centroid - simplex[2])
            f_contracted = f(contracted)
            if f_contracted > min(f_reflected, values[2]):
                simplex[2], values[2] = contracted, f_contracted
            else:
                for i in (1, 2):
                    simplex[i] = simplex[0] + 0.5 * (simplex[i] - simplex[0])
                    values[i] = f(simplex[i])


def _maximize_classical_correlations(rho: DensityMatrix, config: OptimizerConfig):
    cfg = config if config is not None else OptimizerConfig()
    m = rho.matrix
    t4 = m.reshape(2, 2, 2, 2)
    entropy_b = von_neumann_entropy(linalg.partial_trace(m, "B"))

    thetas = np.linspace(0.0, np.pi, cfg.grid_theta)
    phis = np.linspace(0.0, 2.0 * np.pi, cfg.grid_phi, endpoint=False)
    grid = _objective_grid(t4, entropy_b, thetas, phis)
    # argmax takes the first flat index, which is the lexicographically
    # smallest (theta, phi) among ties.
    i0, j0 = np.unravel_index(int(np.argmax(grid)), grid.shape)
    x0 = (thetas[i0], phis[j0])
    steps = (np.pi / (cfg.grid_theta - 1), 2.0 * np.pi / cfg.grid_phi)

    def objective(x):
        return entropy_b - float(
            _measured_entropy_terms(t4, np.array([x[0]]), np.array([x[1]]))[0]
        )

    x_best, f_best, iterations, converged = _nelder_mead_max(
        objective, x0, steps, cfg.tolerance, cfg.max_iterations
    )
    if not converged:
        raise OptimizerConvergenceError(f_best, x_best, iterations)
    return float(f_best), MeasurementDirection.canonical(x_best[0], x_best[1]), iterations


def classical_correlations(rho: DensityMatrix, config: OptimizerConfig | None = None):
    """Maximum of ``S(B) - sum_a p_a S(rho_B|a)`` over measurement directions.

    Returns ``(J, direction)`` with the maximizing ``MeasurementDirection``.
    The search runs a coarse Bloch-sphere grid followed by simplex
    refinement; see ``OptimizerConfig`` for the knobs.
    """
    j_value, direction, _ = _maximize_classical_correlations(rho, config)
    return j_value, direction


def quantum_discord(rho: DensityMatrix, config: OptimizerConfig | None = None) -> DiscordResult:
    """Quantum discord ``D(B|A) = I(A:B) - J(B|A)``, measuring atom 1."""
    mi = mutual_information(rho)
    j_value, direction, iterations = _maximize_classical_correlations(rho, config)
    return DiscordResult(
        discord=mi - j_value,
        mutual_information=mi,
        classical_correlations=j_value,
        optimal_direction=direction,
        optimizer_iterations=iterations,
    )


_SPIN_FLIP_4 = linalg.tensor_product(SIGMA_Y, SIGMA_Y)


def spin_flip(rho: DensityMatrix) -> np.ndarray:
    """Wootters spin-flipped state ``(sy (x) sy) rho* (sy (x) sy)``."""
    return _SPIN_FLIP_4 @ rho.matrix.conj() @ _SPIN_FLIP_4


@dataclass(frozen=True)
class ConcurrenceResult:
    concurrence: float
    sqrt_eigenvalues: tuple[float, float, float, float]
    eof: float


def concurrence(rho: DensityMatrix) -> ConcurrenceResult:
    """Wootters concurrence and entanglement of formation of ``rho``.

    The square roots of the eigenvalues of ``rho rho_tilde`` are obtained
    through the Hermitian-equivalent form ``sqrt(rho) rho_tilde sqrt(rho)``,
    which keeps them real and non-negative by construction.
    """
    root = linalg.matrix_sqrt_psd(rho.matrix)
    core = root @ spin_flip(rho) @ root
    core = (core + core.conj().T) / 2.0
    w, _ = linalg.hermitian_eig(core)
    w = np.where(w < CONCURRENCE_EIGENVALUE_FLOOR, 0.0, w)
    roots = np.sqrt(w)  # already in decreasing order
    c = max(0.0, float(roots[0] - roots[1] - roots[2] - roots[3]))
    eof = binary_entropy((1.0 + np.sqrt(max(0.0, 1.0 - c * c))) / 2.0)
    return ConcurrenceResult(c, tuple(float(r) for r in roots), eof)

"""Two-atom density matrices: validation, the standard states, JSON round trip.

States live in the basis (gg, eg, ge, ee) where the first letter is atom 1.
Constructors return validated, immutable ``DensityMatrix`` values.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import DimensionError, StateFormatError, StateValidationError

BASIS_LABELS = ("gg", "eg", "ge", "ee")

TRACE_TOL = 1e-12
HERMITICITY_TOL = linalg.HERMITICITY_TOL
NEGATIVITY_TOL = linalg.NEGATIVITY_TOL


@dataclass(frozen=True)
class DensityMatrix:
    """A validated two-atom state: Hermitian, unit trace, PSD, 4x4."""

    matrix: np.ndarray
    labels: tuple[str, ...] = field(default=BASIS_LABELS, repr=False)

    def __post_init__(self):
        self.matrix.flags.writeable = False

    def entry(self, row: str, col: str) -> complex:
        """Matrix element ``<row| rho |col>`` by basis label."""
        return complex(self.matrix[BASIS_LABELS.index(row), BASIS_LABELS.index(col)])

    def purity(self) -> float:
        """``Tr(rho^2)``; 1 for pure states, below 1 for mixtures."""
        return float(np.real(np.trace(self.matrix @ self.matrix)))


def validate(rho: np.ndarray) -> DensityMatrix:
    """Check a candidate 4x4 matrix against all density-matrix invariants.

    Every violated invariant is reported at once; the raised
    ``StateValidationError`` carries ``(name, magnitude)`` pairs for trace
    deviation, hermiticity defect, negativity, and non-finite entries.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise DimensionError(f"density matrix must be 4x4, got shape {rho.shape}")

    defects = []
    if not np.all(np.isfinite(rho)):
        defects.append(("non-finite entries", float("inf")))
        raise StateValidationError(defects)

    trace_dev = abs(np.trace(rho) - 1.0)
    if trace_dev > TRACE_TOL:
        defects.append(("trace deviation", trace_dev))

    herm_defect = linalg.hermiticity_defect(rho)
    if herm_defect > HERMITICITY_TOL:
        defects.append(("hermiticity violation", herm_defect))

    # Probe negativity on the Hermitian part so the check still reports a
    # magnitude when the hermiticity check has already failed.
    w, _ = linalg.hermitian_eig((rho + rho.conj().T) / 2.0)
    if w.min() < -NEGATIVITY_TOL:
        defects.append(("negativity", float(-w.min())))

    if defects:
        raise StateValidationError(defects)
    return DensityMatrix(rho.copy())


def _pure(amplitudes) -> DensityMatrix:
    v = np.asarray(amplitudes, dtype=complex)
    return validate(np.outer(v, v.conj()))


def dicke_state() -> DensityMatrix:
    """Symmetric single-excitation state (|eg> + |ge>)/sqrt(2) as a projector."""
    return _pure([0.0, 1.0 / np.sqrt(2.0), 1.0 / np.sqrt(2.0), 0.0])


def product_state(alpha_sq: float) -> DensityMatrix:
    """Both atoms in the same superposition sqrt(a2)|g> + sqrt(1-a2)|e>.

    ``alpha_sq`` is the ground-state population of each atom; amplitudes are
    taken real and non-negative.
    """
    alpha_sq = float(alpha_sq)
    if not 0.0 <= alpha_sq <= 1.0:
        raise ValueError(f"alpha_sq must lie in [0, 1], got {alpha_sq!r}")
    alpha = np.sqrt(alpha_sq)
    beta = np.sqrt(1.0 - alpha_sq)
    return _pure([alpha * alpha, alpha * beta, alpha * beta, beta * beta])


def werner_state(p: float) -> DensityMatrix:
    """Mixture ``(1-p)/4 * I + p * |Dicke><Dicke|`` for weight ``p`` in [0, 1]."""
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p!r}")
    rho = np.diag([(1 - p) / 4, (1 + p) / 4, (1 + p) / 4, (1 - p) / 4]).astype(complex)
    rho[1, 2] = p / 2
    rho[2, 1] = p / 2
    return validate(rho)


_SWAP = np.eye(4)[[0, 2, 1, 3]]  # exchanges the eg and ge basis axes


def swap_atoms(dm: DensityMatrix) -> DensityMatrix:
    """Relabel atom 1 <-> atom 2.

    Feeding the swapped state to the discord computation measures the other
    subsystem, i.e. gives D(A|B) instead of D(B|A).  All built-in families
    are swap-symmetric, so both agree for them.
    """
    return DensityMatrix(_SWAP @ dm.matrix @ _SWAP)


# --- JSON density-matrix format (shared with the CLI) ----------------------
#
# {"dim": 4, "basis": ["gg","eg","ge","ee"], "entries": [[[re, im], x4] x4]}


def state_to_dict(dm: DensityMatrix) -> dict:
    """Serialize to the JSON density-matrix schema (64-bit floats)."""
    entries = [
        [[float(z.real), float(z.imag)] for z in row] for row in dm.matrix
    ]
    return {"dim": 4, "basis": list(BASIS_LABELS), "entries": entries}


def state_from_dict(obj) -> DensityMatrix:
    """Parse and validate the JSON density-matrix schema.

    Schema problems raise ``StateFormatError``; a well-formed document whose
    matrix violates the physics invariants raises ``StateValidationError``.
    """
    if not isinstance(obj, dict):
        raise StateFormatError("state document must be a JSON object")
    if obj.get("dim") != 4:
        raise StateFormatError(f"expected \"dim\": 4, got {obj.get('dim')!r}")
    if list(obj.get("basis", [])) != list(BASIS_LABELS):
        raise StateFormatError(
            f"expected \"basis\": {list(BASIS_LABELS)}, got {obj.get('basis')!r}"
        )
    entries = obj.get("entries")
    try:
        arr = np.asarray(entries, dtype=float)
    except (TypeError, ValueError) as exc:
        raise StateFormatError(f"entries are not numeric: {exc}") from None
    if arr.shape != (4, 4, 2):
        raise StateFormatError(
            f"entries must be a 4x4 array of [re, im] pairs, got shape {arr.shape}"
        )
    return validate(arr[..., 0] + 1j * arr[..., 1])


def load_state(path) -> DensityMatrix:
    """Read a density matrix from a JSON file (see ``state_to_dict``)."""
    import json

    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise StateFormatError(f"not valid JSON: {exc}") from None
    return state_from_dict(obj)


def save_state(dm: DensityMatrix, path) -> None:
    """Write a density matrix to a JSON file (see ``state_to_dict``)."""
    import json

    with open(path, "w", encoding="utf-8") as fh:
        json.dump(state_to_dict(dm), fh, indent=2)
        fh.write("\n")

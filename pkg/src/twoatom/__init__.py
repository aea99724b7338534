"""Exact desk-scale toolkit for two radiating two-level atoms.

Computes the far-field intensity pattern and its visibility, the collective
dipole moment (classical coherence), and quantum-coherence measures
(discord, concurrence, entanglement of formation) for arbitrary two-atom
density matrices, with the symmetric single-excitation state, identical
superposition product states, and Werner mixtures built in.
"""

__version__ = "0.1.0"

from .coherence import (
    ConcurrenceResult,
    DiscordResult,
    MeasurementDirection,
    OptimizerConfig,
    binary_entropy,
    classical_correlations,
    concurrence,
    conditional_state,
    mutual_information,
    quantum_discord,
    spin_flip,
    von_neumann_entropy,
)
from .errors import (
    DimensionError,
    EigenConvergenceError,
    HermiticityError,
    NotPositiveSemidefiniteError,
    OptimizerConvergenceError,
    StateFormatError,
    StateValidationError,
    TwoAtomError,
    ZeroEmissionError,
)
from .farfield import (
    DetectorGeometry,
    DipoleExpectation,
    IntensityPattern,
    dipole_expectation,
    g1,
    g1_terms,
    optical_phase,
    visibility_analytic,
    visibility_numeric,
)
from .linalg import (
    EigenDecomposition,
    hermitian_eig,
    matrix_sqrt_psd,
    partial_trace,
    tensor_product,
)
from .qstate import (
    BASIS_LABELS,
    DensityMatrix,
    dicke_state,
    load_state,
    product_state,
    save_state,
    state_from_dict,
    state_to_dict,
    swap_atoms,
    validate,
    werner_state,
)
from .scenarios import (
    CurveTable,
    intensity_scan,
    product_curve,
    werner_curve,
    werner_discord_closed_form,
)

__all__ = [
    "__version__",
    "BASIS_LABELS",
    "ConcurrenceResult",
    "CurveTable",
    "DensityMatrix",
    "DetectorGeometry",
    "DimensionError",
    "DipoleExpectation",
    "DiscordResult",
    "EigenConvergenceError",
    "EigenDecomposition",
    "HermiticityError",
    "IntensityPattern",
    "MeasurementDirection",
    "NotPositiveSemidefiniteError",
    "OptimizerConfig",
    "OptimizerConvergenceError",
    "StateFormatError",
    "StateValidationError",
    "TwoAtomError",
    "ZeroEmissionError",
    "binary_entropy",
    "classical_correlations",
    "concurrence",
    "conditional_state",
    "dicke_state",
    "dipole_expectation",
    "g1",
    "g1_terms",
    "hermitian_eig",
    "intensity_scan",
    "load_state",
    "matrix_sqrt_psd",
    "mutual_information",
    "optical_phase",
    "partial_trace",
    "product_curve",
    "product_state",
    "quantum_discord",
    "save_state",
    "spin_flip",
    "state_from_dict",
    "state_to_dict",
    "swap_atoms",
    "tensor_product",
    "validate",
    "visibility_analytic",
    "visibility_numeric",
    "von_neumann_entropy",
    "werner_curve",
    "werner_discord_closed_form",
    "werner_state",
]

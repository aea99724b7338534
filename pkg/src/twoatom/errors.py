"""Exception types shared across the package."""

from __future__ import annotations


class TwoAtomError(Exception):
    """Base class for validation and numerical errors raised by this package."""


class DimensionError(TwoAtomError):
    """Matrix argument has the wrong shape for the requested operation."""


class HermiticityError(TwoAtomError):
    """Matrix is not Hermitian within tolerance."""

    def __init__(self, defect: float, tolerance: float):
        self.defect = float(defect)
        self.tolerance = float(tolerance)
        super().__init__(
            f"matrix is not Hermitian: max |M - M^dag| = {self.defect:.3e} "
            f"exceeds {self.tolerance:.1e}"
        )


class NotPositiveSemidefiniteError(TwoAtomError):
    """Matrix has an eigenvalue below the negativity tolerance."""

    def __init__(self, min_eigenvalue: float, tolerance: float):
        self.min_eigenvalue = float(min_eigenvalue)
        self.tolerance = float(tolerance)
        super().__init__(
            f"matrix is not positive semidefinite: min eigenvalue "
            f"{self.min_eigenvalue:.3e} is below -{self.tolerance:.1e}"
        )


class EigenConvergenceError(TwoAtomError):
    """Jacobi sweeps hit the hard cap before reaching the off-diagonal threshold."""


class StateValidationError(TwoAtomError):
    """A candidate density matrix violates one or more state invariants.

    Carries every violation at once as ``defects``, a tuple of
    ``(name, magnitude)`` pairs.
    """

    def __init__(self, defects):
        self.defects = tuple((str(name), float(mag)) for name, mag in defects)
        lines = ", ".join(f"{name} (defect {mag:.3e})" for name, mag in self.defects)
        super().__init__(f"invalid density matrix: {lines}")


class StateFormatError(TwoAtomError):
    """A serialized density matrix does not match the expected JSON schema."""


class ZeroEmissionError(TwoAtomError):
    """The state emits no photons, so the visibility is undefined (0/0)."""


class OptimizerConvergenceError(TwoAtomError):
    """Measurement optimization hit the iteration cap; carries the best value found."""

    def __init__(self, best_value: float, best_angles, iterations: int):
        self.best_value = float(best_value)
        self.best_angles = tuple(float(a) for a in best_angles)
        self.iterations = int(iterations)
        super().__init__(
            f"measurement optimizer did not converge within {self.iterations} "
            f"iterations; best value so far {self.best_value!r}"
        )

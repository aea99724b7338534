"""Dense complex linear algebra for 2x2 and 4x4 operators.

Everything here is exact desk-scale numerics: a cyclic Jacobi eigensolver
for Hermitian matrices, the PSD matrix square root built on it, the
Kronecker product in the two-atom basis, and the partial trace.  All
functions are pure and never mutate their arguments.

The two-atom basis order is (gg, eg, ge, ee) throughout the package, with
atom 1 the left tensor factor: index = [atom1 excited] + 2*[atom2 excited].
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import (
    DimensionError,
    EigenConvergenceError,
    HermiticityError,
    NotPositiveSemidefiniteError,
)

HERMITICITY_TOL = 1e-10
NEGATIVITY_TOL = 1e-10
JACOBI_OFFDIAG_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100


class EigenDecomposition(NamedTuple):
    """Eigenvalues in decreasing order and the matching orthonormal columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def hermiticity_defect(m: np.ndarray) -> float:
    """Largest entry-wise deviation of ``m`` from its conjugate transpose."""
    return float(np.max(np.abs(m - m.conj().T)))


def _require_square(m: np.ndarray, dims=(2, 4)) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] not in dims:
        raise DimensionError(
            f"expected a square matrix with dimension in {dims}, got shape {m.shape}"
        )
    return m


def tensor_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Tensor product of a 2x2 operator on atom 1 with one on atom 2.

    Parameters
    ----------
    a : np.ndarray
        2x2 operator acting on atom 1 (the left tensor factor).
    b : np.ndarray
        2x2 operator acting on atom 2.

    Returns
    -------
    np.ndarray
        4x4 matrix of ``a (x) b`` in the basis (gg, eg, ge, ee).
    """
    a = _require_square(a, dims=(2,))
    b = _require_square(b, dims=(2,))
    # Basis order (gg, eg, ge, ee) makes atom 2 the kron-major factor:
    # index = [atom1 excited] + 2*[atom2 excited].
    return np.kron(b, a)


def hermitian_eig(m: np.ndarray) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix via cyclic Jacobi rotations.

    Parameters
    ----------
    m : np.ndarray
        Hermitian matrix (2x2 or 4x4), checked to ``max |M - M^dag| <= 1e-10``.

    Returns
    -------
    EigenDecomposition
        Real eigenvalues sorted in decreasing order and unitary eigenvector
        columns in the matching order, so ``M = V diag(w) V^dag``.

    Raises
    ------
    HermiticityError
        If the input is not Hermitian within tolerance.
    EigenConvergenceError
        If the off-diagonal norm fails to fall below 1e-14 in 100 sweeps
        (does not happen for well-formed inputs of this size).
    """
    m = _require_square(m)
    defect = hermiticity_defect(m)
    if defect > HERMITICITY_TOL:
        raise HermiticityError(defect, HERMITICITY_TOL)

    n = m.shape[0]
    a = (m + m.conj().T) / 2.0
    v = np.eye(n, dtype=complex)

    for _ in range(JACOBI_MAX_SWEEPS):
        off = np.abs(a - np.diag(np.diag(a))).max()
        if off <= JACOBI_OFFDIAG_TOL:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                a = _jacobi_rotation(a, v, p, q)
    else:
        raise EigenConvergenceError(
            f"off-diagonal norm {off:.3e} after {JACOBI_MAX_SWEEPS} sweeps"
        )

    eigenvalues = np.real(np.diag(a))
    order = np.argsort(-eigenvalues, kind="stable")
    return EigenDecomposition(eigenvalues[order], v[:, order])


def _jacobi_rotation(a: np.ndarray, v: np.ndarray, p: int, q: int) -> np.ndarray:
    """Annihilate a[p, q] with a unitary plane rotation; updates v in place."""
    apq = a[p, q]
    r = abs(apq)
    if r <= JACOBI_OFFDIAG_TOL / 10.0:
        return a
    phase = apq / r
    # Real rotation angle from the 2x2 Hermitian block once the phase of
    # a[p, q] is absorbed: t solves t^2 - 2*tau*t - 1 = 0 (smaller root).
    tau = (np.real(a[q, q]) - np.real(a[p, p])) / (2.0 * r)
    if tau >= 0.0:
        t = -1.0 / (tau + np.sqrt(1.0 + tau * tau))
    else:
        t = 1.0 / (np.sqrt(1.0 + tau * tau) - tau)
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = t * c

    u = np.eye(a.shape[0], dtype=complex)
    u[p, p] = c
    u[p, q] = -s * phase
    u[q, p] = s * np.conj(phase)
    u[q, q] = c

    a = u.conj().T @ a @ u
    a[p, q] = 0.0
    a[q, p] = 0.0
    v[...] = v @ u
    return a


def matrix_sqrt_psd(m: np.ndarray) -> np.ndarray:
    """Hermitian PSD square root ``R`` with ``R @ R ~= m``.

    Eigenvalues in ``[-1e-10, 0)`` are treated as rounding noise and clamped
    to zero; anything below ``-1e-10`` raises ``NotPositiveSemidefiniteError``.
    """
    w, vecs = hermitian_eig(m)
    if w.min() < -NEGATIVITY_TOL:
        raise NotPositiveSemidefiniteError(w.min(), NEGATIVITY_TOL)
    w = np.clip(w, 0.0, None)
    root = (vecs * np.sqrt(w)) @ vecs.conj().T
    return (root + root.conj().T) / 2.0


def partial_trace(rho: np.ndarray, keep: str) -> np.ndarray:
    """Trace out one atom of a two-atom operator.

    Parameters
    ----------
    rho : np.ndarray
        4x4 matrix in the basis (gg, eg, ge, ee).
    keep : str
        ``"A"`` keeps atom 1, ``"B"`` keeps atom 2.

    Returns
    -------
    np.ndarray
        The 2x2 reduced matrix in the basis (g, e).
    """
    rho = _require_square(rho, dims=(4,))
    if keep not in ("A", "B"):
        raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")
    # Row index = atom1 + 2*atom2, so reshape axes are (atom2, atom1) x 2.
    t = rho.reshape(2, 2, 2, 2)
    if keep == "A":
        return np.einsum("abad->bd", t)
    return np.einsum("abcb->ac", t)

"""Shared test helpers and independent oracles.

The oracles reimplement every checked quantity from first principles with
plain numpy (explicit basis bookkeeping, np.linalg eigensolvers) so they
share no code path with the package internals they verify.
"""

from __future__ import annotations

import numpy as np

# Excitations (atom1, atom2) for the basis order (gg, eg, ge, ee).
BASIS_EXCITATIONS = [(0, 0), (1, 0), (0, 1), (1, 1)]


# --- random state factories -------------------------------------------------


def random_density_matrix(rng, rank: int = 4) -> np.ndarray:
    """Random valid state from a complex Ginibre factor of the given rank."""
    x = rng.normal(size=(4, rank)) + 1j * rng.normal(size=(4, rank))
    m = x @ x.conj().T
    return m / np.real(np.trace(m))


def random_pure_density(rng) -> np.ndarray:
    return random_density_matrix(rng, rank=1)


def random_unitary2(rng) -> np.ndarray:
    """Haar-ish random 2x2 unitary via QR of a Ginibre matrix."""
    x = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(x)
    return q * (np.diag(r) / np.abs(np.diag(r)))


# --- far-field oracle ---------------------------------------------------------


def oracle_lowering(atom: int) -> np.ndarray:
    """|g><e| on one atom, built by explicit basis bookkeeping."""
    m = np.zeros((4, 4), dtype=complex)
    for col, exc in enumerate(BASIS_EXCITATIONS):
        if exc[atom]:
            lowered = list(exc)
            lowered[atom] = 0
            m[BASIS_EXCITATIONS.index(tuple(lowered)), col] = 1.0
    return m


def oracle_g1(rho: np.ndarray, delta: float, phase_offset: int = 0) -> float:
    """<E- E+> from the explicit field operator sum_l e^{-i l delta} s-_l.

    ``phase_offset`` shifts every atom index l -> l + offset; the common
    phase must cancel in the intensity.
    """
    e_plus = sum(
        np.exp(-1j * (atom + 1 + phase_offset) * delta) * oracle_lowering(atom)
        for atom in (0, 1)
    )
    return float(np.real(np.trace(rho @ e_plus.conj().T @ e_plus)))


# --- entropy / discord oracle ------------------------------------------------


def oracle_entropy(m: np.ndarray) -> float:
    w = np.linalg.eigvalsh(m)
    w = w[w > 1e-15]
    return float(-(w * np.log2(w)).sum()) if w.size else 0.0


def oracle_reduced(rho: np.ndarray, keep_atom: int) -> np.ndarray:
    """Reduced state of one atom by explicit index bookkeeping."""
    out = np.zeros((2, 2), dtype=complex)
    for r, exc_r in enumerate(BASIS_EXCITATIONS):
        for c, exc_c in enumerate(BASIS_EXCITATIONS):
            if exc_r[1 - keep_atom] == exc_c[1 - keep_atom]:
                out[exc_r[keep_atom], exc_c[keep_atom]] += rho[r, c]
    return out


def oracle_mutual_information(rho: np.ndarray) -> float:
    return (
        oracle_entropy(oracle_reduced(rho, 0))
        + oracle_entropy(oracle_reduced(rho, 1))
        - oracle_entropy(rho)
    )


def _four_index(rho: np.ndarray) -> np.ndarray:
    """rho as t[a1, a2, b1, b2] by explicit basis bookkeeping."""
    t = np.zeros((2, 2, 2, 2), dtype=complex)
    for r, (a1, a2) in enumerate(BASIS_EXCITATIONS):
        for c, (b1, b2) in enumerate(BASIS_EXCITATIONS):
            t[a1, a2, b1, b2] = rho[r, c]
    return t


def oracle_best_classical_grid(rho: np.ndarray, n_theta: int = 181, n_phi: int = 360) -> float:
    """Best S(B) - sum_a p_a S(rho_B|a) over a dense grid of projective
    measurements on atom 1, with batched np.linalg.eigvalsh entropies."""
    t = _four_index(rho)
    s_b = oracle_entropy(oracle_reduced(rho, 1))

    theta, phi = np.meshgrid(
        np.linspace(0.0, np.pi, n_theta),
        np.linspace(0.0, 2.0 * np.pi, n_phi, endpoint=False),
        indexing="ij",
    )
    theta = theta.ravel()
    phi = phi.ravel()
    half = theta / 2.0
    # Generic orthonormal measurement pair; the parameterization is
    # deliberately different from the package's spinor convention.
    v_a = np.stack([np.cos(half), np.exp(1j * phi) * np.sin(half)], axis=-1)
    v_b = np.stack([-np.exp(-1j * phi) * np.sin(half), np.cos(half)], axis=-1)

    measured = np.zeros(theta.shape)
    for v in (v_a, v_b):
        block = np.einsum("na,aibj,nb->nij", v.conj(), t, v)
        p = np.real(np.trace(block, axis1=1, axis2=2))
        ok = p > 1e-14
        w = np.linalg.eigvalsh(block[ok]) / p[ok, None]
        w = np.clip(w, 0.0, 1.0)
        entropy = -np.sum(np.where(w > 0.0, w * np.log2(np.where(w > 0.0, w, 1.0)), 0.0), axis=1)
        measured[ok] += p[ok] * entropy
    return float(np.max(s_b - measured))


def oracle_discord_dense(rho: np.ndarray, n_theta: int = 181, n_phi: int = 360) -> float:
    return oracle_mutual_information(rho) - oracle_best_classical_grid(rho, n_theta, n_phi)


# --- concurrence oracle --------------------------------------------------------


def oracle_concurrence(rho: np.ndarray) -> float:
    """Concurrence via numpy: eigenvalues of rho rho_tilde through sqrt(rho)."""
    w, v = np.linalg.eigh(rho)
    root = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
    y = np.zeros((4, 4))
    y[0, 3], y[1, 2], y[2, 1], y[3, 0] = -1.0, 1.0, 1.0, -1.0
    tilde = y @ rho.conj() @ y
    lam = np.linalg.eigvalsh(root @ tilde @ root)
    roots = np.sqrt(np.clip(lam, 0.0, None))[::-1]
    return max(0.0, float(roots[0] - roots[1] - roots[2] - roots[3]))

"""Dense real-symmetric eigendecomposition with a verified accuracy contract.

The solver is LAPACK's symmetric driver (tridiagonalization + implicit
shifts via ``numpy.linalg.eigh``): deterministic for identical input, no
randomized pivoting.  Every decomposition is checked against the residual
and orthonormality contracts before it is returned, so downstream code can
rely on them rather than hope.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalError
from .hamiltonian import require_symmetric

__all__ = ["EigenDecomposition", "eig_sym", "sym_eigenvalues", "ground_eigs", "default_degeneracy_tol"]

RESIDUAL_RTOL = 1e-9
ORTHONORMALITY_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    """Ascending eigenvalues with an orthonormal column set of eigenvectors."""

    values: np.ndarray
    vectors: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.values)


def eig_sym(a: np.ndarray) -> EigenDecomposition:
    """Full spectrum of a real-symmetric matrix.

    Contract, verified before returning: values ascending; per-column
    residual ||A v - lambda v|| <= 1e-9 * max(1, ||A||_F); Gram defect
    |<v_r, v_s> - delta_rs| <= 1e-9.
    """
    a = require_symmetric(a)
    try:
        values, vectors = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigendecomposition failed to converge: {exc}") from exc
    scale = max(1.0, float(np.linalg.norm(a, "fro")))
    residual = float(np.max(np.linalg.norm(a @ vectors - vectors * values, axis=0)))
    if residual > RESIDUAL_RTOL * scale:
        raise NumericalError(
            f"residual contract violated: {residual:.3e} > {RESIDUAL_RTOL * scale:.3e} "
            f"for dim {a.shape[0]}"
        )
    gram_defect = float(np.max(np.abs(vectors.T @ vectors - np.eye(a.shape[0]))))
    if gram_defect > ORTHONORMALITY_TOL:
        raise NumericalError(f"orthonormality contract violated: {gram_defect:.3e}")
    return EigenDecomposition(values, vectors)


def sym_eigenvalues(a: np.ndarray) -> np.ndarray:
    """Ascending eigenvalues only (cheaper when vectors are not needed)."""
    a = require_symmetric(a)
    try:
        return np.linalg.eigvalsh(a)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigendecomposition failed to converge: {exc}") from exc


def default_degeneracy_tol(lam_min: float) -> float:
    # Well above the residual contract, well below physical gaps at N <= 14.
    return 1e-8 * max(1.0, abs(lam_min))


def ground_eigs(
    a: np.ndarray, degeneracy_tol: float | None = None
) -> tuple[float, int, np.ndarray]:
    """Ground energy, its multiplicity, and the spanning eigenvectors.

    Multiplicity counts eigenvalues within ``degeneracy_tol`` of the
    minimum (default 1e-8 * max(1, |lambda_min|)); the returned array has
    one orthonormal column per member.
    """
    dec = eig_sym(a)
    lam = float(dec.values[0])
    tol = default_degeneracy_tol(lam) if degeneracy_tol is None else degeneracy_tol
    mult = int(np.searchsorted(dec.values, lam + tol, side="right"))
    return lam, mult, dec.vectors[:, :mult]

"""
Eigenphases from the Hermitian pair A = (M + M^H)/2, B = (M - M^H)/(2i).

For unitary M the two commute and share eigenvectors with M, with
eigenvalues cos(omega) and sin(omega). A is diagonalized first; inside each
degenerate group of A the restriction of B is diagonalized, and omega is
read off the Rayleigh quotients of both.
"""

from typing import Optional, Sequence

import numpy as np
import scipy.linalg

from config import Config
from utils.errors import NumericalError
from utils.logger import Logger
from utils.numerics import max_unmatched_distance, phases_match, wrap_phase
from spectral.bloch import BlochOperator

_GROUP_TOL = 1e-9


def hermitian_pair(matrix: np.ndarray):
    adjoint = matrix.conj().T
    return 0.5 * (matrix + adjoint), (matrix - adjoint) / 2j


def eigenphases_from_matrix(matrix: np.ndarray) -> np.ndarray:
    a, b = hermitian_pair(matrix)
    cosines, basis = scipy.linalg.eigh(a)
    breaks = np.flatnonzero(np.diff(cosines) >= _GROUP_TOL) + 1
    omegas = []
    for group in np.split(np.arange(cosines.size), breaks):
        block = basis[:, group]
        if group.size > 1:
            _, rotation = scipy.linalg.eigh(block.conj().T @ b @ block)
            block = block @ rotation
        for i in range(block.shape[1]):
            v = block[:, i]
            c = np.real(np.vdot(v, a @ v))
            s = np.real(np.vdot(v, b @ v))
            omegas.append(np.arctan2(s, c))
    return np.sort(wrap_phase(np.array(omegas)))


def eigenphase_crosscheck(op: BlochOperator, reference: Optional[Sequence[float]] = None,
                          tol: Optional[float] = None) -> np.ndarray:
    """
    Sorted eigenphases of op by the Hermitian-pair route.

    With `reference` (for example the phases from spectral.eigensystem) the
    two multisets must agree within tol, otherwise NumericalError.
    """
    tol = Config.CROSSCHECK_TOL if tol is None else tol
    omegas = eigenphases_from_matrix(op.matrix)
    if reference is not None and not phases_match(omegas, reference, tol):
        distance = max_unmatched_distance(omegas, reference) if len(reference) else float("inf")
        Logger.error("Oracle", f"Eigenphase cross-check failed at k={op.k}: max distance {distance:.2e}")
        raise NumericalError(
            "Primary and Hermitian-pair eigenphases disagree",
            diagnostics={**op.diagnostics(), "max_distance": distance, "count": len(reference)},
        )
    return omegas

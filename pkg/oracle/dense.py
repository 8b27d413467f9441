"""
Brute-force references for the steppers.

The one-step operator is assembled as the literal product G . D . H of
dense matrices over every (site, coin) basis state of a small periodic
lattice, independent of the fused stencil in evolution.stepper. The basis
index of (a, b, c) is 4 (a nb + b) + c.
"""

from typing import Sequence, Tuple

import numpy as np

from config import Config
from utils.errors import ContractViolation, DomainError
from walk.coin import HADAMARD, HADAMARD_1
from walk.coupling import interaction_phase
from walk.field import AmplitudeField, Extents
from walk.types import Coords, WalkParams

# Displacement of each coin component, as in the stepper but written out again.
_DISPLACEMENTS = {
    Coords.X1X2: {0: (1, 1), 1: (1, -1), 2: (-1, 1), 3: (-1, -1)},
    Coords.RHO_SIGMA: {0: (0, 2), 1: (2, 0), 2: (-2, 0), 3: (0, -2)},
}


def _shape(extents: Extents) -> Tuple[int, int]:
    (a0, a1), (b0, b1) = extents
    return a1 - a0 + 1, b1 - b0 + 1


def _check_size(extents: Extents):
    na, nb = _shape(extents)
    size = 4 * na * nb
    if size > Config.ORACLE_MAX_BASIS:
        raise DomainError(f"Oracle basis of {size} states exceeds the cap of {Config.ORACLE_MAX_BASIS}")
    return size


def coin_matrix(extents: Extents) -> np.ndarray:
    na, nb = _shape(extents)
    return np.kron(np.eye(na * nb), HADAMARD)


def displacement_matrix(extents: Extents, coords: Coords = Coords.X1X2) -> np.ndarray:
    """Permutation moving each coin component by its displacement, wrapping on the torus."""
    size = _check_size(extents)
    na, nb = _shape(extents)
    matrix = np.zeros((size, size))
    for a in range(na):
        for b in range(nb):
            for c, (da, db) in _DISPLACEMENTS[Coords.parse(coords)].items():
                source = 4 * (a * nb + b) + c
                target = 4 * (((a + da) % na) * nb + (b + db) % nb) + c
                matrix[target, source] = 1.0
    return matrix


def interaction_matrix(extents: Extents, params: WalkParams, coords: Coords = Coords.X1X2) -> np.ndarray:
    """Diagonal phase exp(i phi/|rho|) (exp(i phi0) at rho = 0) of each site."""
    (a0, a1), (b0, b1) = extents
    phases = []
    for a in range(a0, a1 + 1):
        for b in range(b0, b1 + 1):
            rho = a - b if Coords.parse(coords) is Coords.X1X2 else a
            phases.extend([complex(interaction_phase(rho, params.phi, params.phi0))] * 4)
    return np.diag(phases)


def dense_step_matrix(extents: Extents, params: WalkParams, coords: Coords = Coords.X1X2) -> np.ndarray:
    """U = G D H on the periodic lattice spanned by `extents`."""
    coords = Coords.parse(coords)
    if coords is Coords.RHO_SIGMA and any(n % 2 for n in _shape(extents)):
        raise ContractViolation("A periodic (rho, sigma) lattice needs even side lengths")
    _check_size(extents)
    return interaction_matrix(extents, params, coords) @ displacement_matrix(extents, coords) @ coin_matrix(extents)


def field_to_vector(field: AmplitudeField) -> np.ndarray:
    return np.array(field.data).reshape(-1)


def vector_to_field(vector: np.ndarray, coords: Coords, extents: Extents) -> AmplitudeField:
    na, nb = _shape(extents)
    return AmplitudeField(coords, (extents[0][0], extents[1][0]), np.asarray(vector).reshape(na, nb, 4))


def dense_evolve(field: AmplitudeField, params: WalkParams, steps: int) -> AmplitudeField:
    """Evolve by repeated matrix-vector products on the field's own torus."""
    matrix = dense_step_matrix(field.extents, params, field.coords)
    vector = field_to_vector(field)
    for _ in range(steps):
        vector = matrix @ vector
    return vector_to_field(vector, field.coords, field.extents)


def single_particle_walk(position: int, coin: Sequence[complex], steps: int) -> Tuple[int, np.ndarray]:
    """
    Hadamard walk of one walker: the up component moves to x + 1 with
    (u + d)/sqrt(2), the down component to x - 1 with (u - d)/sqrt(2).

    Returns (first site, amplitudes of shape (2 steps + 1, 2)).
    """
    if steps < 0:
        raise DomainError(f"steps must be >= 0, got {steps}")
    width = 2 * steps + 1
    psi = np.zeros((width, 2), dtype=complex)
    psi[steps] = np.asarray(coin, dtype=complex)
    for _ in range(steps):
        mixed = psi @ HADAMARD_1.T
        nxt = np.zeros_like(psi)
        nxt[1:, 0] = mixed[:-1, 0]
        nxt[:-1, 1] = mixed[1:, 1]
        psi = nxt
    return position - steps, psi


def single_particle_distribution(position: int, coin: Sequence[complex], steps: int) -> Tuple[int, np.ndarray]:
    start, psi = single_particle_walk(position, coin, steps)
    return start, np.sum(np.abs(psi) ** 2, axis=1)

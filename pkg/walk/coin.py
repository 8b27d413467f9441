"""Hadamard x Hadamard coin acting on col(r, d, u, l)."""

import numpy as np

from walk.types import CoinVector

HADAMARD_1 = np.array([[1.0, 1.0], [1.0, -1.0]]) / np.sqrt(2.0)

HADAMARD = 0.5 * np.array(
    [
        [1.0, 1.0, 1.0, 1.0],
        [1.0, -1.0, 1.0, -1.0],
        [1.0, 1.0, -1.0, -1.0],
        [1.0, -1.0, -1.0, 1.0],
    ]
)

# d <-> u, the coin part of a particle exchange
SWAP_DU = np.array([0, 2, 1, 3])


def coin_apply(v: CoinVector) -> CoinVector:
    """Return H v."""
    return CoinVector.from_array(HADAMARD @ v.as_array())


def coin_apply_array(amplitudes: np.ndarray) -> np.ndarray:
    """Apply H along the last axis (length 4) of an amplitude array."""
    return amplitudes @ HADAMARD.T

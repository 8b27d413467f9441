"""
Fixed-k Bloch operator of the walk on the rho ring.

With plane waves C(rho, sigma, t) = exp(i (omega t - k sigma)) C(rho), the
map closes on the ring of one parity sector:

    e^{i w} R_j = e^{i t_j} e^{+2ik} (H C_j)_R
    e^{i w} D_j = e^{i t_j}          (H C_{j-1})_D
    e^{i w} U_j = e^{i t_j}          (H C_{j+1})_U
    e^{i w} L_j = e^{i t_j} e^{-2ik} (H C_j)_L

where e^{i t_j} = 2 g at site j and neighbours wrap around the ring. The basis
index of (site j, coin c) is 4 j + c.
"""

import math
from dataclasses import dataclass

import numpy as np

from utils.errors import DomainError
from walk.coin import HADAMARD
from walk.coupling import ring_phases
from walk.types import WalkParams

K_MIN = -math.pi / 2
K_MAX = math.pi / 2


def check_k(k: float) -> float:
    k = float(k)
    if not (K_MIN <= k < K_MAX):
        raise DomainError(f"k={k} is outside [-pi/2, pi/2)")
    return k


def bloch_matrix(k: float, site_phases: np.ndarray) -> np.ndarray:
    """4N x 4N matrix for unit-modulus phases e^{i t_j} on an N-site ring."""
    site_phases = np.asarray(site_phases, dtype=complex)
    n = site_phases.size
    j = np.arange(n)
    cols = np.arange(4)[None, :]
    matrix = np.zeros((4 * n, 4 * n), dtype=complex)

    sources = (j, (j - 1) % n, (j + 1) % n, j)
    twists = (np.exp(2j * k), 1.0, 1.0, np.exp(-2j * k))
    for c in range(4):
        rows = (4 * j + c)[:, None]
        matrix[rows, 4 * sources[c][:, None] + cols] = (site_phases * twists[c])[:, None] * HADAMARD[c][None, :]
    return matrix


@dataclass(frozen=True, eq=False)
class BlochOperator:
    k: float
    params: WalkParams
    matrix: np.ndarray

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    @property
    def geometry(self):
        return self.params.geometry

    def apply(self, vector: np.ndarray) -> np.ndarray:
        return self.matrix @ vector

    def unitarity_error(self) -> float:
        m = self.matrix
        return float(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))))

    def residual(self, vector: np.ndarray, omega: float) -> float:
        """max |M v - e^{i omega} v|."""
        return float(np.max(np.abs(self.apply(vector) - np.exp(1j * omega) * vector)))

    def diagnostics(self) -> dict:
        return {
            "k": self.k,
            "phi": self.params.phi,
            "phi0": self.params.phi0,
            "phi_reduced": self.params.phi_reduced,
            "phi0_reduced": self.params.phi0_reduced,
            "parity": self.params.parity.value,
            "ring_sites": self.params.ring_sites,
            "unitarity_error": self.unitarity_error(),
            "finite": bool(np.all(np.isfinite(self.matrix))),
        }


def build_bloch(k: float, params: WalkParams) -> BlochOperator:
    """Bloch operator at pseudo-momentum k in [-pi/2, pi/2)."""
    k = check_k(k)
    return BlochOperator(k=k, params=params, matrix=bloch_matrix(k, ring_phases(params)))

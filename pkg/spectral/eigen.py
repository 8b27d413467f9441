"""
Eigenstates of the Bloch operator.

The operator is unitary, so its complex Schur form is diagonal and the Schur
vectors are an orthonormal eigenbasis. Eigenphases closer than
Config.DEGENERACY_TOL form a cluster; inside a cluster the basis is rotated
to diagonalize the exchange operator and then |rho| within each exchange
sector, which makes degenerate families come out as localized,
exchange-definite states.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import List, Optional, Tuple

import numpy as np
import scipy.linalg

from config import Config
from utils.errors import NumericalError
from utils.logger import Logger
from utils.numerics import wrap_phase
from walk.exchange import exchange_permutation
from walk.geometry import RingGeometry
from walk.types import WalkParams
from spectral.bloch import BlochOperator


class ExchangeLabel(str, Enum):
    BOSON = "boson"
    FERMION = "fermion"
    MIXED = "mixed"

    @classmethod
    def from_value(cls, value: float) -> "ExchangeLabel":
        if abs(value - 1.0) < Config.EXCHANGE_TOL:
            return cls.BOSON
        if abs(value + 1.0) < Config.EXCHANGE_TOL:
            return cls.FERMION
        return cls.MIXED


def rho_profile(vector: np.ndarray) -> np.ndarray:
    """P_rho per ring site, summed over the coin in fixed order."""
    p = np.abs(np.asarray(vector).reshape(-1, 4)) ** 2
    return ((p[:, 0] + p[:, 1]) + p[:, 2]) + p[:, 3]


def inverse_participation(p_rho: np.ndarray) -> float:
    return float(np.sum(p_rho * p_rho))


def support_radius(p_rho: np.ndarray, geometry: RingGeometry, mass: float = None) -> int:
    """Smallest R such that sites with |rho| <= R hold `mass` of the probability."""
    mass = Config.SUPPORT_MASS if mass is None else mass
    order = np.argsort(geometry.abs_rho, kind="stable")
    radii = geometry.abs_rho[order]
    cumulative = np.cumsum(p_rho[order])
    target = mass * cumulative[-1] - 1e-12
    hit = int(np.searchsorted(cumulative, target, side="left"))
    hit = min(hit, radii.size - 1)
    return int(radii[hit])


def fix_global_phase(vector: np.ndarray) -> np.ndarray:
    """Rotate so the largest component is real and positive."""
    i = int(np.argmax(np.abs(vector)))
    value = vector[i]
    if value == 0:
        return vector
    return vector * (abs(value) / value)


@dataclass(frozen=True, eq=False)
class EigenState:
    omega: float
    vector: np.ndarray
    k: float
    params: WalkParams
    exchange_label: ExchangeLabel
    exchange_value: float
    ipr: float
    support_radius: int
    residual: float
    cluster: int = -1
    cluster_multiplicity: int = 1

    @property
    def geometry(self) -> RingGeometry:
        return self.params.geometry

    @property
    def components(self) -> np.ndarray:
        """(N, 4) amplitudes in ring-site order."""
        return self.vector.reshape(-1, 4)

    @property
    def p_rho(self) -> np.ndarray:
        return rho_profile(self.vector)

    @property
    def p_rho0(self) -> float:
        """Probability on rho = 0 (zero in the odd sector)."""
        geometry = self.geometry
        if not geometry.contains(0):
            return 0.0
        return float(self.p_rho[geometry.index_of(0)])

    @property
    def bound(self) -> bool:
        min_ipr, max_radius = Config.bound_thresholds(self.params.ring_sites)
        return self.ipr > min_ipr and self.support_radius < max_radius


def make_state(
    vector: np.ndarray,
    op: BlochOperator,
    cluster: int = -1,
    multiplicity: int = 1,
    omega: Optional[float] = None,
) -> EigenState:
    """Wrap an (approximate) eigenvector, computing labels and localization metrics."""
    vector = fix_global_phase(np.asarray(vector, dtype=complex))
    if omega is None:
        omega = wrap_phase(np.angle(np.vdot(vector, op.apply(vector))))
    exchange_value = float(np.real(np.vdot(vector, vector[_permutation(op.geometry)])))
    p = rho_profile(vector)
    return EigenState(
        omega=float(omega),
        vector=vector,
        k=op.k,
        params=op.params,
        exchange_label=ExchangeLabel.from_value(exchange_value),
        exchange_value=exchange_value,
        ipr=inverse_participation(p),
        support_radius=support_radius(p, op.geometry),
        residual=op.residual(vector, omega),
        cluster=cluster,
        cluster_multiplicity=multiplicity,
    )


def _diagonalize_in(basis: np.ndarray, image: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Eigen-rotate `basis` for the Hermitian operator whose action on it is `image`."""
    compressed = basis.conj().T @ image
    compressed = 0.5 * (compressed + compressed.conj().T)
    values, vectors = scipy.linalg.eigh(compressed)
    return values, basis @ vectors


def exchange_rotation(basis: np.ndarray, geometry: RingGeometry) -> np.ndarray:
    """
    Rotate an orthonormal basis of an exchange-invariant subspace into
    exchange eigenvectors, then diagonalize |rho| inside each sector.

    Columns come out as bosons first, then fermions, each by increasing
    <|rho|>. Anything that is neither stays at the end unsplit.
    """
    if basis.shape[1] == 0:
        return basis
    values, rotated = _diagonalize_in(basis, basis[_permutation(geometry)])
    abs_rho = np.repeat(geometry.abs_rho.astype(float), 4)

    blocks = []
    for select in (values > 1.0 - 1e-6, values < -1.0 + 1e-6):
        block = rotated[:, select]
        if block.shape[1] > 1:
            _, block = _diagonalize_in(block, abs_rho[:, None] * block)
        blocks.append(block)
    rest = rotated[:, (values <= 1.0 - 1e-6) & (values >= -1.0 + 1e-6)]
    blocks.append(rest)
    return np.concatenate(blocks, axis=1)


@lru_cache(maxsize=16)
def _permutation(geometry: RingGeometry) -> np.ndarray:
    perm = exchange_permutation(geometry)
    perm.setflags(write=False)
    return perm


def cluster_phases(omegas: np.ndarray, tol: float = None) -> List[np.ndarray]:
    """
    Group eigenphases into degenerate clusters.

    Returns index arrays in ascending-phase order; a cluster straddling
    -pi/pi counts as sitting at pi and is reported last.
    """
    tol = Config.DEGENERACY_TOL if tol is None else tol
    order = np.argsort(omegas, kind="stable")
    if order.size == 0:
        return []
    sorted_w = omegas[order]
    breaks = np.flatnonzero(np.diff(sorted_w) >= tol) + 1
    groups = np.split(order, breaks)
    wrap_gap = sorted_w[0] + 2.0 * np.pi - sorted_w[-1]
    if len(groups) > 1 and wrap_gap < tol:
        groups[-1] = np.concatenate([groups[-1], groups[0]])
        groups.pop(0)
    return groups


def eigensystem(op: BlochOperator) -> List[EigenState]:
    """
    All 4N eigenstates of a Bloch operator, sorted by eigenphase (ties
    inside a degenerate cluster keep the exchange/|rho| order).
    """
    try:
        schur_form, vectors = scipy.linalg.schur(op.matrix, output="complex")
    except (np.linalg.LinAlgError, ValueError) as e:
        raise NumericalError(f"Schur decomposition failed at k={op.k}: {e}", diagnostics=op.diagnostics()) from e

    eigenvalues = np.diag(schur_form)
    omegas = wrap_phase(np.angle(eigenvalues))
    if np.max(np.abs(np.abs(eigenvalues) - 1.0)) > 1e-8:
        raise NumericalError(
            f"Eigenvalues leave the unit circle at k={op.k}",
            diagnostics={**op.diagnostics(), "max_modulus_error": float(np.max(np.abs(np.abs(eigenvalues) - 1.0)))},
        )

    states: List[EigenState] = []
    worst = 0.0
    for cluster_id, members in enumerate(cluster_phases(omegas)):
        basis = vectors[:, members]
        if members.size > 1:
            basis = exchange_rotation(basis, op.geometry)
        for column in range(basis.shape[1]):
            state = make_state(basis[:, column], op, cluster=cluster_id, multiplicity=members.size)
            worst = max(worst, state.residual)
            states.append(state)

    if worst > Config.EIGEN_RESIDUAL_TOL:
        Logger.warning("Spectral", f"Largest eigen-residual {worst:.2e} at k={op.k}")
    if worst > 1e-6:
        raise NumericalError(
            f"Eigenvectors fail the eigen-equation at k={op.k} (residual {worst:.2e})",
            diagnostics={**op.diagnostics(), "max_residual": worst},
        )
    Logger.debug("Spectral", f"k={op.k:.6f}: {len(states)} states in {states[-1].cluster + 1 if states else 0} clusters")
    return states

"""
Closed-form eigenstates of the Bloch operator at k = 0.

Dimers sit on a single rho with R = L and D = U = 0 and have
omega = phi / |rho0|. In the odd sector rho = +1 and rho = -1 support a
threefold degenerate family at omega = phi, and in the even sector rho = 0
supports a state at omega = phi0.
"""

import math
from enum import Enum
from typing import Dict, Optional, Tuple

import numpy as np

from config import Config
from utils.errors import DomainError, NumericalError
from utils.numerics import wrap_phase
from walk.types import Parity, WalkParams
from spectral.bloch import build_bloch
from spectral.eigen import EigenState, make_state

_SQRT_HALF = 1.0 / math.sqrt(2.0)
_B = 1.0 / math.sqrt(3.0)


class NearDimerBranch(str, Enum):
    PLUS_ONE = "plus_one"
    MINUS_ONE = "minus_one"
    SYMMETRIC = "symmetric"
    # Exchange-definite combinations of PLUS_ONE and MINUS_ONE
    BOSON = "boson"
    FERMION = "fermion"

    @classmethod
    def parse(cls, value) -> "NearDimerBranch":
        if isinstance(value, NearDimerBranch):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            names = ", ".join(b.value for b in cls)
            raise DomainError(f"Unknown near-dimer branch '{value}' (expected one of {names})") from None


# rho -> (R, D, U, L)
NEAR_DIMER_PROFILES: Dict[NearDimerBranch, Dict[int, Tuple[float, float, float, float]]] = {
    NearDimerBranch.PLUS_ONE: {1: (_SQRT_HALF, 0.0, 0.0, _SQRT_HALF)},
    NearDimerBranch.MINUS_ONE: {-1: (_SQRT_HALF, 0.0, 0.0, _SQRT_HALF)},
    NearDimerBranch.SYMMETRIC: {
        1: (_B / 2, _B, 0.0, -_B / 2),
        -1: (_B / 2, 0.0, _B, -_B / 2),
    },
    NearDimerBranch.BOSON: {1: (0.5, 0.0, 0.0, 0.5), -1: (0.5, 0.0, 0.0, 0.5)},
    NearDimerBranch.FERMION: {1: (0.5, 0.0, 0.0, 0.5), -1: (-0.5, 0.0, 0.0, -0.5)},
}


def _verified(vector: np.ndarray, params: WalkParams, omega: float, what: str) -> EigenState:
    op = build_bloch(0.0, params)
    state = make_state(vector, op, omega=wrap_phase(omega))
    if state.residual > Config.ANALYTIC_RESIDUAL_TOL:
        raise NumericalError(
            f"{what} fails the eigen-equation (residual {state.residual:.2e})",
            diagnostics={**op.diagnostics(), "residual": state.residual},
        )
    return state


def _vector(params: WalkParams, profile: Dict[int, Tuple[float, ...]]) -> np.ndarray:
    geometry = params.geometry
    vector = np.zeros(4 * params.ring_sites, dtype=complex)
    for rho, amplitudes in profile.items():
        j = geometry.index_of(rho)
        vector[4 * j:4 * j + 4] = amplitudes
    return vector


def build_dimer(rho0: int, phi: float, params: WalkParams) -> EigenState:
    """Dimer at rho0 for interaction phi (overrides params.phi), k = 0."""
    rho0 = int(rho0)
    if rho0 == 0:
        raise DomainError("rho0 = 0 carries the self-energy state; use build_phi0_state")
    if abs(rho0) == 1:
        raise DomainError("rho0 = +-1 belongs to the near-dimer family; use build_near_dimer")
    params = params.with_phases(phi=phi)
    params.require_parity(rho0)
    vector = _vector(params, {rho0: (_SQRT_HALF, 0.0, 0.0, _SQRT_HALF)})
    return _verified(vector, params, phi / abs(rho0), f"Dimer at rho0={rho0}")


def build_near_dimer(branch, phi: float, params: Optional[WalkParams] = None) -> EigenState:
    """One of the omega = phi states on rho = +-1 (odd sector, k = 0)."""
    branch = NearDimerBranch.parse(branch)
    if params is None:
        params = WalkParams.from_lc(phi, Config.DEFAULT_LC_ODD, Parity.ODD)
    if params.parity is not Parity.ODD:
        raise DomainError("Near-dimer states exist only in the odd sector")
    params = params.with_phases(phi=phi)
    vector = _vector(params, NEAR_DIMER_PROFILES[branch])
    return _verified(vector, params, phi, f"Near-dimer {branch.value}")


def build_phi0_state(params: WalkParams) -> EigenState:
    """State on rho = 0 with omega = phi0 (even sector, k = 0)."""
    if params.parity is not Parity.EVEN:
        raise DomainError("rho = 0 exists only in the even sector")
    vector = _vector(params, {0: (_SQRT_HALF, 0.0, 0.0, _SQRT_HALF)})
    return _verified(vector, params, params.phi0, "Self-energy state")


def rho_profile_of(state: EigenState, cutoff: float = 0.0) -> Dict[int, np.ndarray]:
    """rho -> four amplitudes over the sites of a state, dropping sites with P <= cutoff."""
    geometry = state.geometry
    profile = {}
    for j, rho in enumerate(geometry.rho_values):
        amplitudes = state.components[j]
        if np.sum(np.abs(amplitudes) ** 2) > cutoff:
            profile[int(rho)] = amplitudes.copy()
    return profile

"""
Interaction coupling g_rho = exp(i phi / |rho|) / 2, with the self-energy
g_0 = exp(i phi0) / 2 at rho = 0.
"""

import numpy as np

from utils.errors import ContractViolation
from walk.types import Parity, WalkParams


def coupling(rho: int, params: WalkParams) -> complex:
    """Coupling at a ring site; rho must lie in the sector's (-N, N] domain."""
    rho = int(rho)
    if rho == 0 and params.parity is Parity.ODD:
        raise ContractViolation("rho=0 does not exist in the odd sector")
    geometry = params.geometry
    geometry.index_of(rho)  # domain check
    rho_eff = geometry.centered(rho)
    if rho_eff == 0:
        return 0.5 * np.exp(1j * params.phi0)
    return 0.5 * np.exp(1j * params.phi / abs(rho_eff))


def interaction_phase(rho, phi: float, phi0: float) -> np.ndarray:
    """
    exp(i phi / |rho|), or exp(i phi0) where rho == 0, elementwise.

    Used by the steppers on the open line, where rho is the plain difference
    x1 - x2 and no ring folding applies. Equals 2 * coupling.
    """
    rho = np.asarray(rho)
    safe = np.where(rho == 0, 1, np.abs(rho))
    return np.where(rho == 0, np.exp(1j * phi0), np.exp(1j * phi / safe))


def ring_phases(params: WalkParams) -> np.ndarray:
    """2 * g_rho for every site of the parameter ring, in site order."""
    geometry = params.geometry
    rho = np.array([geometry.centered(int(r)) for r in geometry.rho_values])
    return interaction_phase(rho, params.phi, params.phi0)

"""
Particle exchange 1 <-> 2: rho -> -rho with (R, D, U, L) -> (R, U, D, L).
"""

import numpy as np

from walk.coin import SWAP_DU
from walk.field import AmplitudeField
from walk.geometry import RingGeometry
from walk.types import Coords


def exchange(field: AmplitudeField) -> AmplitudeField:
    """Return the particle-exchanged field."""
    if field.coords is Coords.RHO_SIGMA:
        (rho0, rho1), (sigma0, _) = field.extents
        data = field.data[::-1, :, :][:, :, SWAP_DU]
        return AmplitudeField(Coords.RHO_SIGMA, (-rho1, sigma0), data)
    data = field.data.transpose(1, 0, 2)[:, :, SWAP_DU]
    return AmplitudeField(Coords.X1X2, (field.origin[1], field.origin[0]), data)


def exchange_permutation(geometry: RingGeometry) -> np.ndarray:
    """
    Index map of the exchange operator on the (site, coin) Bloch basis:
    (P v)[i] = v[perm[i]], basis index 4 j + c.
    """
    sites = np.repeat(geometry.mirror_index, 4)
    coins = np.tile(SWAP_DU, geometry.sites)
    return 4 * sites + coins

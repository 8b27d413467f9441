"""Walk core: domain types, ring geometry, coin, coupling and exchange."""

from walk.types import COMPONENTS, CoinVector, Coords, Parity, WalkParams
from walk.geometry import RingGeometry
from walk.coin import HADAMARD, coin_apply, coin_apply_array
from walk.coupling import coupling, interaction_phase, ring_phases
from walk.field import AmplitudeField, fields_close, max_difference, to_rhosigma, to_x1x2
from walk.exchange import exchange, exchange_permutation

__all__ = [
    "COMPONENTS",
    "CoinVector",
    "Coords",
    "Parity",
    "WalkParams",
    "RingGeometry",
    "HADAMARD",
    "coin_apply",
    "coin_apply_array",
    "coupling",
    "interaction_phase",
    "ring_phases",
    "AmplitudeField",
    "fields_close",
    "max_difference",
    "to_rhosigma",
    "to_x1x2",
    "exchange",
    "exchange_permutation",
]

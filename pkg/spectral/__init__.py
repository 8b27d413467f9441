"""Bloch operator, eigensystem and band scans."""

from spectral.bloch import BlochOperator, bloch_matrix, build_bloch, check_k
from spectral.eigen import (
    EigenState,
    ExchangeLabel,
    cluster_phases,
    eigensystem,
    exchange_rotation,
    inverse_participation,
    make_state,
    rho_profile,
    support_radius,
)
from spectral.bands import BAND_COLUMNS, band_scan, k_grid, symmetric_k_grid

__all__ = [
    "BlochOperator",
    "bloch_matrix",
    "build_bloch",
    "check_k",
    "EigenState",
    "ExchangeLabel",
    "cluster_phases",
    "eigensystem",
    "exchange_rotation",
    "inverse_participation",
    "make_state",
    "rho_profile",
    "support_radius",
    "BAND_COLUMNS",
    "band_scan",
    "k_grid",
    "symmetric_k_grid",
]

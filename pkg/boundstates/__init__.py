"""Exchange classification, closed-form bound states and the molecule catalog."""

from boundstates.classify import classify, group_clusters
from boundstates.analytic import (
    NEAR_DIMER_PROFILES,
    NearDimerBranch,
    build_dimer,
    build_near_dimer,
    build_phi0_state,
    rho_profile_of,
)
from boundstates.catalog import MoleculeRecord, catalog, catalog_frame, component_frame

__all__ = [
    "classify",
    "group_clusters",
    "NEAR_DIMER_PROFILES",
    "NearDimerBranch",
    "build_dimer",
    "build_near_dimer",
    "build_phi0_state",
    "rho_profile_of",
    "MoleculeRecord",
    "catalog",
    "catalog_frame",
    "component_frame",
]

"""
Molecule catalog: the bound eigenstates at one pseudo-momentum.
"""

from dataclasses import dataclass
from typing import List, Sequence

import numpy as np
import pandas as pd

from utils.logger import Logger
from walk.types import COMPONENTS, WalkParams
from spectral.bloch import build_bloch
from spectral.eigen import EigenState, ExchangeLabel, eigensystem

RECORD_COLUMNS = ["omega", "k", "exchange_label", "multiplicity", "ipr", "support_radius", "p_rho0"]


@dataclass(frozen=True, eq=False)
class MoleculeRecord:
    omega: float
    k: float
    exchange_label: ExchangeLabel
    multiplicity: int
    ipr: float
    support_radius: int
    rho: np.ndarray
    p_rho: np.ndarray
    component_probabilities: np.ndarray  # (N, 4): |R|^2, |D|^2, |U|^2, |L|^2
    p_rho0: float

    @classmethod
    def from_state(cls, state: EigenState) -> "MoleculeRecord":
        return cls(
            omega=state.omega,
            k=state.k,
            exchange_label=state.exchange_label,
            multiplicity=state.cluster_multiplicity,
            ipr=state.ipr,
            support_radius=state.support_radius,
            rho=state.geometry.rho_values.copy(),
            p_rho=state.p_rho,
            component_probabilities=np.abs(state.components) ** 2,
            p_rho0=state.p_rho0,
        )

    def summary(self) -> dict:
        return {
            "omega": self.omega,
            "k": self.k,
            "exchange_label": self.exchange_label.value,
            "multiplicity": self.multiplicity,
            "ipr": self.ipr,
            "support_radius": self.support_radius,
            "p_rho0": self.p_rho0,
        }


def catalog(params: WalkParams, k: float = 0.0) -> List[MoleculeRecord]:
    """Bound states at k, sorted by omega."""
    states = eigensystem(build_bloch(k, params))
    bound = sorted((s for s in states if s.bound), key=lambda s: s.omega)
    Logger.info(
        "BoundStates",
        f"{len(bound)} bound states of {len(states)} at k={k} (phi={params.phi}, phi0={params.phi0}, "
        f"{params.parity.value})",
    )
    return [MoleculeRecord.from_state(s) for s in bound]


def catalog_frame(records: Sequence[MoleculeRecord]) -> pd.DataFrame:
    """One row per molecule: summary columns, then P at each rho as P_<rho>."""
    if not records:
        return pd.DataFrame(columns=RECORD_COLUMNS)
    rho = records[0].rho
    summary = pd.DataFrame([r.summary() for r in records], columns=RECORD_COLUMNS)
    profiles = pd.DataFrame(
        np.vstack([r.p_rho for r in records]),
        columns=[f"P_{int(x)}" for x in rho],
    )
    return pd.concat([summary, profiles], axis=1)


def component_frame(records: Sequence[MoleculeRecord], cutoff: float = 0.0) -> pd.DataFrame:
    """Long table of per-component probabilities: molecule, omega, rho, R, D, U, L, P."""
    frames = []
    for index, record in enumerate(records):
        keep = record.p_rho > cutoff
        frame = pd.DataFrame(record.component_probabilities[keep], columns=list(COMPONENTS))
        frame.insert(0, "rho", record.rho[keep])
        frame.insert(0, "omega", record.omega)
        frame.insert(0, "molecule", index)
        frame["P"] = record.p_rho[keep]
        frames.append(frame)
    if not frames:
        return pd.DataFrame(columns=["molecule", "omega", "rho", *COMPONENTS, "P"])
    return pd.concat(frames, ignore_index=True)

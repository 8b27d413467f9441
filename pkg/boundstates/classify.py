"""
Boson/fermion classification of degenerate eigenstates.
"""

from typing import List, Sequence

import numpy as np
import scipy.linalg

from config import Config
from utils.errors import ContractViolation
from utils.logger import Logger
from utils.numerics import circular_distance
from spectral.bloch import build_bloch
from spectral.eigen import EigenState, ExchangeLabel, exchange_rotation, make_state


def classify(cluster: Sequence[EigenState]) -> List[EigenState]:
    """
    Rotate a degenerate cluster into exchange eigenvectors.

    Every state must share k and parameters, and their eigenphases must lie
    within the degeneracy tolerance. Returns an orthonormal basis of the
    same span, bosons first.
    """
    cluster = list(cluster)
    if not cluster:
        return []
    first = cluster[0]
    for state in cluster[1:]:
        if state.k != first.k:
            raise ContractViolation(f"Cluster mixes k={first.k} and k={state.k}")
        if state.params != first.params:
            raise ContractViolation("Cluster mixes walk parameters")
    spread = max(float(circular_distance(s.omega, first.omega)) for s in cluster)
    if spread > Config.DEGENERACY_TOL * len(cluster):
        raise ContractViolation(f"Cluster eigenphases spread over {spread:.2e}, not degenerate")

    basis = np.column_stack([s.vector for s in cluster])
    basis, _ = scipy.linalg.qr(basis, mode="economic")
    rotated = exchange_rotation(basis, first.geometry)

    op = build_bloch(first.k, first.params)
    states = [
        make_state(rotated[:, i], op, cluster=first.cluster, multiplicity=len(cluster))
        for i in range(rotated.shape[1])
    ]
    mixed = sum(1 for s in states if s.exchange_label is ExchangeLabel.MIXED)
    if mixed:
        Logger.warning("BoundStates", f"{mixed} state(s) at omega={first.omega:.6f} are not exchange-definite")
    return states


def group_clusters(states: Sequence[EigenState]) -> List[List[EigenState]]:
    """Split an eigensystem into its degenerate clusters, in order."""
    groups: List[List[EigenState]] = []
    for state in states:
        if groups and groups[-1][0].cluster == state.cluster and state.cluster >= 0:
            groups[-1].append(state)
        else:
            groups.append([state])
    return groups

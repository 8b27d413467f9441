"""
Quasienergy bands over a grid of pseudo-momenta.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence

import numpy as np
import pandas as pd

from config import Config
from utils.errors import PartialResultsError, WalkError
from utils.logger import Logger
from walk.types import WalkParams
from spectral.bloch import build_bloch, check_k
from spectral.eigen import EigenState, eigensystem

BAND_COLUMNS = [
    "k",
    "state",
    "omega",
    "ipr",
    "support_radius",
    "exchange_label",
    "bound_flag",
    "cluster_multiplicity",
    "p_rho0",
]


def k_grid(points: int) -> np.ndarray:
    """`points` uniform pseudo-momenta covering [-pi/2, pi/2)."""
    if points < 1:
        raise ValueError(f"k grid needs at least one point, got {points}")
    return -math.pi / 2 + math.pi * np.arange(points) / points


def symmetric_k_grid(points: int) -> np.ndarray:
    """Grid closed under k -> -k (it skips -pi/2, whose mirror is outside the zone)."""
    if points < 1:
        raise ValueError(f"k grid needs at least one point, got {points}")
    return -math.pi / 2 + math.pi * (np.arange(points) + 1) / (points + 1)


def state_rows(states: Sequence[EigenState]) -> List[dict]:
    return [
        {
            "k": s.k,
            "state": i,
            "omega": s.omega,
            "ipr": s.ipr,
            "support_radius": s.support_radius,
            "exchange_label": s.exchange_label.value,
            "bound_flag": bool(s.bound),
            "cluster_multiplicity": s.cluster_multiplicity,
            "p_rho0": s.p_rho0,
        }
        for i, s in enumerate(states)
    ]


def _scan_one(k: float, params: WalkParams) -> List[dict]:
    return state_rows(eigensystem(build_bloch(k, params)))


def band_scan(params: WalkParams, k_values: Sequence[float], threads: Optional[int] = None) -> pd.DataFrame:
    """
    Diagonalize at every k and return one row per (k, state).

    Rows are ordered by k, then by state index (ascending omega); a k that
    appears twice in `k_values` contributes its rows twice. A k that
    fails does not stop the others; the scan then raises
    PartialResultsError whose `partial` holds the table of the successful
    points and `failed` maps each failed k to its error.
    """
    k_values = [check_k(k) for k in k_values]
    workers = max(1, min(threads or Config.THREADS, len(k_values) or 1))
    Logger.info(
        "Spectral",
        f"Band scan over {len(k_values)} k points (phi={params.phi}, phi0={params.phi0}, "
        f"{params.parity.value}, N={params.ring_sites}) with {workers} threads",
    )

    results: Dict[int, List[dict]] = {}
    failed: Dict[float, str] = {}
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_scan_one, k, params) for k in k_values]
        for i, (k, future) in enumerate(zip(k_values, futures)):
            try:
                results[i] = future.result()
            except WalkError as e:
                Logger.error("Spectral", f"k={k}: {e}")
                failed[k] = str(e)
            if (i + 1) % Config.PROGRESS_EVERY == 0:
                Logger.info("Spectral", f"{i + 1}/{len(k_values)} k points done")

    order = sorted(results, key=lambda i: (k_values[i], i))
    rows = [row for i in order for row in results[i]]
    table = pd.DataFrame(rows, columns=BAND_COLUMNS)
    if failed:
        raise PartialResultsError(f"{len(failed)} of {len(k_values)} k points failed", partial=table, failed=failed)
    return table

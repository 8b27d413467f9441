"""
Time series of observables collected during an evolution run.
"""

from dataclasses import asdict, dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from config import Config
from utils.errors import ContractViolation, NumericalError
from utils.logger import Logger
from walk.field import AmplitudeField
from walk.types import Coords
from observables.probability import Marginal, ProbabilityGrid, joint_probability, marginals

SERIES_COLUMNS = (
    "t",
    "norm",
    "mean_rho",
    "mean_sigma",
    "var_rho",
    "var_sigma",
    "mean_x1",
    "mean_x2",
    "diagonal",
)


@dataclass(frozen=True)
class ObservableRecord:
    t: int
    norm: float
    mean_rho: float
    mean_sigma: float
    var_rho: float
    var_sigma: float
    diagonal: float

    @property
    def mean_x1(self) -> float:
        return 0.5 * (self.mean_sigma + self.mean_rho)

    @property
    def mean_x2(self) -> float:
        return 0.5 * (self.mean_sigma - self.mean_rho)

    @classmethod
    def from_marginals(cls, t: int, p_rho: Marginal, p_sigma: Marginal) -> "ObservableRecord":
        return cls(
            t=int(t),
            norm=p_rho.total(),
            mean_rho=p_rho.mean(),
            mean_sigma=p_sigma.mean(),
            var_rho=p_rho.variance(),
            var_sigma=p_sigma.variance(),
            diagonal=p_rho.at(0),
        )

    def row(self) -> dict:
        data = asdict(self)
        data["mean_x1"] = self.mean_x1
        data["mean_x2"] = self.mean_x2
        return {name: data[name] for name in SERIES_COLUMNS}


@dataclass(frozen=True)
class TransientTrend:
    """Drift of <rho> - rho0 before the walkers first meet."""

    times: np.ndarray
    shift: np.ndarray
    window_end: int
    overlap_time: Optional[int]

    @property
    def final(self) -> float:
        return float(self.shift[-1]) if self.shift.size else 0.0

    @property
    def sign(self) -> int:
        return int(np.sign(self.final))

    @property
    def monotone(self) -> bool:
        """True when the shift never moves against its final sign."""
        steps = np.diff(self.shift) * self.sign
        return bool(np.all(steps >= -1e-12))


class ObservableSeries:
    """Records of a single run plus optional marginal, joint and field snapshots."""

    def __init__(self, coords: Coords, rho0: Optional[float] = None):
        self.coords = Coords.parse(coords)
        self.rho0 = rho0
        self.records: List[ObservableRecord] = []
        self.marginal_snapshots: Dict[int, Tuple[Marginal, Marginal]] = {}
        self.joint_snapshots: Dict[int, ProbabilityGrid] = {}
        self.field_snapshots: Dict[int, AmplitudeField] = {}

    def __len__(self):
        return len(self.records)

    def __getitem__(self, index) -> ObservableRecord:
        return self.records[index]

    @property
    def times(self) -> List[int]:
        return [r.t for r in self.records]

    @property
    def last(self) -> ObservableRecord:
        return self.records[-1]

    def record(
        self,
        t: int,
        field: AmplitudeField,
        keep_marginals: bool = False,
        keep_joint: bool = False,
        keep_field: bool = False,
    ) -> ObservableRecord:
        """Compute and append the observables of the field at time t."""
        p_rho, p_sigma = marginals(field)
        rec = ObservableRecord.from_marginals(t, p_rho, p_sigma)
        if abs(rec.norm - 1.0) > Config.NORM_TOL:
            raise NumericalError(
                f"Norm drifted to {rec.norm:.15f} at t={t}",
                diagnostics={"t": t, "norm": rec.norm},
            )
        if self.rho0 is None:
            self.rho0 = rec.mean_rho
        self.records.append(rec)
        if keep_marginals:
            self.marginal_snapshots[rec.t] = (p_rho, p_sigma)
        if keep_joint:
            self.joint_snapshots[rec.t] = joint_probability(field)
        if keep_field:
            self.field_snapshots[rec.t] = field
        return rec

    def column(self, name: str) -> np.ndarray:
        if name not in SERIES_COLUMNS:
            raise KeyError(f"Unknown series column '{name}'")
        return np.array([r.row()[name] for r in self.records])

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame([r.row() for r in self.records], columns=list(SERIES_COLUMNS))
        frame["rho_shift"] = frame["mean_rho"] - (self.rho0 if self.rho0 is not None else 0.0)
        return frame

    def overlap_time(self, threshold: float = 1e-8) -> Optional[int]:
        """First recorded time the walkers share a site with probability above threshold."""
        for rec in self.records:
            if rec.diagonal > threshold:
                return rec.t
        return None

    def transient_trend(self, baseline: Optional["ObservableSeries"] = None,
                        threshold: float = 1e-8) -> TransientTrend:
        """
        <rho> - rho0 over the records before overlap.

        With a baseline run (same times, usually phi = 0) its own shift is
        subtracted, leaving the part driven by the interaction.
        """
        overlap = self.overlap_time(threshold)
        if baseline is not None:
            base_overlap = baseline.overlap_time(threshold)
            if base_overlap is not None and (overlap is None or base_overlap < overlap):
                overlap = base_overlap
        window = [r for r in self.records if overlap is None or r.t < overlap]
        times = np.array([r.t for r in window], dtype=int)
        shift = np.array([r.mean_rho for r in window]) - self.rho0
        if baseline is not None:
            reference = {r.t: r.mean_rho - baseline.rho0 for r in baseline.records}
            missing = [t for t in times if t not in reference]
            if missing:
                raise ContractViolation(f"Baseline series lacks times {missing[:5]}")
            shift = shift - np.array([reference[t] for t in times])
        window_end = int(times[-1]) if times.size else 0
        Logger.debug("Observables", f"Transient window ends at t={window_end} (overlap at {overlap})")
        return TransientTrend(times=times, shift=shift, window_end=window_end, overlap_time=overlap)

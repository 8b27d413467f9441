"""
Joint and marginal probabilities of a two-walker field, and their moments.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np
import pandas as pd

from utils.numerics import fixed_sum
from walk.field import AmplitudeField, to_x1x2
from walk.types import Coords

AXIS_NAMES = {
    Coords.X1X2: ("x1", "x2"),
    Coords.RHO_SIGMA: ("rho", "sigma"),
}


@dataclass(frozen=True, eq=False)
class ProbabilityGrid:
    """P over the lattice of a field, same origin and coordinates."""

    coords: Coords
    origin: Tuple[int, int]
    values: np.ndarray

    def axis_values(self, axis: int) -> np.ndarray:
        return self.origin[axis] + np.arange(self.values.shape[axis])

    def total(self) -> float:
        return fixed_sum(self.values)

    def at(self, a: int, b: int) -> float:
        i, j = a - self.origin[0], b - self.origin[1]
        if 0 <= i < self.values.shape[0] and 0 <= j < self.values.shape[1]:
            return float(self.values[i, j])
        return 0.0

    def to_frame(self, include_zeros: bool = False) -> pd.DataFrame:
        """Long table with one row per cell: (a, b, p)."""
        a_name, b_name = AXIS_NAMES[self.coords]
        a, b = np.meshgrid(self.axis_values(0), self.axis_values(1), indexing="ij")
        frame = pd.DataFrame({a_name: a.ravel(), b_name: b.ravel(), "p": self.values.ravel()})
        if not include_zeros:
            frame = frame[frame["p"] > 0].reset_index(drop=True)
        return frame


@dataclass(frozen=True, eq=False)
class Marginal:
    """A one-dimensional distribution over consecutive integer coordinates."""

    name: str
    start: int
    values: np.ndarray

    @property
    def coordinates(self) -> np.ndarray:
        return self.start + np.arange(self.values.size)

    def total(self) -> float:
        return fixed_sum(self.values)

    def mean(self) -> float:
        return fixed_sum(self.coordinates * self.values)

    def variance(self) -> float:
        centred = self.coordinates - self.mean()
        return fixed_sum(centred * centred * self.values)

    def at(self, coordinate: int) -> float:
        i = coordinate - self.start
        return float(self.values[i]) if 0 <= i < self.values.size else 0.0

    def mass_where(self, mask_fn) -> float:
        """Probability over coordinates x with mask_fn(x) true."""
        mask = np.asarray(mask_fn(self.coordinates), dtype=bool)
        return fixed_sum(self.values[mask])

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({self.name: self.coordinates, "p": self.values})


def joint_probability(field: AmplitudeField) -> ProbabilityGrid:
    return ProbabilityGrid(field.coords, field.origin, field.probability())


def marginals(field: AmplitudeField) -> Tuple[Marginal, Marginal]:
    """(P_rho, P_sigma) of a field in either coordinate system."""
    p = field.probability()
    if field.coords is Coords.RHO_SIGMA:
        return (
            Marginal("rho", field.origin[0], p.sum(axis=1)),
            Marginal("sigma", field.origin[1], p.sum(axis=0)),
        )

    (x10, x11), (x20, x21) = field.extents
    x1 = field.axis_values(0)[:, None]
    x2 = field.axis_values(1)[None, :]
    rho_start, rho_stop = x10 - x21, x11 - x20
    sigma_start, sigma_stop = x10 + x20, x11 + x21
    weights = p.ravel()
    rho_idx = np.broadcast_to(x1 - x2 - rho_start, p.shape).ravel()
    sigma_idx = np.broadcast_to(x1 + x2 - sigma_start, p.shape).ravel()
    p_rho = np.bincount(rho_idx, weights=weights, minlength=rho_stop - rho_start + 1)
    p_sigma = np.bincount(sigma_idx, weights=weights, minlength=sigma_stop - sigma_start + 1)
    return Marginal("rho", rho_start, p_rho), Marginal("sigma", sigma_start, p_sigma)


def position_marginals(field: AmplitudeField) -> Tuple[Marginal, Marginal]:
    """(P_x1, P_x2), the single-walker distributions."""
    field = to_x1x2(field)
    p = field.probability()
    return (
        Marginal("x1", field.origin[0], p.sum(axis=1)),
        Marginal("x2", field.origin[1], p.sum(axis=0)),
    )


def mean_distance(field: AmplitudeField) -> float:
    """Signed first moment of rho = x1 - x2."""
    return marginals(field)[0].mean()


def diagonal_weight(field: AmplitudeField) -> float:
    """Probability of both walkers on the same site (rho = 0)."""
    return marginals(field)[0].at(0)

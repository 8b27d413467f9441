"""Probabilities, marginals and moment series."""

from observables.probability import (
    Marginal,
    ProbabilityGrid,
    diagonal_weight,
    joint_probability,
    marginals,
    mean_distance,
    position_marginals,
)
from observables.series import ObservableRecord, ObservableSeries, TransientTrend

__all__ = [
    "Marginal",
    "ProbabilityGrid",
    "diagonal_weight",
    "joint_probability",
    "marginals",
    "mean_distance",
    "position_marginals",
    "ObservableRecord",
    "ObservableSeries",
    "TransientTrend",
]

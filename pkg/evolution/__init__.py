"""Time evolution: initial states, one-step maps and the multi-step driver."""

from evolution.initial_state import InitialKind, InitialStateSpec, build_initial
from evolution.stepper import Boundary, Stepper, step, step_rhosigma, step_x1x2
from evolution.runner import evolve

__all__ = [
    "InitialKind",
    "InitialStateSpec",
    "build_initial",
    "Boundary",
    "Stepper",
    "step",
    "step_rhosigma",
    "step_x1x2",
    "evolve",
]

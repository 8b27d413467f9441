"""
Multi-step driver: builds the initial field, steps it and collects
observables.
"""

from typing import Callable, Iterable, Optional, Union

from config import Config
from utils.errors import DomainError, PartialResultsError, WalkError
from utils.logger import Logger
from walk.field import AmplitudeField
from walk.types import WalkParams
from evolution.initial_state import InitialStateSpec, build_initial
from evolution.stepper import Boundary, Stepper
from observables.series import ObservableSeries

Observer = Callable[[int, AmplitudeField], None]


def evolve(
    init: Union[InitialStateSpec, AmplitudeField],
    params: WalkParams,
    t_max: int,
    observer: Optional[Observer] = None,
    stride: int = 1,
    snapshot_times: Iterable[int] = (),
    joint_times: Iterable[int] = (),
    field_times: Iterable[int] = (),
    boundary: Union[str, Boundary] = Boundary.HARD,
) -> ObservableSeries:
    """
    Run t_max steps and return the recorded series.

    Observables are recorded at t = 0, every `stride` steps and at t_max;
    the observer, if given, is called at the same times. Times listed in
    `snapshot_times`, `joint_times` or `field_times` are always recorded and
    keep marginals, joint grids or the full field respectively.

    An already built AmplitudeField can stand in for the initial spec; it is
    used as given.
    """
    if t_max < 0:
        raise DomainError(f"t_max must be >= 0, got {t_max}")
    if stride < 1:
        raise DomainError(f"stride must be >= 1, got {stride}")

    field = init if isinstance(init, AmplitudeField) else build_initial(init, params, t_max)
    snapshot_times = set(int(t) for t in snapshot_times)
    joint_times = set(int(t) for t in joint_times)
    field_times = set(int(t) for t in field_times)
    extra = snapshot_times | joint_times | field_times

    stepper = Stepper(field.coords, field.extents, params, boundary)
    stepper.check_sector(field)
    series = ObservableSeries(field.coords)

    Logger.info(
        "Evolution",
        f"Evolving {t_max} steps on a {field.shape[0]}x{field.shape[1]} {field.coords.value} lattice "
        f"(phi={params.phi}, phi0={params.phi0})",
    )

    def observe(t: int, current: AmplitudeField):
        if not (t % stride == 0 or t == t_max or t in extra):
            return
        series.record(
            t,
            current,
            keep_marginals=t in snapshot_times,
            keep_joint=t in joint_times,
            keep_field=t in field_times,
        )
        if observer is None:
            return
        try:
            observer(t, current)
        except Exception as e:
            raise PartialResultsError(f"Observer failed at t={t}: {e}", partial=series) from e

    observe(0, field)
    for t in range(1, t_max + 1):
        try:
            field = stepper.advance(field, step=t)
        except WalkError:
            Logger.error("Evolution", f"Step {t} failed after {len(series)} records")
            raise
        observe(t, field)
        if t % Config.PROGRESS_EVERY == 0:
            Logger.info("Evolution", f"t={t}/{t_max}")
    return series

"""
One-step maps of the two-walker state.

Both steppers apply the Hadamard x Hadamard coin, the conditional shift and
the interaction phase of the destination separation in one pass over the
lattice. Shifts per coin component (R, D, U, L):

    (x1, x2):      (+1, +1)  (+1, -1)  (-1, +1)  (-1, -1)
    (rho, sigma):  ( 0, +2)  (+2,  0)  (-2,  0)  ( 0, -2)
"""

from enum import Enum
from typing import Optional, Union

import numpy as np

from utils.errors import ContractViolation, GrowthError
from walk.coin import coin_apply_array
from walk.coupling import interaction_phase
from walk.field import AmplitudeField, Extents
from walk.types import Coords, WalkParams

SHIFTS = {
    Coords.X1X2: ((1, 1), (1, -1), (-1, 1), (-1, -1)),
    Coords.RHO_SIGMA: ((0, 2), (2, 0), (-2, 0), (0, -2)),
}


class Boundary(str, Enum):
    HARD = "hard"
    PERIODIC = "periodic"

    @classmethod
    def parse(cls, value: Union[str, "Boundary"]) -> "Boundary":
        if isinstance(value, Boundary):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ContractViolation(f"Unknown boundary '{value}', expected 'hard' or 'periodic'") from None


def _translate(plane: np.ndarray, da: int, db: int, out: np.ndarray):
    """Write plane moved by (da, db) into out, dropping what leaves the grid."""
    na, nb = plane.shape
    src_a = slice(max(0, -da), na - max(0, da))
    dst_a = slice(max(0, da), na - max(0, -da))
    src_b = slice(max(0, -db), nb - max(0, db))
    dst_b = slice(max(0, db), nb - max(0, -db))
    out[dst_a, dst_b] = plane[src_a, src_b]


def _edge_occupied(data: np.ndarray, width: int) -> bool:
    return bool(
        np.any(data[:width]) or np.any(data[-width:]) or np.any(data[:, :width]) or np.any(data[:, -width:])
    )


class Stepper:
    """
    Advances fields of fixed coordinates and extents.

    The interaction phase grid is computed once per stepper, so long runs
    should reuse one instance.
    """

    def __init__(
        self,
        coords: Coords,
        extents: Extents,
        params: WalkParams,
        boundary: Union[str, Boundary] = Boundary.HARD,
    ):
        self.coords = Coords.parse(coords)
        self.extents = extents
        self.params = params
        self.boundary = Boundary.parse(boundary)
        self.shifts = SHIFTS[self.coords]
        self.edge_width = max(max(abs(a), abs(b)) for a, b in self.shifts)

        (a0, a1), (b0, b1) = extents
        a = np.arange(a0, a1 + 1)[:, None]
        b = np.arange(b0, b1 + 1)[None, :]
        if self.coords is Coords.X1X2:
            rho = a - b
        else:
            rho = np.broadcast_to(a, (a1 - a0 + 1, b1 - b0 + 1))
        self.phase = interaction_phase(rho, params.phi, params.phi0)[..., None]

        if self.boundary is Boundary.PERIODIC and self.coords is Coords.RHO_SIGMA:
            if (a1 - a0 + 1) % 2 or (b1 - b0 + 1) % 2:
                raise ContractViolation("A periodic (rho, sigma) lattice needs even side lengths")

    def check_sector(self, field: AmplitudeField):
        """(rho, sigma) fields must stay on the parity sublattice of the parameters."""
        if self.coords is not Coords.RHO_SIGMA:
            return
        field.check_sublattice()
        parities = field.rho_parities()
        if parities and parities != {self.params.parity.remainder}:
            raise ContractViolation(
                f"Field occupies rho parities {sorted(parities)}, outside the {self.params.parity.value} sector"
            )

    def advance(self, field: AmplitudeField, step: Optional[int] = None) -> AmplitudeField:
        if field.coords is not self.coords or field.extents != self.extents:
            raise ContractViolation(
                f"Stepper built for {self.coords.value} {self.extents}, got {field.coords.value} {field.extents}"
            )
        if self.boundary is Boundary.HARD and _edge_occupied(field.data, self.edge_width):
            where = f" at step {step}" if step is not None else ""
            raise GrowthError(
                f"Amplitude reached the lattice edge{where}; rerun with larger extents",
                step=step,
            )

        mixed = coin_apply_array(field.data)
        out = np.zeros_like(mixed)
        for c, (da, db) in enumerate(self.shifts):
            if self.boundary is Boundary.PERIODIC:
                out[..., c] = np.roll(mixed[..., c], (da, db), axis=(0, 1))
            else:
                _translate(mixed[..., c], da, db, out[..., c])
        out *= self.phase
        return AmplitudeField.adopt(self.coords, field.origin, out)


def step_x1x2(field: AmplitudeField, params: WalkParams, boundary: Union[str, Boundary] = Boundary.HARD) -> AmplitudeField:
    """One step of the map in particle coordinates."""
    if field.coords is not Coords.X1X2:
        raise ContractViolation("step_x1x2 needs a field in x1x2 coordinates")
    return Stepper(Coords.X1X2, field.extents, params, boundary).advance(field)


def step_rhosigma(field: AmplitudeField, params: WalkParams, boundary: Union[str, Boundary] = Boundary.HARD) -> AmplitudeField:
    """One step of the map in relative/centre coordinates."""
    if field.coords is not Coords.RHO_SIGMA:
        raise ContractViolation("step_rhosigma needs a field in rhosigma coordinates")
    stepper = Stepper(Coords.RHO_SIGMA, field.extents, params, boundary)
    stepper.check_sector(field)
    return stepper.advance(field)


def step(field: AmplitudeField, params: WalkParams, boundary: Union[str, Boundary] = Boundary.HARD) -> AmplitudeField:
    if field.coords is Coords.X1X2:
        return step_x1x2(field, params, boundary)
    return step_rhosigma(field, params, boundary)

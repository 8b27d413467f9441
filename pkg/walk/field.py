"""
AmplitudeField: four coin amplitudes per lattice site, in (x1, x2) or
(rho, sigma) coordinates.

The array is indexed data[a - origin[0], b - origin[1], c] with (a, b) the
site coordinates and c the coin component in R, D, U, L order. In
(rho, sigma) coordinates, cells with rho + sigma odd do not correspond to a
pair of integer positions and always hold zero.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple

import numpy as np

from utils.errors import ContractViolation, DomainError
from utils.numerics import fixed_sum
from walk.types import CoinVector, Coords

Extents = Tuple[Tuple[int, int], Tuple[int, int]]


@dataclass(frozen=True, eq=False)
class AmplitudeField:
    coords: Coords
    origin: Tuple[int, int]
    data: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "coords", Coords.parse(self.coords))
        data = np.array(self.data, dtype=np.complex128, copy=True)
        if data.ndim != 3 or data.shape[2] != 4:
            raise DomainError(f"Field data must have shape (na, nb, 4), got {data.shape}")
        if not np.all(np.isfinite(data)):
            raise DomainError("Field amplitudes must be finite")
        data.setflags(write=False)
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "origin", (int(self.origin[0]), int(self.origin[1])))

    @classmethod
    def adopt(cls, coords: Coords, origin: Tuple[int, int], data: np.ndarray) -> "AmplitudeField":
        """Wrap a freshly built complex128 buffer without copying or re-checking it."""
        field = cls.__new__(cls)
        data.setflags(write=False)
        object.__setattr__(field, "coords", coords)
        object.__setattr__(field, "origin", (int(origin[0]), int(origin[1])))
        object.__setattr__(field, "data", data)
        return field

    @classmethod
    def zeros(cls, coords: Coords, extents: Extents) -> "AmplitudeField":
        (a0, a1), (b0, b1) = extents
        if a1 < a0 or b1 < b0:
            raise DomainError(f"Empty extents {extents}")
        return cls(coords, (a0, b0), np.zeros((a1 - a0 + 1, b1 - b0 + 1, 4), dtype=complex))

    @classmethod
    def from_points(
        cls,
        coords: Coords,
        amplitudes: Dict[Tuple[int, int], object],
        extents: Optional[Extents] = None,
    ) -> "AmplitudeField":
        """Build a field from {(a, b): CoinVector or length-4 array}."""
        if not amplitudes and extents is None:
            raise DomainError("A field needs at least one site or explicit extents")
        if extents is None:
            a_vals = [p[0] for p in amplitudes]
            b_vals = [p[1] for p in amplitudes]
            extents = ((min(a_vals), max(a_vals)), (min(b_vals), max(b_vals)))
        (a0, a1), (b0, b1) = extents
        data = np.zeros((a1 - a0 + 1, b1 - b0 + 1, 4), dtype=complex)
        for (a, b), value in amplitudes.items():
            if not (a0 <= a <= a1 and b0 <= b <= b1):
                raise DomainError(f"Site {(a, b)} lies outside extents {extents}")
            vec = value.as_array() if isinstance(value, CoinVector) else np.asarray(value, dtype=complex)
            data[a - a0, b - b0] += vec
        field = cls(coords, (a0, b0), data)
        field.check_sublattice()
        return field

    @property
    def shape(self) -> Tuple[int, int]:
        return self.data.shape[0], self.data.shape[1]

    @property
    def extents(self) -> Extents:
        na, nb = self.shape
        return (
            (self.origin[0], self.origin[0] + na - 1),
            (self.origin[1], self.origin[1] + nb - 1),
        )

    def axis_values(self, axis: int) -> np.ndarray:
        return self.origin[axis] + np.arange(self.shape[axis])

    def with_data(self, data: np.ndarray) -> "AmplitudeField":
        return AmplitudeField(self.coords, self.origin, data)

    def probability(self) -> np.ndarray:
        """Per-site probability, summed over the coin in fixed order."""
        p = np.abs(self.data) ** 2
        return ((p[..., 0] + p[..., 1]) + p[..., 2]) + p[..., 3]

    def norm(self) -> float:
        return fixed_sum(self.probability())

    def normalized(self) -> "AmplitudeField":
        n = self.norm()
        if n == 0:
            raise DomainError("Cannot normalize a zero field")
        return self.with_data(self.data / np.sqrt(n))

    def amplitude_at(self, a: int, b: int) -> np.ndarray:
        i, j = a - self.origin[0], b - self.origin[1]
        na, nb = self.shape
        if 0 <= i < na and 0 <= j < nb:
            return self.data[i, j].copy()
        return np.zeros(4, dtype=complex)

    def support(self) -> Optional[Extents]:
        """Smallest extents holding every nonzero amplitude, or None."""
        mask = np.any(self.data != 0, axis=2)
        if not mask.any():
            return None
        ia = np.flatnonzero(mask.any(axis=1))
        ib = np.flatnonzero(mask.any(axis=0))
        return (
            (self.origin[0] + int(ia[0]), self.origin[0] + int(ia[-1])),
            (self.origin[1] + int(ib[0]), self.origin[1] + int(ib[-1])),
        )

    def resized(self, extents: Extents) -> "AmplitudeField":
        """Pad or crop to new extents; cropping nonzero amplitude is an error."""
        target = AmplitudeField.zeros(self.coords, extents)
        support = self.support()
        if support is not None:
            (sa0, sa1), (sb0, sb1) = support
            (ta0, ta1), (tb0, tb1) = extents
            if sa0 < ta0 or sa1 > ta1 or sb0 < tb0 or sb1 > tb1:
                raise DomainError(f"Extents {extents} would crop the field support {support}")
        data = np.array(target.data)
        (ta0, ta1), (tb0, tb1) = extents
        (a0, a1), (b0, b1) = self.extents
        lo_a, hi_a = max(a0, ta0), min(a1, ta1)
        lo_b, hi_b = max(b0, tb0), min(b1, tb1)
        if lo_a <= hi_a and lo_b <= hi_b:
            data[lo_a - ta0:hi_a - ta0 + 1, lo_b - tb0:hi_b - tb0 + 1] = self.data[
                lo_a - a0:hi_a - a0 + 1, lo_b - b0:hi_b - b0 + 1
            ]
        return AmplitudeField(self.coords, (ta0, tb0), data)

    def check_sublattice(self):
        """In (rho, sigma) coordinates, cells with rho + sigma odd must be empty."""
        if self.coords is not Coords.RHO_SIGMA:
            return
        parity = (self.axis_values(0)[:, None] + self.axis_values(1)[None, :]) % 2
        if np.any(self.data[parity == 1] != 0):
            raise ContractViolation("Amplitude on a (rho, sigma) cell with rho + sigma odd")

    def rho_parities(self) -> set:
        """Parities of rho that carry nonzero amplitude."""
        if self.coords is Coords.RHO_SIGMA:
            rho = self.axis_values(0)[:, None] + 0 * self.axis_values(1)[None, :]
        else:
            rho = self.axis_values(0)[:, None] - self.axis_values(1)[None, :]
        occupied = np.any(self.data != 0, axis=2)
        return {int(p) for p in np.unique(rho[occupied] % 2)}


def union_extents(extents: Iterable[Extents]) -> Extents:
    extents = list(extents)
    return (
        (min(e[0][0] for e in extents), max(e[0][1] for e in extents)),
        (min(e[1][0] for e in extents), max(e[1][1] for e in extents)),
    )


def fields_close(a: AmplitudeField, b: AmplitudeField, tol: float) -> bool:
    return max_difference(a, b) < tol


def max_difference(a: AmplitudeField, b: AmplitudeField) -> float:
    """Largest amplitude difference after aligning both fields on common extents."""
    if a.coords is not b.coords:
        raise ContractViolation("Cannot compare fields in different coordinates")
    extents = union_extents([a.extents, b.extents])
    da = a.resized(extents).data
    db = b.resized(extents).data
    return float(np.max(np.abs(da - db))) if da.size else 0.0


def to_rhosigma(field: AmplitudeField) -> AmplitudeField:
    """Change variables (x1, x2) -> (rho, sigma) = (x1 - x2, x1 + x2)."""
    if field.coords is Coords.RHO_SIGMA:
        return field
    (x10, x11), (x20, x21) = field.extents
    rho_ext = (x10 - x21, x11 - x20)
    sigma_ext = (x10 + x20, x11 + x21)
    out = np.zeros((rho_ext[1] - rho_ext[0] + 1, sigma_ext[1] - sigma_ext[0] + 1, 4), dtype=complex)
    x1 = field.axis_values(0)[:, None]
    x2 = field.axis_values(1)[None, :]
    rho_idx = (x1 - x2) - rho_ext[0]
    sigma_idx = (x1 + x2) - sigma_ext[0]
    out[rho_idx, sigma_idx] = field.data
    return AmplitudeField(Coords.RHO_SIGMA, (rho_ext[0], sigma_ext[0]), out)


def to_x1x2(field: AmplitudeField) -> AmplitudeField:
    """Change variables (rho, sigma) -> (x1, x2) = ((sigma + rho) / 2, (sigma - rho) / 2)."""
    if field.coords is Coords.X1X2:
        return field
    field.check_sublattice()
    rho = field.axis_values(0)[:, None] + np.zeros(field.shape[1], dtype=int)[None, :]
    sigma = np.zeros(field.shape[0], dtype=int)[:, None] + field.axis_values(1)[None, :]
    valid = (rho + sigma) % 2 == 0
    x1 = (sigma + rho)[valid] // 2
    x2 = (sigma - rho)[valid] // 2
    extents = ((int(x1.min()), int(x1.max())), (int(x2.min()), int(x2.max())))
    out = np.zeros((extents[0][1] - extents[0][0] + 1, extents[1][1] - extents[1][0] + 1, 4), dtype=complex)
    out[x1 - extents[0][0], x2 - extents[1][0]] = field.data[valid]
    return AmplitudeField(Coords.X1X2, (extents[0][0], extents[1][0]), out)

"""
Initial states: a point, a uniform segment along sigma carrying a rho
profile, and a pair of Gaussian wavepackets.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from config import Config
from utils.errors import ContractViolation, DomainError
from walk.field import AmplitudeField, Extents
from walk.types import CoinVector, Coords, Parity, WalkParams

_UP_RIGHT = CoinVector(1, 0, 0, 0)


class InitialKind(str, Enum):
    POINT = "point"
    SIGMA_SEGMENT = "sigma_segment"
    GAUSSIAN_PAIR = "gaussian_pair"


@dataclass(frozen=True)
class InitialStateSpec:
    """
    Description of an initial field.

    Point uses `coords` and `position`; SigmaSegment uses `rho_profile`
    (rho -> four amplitudes) and the odd/even sigma run from `sigma_start` to
    `sigma_stop` in steps of two; GaussianPair uses `centers`, `width` and
    `momenta`. `extents` fixes the lattice; when None it is sized from the
    run length.
    """

    kind: InitialKind
    coin0: CoinVector = _UP_RIGHT
    coords: Coords = Coords.X1X2
    position: Tuple[int, int] = (0, 0)
    rho_profile: Tuple[Tuple[int, Tuple[complex, ...]], ...] = ()
    sigma_start: int = 0
    sigma_stop: int = 0
    centers: Tuple[int, int] = (0, 0)
    width: float = 1.0
    momenta: Tuple[float, float] = (0.0, 0.0)
    extents: Optional[Extents] = None
    label: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "kind", InitialKind(self.kind))
        object.__setattr__(self, "coords", Coords.parse(self.coords))
        if self.kind is not InitialKind.SIGMA_SEGMENT and abs(self.coin0.norm() - 1.0) > Config.COMPONENT_NORM_TOL:
            raise DomainError(f"coin0 must have unit norm, got {self.coin0.norm():.15f}")
        if self.kind is InitialKind.GAUSSIAN_PAIR and not self.width > 0:
            raise DomainError(f"Gaussian width must be > 0, got {self.width}")
        if self.kind is InitialKind.SIGMA_SEGMENT:
            if not self.rho_profile:
                raise DomainError("A sigma segment needs a non-empty rho profile")
            parities = {rho % 2 for rho, _ in self.rho_profile}
            if len(parities) != 1:
                raise ContractViolation("The rho profile mixes odd and even rho")
            if (self.sigma_start - self.sigma_stop) % 2 or self.sigma_stop < self.sigma_start:
                raise DomainError(
                    f"sigma run {self.sigma_start}..{self.sigma_stop} must be ascending with even length difference"
                )
            if (self.sigma_start - next(iter(parities))) % 2:
                raise ContractViolation("sigma and rho must share parity (x1 and x2 are integers)")

    # Constructors -----------------------------------------------------------

    @classmethod
    def point(cls, position, coin0: CoinVector = _UP_RIGHT, coords=Coords.X1X2, extents=None) -> "InitialStateSpec":
        return cls(InitialKind.POINT, coin0=coin0, coords=coords, position=tuple(position), extents=extents)

    @classmethod
    def sigma_segment(cls, profile, sigma_start: int, sigma_stop: int, extents=None, label="") -> "InitialStateSpec":
        """`profile` maps rho to four coin amplitudes (CoinVector or sequence)."""
        items = []
        for rho, value in sorted(dict(profile).items()):
            vec = value.as_array() if isinstance(value, CoinVector) else np.asarray(value, dtype=complex)
            items.append((int(rho), tuple(complex(c) for c in vec)))
        return cls(
            InitialKind.SIGMA_SEGMENT,
            rho_profile=tuple(items),
            sigma_start=int(sigma_start),
            sigma_stop=int(sigma_stop),
            coords=Coords.RHO_SIGMA,
            extents=extents,
            label=label,
        )

    @classmethod
    def sigma_segment_from_sites(cls, rho_sites, coin0: CoinVector, sigma_start: int, sigma_stop: int,
                                 extents=None) -> "InitialStateSpec":
        return cls.sigma_segment({rho: coin0 for rho in rho_sites}, sigma_start, sigma_stop, extents=extents,
                                 label="rho_sites")

    @classmethod
    def gaussian_pair(cls, centers, width: float, momenta=(math.pi / 2, math.pi / 2),
                      coin0: CoinVector = _UP_RIGHT, extents=None) -> "InitialStateSpec":
        return cls(
            InitialKind.GAUSSIAN_PAIR,
            coin0=coin0,
            centers=(int(centers[0]), int(centers[1])),
            width=float(width),
            momenta=(float(momenta[0]), float(momenta[1])),
            extents=extents,
        )

    @property
    def field_coords(self) -> Coords:
        if self.kind is InitialKind.POINT:
            return self.coords
        if self.kind is InitialKind.SIGMA_SEGMENT:
            return Coords.RHO_SIGMA
        return Coords.X1X2

    def to_json(self) -> dict:
        data = {"kind": self.kind.value}
        if self.kind is InitialKind.POINT:
            data.update(coords=self.coords.value, position=list(self.position), coin=self.coin0.to_json())
        elif self.kind is InitialKind.SIGMA_SEGMENT:
            data.update(
                rho_profile=[[rho, [[c.real, c.imag] for c in amps]] for rho, amps in self.rho_profile],
                sigma_start=self.sigma_start,
                sigma_stop=self.sigma_stop,
            )
        else:
            data.update(
                centers=list(self.centers),
                width=self.width,
                momenta=list(self.momenta),
                coin=self.coin0.to_json(),
            )
        if self.extents is not None:
            data["extents"] = [list(self.extents[0]), list(self.extents[1])]
        return data


# Builders -------------------------------------------------------------------


def _gaussian_profile(center: int, width: float, momentum: float) -> Tuple[int, np.ndarray]:
    half = int(math.ceil(Config.GAUSSIAN_CUTOFF * width))
    x = np.arange(center - half, center + half + 1)
    amplitude = np.exp(-((x - center) ** 2) / (4.0 * width ** 2)) * np.exp(1j * momentum * x)
    return center - half, amplitude


def _raw_field(init: InitialStateSpec) -> AmplitudeField:
    if init.kind is InitialKind.POINT:
        a, b = init.position
        if init.coords is Coords.RHO_SIGMA and (a + b) % 2:
            raise ContractViolation(f"(rho, sigma)=({a}, {b}) is not a lattice point: parities differ")
        return AmplitudeField.from_points(init.coords, {(a, b): init.coin0})

    if init.kind is InitialKind.SIGMA_SEGMENT:
        sigmas = range(init.sigma_start, init.sigma_stop + 1, 2)
        amplitudes = {}
        for rho, amps in init.rho_profile:
            vec = np.asarray(amps, dtype=complex)
            if not np.any(vec):
                continue
            for sigma in sigmas:
                amplitudes[(rho, sigma)] = vec
        if not amplitudes:
            raise DomainError("The rho profile is identically zero")
        return AmplitudeField.from_points(Coords.RHO_SIGMA, amplitudes)

    start1, psi1 = _gaussian_profile(init.centers[0], init.width, init.momenta[0])
    start2, psi2 = _gaussian_profile(init.centers[1], init.width, init.momenta[1])
    data = psi1[:, None, None] * psi2[None, :, None] * init.coin0.as_array()[None, None, :]
    return AmplitudeField(Coords.X1X2, (start1, start2), data)


def padding_for(coords: Coords, t_max: int) -> int:
    """Sites of padding so a run of t_max steps never reaches the edge."""
    per_step = 2 if coords is Coords.RHO_SIGMA else 1
    return per_step * int(t_max) + Config.EXTENT_MARGIN


def build_initial(init: InitialStateSpec, params: WalkParams, t_max: int = 0) -> AmplitudeField:
    """Normalized initial field on extents sized for t_max steps."""
    if t_max < 0:
        raise DomainError(f"t_max must be >= 0, got {t_max}")
    raw = _raw_field(init)
    if raw.coords is Coords.RHO_SIGMA:
        parities = raw.rho_parities()
        if parities and parities != {params.parity.remainder}:
            raise ContractViolation(
                f"Initial rho support is not in the {params.parity.value} sector"
            )
    if init.extents is not None:
        try:
            field = raw.resized(init.extents)
        except DomainError as e:
            raise DomainError(f"Initial state does not fit the lattice: {e}") from None
    else:
        pad = padding_for(raw.coords, t_max)
        (a0, a1), (b0, b1) = raw.extents
        field = raw.resized(((a0 - pad, a1 + pad), (b0 - pad, b1 + pad)))
    return field.normalized()


def sector_of(field: AmplitudeField) -> Optional[Parity]:
    parities = field.rho_parities()
    if len(parities) != 1:
        return None
    return Parity.ODD if parities == {1} else Parity.EVEN

"""
Domain types shared by every package: coin vectors, walk parameters and the
enums for parity sector and coordinate system.
"""

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Sequence, Union

import numpy as np

from utils.errors import DomainError
from utils.numerics import wrap_phase

# Coin component order: r = u1u2, d = u1d2, u = d1u2, l = d1d2
COMPONENTS = ("R", "D", "U", "L")
R, D, U, L = range(4)


class Parity(str, Enum):
    """Parity sector of the relative coordinate rho."""

    ODD = "odd"
    EVEN = "even"

    @classmethod
    def of(cls, rho: int) -> "Parity":
        return cls.ODD if rho % 2 else cls.EVEN

    @classmethod
    def parse(cls, value: Union[str, "Parity"]) -> "Parity":
        if isinstance(value, Parity):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise DomainError(f"Unknown parity '{value}', expected 'odd' or 'even'") from None

    @property
    def remainder(self) -> int:
        return 1 if self is Parity.ODD else 0


class Coords(str, Enum):
    """Coordinate system of an amplitude field."""

    X1X2 = "x1x2"
    RHO_SIGMA = "rhosigma"

    @classmethod
    def parse(cls, value: Union[str, "Coords"]) -> "Coords":
        if isinstance(value, Coords):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise DomainError(f"Unknown coordinates '{value}', expected 'x1x2' or 'rhosigma'") from None


def _parse_complex(value) -> complex:
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise DomainError(f"Complex values are [re, im] pairs, got {value!r}")
        return complex(float(value[0]), float(value[1]))
    if isinstance(value, str):
        return complex(value.replace(" ", ""))
    return complex(value)


@dataclass(frozen=True)
class CoinVector:
    """Amplitudes col(r, d, u, l) of the four-sided coin."""

    r: complex
    d: complex
    u: complex
    l: complex

    def __post_init__(self):
        for name in ("r", "d", "u", "l"):
            value = complex(getattr(self, name))
            if not (math.isfinite(value.real) and math.isfinite(value.imag)):
                raise DomainError(f"Coin component {name} is not finite: {value}")
            object.__setattr__(self, name, value)

    @classmethod
    def from_array(cls, values: Sequence) -> "CoinVector":
        values = [_parse_complex(v) for v in values]
        if len(values) != 4:
            raise DomainError(f"A coin vector has 4 components, got {len(values)}")
        return cls(*values)

    @classmethod
    def basis(cls, index: int) -> "CoinVector":
        values = [0j] * 4
        values[index] = 1.0 + 0j
        return cls(*values)

    @classmethod
    def product(cls, first: Sequence, second: Sequence) -> "CoinVector":
        """Tensor product (u1, d1) x (u2, d2) of two single-walker coins."""
        return cls.from_array(np.kron(np.asarray(first, dtype=complex), np.asarray(second, dtype=complex)))

    def as_array(self) -> np.ndarray:
        return np.array([self.r, self.d, self.u, self.l], dtype=complex)

    def norm(self) -> float:
        return float(np.linalg.norm(self.as_array()))

    def normalized(self) -> "CoinVector":
        n = self.norm()
        if n == 0:
            raise DomainError("Cannot normalize a zero coin vector")
        return CoinVector.from_array(self.as_array() / n)

    def to_json(self) -> list:
        return [[c.real, c.imag] for c in self.as_array()]


@dataclass(frozen=True)
class WalkParams:
    """Interaction strength, self-energy, parity sector and ring size."""

    phi: float
    phi0: float = 0.0
    parity: Parity = Parity.ODD
    ring_sites: int = 191

    def __post_init__(self):
        object.__setattr__(self, "phi", float(self.phi))
        object.__setattr__(self, "phi0", float(self.phi0))
        object.__setattr__(self, "parity", Parity.parse(self.parity))
        if not (math.isfinite(self.phi) and math.isfinite(self.phi0)):
            raise DomainError(f"Phases must be finite, got phi={self.phi}, phi0={self.phi0}")
        if int(self.ring_sites) != self.ring_sites or self.ring_sites < 1:
            raise DomainError(f"ring_sites must be a positive integer, got {self.ring_sites}")
        object.__setattr__(self, "ring_sites", int(self.ring_sites))

    @classmethod
    def from_lc(cls, phi: float, lc: int, parity: Union[str, Parity], phi0: float = 0.0) -> "WalkParams":
        """
        Build parameters from the circumference l_c of the relative-coordinate circle.

        The odd sector uses N = l_c (l_c odd), the even sector N = l_c / 2
        (l_c even), so l_c = 191 and l_c = 190 give 764x764 and 380x380
        Bloch matrices.
        """
        parity = Parity.parse(parity)
        lc = int(lc)
        if parity is Parity.ODD:
            if lc % 2 != 1:
                raise DomainError(f"The odd sector needs an odd l_c, got {lc}")
            sites = lc
        else:
            if lc % 2 != 0 or lc < 2:
                raise DomainError(f"The even sector needs an even l_c >= 2, got {lc}")
            sites = lc // 2
        return cls(phi=phi, phi0=phi0, parity=parity, ring_sites=sites)

    @property
    def phi_reduced(self) -> float:
        return wrap_phase(self.phi)

    @property
    def phi0_reduced(self) -> float:
        return wrap_phase(self.phi0)

    @property
    def geometry(self):
        from walk.geometry import ring_geometry

        return ring_geometry(self.ring_sites, self.parity)

    def with_phases(self, phi: float = None, phi0: float = None) -> "WalkParams":
        return replace(
            self,
            phi=self.phi if phi is None else phi,
            phi0=self.phi0 if phi0 is None else phi0,
        )

    def require_parity(self, rho: int):
        if Parity.of(rho) is not self.parity:
            raise DomainError(f"rho={rho} does not belong to the {self.parity.value} sector")

    def to_json(self) -> dict:
        return {
            "phi": self.phi,
            "phi0": self.phi0,
            "parity": self.parity.value,
            "ring_sites": self.ring_sites,
        }

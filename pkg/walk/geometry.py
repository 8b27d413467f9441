"""
Ring geometry of one parity sector of the relative coordinate.

A sector is a ring of N sites; site j holds rho_j = rho_min + 2 j, where the
rho values of the sector's parity fill the half-open interval (-N, N].
Neighbouring sites differ by 2 in rho and site N-1 wraps back to site 0.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from utils.errors import DomainError
from walk.types import Parity


@dataclass(frozen=True)
class RingGeometry:
    sites: int
    parity: Parity

    @cached_property
    def rho_min(self) -> int:
        lowest = -self.sites + 1
        if (lowest - self.parity.remainder) % 2:
            lowest += 1
        return lowest

    @cached_property
    def rho_max(self) -> int:
        return self.rho_min + 2 * (self.sites - 1)

    @property
    def circumference(self) -> int:
        """Circumference in units of rho (two per site)."""
        return 2 * self.sites

    @cached_property
    def rho_values(self) -> np.ndarray:
        return self.rho_min + 2 * np.arange(self.sites)

    def contains(self, rho: int) -> bool:
        return (rho - self.parity.remainder) % 2 == 0 and self.rho_min <= rho <= self.rho_max

    def index_of(self, rho: int) -> int:
        if not self.contains(rho):
            raise DomainError(
                f"rho={rho} is outside the {self.parity.value} ring "
                f"[{self.rho_min}, {self.rho_max}] of {self.sites} sites"
            )
        return (rho - self.rho_min) // 2

    def centered(self, rho: int) -> int:
        """Representative of rho (mod 2N) in (-N, N]."""
        c = self.circumference
        value = (rho + self.sites - 1) % c - self.sites + 1
        return int(value)

    @cached_property
    def mirror_index(self) -> np.ndarray:
        """Site index of -rho_j for every site j."""
        mirrored = np.array([self.centered(-int(r)) for r in self.rho_values])
        return (mirrored - self.rho_min) // 2

    @cached_property
    def abs_rho(self) -> np.ndarray:
        return np.abs(self.rho_values)


@lru_cache(maxsize=64)
def ring_geometry(sites: int, parity: Parity) -> RingGeometry:
    """Shared geometry instance, so cached per-ring arrays are built once."""
    return RingGeometry(sites, parity)

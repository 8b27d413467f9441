"""
Configuration for the Coulomb walk toolkit.
"""

import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


def _int_env(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None or not value.strip():
        return default
    return int(value)


class Config:
    """Configuration class for the toolkit."""

    VERSION = "1.0.0"

    # Runtime environment
    THREADS = _int_env("QWALK_THREADS", 0) or (os.cpu_count() or 1)
    LOG_LEVEL = os.getenv("QWALK_LOG_LEVEL", "INFO").upper()
    OUTPUT_DIR = os.getenv("QWALK_OUTPUT_DIR", "output")
    PROGRESS_EVERY = 50  # Log a progress line every N steps / k points

    # Lattice geometry
    DEFAULT_LC_ODD = 191
    DEFAULT_LC_EVEN = 190
    EXTENT_MARGIN = 4  # Extra sites beyond the light cone
    GAUSSIAN_CUTOFF = 8.0  # Gaussian profiles are truncated at this many widths

    # Tolerances
    COMPONENT_NORM_TOL = 1e-12  # coin0 and initial fields must be unit norm
    UNITARITY_TOL = 1e-12
    DEGENERACY_TOL = 1e-8  # Eigenphase gap below which states share a cluster
    EXCHANGE_TOL = 1e-8  # |<v|P|v> -+ 1| for Boson / Fermion labels
    EIGEN_RESIDUAL_TOL = 1e-9
    ANALYTIC_RESIDUAL_TOL = 1e-12
    CROSSCHECK_TOL = 1e-8
    NORM_TOL = 1e-10

    # Bound-state criterion
    BOUND_IPR_FACTOR = 5.0  # ipr > factor / N
    BOUND_RADIUS_FRACTION = 1.0 / 8.0  # support_radius < fraction * N
    SUPPORT_MASS = 0.99

    # Spectra
    DEFAULT_K_POINTS = 129

    # Oracle
    ORACLE_MAX_BASIS = 10_000

    @classmethod
    def validate(cls):
        """Validate configuration values."""
        if cls.THREADS < 1:
            raise ValueError(f"THREADS must be >= 1, got {cls.THREADS}")

        if cls.LOG_LEVEL not in ("DEBUG", "INFO", "WARNING", "ERROR"):
            raise ValueError(f"LOG_LEVEL must be DEBUG/INFO/WARNING/ERROR, got {cls.LOG_LEVEL}")

        if cls.EXTENT_MARGIN < 0:
            raise ValueError(f"EXTENT_MARGIN must be >= 0, got {cls.EXTENT_MARGIN}")

        if cls.GAUSSIAN_CUTOFF <= 0:
            raise ValueError(f"GAUSSIAN_CUTOFF must be > 0, got {cls.GAUSSIAN_CUTOFF}")

        if not 0 < cls.SUPPORT_MASS <= 1:
            raise ValueError(f"SUPPORT_MASS must be in (0, 1], got {cls.SUPPORT_MASS}")

        if cls.DEFAULT_K_POINTS < 1:
            raise ValueError(f"DEFAULT_K_POINTS must be >= 1, got {cls.DEFAULT_K_POINTS}")

        if cls.DEFAULT_LC_ODD % 2 != 1:
            raise ValueError(f"DEFAULT_LC_ODD must be odd, got {cls.DEFAULT_LC_ODD}")

        if cls.DEFAULT_LC_EVEN % 2 != 0:
            raise ValueError(f"DEFAULT_LC_EVEN must be even, got {cls.DEFAULT_LC_EVEN}")

        for name in ("UNITARITY_TOL", "DEGENERACY_TOL", "EXCHANGE_TOL", "EIGEN_RESIDUAL_TOL",
                     "ANALYTIC_RESIDUAL_TOL", "CROSSCHECK_TOL", "NORM_TOL"):
            if getattr(cls, name) <= 0:
                raise ValueError(f"{name} must be > 0")

    @classmethod
    def bound_thresholds(cls, ring_sites: int) -> tuple:
        """(minimum ipr, maximum support radius) of a bound state on a ring of N sites."""
        return cls.BOUND_IPR_FACTOR / ring_sites, cls.BOUND_RADIUS_FRACTION * ring_sites

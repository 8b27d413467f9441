"""Small numeric helpers shared across packages."""

import math

import numpy as np


def wrap_phase(angle):
    """Reduce phases to [-pi, pi). Works on scalars and arrays."""
    wrapped = np.mod(np.asarray(angle, dtype=float) + np.pi, 2.0 * np.pi) - np.pi
    if np.ndim(wrapped) == 0:
        return float(wrapped)
    return wrapped


def circular_distance(a, b):
    """Distance between phases on the unit circle."""
    return np.abs(wrap_phase(np.asarray(a) - np.asarray(b)))


def fixed_sum(values) -> float:
    """Order-independent, correctly rounded sum of a real array."""
    return math.fsum(np.asarray(values, dtype=float).ravel().tolist())


def phases_match(a, b, tol: float) -> bool:
    """
    True when two eigenphase multisets coincide within tol.

    Matching is greedy in sorted order along the circle; both lists must have
    the same length.
    """
    a = np.sort(wrap_phase(np.asarray(a, dtype=float)))
    b = np.sort(wrap_phase(np.asarray(b, dtype=float)))
    if a.shape != b.shape:
        return False
    if a.size == 0:
        return True
    # Values near -pi may sort to the opposite end; try small rotations.
    for shift in range(-4, 5):
        if np.all(circular_distance(a, np.roll(b, shift)) < tol):
            return True
    return False


def max_unmatched_distance(a, b) -> float:
    """Largest distance from a phase in either list to its nearest partner."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    d = circular_distance(a[:, None], b[None, :])
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))

"""
Tests for the Bloch operator, the eigensystem and band scans.
"""

import math
import sys
from functools import lru_cache
from pathlib import Path

import numpy as np
import pytest

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from utils.errors import DomainError, NumericalError, PartialResultsError
from utils.numerics import phases_match, wrap_phase
from walk import HADAMARD, WalkParams, exchange_permutation
from spectral import (
    BAND_COLUMNS,
    ExchangeLabel,
    band_scan,
    build_bloch,
    check_k,
    cluster_phases,
    eigensystem,
    inverse_participation,
    rho_profile,
    support_radius,
    symmetric_k_grid,
)
import spectral.bands as bands


@lru_cache(maxsize=None)
def odd_k0_states(phi: float = 1.0):
    return eigensystem(build_bloch(0.0, WalkParams.from_lc(phi, 191, "odd")))


def omegas(k: float, params: WalkParams) -> np.ndarray:
    return np.array([s.omega for s in eigensystem(build_bloch(k, params))])


def test_bloch_operator_is_unitary():
    print("\n" + "=" * 60)
    print("TEST: Bloch operator is unitary at every k")
    print("=" * 60)

    rng = np.random.default_rng(1)
    for parity, sites in (("odd", 7), ("even", 6)):
        params = WalkParams(phi=rng.uniform(-3, 3), phi0=rng.uniform(0, 6), parity=parity, ring_sites=sites)
        for k in rng.uniform(-math.pi / 2, math.pi / 2, size=5):
            op = build_bloch(k, params)
            assert op.dimension == 4 * sites
            assert op.unitarity_error() < 1e-12
    print("[OK] M^H M = 1")


def test_k_domain():
    check_k(-math.pi / 2)
    with pytest.raises(DomainError):
        check_k(math.pi / 2)
    with pytest.raises(DomainError):
        build_bloch(2.0, WalkParams(phi=1.0))


def test_exchange_commutes_with_bloch_operator():
    for parity, sites in (("odd", 9), ("even", 8)):
        params = WalkParams(phi=1.3, phi0=0.4, parity=parity, ring_sites=sites)
        perm = exchange_permutation(params.geometry)
        for k in (0.0, 0.3, -1.2):
            m = build_bloch(k, params).matrix
            np.testing.assert_allclose(m[np.ix_(perm, perm)], m, atol=1e-15)


def test_dimer_quasienergies():
    print("\n" + "=" * 60)
    print("TEST: Dimers at omega = phi / |rho0| and the omega = phi triple")
    print("=" * 60)

    states = odd_k0_states()
    assert sum(1 for s in states if abs(s.omega - 1.0) < 1e-9) >= 3

    for rho0 in (3, 5, 7, 9):
        matches = [s for s in states if abs(s.omega - 1.0 / rho0) < 1e-9]
        dimers = []
        for s in matches:
            geometry = s.geometry
            on_support = s.p_rho[geometry.index_of(rho0)] + s.p_rho[geometry.index_of(-rho0)]
            if on_support > 0.999:
                dimers.append(s)
        assert len(dimers) >= 2, f"no dimer pair at rho0={rho0}"
        for s in dimers:
            c = s.components
            assert np.max(np.abs(c[:, 1])) < 1e-10 and np.max(np.abs(c[:, 2])) < 1e-10
            assert np.max(np.abs(c[:, 0] - c[:, 3])) < 1e-10
            assert s.residual < 1e-9
        print(f"  rho0={rho0}: {len(dimers)} states at omega=1/{rho0}")
    print("[OK] Dimer family present")


def test_phi0_state_in_even_sector():
    params = WalkParams.from_lc(1.0, 190, "even", phi0=math.pi / 2)
    states = eigensystem(build_bloch(0.0, params))
    hits = [s for s in states if abs(s.omega - math.pi / 2) < 1e-9 and s.p_rho0 > 0.99]
    assert len(hits) == 1
    assert hits[0].residual < 1e-9
    assert hits[0].bound


def test_even_sector_fermions_vanish_on_rho0():
    params = WalkParams(phi=1.0, phi0=0.7, parity="even", ring_sites=10)
    j = params.geometry.index_of(0)
    fermions = [s for s in eigensystem(build_bloch(0.4, params)) if s.exchange_label is ExchangeLabel.FERMION]
    assert fermions
    for s in fermions:
        r, d, u, l = s.components[j]
        assert abs(r) < 1e-9 and abs(l) < 1e-9
        assert abs(d + u) < 1e-9


def test_spectral_symmetries():
    print("\n" + "=" * 60)
    print("TEST: k -> -k and (phi, k) -> (-phi, -k) symmetries")
    print("=" * 60)

    params = WalkParams(phi=1.0, parity="odd", ring_sites=31)
    negated = params.with_phases(phi=-1.0)
    for k in symmetric_k_grid(33):
        base = omegas(k, params)
        assert phases_match(base, omegas(-k, params), 1e-10), f"k -> -k fails at k={k}"
        assert phases_match(wrap_phase(-base), omegas(-k, negated), 1e-10), f"negation fails at k={k}"
    print("[OK] Both symmetries hold on 33 k points")


def test_cluster_phases_wraps_around_pi():
    w = np.array([-math.pi + 1e-10, 0.5, math.pi - 1e-10, 0.5 + 1e-12, -1.0])
    groups = cluster_phases(w)
    assert [sorted(g.tolist()) for g in groups] == [[4], [1, 3], [0, 2]]


def test_single_site_ring_by_hand():
    params = WalkParams(phi=2.0, phi0=0.4, parity="even", ring_sites=1)
    for k in (0.0, 0.7, -1.1):
        twists = np.diag([np.exp(2j * k), 1.0, 1.0, np.exp(-2j * k)])
        expected = np.exp(0.4j) * twists @ HADAMARD
        np.testing.assert_allclose(build_bloch(k, params).matrix, expected, atol=1e-14)

    # H is a traceless involution: eigenvalues +1, +1, -1, -1 times e^{i phi0}
    op = build_bloch(0.0, params)
    hand = wrap_phase(np.array([0.4, 0.4, 0.4 + math.pi, 0.4 + math.pi]))
    assert phases_match([s.omega for s in eigensystem(op)], hand, 1e-12)


def test_free_spectrum_is_symmetric_under_negation():
    for parity, sites in (("odd", 21), ("even", 20)):
        params = WalkParams(phi=0.0, phi0=0.0, parity=parity, ring_sites=sites)
        w = omegas(0.0, params)
        assert phases_match(w, wrap_phase(-w), 1e-9), f"{parity} sector"


def test_diagnostics_report_reduced_phases():
    info = build_bloch(0.0, WalkParams(phi=7.0, phi0=-4.0, parity="even", ring_sites=4)).diagnostics()
    assert info["phi"] == 7.0
    assert info["phi_reduced"] == pytest.approx(7.0 - 2 * math.pi)
    assert info["phi0_reduced"] == pytest.approx(-4.0 + 2 * math.pi)
    assert -math.pi <= info["phi_reduced"] < math.pi


def test_localization_metrics():
    params = WalkParams(phi=1.0, parity="odd", ring_sites=7)
    geometry = params.geometry
    vector = np.zeros(28, dtype=complex)
    vector[4 * geometry.index_of(3)] = 1.0
    p = rho_profile(vector)
    assert inverse_participation(p) == pytest.approx(1.0)
    assert support_radius(p, geometry) == 3

    flat = np.full(7, 1.0 / 7)
    assert inverse_participation(flat) == pytest.approx(1.0 / 7)
    assert support_radius(flat, geometry) == 7


def test_band_scan_table():
    params = WalkParams(phi=1.0, parity="odd", ring_sites=9)
    k_values = [0.5, -0.5, 0.0]
    table = band_scan(params, k_values, threads=2)
    assert list(table.columns) == BAND_COLUMNS
    assert len(table) == 3 * 36
    assert list(table["k"].drop_duplicates()) == sorted(k_values)
    assert list(table[table["k"] == -0.5]["state"]) == list(range(36))


def test_band_scan_keeps_repeated_k():
    params = WalkParams(phi=1.0, parity="odd", ring_sites=5)
    table = band_scan(params, [0.3, -0.2, 0.3], threads=3)
    assert len(table) == 3 * 20
    assert list(table["k"]) == [-0.2] * 20 + [0.3] * 40
    assert list(table[table["k"] == 0.3]["state"]) == list(range(20)) * 2


def test_free_walk_has_no_bound_rows():
    params = WalkParams(phi=0.0, parity="odd", ring_sites=41)
    table = band_scan(params, symmetric_k_grid(8))
    assert not table["bound_flag"].any()


def test_band_scan_reports_partial_results(monkeypatch):
    original = bands._scan_one

    def flaky(k, params):
        if k == 0.25:
            raise NumericalError("solver gave up")
        return original(k, params)

    monkeypatch.setattr(bands, "_scan_one", flaky)
    params = WalkParams(phi=1.0, parity="even", ring_sites=6)
    with pytest.raises(PartialResultsError) as info:
        band_scan(params, [0.0, 0.25, 0.5])
    assert set(info.value.failed) == {0.25}
    assert sorted(info.value.partial["k"].unique()) == [0.0, 0.5]


if __name__ == "__main__":
    test_bloch_operator_is_unitary()
    test_k_domain()
    test_exchange_commutes_with_bloch_operator()
    test_dimer_quasienergies()
    test_phi0_state_in_even_sector()
    test_even_sector_fermions_vanish_on_rho0()
    test_spectral_symmetries()
    test_cluster_phases_wraps_around_pi()
    test_single_site_ring_by_hand()
    test_free_spectrum_is_symmetric_under_negation()
    test_diagnostics_report_reduced_phases()
    test_localization_metrics()
    test_band_scan_table()
    test_band_scan_keeps_repeated_k()
    test_free_walk_has_no_bound_rows()
    print("\nALL SPECTRAL TESTS PASSED [OK]")

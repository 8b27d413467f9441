"""
Tests for closed-form bound states, exchange classification and the catalog.
"""

import sys
from functools import lru_cache
from pathlib import Path

import numpy as np
import pytest

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from config import Config
from utils.errors import ContractViolation, DomainError
from walk import WalkParams
from spectral import ExchangeLabel, build_bloch, eigensystem, make_state
from boundstates import (
    NearDimerBranch,
    build_dimer,
    build_near_dimer,
    build_phi0_state,
    catalog,
    catalog_frame,
    classify,
    component_frame,
    group_clusters,
    rho_profile_of,
)

ODD = WalkParams.from_lc(1.0, 191, "odd")

# Quasienergies of the bound states listed for phi = 1, k = 0
PUBLISHED_OMEGAS = (-1.499, -1.453, -1.263, -0.8328, 0.2677, 0.2678, 0.333, 0.6546, 0.6750, 1.000)


@lru_cache(maxsize=None)
def odd_states():
    return eigensystem(build_bloch(0.0, ODD))


@lru_cache(maxsize=None)
def odd_catalog():
    return catalog(ODD, 0.0)


def test_dimer_closed_form():
    print("\n" + "=" * 60)
    print("TEST: Closed-form dimers satisfy the eigen-equation")
    print("=" * 60)

    for rho0 in (3, -5, 9):
        state = build_dimer(rho0, 1.0, ODD)
        assert state.omega == pytest.approx(1.0 / abs(rho0))
        assert state.residual < Config.ANALYTIC_RESIDUAL_TOL
        assert list(rho_profile_of(state)) == [rho0]
    for bad in (0, 1, -1, 4):
        with pytest.raises(DomainError):
            build_dimer(bad, 1.0, ODD)
    print("[OK] omega = phi / |rho0|")


def test_near_dimer_branches():
    labels = {branch: build_near_dimer(branch, 1.0).exchange_label for branch in NearDimerBranch}
    assert labels[NearDimerBranch.BOSON] is ExchangeLabel.BOSON
    assert labels[NearDimerBranch.SYMMETRIC] is ExchangeLabel.BOSON
    assert labels[NearDimerBranch.FERMION] is ExchangeLabel.FERMION
    assert labels[NearDimerBranch.PLUS_ONE] is ExchangeLabel.MIXED
    with pytest.raises(DomainError):
        build_near_dimer("sideways", 1.0)
    with pytest.raises(DomainError):
        build_near_dimer("boson", 1.0, WalkParams.from_lc(1.0, 190, "even"))


def test_phi0_state():
    even = WalkParams.from_lc(1.0, 190, "even", phi0=2.0)
    state = build_phi0_state(even)
    assert state.omega == pytest.approx(2.0)
    assert state.p_rho0 == pytest.approx(1.0)
    with pytest.raises(DomainError):
        build_phi0_state(ODD)


def test_classify_dimer_pair():
    print("\n" + "=" * 60)
    print("TEST: Dimers at +rho0 and -rho0 combine into a boson and a fermion")
    print("=" * 60)

    states = classify([build_dimer(3, 1.0, ODD), build_dimer(-3, 1.0, ODD)])
    assert [s.exchange_label for s in states] == [ExchangeLabel.BOSON, ExchangeLabel.FERMION]
    assert abs(states[0].exchange_value - 1.0) < 1e-8
    assert abs(states[1].exchange_value + 1.0) < 1e-8
    for s in states:
        assert s.cluster_multiplicity == 2
        np.testing.assert_allclose(np.abs(s.components[:, 0]) ** 2 + np.abs(s.components[:, 3]) ** 2, s.p_rho)
    print("[OK] Boson first, then fermion")


def test_classify_near_dimer_triple():
    triple = [build_near_dimer(b, 1.0) for b in ("plus_one", "minus_one", "symmetric")]
    labels = [s.exchange_label for s in classify(triple)]
    assert labels.count(ExchangeLabel.BOSON) == 2
    assert labels.count(ExchangeLabel.FERMION) == 1


def test_classify_rejects_mixed_clusters():
    dimer = build_dimer(3, 1.0, ODD)
    moved = make_state(dimer.vector, build_bloch(0.1, ODD))
    with pytest.raises(ContractViolation):
        classify([dimer, moved])
    with pytest.raises(ContractViolation):
        classify([dimer, build_dimer(5, 1.0, ODD)])
    assert classify([]) == []


def test_group_clusters_follows_eigensystem():
    states = odd_states()
    groups = group_clusters(states)
    assert sum(len(g) for g in groups) == len(states)
    for group in groups:
        assert all(s.cluster_multiplicity == len(group) for s in group)


def test_published_frequencies_present():
    print("\n" + "=" * 60)
    print("TEST: Bound-state frequency list at phi = 1, k = 0")
    print("=" * 60)

    records = odd_catalog()
    omegas = np.array([r.omega for r in records])
    for target in PUBLISHED_OMEGAS:
        distance = float(np.min(np.abs(omegas - target)))
        print(f"  {target:+.4f}: nearest molecule at distance {distance:.1e}")
        assert distance < 5e-3

    nearest_one = min(records, key=lambda r: abs(r.omega - 1.0))
    nearest_third = min(records, key=lambda r: abs(r.omega - 1.0 / 3.0))
    assert abs(nearest_one.omega - 1.0) < 1e-10 and nearest_one.multiplicity == 3
    assert abs(nearest_third.omega - 1.0 / 3.0) < 1e-10 and nearest_third.multiplicity == 2
    print("[OK] Frequencies and multiplicities reproduced")


def test_catalog_stable_under_larger_ring():
    larger = catalog(WalkParams.from_lc(1.0, ODD.ring_sites + 2, "odd"), 0.0)
    other = np.array([r.omega for r in larger])
    for record in odd_catalog():
        i = int(np.argmin(np.abs(other - record.omega)))
        assert abs(other[i] - record.omega) < 1e-6, f"omega={record.omega:+.6f} moved"


def test_fermion_and_boson_molecules():
    states = odd_states()
    min_ipr, _ = Config.bound_thresholds(ODD.ring_sites)

    def most_localized_near(target):
        candidates = [s for s in states if abs(s.omega - target) < 5e-3]
        return max(candidates, key=lambda s: s.ipr)

    fermion = most_localized_near(0.6750)
    boson = most_localized_near(-1.2634)
    assert fermion.exchange_label is ExchangeLabel.FERMION
    assert boson.exchange_label is ExchangeLabel.BOSON
    assert abs(fermion.exchange_value + 1.0) < 1e-8
    assert abs(boson.exchange_value - 1.0) < 1e-8
    assert fermion.ipr > min_ipr and boson.ipr > min_ipr
    # Neither is a single-site dimer
    assert np.count_nonzero(fermion.p_rho > 1e-3) > 1
    assert np.count_nonzero(boson.p_rho > 1e-3) > 1


def test_catalog_tables():
    records = odd_catalog()
    assert records
    assert [r.omega for r in records] == sorted(r.omega for r in records)
    thirds = [r for r in records if abs(r.omega - 1.0 / 3.0) < 1e-9]
    ones = [r for r in records if abs(r.omega - 1.0) < 1e-9]
    assert len(thirds) >= 2 and all(r.multiplicity >= 2 for r in thirds)
    assert len(ones) >= 3 and all(r.multiplicity >= 3 for r in ones)
    assert {r.exchange_label for r in thirds} == {ExchangeLabel.BOSON, ExchangeLabel.FERMION}

    frame = catalog_frame(records)
    assert len(frame) == len(records)
    assert list(frame.columns[:7]) == ["omega", "k", "exchange_label", "multiplicity", "ipr", "support_radius", "p_rho0"]
    assert "P_-3" in frame.columns and "P_191" in frame.columns
    np.testing.assert_allclose(frame.filter(like="P_").sum(axis=1), 1.0, atol=1e-10)

    parts = component_frame(records, cutoff=1e-12)
    assert list(parts.columns) == ["molecule", "omega", "rho", "R", "D", "U", "L", "P"]
    np.testing.assert_allclose(parts[["R", "D", "U", "L"]].sum(axis=1), parts["P"], atol=1e-14)



if __name__ == "__main__":
    test_dimer_closed_form()
    test_near_dimer_branches()
    test_phi0_state()
    test_classify_dimer_pair()
    test_classify_near_dimer_triple()
    test_classify_rejects_mixed_clusters()
    test_group_clusters_follows_eigensystem()
    test_published_frequencies_present()
    test_catalog_stable_under_larger_ring()
    test_fermion_and_boson_molecules()
    test_catalog_tables()
    print("\nALL BOUND STATE TESTS PASSED [OK]")

"""
Tests for probabilities, marginals, observable series and the transient trend.
"""

import math
import sys
from pathlib import Path

import numpy as np
import pytest

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from utils.errors import ContractViolation, NumericalError
from walk import AmplitudeField, CoinVector, Coords, WalkParams, exchange, to_rhosigma
from evolution import InitialStateSpec, evolve
from observables import (
    ObservableSeries,
    diagonal_weight,
    joint_probability,
    marginals,
    mean_distance,
    position_marginals,
)


def random_x1x2_field(rng, half: int) -> AmplitudeField:
    shape = (2 * half + 1, 2 * half + 1, 4)
    data = rng.normal(size=shape) + 1j * rng.normal(size=shape)
    return AmplitudeField(Coords.X1X2, (-half, -half), data).normalized()


def test_marginals_agree_between_coordinates():
    print("\n" + "=" * 60)
    print("TEST: Marginals from (x1, x2) and (rho, sigma) fields agree")
    print("=" * 60)

    field = random_x1x2_field(np.random.default_rng(5), half=4)
    p_rho, p_sigma = marginals(field)
    q_rho, q_sigma = marginals(to_rhosigma(field))

    assert p_rho.start == q_rho.start and p_sigma.start == q_sigma.start
    np.testing.assert_allclose(p_rho.values, q_rho.values, atol=1e-15)
    np.testing.assert_allclose(p_sigma.values, q_sigma.values, atol=1e-15)
    assert p_rho.total() == pytest.approx(1.0, abs=1e-14)
    assert joint_probability(field).total() == pytest.approx(1.0, abs=1e-14)
    print("[OK] P_rho and P_sigma are coordinate independent")


def test_symmetric_field_has_even_rho_distribution():
    field = random_x1x2_field(np.random.default_rng(9), half=5)
    boson = field.with_data(field.data + exchange(field).data).normalized()
    p_rho, _ = marginals(boson)
    np.testing.assert_allclose(p_rho.values, p_rho.values[::-1], rtol=1e-12, atol=1e-16)
    assert abs(mean_distance(boson)) < 1e-12


def test_exchange_reverses_mean_distance():
    field = random_x1x2_field(np.random.default_rng(17), half=5)
    for f in (field, to_rhosigma(field)):
        assert abs(mean_distance(f)) > 1e-3
        assert mean_distance(exchange(f)) == pytest.approx(-mean_distance(f), abs=1e-12)


def test_joint_grid_sums_to_rho_marginal():
    field = random_x1x2_field(np.random.default_rng(23), half=6)
    joint = joint_probability(to_rhosigma(field))
    p_rho, _ = marginals(field)
    assert joint.origin[0] == p_rho.start
    np.testing.assert_allclose(joint.values.sum(axis=1), p_rho.values, rtol=0, atol=1e-13)


def test_point_moments():
    field = AmplitudeField.from_points(Coords.X1X2, {(3, 3): CoinVector.basis(2), (5, 1): CoinVector.basis(0)})
    field = field.normalized()
    p_rho, p_sigma = marginals(field)
    assert p_rho.mean() == pytest.approx(2.0)
    assert p_rho.variance() == pytest.approx(4.0)
    assert p_sigma.mean() == pytest.approx(6.0)
    assert p_sigma.variance() == pytest.approx(0.0)
    assert diagonal_weight(field) == pytest.approx(0.5)

    p_x1, p_x2 = position_marginals(to_rhosigma(field))
    assert p_x1.mean() == pytest.approx(4.0)
    assert p_x2.mean() == pytest.approx(2.0)


def test_series_records_and_frame():
    params = WalkParams(phi=1.0, parity="even", ring_sites=11)
    series = evolve(InitialStateSpec.point((0, 3)), params, 12, stride=5, snapshot_times=[7], joint_times=[12])
    assert series.times == [0, 5, 7, 10, 12]
    assert set(series.marginal_snapshots) == {7}
    assert set(series.joint_snapshots) == {12}
    assert series.rho0 == pytest.approx(-3.0)

    frame = series.to_frame()
    assert list(frame.columns[:9]) == [
        "t", "norm", "mean_rho", "mean_sigma", "var_rho", "var_sigma", "mean_x1", "mean_x2", "diagonal",
    ]
    np.testing.assert_allclose(frame["rho_shift"], frame["mean_rho"] + 3.0, atol=1e-12)
    np.testing.assert_allclose(frame["mean_x1"] - frame["mean_x2"], frame["mean_rho"], atol=1e-12)
    with pytest.raises(KeyError):
        series.column("energy")


def test_series_rejects_norm_drift():
    series = ObservableSeries(Coords.X1X2)
    field = AmplitudeField.from_points(Coords.X1X2, {(0, 0): [1, 1, 0, 0]})
    with pytest.raises(NumericalError) as info:
        series.record(0, field)
    assert info.value.diagnostics["norm"] == pytest.approx(2.0)


def test_overlap_time_and_baseline_times():
    params = WalkParams(phi=0.0, parity="even", ring_sites=11)
    series = evolve(InitialStateSpec.point((4, -4)), params, 8)
    # rho starts at 8 and can shrink by at most 2 per step
    assert series.overlap_time() == 4

    other = evolve(InitialStateSpec.point((4, -4)), params, 8, stride=3)
    with pytest.raises(ContractViolation):
        series.transient_trend(baseline=other)


def test_attraction_and_repulsion_pull_opposite_ways():
    print("\n" + "=" * 60)
    print("TEST: +pi repels and -pi attracts before the walkers meet")
    print("=" * 60)

    coin = CoinVector(0.5, 0.5j, 0.5j, -0.5)
    init = InitialStateSpec.gaussian_pair((60, -60), 5.0, momenta=(math.pi / 2, math.pi / 2), coin0=coin)
    t_max = 150

    def run(phi):
        return evolve(init, WalkParams(phi=phi, phi0=0.0, parity="even", ring_sites=11), t_max, stride=10)

    baseline = run(0.0)
    plus = run(math.pi).transient_trend(baseline=baseline)
    minus = run(-math.pi).transient_trend(baseline=baseline)
    print(f"  window ends at t={plus.window_end}: shift(+pi) = {plus.final:+.4e}, shift(-pi) = {minus.final:+.4e}")

    # rho0 = 120 > 0: a positive shift pushes the walkers apart
    assert plus.window_end >= 30
    assert abs(plus.final) > 1e-3 and abs(minus.final) > 1e-3
    assert plus.sign == 1 and minus.sign == -1
    assert plus.monotone and minus.monotone
    print("[OK] +pi repels, -pi attracts")


if __name__ == "__main__":
    test_marginals_agree_between_coordinates()
    test_symmetric_field_has_even_rho_distribution()
    test_exchange_reverses_mean_distance()
    test_joint_grid_sums_to_rho_marginal()
    test_point_moments()
    test_series_records_and_frame()
    test_series_rejects_norm_drift()
    test_overlap_time_and_baseline_times()
    test_attraction_and_repulsion_pull_opposite_ways()
    print("\nALL OBSERVABLES TESTS PASSED [OK]")

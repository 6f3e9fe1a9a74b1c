from __future__ import annotations

import pytest

from genuslab import (
    MCEstimate,
    component_fraction,
    component_fraction_derivative,
    cycle_count_limit,
    genus_per_edge,
    mc_cycle_count_limit,
)
import oracles


def test_component_fraction_matches_frozen_oracle() -> None:
    for c, want in oracles.U_SERIES.items():
        assert component_fraction(c) == pytest.approx(want, abs=1e-9)


def test_component_fraction_linear_below_the_threshold() -> None:
    for j in range(101):
        c = j / 100.0
        assert abs(component_fraction(c) - (1 - c / 2)) < 1e-9


def test_component_fraction_edge_cases() -> None:
    assert component_fraction(0.0) == 1.0
    assert component_fraction(1.0) == pytest.approx(0.5, abs=1e-9)
    with pytest.raises(ValueError):
        component_fraction(-0.1)


def test_component_fraction_monotone_and_convex() -> None:
    vals = [component_fraction(0.05 * j) for j in range(121)]
    for a, b in zip(vals, vals[1:]):
        assert b <= a + 1e-12
    for a, b, c in zip(vals, vals[1:], vals[2:]):
        assert a - 2 * b + c >= -1e-9


def test_derivative_matches_frozen_oracle() -> None:
    for c, want in oracles.DU_SERIES.items():
        assert component_fraction_derivative(c) == pytest.approx(want, abs=1e-9)


def test_derivative_matches_central_differences() -> None:
    h = 1e-3
    for c in (0.8, 1.5, 3.0):
        numeric = (component_fraction(c + h) - component_fraction(c - h)) / (2 * h)
        assert abs(component_fraction_derivative(c) - numeric) < 1e-6


def test_genus_per_edge_matches_frozen_oracle() -> None:
    for lam, want in oracles.MU_VALUES.items():
        assert genus_per_edge(lam) == pytest.approx(want, abs=1e-9)


def test_genus_per_edge_shape() -> None:
    assert abs(genus_per_edge(0.5)) < 1e-9
    grid = [0.5 + 0.1 * j for j in range(196)]
    vals = [genus_per_edge(x) for x in grid]
    for a, b in zip(vals, vals[1:]):
        assert b > a - 1e-12
    assert all(v > 0 for v in vals[1:])
    assert all(v < 0.5 for v in vals)
    with pytest.raises(ValueError):
        genus_per_edge(0.0)
    with pytest.raises(ValueError):
        genus_per_edge(-1.0)


def test_cycle_count_limit_matches_frozen_oracle() -> None:
    for i, want in oracles.CYCLE_LIMIT.items():
        assert cycle_count_limit(i) == pytest.approx(want, abs=1e-6)


def test_cycle_count_limit_shape() -> None:
    assert cycle_count_limit(0.0) == 0.0
    vals = [cycle_count_limit(i) for i in (0.0, 0.25, 0.5, 1.0, 1.5, 2.0)]
    assert all(v >= 0 for v in vals)
    assert all(b > a for a, b in zip(vals, vals[1:]))
    with pytest.raises(ValueError):
        cycle_count_limit(-1.0)


def test_mc_estimate_agrees_with_quadrature() -> None:
    est = mc_cycle_count_limit(0.5, samples=200_000, seed=11)
    assert isinstance(est, MCEstimate)
    # the stratified sampler rounds down to a whole number of strata
    assert 0.99 * 200_000 <= est.samples <= 200_000
    assert est.stderr > 0
    assert abs(est.value - cycle_count_limit(0.5)) < 4 * est.stderr + 1e-4


def test_mc_validation() -> None:
    with pytest.raises(ValueError):
        mc_cycle_count_limit(0.0)
    with pytest.raises(ValueError):
        mc_cycle_count_limit(1.0, samples=8)


def test_frozen_constants_recompute_from_scratch() -> None:
    assert oracles.recompute_u(2.0) == pytest.approx(
        oracles.U_SERIES[2.0], abs=1e-12)
    assert oracles.recompute_du(1.5) == pytest.approx(
        oracles.DU_SERIES[1.5], abs=1e-12)
    assert oracles.recompute_mu(3.0) == pytest.approx(
        oracles.MU_VALUES[3.0], abs=1e-12)
    assert oracles.recompute_cycle_limit(1.0) == pytest.approx(
        oracles.CYCLE_LIMIT[1.0], abs=1e-12)

"""End-to-end checks at the scales and tolerances the library is rated for.

Each test prints one `[acceptance] <label>: PASS or FAIL` line with the
measured quantities; run pytest with `-rA` or `-s` to see them. Tests
carrying the `extended` marker need roughly half an hour and are excluded
from the default run by the pyproject addopts.
"""

from __future__ import annotations

import time

import pytest

from genuslab import (
    classify_cycle_neighborhood,
    component_fraction,
    component_fraction_derivative,
    count_census_cycles,
    cycle_count_limit,
    enumerate_cycles,
    exact_genus,
    fragile_experiment,
    genus_lower_bound_density,
    genus_lower_bound_short_cycles,
    genus_per_edge,
    genus_upper_bound,
    gnm,
    grid_graph,
    mc_cycle_count_limit,
    path_graph,
    predicted_core_excess,
    predicted_genus,
    supercritical_report,
    trace_faces,
    trial_rng,
    two_core,
)

from brute_force import brute_classify, brute_cycles


def _verdict(label: str, passed: bool, detail: str) -> None:
    state = "PASS" if passed else "FAIL"
    print(f"[acceptance] {label}: {state} ({detail})")


def test_component_fraction_matches_the_subcritical_identity() -> None:
    start = time.perf_counter()
    worst = max(
        abs(component_fraction(i / 100) - (1 - i / 200)) for i in range(101)
    )
    elapsed = time.perf_counter() - start
    ok = worst < 1e-9 and elapsed < 1.0
    _verdict(
        "subcritical identity u(c) = 1 - c/2",
        ok,
        f"max deviation {worst:.3e}, {elapsed:.2f} s",
    )
    assert worst < 1e-9
    assert elapsed < 1.0


def test_genus_per_edge_shape_and_derivative() -> None:
    start = time.perf_counter()
    at_half = abs(genus_per_edge(0.5))
    values = [genus_per_edge(0.5 + 0.1 * i) for i in range(196)]
    min_step = min(b - a for a, b in zip(values, values[1:]))
    at_twenty = genus_per_edge(20.0)
    h = 1e-3
    deriv_dev = max(
        abs(
            component_fraction_derivative(c)
            - (component_fraction(c + h) - component_fraction(c - h)) / (2 * h)
        )
        for c in (0.8, 1.5, 3.0)
    )
    elapsed = time.perf_counter() - start
    ok = (
        at_half < 1e-9
        and min_step > -1e-12
        and 0.45 < at_twenty < 0.5
        and deriv_dev < 1e-6
        and elapsed < 5.0
    )
    _verdict(
        "genus-per-edge curve shape",
        ok,
        f"|mu(0.5)| {at_half:.1e}, min step {min_step:.3e}, "
        f"mu(20) {at_twenty:.4f}, derivative dev {deriv_dev:.1e}, "
        f"{elapsed:.2f} s",
    )
    assert at_half < 1e-9
    assert min_step > -1e-12
    assert 0.45 < at_twenty < 0.5
    assert deriv_dev < 1e-6
    assert elapsed < 5.0


def test_component_count_concentrates_on_the_fraction_curve() -> None:
    n = 100_000
    start = time.perf_counter()
    worst = 0.0
    for li, lam in enumerate((0.25, 0.5, 1.0, 2.0)):
        target = component_fraction(2 * lam)
        for t in range(10):
            g = gnm(n, int(lam * n), seed=1_003_000 + 100 * li + t)
            worst = max(worst, abs(g.component_count / n - target))
    elapsed = time.perf_counter() - start
    ok = worst < 0.01 and elapsed < 30.0
    _verdict(
        "component count concentration",
        ok,
        f"worst |kappa/n - u(2*lambda)| {worst:.5f} over 40 trials, "
        f"{elapsed:.1f} s",
    )
    assert worst < 0.01
    assert elapsed < 30.0


def test_exact_genus_oracle_fixtures(fixtures) -> None:
    expected = {
        "k5": (1, 5),
        "c5": (0, 2),
        "c5_chord": (0, 3),
        "k5_minus_edge": (0, 6),
        "k33": (1, 3),
        "q3": (0, 6),
    }
    mismatches = []
    for name, (genus, faces) in expected.items():
        res = exact_genus(fixtures[name])
        if (res.genus, res.face_count) != (genus, faces):
            mismatches.append(f"{name}={res.genus}/{res.face_count}")
    start = time.perf_counter()
    k6 = exact_genus(fixtures["k6"])
    k6_elapsed = time.perf_counter() - start
    if (k6.genus, k6.face_count) != (1, 9):
        mismatches.append(f"k6={k6.genus}/{k6.face_count}")
    ok = not mismatches and k6_elapsed < 60.0
    _verdict(
        "exact genus oracle fixtures",
        ok,
        f"mismatches {mismatches or 'none'}, K6 in {k6_elapsed:.2f} s",
    )
    assert not mismatches
    assert k6_elapsed < 60.0


@pytest.fixture(scope="module")
def supercritical_runs():
    """Ten independent reports at n = 10^6, s = 31623, shared by three tests."""
    start = time.perf_counter()
    reports = [
        supercritical_report(1_000_000, 31623, seed=2_005_000 + t)
        for t in range(10)
    ]
    return reports, time.perf_counter() - start


def test_supercritical_core_excess(supercritical_runs) -> None:
    reports, elapsed = supercritical_runs
    predicted = predicted_core_excess(1_000_000, 31623)
    mean_excess = sum(r.core_excess for r in reports) / len(reports)
    rel = abs(mean_excess - predicted) / predicted
    ok = rel < 0.25 and elapsed < 300.0
    _verdict(
        "supercritical core excess",
        ok,
        f"mean {mean_excess:.1f} vs predicted {predicted:.1f} "
        f"(rel dev {rel:.3f}), {elapsed:.1f} s for 10 trials",
    )
    assert rel < 0.25
    assert elapsed < 300.0


def test_supercritical_genus_upper_band(supercritical_runs) -> None:
    reports, _ = supercritical_runs
    predicted = predicted_genus(1_000_000, 31623)
    mean_upper = sum(r.genus_upper for r in reports) / len(reports)
    mean_excess = sum(r.core_excess for r in reports) / len(reports)
    band = 0.25 * predicted + mean_excess / 6
    dev = abs(mean_upper - predicted)
    ok = dev <= band
    _verdict(
        "supercritical genus upper bound",
        ok,
        f"mean {mean_upper:.1f} vs predicted {predicted:.1f}, "
        f"band +-{band:.1f}",
    )
    assert dev <= band


@pytest.mark.xfail(
    strict=True,
    reason="the short-cycle lower bound stays at zero on cores this sparse",
)
def test_supercritical_genus_lower_floor(supercritical_runs) -> None:
    reports, _ = supercritical_runs
    predicted = predicted_genus(1_000_000, 31623)
    mean_lower = sum(r.genus_lower for r in reports) / len(reports)
    ok = mean_lower >= 0.3 * predicted
    _verdict(
        "supercritical genus lower bound",
        ok,
        f"mean {mean_lower:.1f} vs floor {0.3 * predicted:.1f}",
    )
    assert mean_lower >= 0.3 * predicted


def test_linear_regime_genus_sandwich() -> None:
    n, m = 2000, 6000
    mu3 = genus_per_edge(3.0)
    start = time.perf_counter()
    worst_upper_dev = 0.0
    min_lower_ratio = float("inf")
    for t in range(20):
        g = gnm(n, m, seed=3_007_000 + t)
        worst_upper_dev = max(
            worst_upper_dev, abs(genus_upper_bound(g) / m - mu3)
        )
        min_lower_ratio = min(
            min_lower_ratio, genus_lower_bound_short_cycles(g, 4) / m
        )
    elapsed = time.perf_counter() - start
    ok = worst_upper_dev < 0.02 and min_lower_ratio >= 0.3 * mu3 and elapsed < 60.0
    _verdict(
        "linear regime genus sandwich",
        ok,
        f"upper dev {worst_upper_dev:.5f} (< 0.02), lower ratio "
        f"{min_lower_ratio:.4f} (>= {0.3 * mu3:.4f}), {elapsed:.1f} s",
    )
    assert worst_upper_dev < 0.02
    assert min_lower_ratio >= 0.3 * mu3
    assert elapsed < 60.0


def test_perturbed_path_keeps_positive_genus() -> None:
    base = path_graph(100_000)
    start = time.perf_counter()
    reports = [
        fragile_experiment(base, 2, 5000, seed=4_011_000 + t, ell=3)
        for t in range(10)
    ]
    elapsed = time.perf_counter() - start
    t_value = reports[0].t
    l_ok = all(r.l == 120 for r in reports)
    t_ok = all(208 <= r.t <= 416 for r in reports)
    gamma_hits = sum(r.gamma_edges >= r.t for r in reports)
    lower_hits = sum(r.genus_lower_gamma > 0 for r in reports)
    mean_lower = sum(r.genus_lower_gamma for r in reports) / len(reports)
    upper_ok = all(r.upper_bound <= 5000 for r in reports)
    ok = (
        l_ok
        and t_ok
        and gamma_hits >= 9
        and lower_hits >= 9
        and mean_lower >= 0.02 * t_value
        and upper_ok
        and elapsed < 120.0
    )
    _verdict(
        "fragile genus of a perturbed path",
        ok,
        f"t {t_value}, quotient edges >= t in {gamma_hits}/10, positive "
        f"lower bound in {lower_hits}/10 (mean {mean_lower:.0f}), "
        f"{elapsed:.1f} s",
    )
    assert l_ok
    assert t_ok
    assert gamma_hits >= 9
    assert lower_hits >= 9
    assert mean_lower >= 0.02 * t_value
    assert upper_ok
    assert elapsed < 120.0


@pytest.mark.extended
@pytest.mark.xfail(
    strict=False,
    reason="the admissible-cycle count sits below its limit at n = 10^6",
)
def test_census_cycle_mean_approaches_the_poisson_limit() -> None:
    n = 1_000_000
    s = int(n**0.75)
    target = cycle_count_limit(1.0)
    start = time.perf_counter()
    counts = []
    for t in range(200):
        g = gnm(n, n // 2 + s, seed=8_200_000 + t)
        counts.append(count_census_cycles(g, s, 1.0)[0])
    elapsed = time.perf_counter() - start
    mean = sum(counts) / len(counts)
    ok = 0.5 * target <= mean <= 1.5 * target and elapsed < 1800.0
    _verdict(
        "census cycle count vs Poisson limit",
        ok,
        f"mean {mean:.3f} vs limit {target:.3f} over 200 trials, "
        f"{elapsed:.0f} s",
    )
    assert elapsed < 1800.0
    assert 0.5 * target <= mean <= 1.5 * target


@pytest.mark.extended
def test_cycle_limit_quadrature_agrees_with_monte_carlo() -> None:
    est = mc_cycle_count_limit(1.0, samples=4_000_000, seed=123)
    diff = abs(est.value - cycle_count_limit(1.0))
    ok = diff < 1e-3
    _verdict(
        "cycle limit quadrature vs Monte Carlo",
        ok,
        f"difference {diff:.2e} at 4e6 samples",
    )
    assert diff < 1e-3


def test_corpus_invariant_sweep(corpus6, fixtures, genus_of) -> None:
    start = time.perf_counter()
    rng = trial_rng(900, 0)
    failures: list[str] = []
    for idx, g in enumerate(corpus6):
        core = two_core(g).graph
        if two_core(core).graph != core:
            failures.append(f"core fixed point #{idx}")
        exact = genus_of(g)
        if (core.n and genus_of(core) != exact) or (not core.n and exact):
            failures.append(f"core genus #{idx}")
        if not (
            max(
                genus_lower_bound_density(g),
                genus_lower_bound_short_cycles(g, 4),
            )
            <= exact
            <= genus_upper_bound(g)
        ):
            failures.append(f"bound sandwich #{idx}")
        if g.n >= 3 and g.m > 3 * g.n - 6 + 6 * exact:
            failures.append(f"density law #{idx}")
        rotation = {
            v: tuple(int(u) for u in rng.permutation(list(g.neighbors(v))))
            for v in range(g.n)
        }
        report = trace_faces(g, rotation)
        handle = g.m - g.n - report.face_count + g.component_count + 1
        if (
            sum(report.face_lengths) != 2 * g.m
            or handle < 0
            or handle % 2
            or report.genus != handle // 2
        ):
            failures.append(f"euler relation #{idx}")
    eight = [fixtures[k] for k in ("q3", "theta", "k4", "k33")]
    eight.append(grid_graph(2, 4))
    for idx, g in enumerate(eight):
        if sorted(enumerate_cycles(g, g.n)) != sorted(brute_cycles(g, g.n)):
            failures.append(f"cycle brute force @{idx}")
        for cyc in enumerate_cycles(g, 6):
            cn = classify_cycle_neighborhood(g, cyc)
            got = (
                cn.leaf_size,
                cn.good,
                cn.bad,
                cn.tree_components,
                cn.neighbor_count,
            )
            if got != brute_classify(g, cyc):
                failures.append(f"classification @{idx}")
    elapsed = time.perf_counter() - start
    ok = not failures
    _verdict(
        "corpus invariant sweep",
        ok,
        f"{len(corpus6)} corpus graphs plus {len(eight)} brute-force "
        f"fixtures, failures {failures or 'none'}, {elapsed:.1f} s",
    )
    assert not failures

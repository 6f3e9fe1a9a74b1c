from __future__ import annotations

import math

import pytest

from genuslab import (
    DecompositionError,
    Graph,
    add_uniform_edges,
    build_quotient,
    contract_sets,
    count_good_edges,
    cycle_graph,
    decompose_into_pieces,
    fragile_experiment,
    genus_upper_bound,
    grid_graph,
    induced_subgraph,
    path_graph,
    perturbation_upper_bound,
    select_cores,
    trial_rng,
)
from genuslab.corpus import amplification_showcase


def _random_bounded_tree(n: int, max_degree: int, rng) -> Graph:
    edges = []
    deg = [0] * n
    for v in range(1, n):
        while True:
            u = int(rng.integers(0, v))
            if deg[u] < max_degree - 1 or (deg[u] < max_degree and u == 0):
                break
        edges.append((u, v))
        deg[u] += 1
        deg[v] += 1
    return Graph(n, edges)


def test_showcase_quotient_and_good_edges() -> None:
    h, d, extra = amplification_showcase()
    gamma = build_quotient(d, extra)
    assert gamma.n == d.t
    assert gamma.edge_list() == [(0, 1), (1, 3)]
    assert count_good_edges(d, extra) == 2


def test_quotient_matches_the_contraction_route() -> None:
    h, d, extra = amplification_showcase()
    pairs = sorted({tuple(sorted(p)) for p in extra})
    overlay = Graph(h.n, pairs)
    assert build_quotient(d, extra) == contract_sets(overlay, d.cores)


def test_decompose_long_path() -> None:
    h = path_graph(100)
    d = decompose_into_pieces(h, 5, 2)
    sizes = [len(p) for p in d.pieces]
    assert min(sizes) >= 10
    assert max(sizes) <= 20
    assert d.s == min(sizes)
    assert d.t == len(d.pieces)
    covered = [v for p in d.pieces for v in p]
    assert len(covered) == len(set(covered))
    assert len(covered) > 100 - 10
    for p in d.pieces:
        assert induced_subgraph(h, p).graph.component_count == 1


def test_decompose_whole_star_is_one_piece() -> None:
    star = Graph(5, [(0, v) for v in range(1, 5)])
    d = decompose_into_pieces(star, 1, 4)
    assert d.t == 1
    assert d.pieces == ((0, 1, 2, 3, 4),)


def test_decompose_rejects_high_degree_base() -> None:
    star = Graph(5, [(0, v) for v in range(1, 5)])
    with pytest.raises(DecompositionError, match="star"):
        decompose_into_pieces(star, 1, 3)


def test_decompose_rejects_undersized_or_disconnected_bases() -> None:
    with pytest.raises(DecompositionError):
        decompose_into_pieces(path_graph(6), 4, 2)
    with pytest.raises(DecompositionError):
        decompose_into_pieces(Graph(6, [(0, 1), (2, 3), (4, 5)]), 1, 2)


def test_decomposition_invariants_across_base_families() -> None:
    rng = trial_rng(424, 0)
    bases = [
        (path_graph(240), 2),
        (cycle_graph(240), 2),
        (grid_graph(12, 20), 4),
        (_random_bounded_tree(240, 3, rng), 3),
    ]
    for h, delta in bases:
        for l in (2, 4):
            d0 = decompose_into_pieces(h, l, delta)
            covered: list[int] = []
            for p in d0.pieces:
                assert l * delta <= len(p) <= l * delta * delta
                assert induced_subgraph(h, p).graph.component_count == 1
                covered.extend(p)
            assert len(covered) == len(set(covered))
            assert h.n - len(covered) < l * delta
            lo = (h.n - l * delta) / (l * delta * delta)
            hi = h.n / (l * delta)
            assert lo <= d0.t <= hi

            d = select_cores(h, d0)
            assert len(d.cores) == d.t
            for core, piece in zip(d.cores, d.pieces):
                assert len(core) == d.s
                assert set(core) <= set(piece)
                assert induced_subgraph(h, core).graph.component_count == 1


def test_fragile_experiment_report_fields() -> None:
    h = path_graph(500)
    rep = fragile_experiment(h, 2, 100, seed=3)
    assert rep.n == 500
    assert rep.k == 100
    assert rep.Delta == 2
    assert rep.l == 30  # ceil(3 * Delta * n / k)
    assert rep.upper_bound == perturbation_upper_bound(genus_upper_bound(h), 100)
    assert rep.upper_bound == 100
    lo = (500 - rep.l * 2) / (rep.l * 4)
    hi = 500 / (rep.l * 2)
    assert lo <= rep.t <= hi
    assert 0 <= rep.good_edge_count <= 100
    assert rep.gamma_edges >= 0
    assert rep.genus_lower_gamma >= 0


def test_fragile_experiment_dense_branch() -> None:
    h = path_graph(50)
    rep = fragile_experiment(h, 2, 400, seed=5)
    assert rep.t == 0
    assert rep.s == 0
    assert rep.gamma_edges == 0
    assert rep.genus_lower_gamma > 0
    assert rep.upper_bound == 400  # base path is planar


def test_good_edge_rate_across_trials() -> None:
    h = path_graph(400)
    delta, k, trials = 2, 200, 30
    want = k / (2 * delta**2) - 3 * math.sqrt(k) / (2 * delta)
    total = 0
    for t in range(trials):
        rep = fragile_experiment(h, delta, k, seed=(88, t))
        total += rep.good_edge_count
    assert total / trials >= want


def test_quotient_genus_never_exceeds_perturbed_graph(genus_of) -> None:
    h = path_graph(8)
    d = select_cores(h, decompose_into_pieces(h, 1, 2))
    for t in range(6):
        combined, added = add_uniform_edges(h, 6, seed=(77, t))
        gamma = build_quotient(d, added)
        assert genus_of(gamma) <= genus_of(combined)


def test_fragile_experiment_validates_base() -> None:
    with pytest.raises(DecompositionError):
        fragile_experiment(Graph(6, [(0, 1), (2, 3), (4, 5)]), 2, 3, seed=0)
    with pytest.raises(DecompositionError):
        fragile_experiment(path_graph(10), 1, 3, seed=0)

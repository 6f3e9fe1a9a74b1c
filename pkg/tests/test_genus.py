from __future__ import annotations

import pytest

from genuslab import (
    Graph,
    SearchBudgetError,
    complete_graph,
    exact_genus,
    genus_of_rotation,
    two_core,
)


def test_known_genus_values(fixtures, genus_of) -> None:
    table = {
        "k4": 0,
        "k5": 1,
        "k5_minus_edge": 0,
        "k6": 1,
        "k33": 1,
        "c5": 0,
        "c5_chord": 0,
        "q3": 0,
        "theta": 0,
        "petersen": 1,
    }
    for name, want in table.items():
        assert genus_of(fixtures[name]) == want, name


def test_face_counts_of_minimal_embeddings(fixtures) -> None:
    for name, faces in (("k5", 5), ("c5", 2), ("c5_chord", 3),
                        ("k5_minus_edge", 6), ("k6", 9), ("q3", 6)):
        assert exact_genus(fixtures[name]).face_count == faces, name


def test_exact_genus_returns_witness_rotation(fixtures) -> None:
    for name in ("k4", "k5", "k33", "c5_chord", "q3", "theta"):
        g = fixtures[name]
        res = exact_genus(g)
        assert genus_of_rotation(g, res.rotation) == res.genus


def test_genus_of_trivial_graphs() -> None:
    assert exact_genus(Graph(0, [])).genus == 0
    assert exact_genus(Graph(3, [])).genus == 0
    assert exact_genus(Graph(2, [(0, 1)])).genus == 0


def test_genus_adds_over_components() -> None:
    k5 = complete_graph(5)
    shifted = [(u + 5, w + 5) for u, w in k5.edge_list()]
    pair = Graph(10, k5.edge_list() + shifted)
    res = exact_genus(pair)
    assert res.genus == 2
    assert res.face_count == 9  # five faces per block, sharing one outer face


def test_genus_adds_over_blocks_of_a_barbell() -> None:
    k5 = complete_graph(5)
    shifted = [(u + 5, w + 5) for u, w in k5.edge_list()]
    bridge = [(4, 10), (10, 5)]
    barbell = Graph(11, k5.edge_list() + shifted + bridge)
    assert exact_genus(barbell).genus == 2


def test_pruning_does_not_change_genus(genus_of) -> None:
    k5 = complete_graph(5)
    tail = [(4, 5), (5, 6)]
    g = Graph(7, k5.edge_list() + tail)
    assert genus_of(g) == genus_of(two_core(g).graph) == 1


def test_budget_error_brackets_the_answer() -> None:
    with pytest.raises(SearchBudgetError) as err:
        exact_genus(complete_graph(6), node_budget=50)
    e = err.value
    assert e.nodes_explored >= 50
    assert 0 <= e.lower_bound <= 1 <= e.upper_bound <= 5

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from genuslab import Graph, exact_genus
from genuslab.corpus import connected_corpus, named_fixtures


@pytest.fixture(scope="session")
def corpus6() -> list[Graph]:
    """All 143 connected graphs on at most 6 vertices, one per class."""
    return connected_corpus(6)


@pytest.fixture(scope="session")
def fixtures() -> dict[str, Graph]:
    return named_fixtures()


@pytest.fixture(scope="session")
def genus_of():
    """Memoized exact genus, shared across the whole session."""
    cache: dict[tuple, int] = {}

    def compute(G: Graph) -> int:
        key = (G.n, G.edge_array.tobytes())
        if key not in cache:
            cache[key] = exact_genus(G).genus
        return cache[key]

    return compute

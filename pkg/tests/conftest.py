import random

import pytest

from kappa_lab.graph import PinnedGraph


def random_pinned_graph(rng: random.Random, max_n: int = 10, edge_prob: float = 0.4,
                        allow_pins: bool = True) -> PinnedGraph:
    """Random simple graph with a random independent pin set."""
    n = rng.randint(1, max_n)
    edges = []
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if rng.random() < edge_prob:
                edges.append((a, b))
    edge_set = set(edges)
    pins: set[int] = set()
    if allow_pins:
        for v in rng.sample(range(1, n + 1), n):
            if rng.random() < 0.35 and all((min(v, p), max(v, p)) not in edge_set for p in pins):
                pins.add(v)
    return PinnedGraph(n=n, edges=tuple(edges), pins=frozenset(pins))


@pytest.fixture
def rng():
    return random.Random(20260823)

"""Bundled example graphs used by the test gallery, CLI, and explorer presets."""

from __future__ import annotations

from itertools import combinations

from .graph import PinnedGraph


def complete_graph(n: int, pins=(1,)) -> PinnedGraph:
    return PinnedGraph(n=n, edges=tuple(combinations(range(1, n + 1), 2)), pins=frozenset(pins))


def star_graph(k: int, pin_leaves: bool = True) -> PinnedGraph:
    """k leaves 1..k around a central vertex k+1."""
    edges = tuple((i, k + 1) for i in range(1, k + 1))
    pins = frozenset(range(1, k + 1)) if pin_leaves else frozenset()
    return PinnedGraph(n=k + 1, edges=edges, pins=pins)


def chain_graph(n: int, pins) -> PinnedGraph:
    edges = tuple((i, i + 1) for i in range(1, n))
    return PinnedGraph(n=n, edges=edges, pins=frozenset(pins))


def cycle_graph(n: int, pins) -> PinnedGraph:
    edges = tuple((i, i + 1) for i in range(1, n)) + ((1, n),)
    return PinnedGraph(n=n, edges=edges, pins=frozenset(pins))


def pinned_tree_five_pins() -> PinnedGraph:
    """Path v6-v7-v1-v8-v2 with pinned leaves v3,v4,v5 attached at v6; kappa 3."""
    edges = ((6, 7), (1, 7), (1, 8), (2, 8), (3, 6), (4, 6), (5, 6))
    return PinnedGraph(n=8, edges=edges, pins=frozenset({1, 2, 3, 4, 5}))


def eight_cycle_four_pins() -> PinnedGraph:
    """8-cycle with alternating pins v1..v4 at the odd positions."""
    edges = ((1, 5), (2, 5), (2, 6), (3, 6), (3, 7), (4, 7), (4, 8), (1, 8))
    return PinnedGraph(n=8, edges=edges, pins=frozenset({1, 2, 3, 4}))


def seven_cycle_three_pins() -> PinnedGraph:
    """7-cycle in cyclic order v1,v4,v2,v7,v6,v3,v5 with pins v1,v2,v3."""
    edges = ((1, 4), (2, 4), (2, 7), (6, 7), (3, 6), (3, 5), (1, 5))
    return PinnedGraph(n=7, edges=edges, pins=frozenset({1, 2, 3}))


def _triangles(tris) -> tuple[tuple[int, int], ...]:
    edges = set()
    for a, b, c in tris:
        for e in ((a, b), (b, c), (a, c)):
            edges.add((min(e), max(e)))
    return tuple(sorted(edges))


def triangle_tree_a() -> PinnedGraph:
    """Four triangles around two hubs; pins v1..v4; kappa 3."""
    edges = _triangles([(5, 1, 7), (5, 8, 2), (5, 6, 3), (6, 9, 4)])
    return PinnedGraph(n=9, edges=edges, pins=frozenset({1, 2, 3, 4}))


def triangle_tree_b() -> PinnedGraph:
    """Three triangles at hub v4 plus one at v5; pins v1..v3; kappa 3."""
    edges = _triangles([(4, 6, 7), (4, 8, 1), (4, 5, 2), (5, 9, 3)])
    return PinnedGraph(n=9, edges=edges, pins=frozenset({1, 2, 3}))


def triangle_tree_c() -> PinnedGraph:
    """Same shape as b but a different pin placement; kappa 2."""
    edges = _triangles([(4, 1, 7), (4, 8, 2), (4, 5, 6), (5, 9, 3)])
    return PinnedGraph(n=9, edges=edges, pins=frozenset({1, 2, 3}))


_BANANA_EDGES = _triangles([(1, 2, 3), (6, 7, 8)]) + (
    (1, 4), (2, 4), (3, 4), (1, 5), (2, 5), (3, 5),
    (4, 6), (4, 7), (4, 8), (5, 6), (5, 7), (5, 8),
)


def double_banana(pin: int = 1) -> PinnedGraph:
    """Two triangle prisms sharing apex vertices v4, v5; kappa 4 for any pin."""
    return PinnedGraph(n=8, edges=_BANANA_EDGES, pins=frozenset({pin}))


def banana_minus_edge(pin: int) -> PinnedGraph:
    """Double banana with edge (2,4) removed; kappa depends on the pin (3 at v7, 4 at v1)."""
    edges = tuple(e for e in _BANANA_EDGES if e != (2, 4))
    return PinnedGraph(n=8, edges=edges, pins=frozenset({pin}))


def toy_graph() -> PinnedGraph:
    """Six-vertex graph with pins v1,v2 whose natural order has back-degrees (2,3,4,2)."""
    edges = ((1, 5), (4, 5), (3, 5), (2, 5), (1, 4), (1, 3), (2, 4), (2, 3), (3, 4), (3, 6), (2, 6))
    return PinnedGraph(n=6, edges=edges, pins=frozenset({1, 2}))


def small_example_graph() -> PinnedGraph:
    """4-vertex graph with pins v1,v2 where vertex choice affects the order's quality."""
    return PinnedGraph(n=4, edges=((1, 3), (1, 4), (2, 3), (3, 4)), pins=frozenset({1, 2}))


# name -> (graph, expected kappa); order is the gallery / preset order
GALLERY: dict[str, tuple[PinnedGraph, int]] = {
    "k3-pinned": (complete_graph(3), 2),
    "k5-pinned": (complete_graph(5), 4),
    "star7-pinned-leaves": (star_graph(7), 7),
    "chain6-three-pins": (chain_graph(6, {1, 3, 6}), 2),
    "chain6-one-pin": (chain_graph(6, {1}), 1),
    "tree-five-pins": (pinned_tree_five_pins(), 3),
    "cycle8-four-pins": (eight_cycle_four_pins(), 2),
    "cycle7-three-pins": (seven_cycle_three_pins(), 2),
    "triangle-tree-a": (triangle_tree_a(), 3),
    "triangle-tree-b": (triangle_tree_b(), 3),
    "triangle-tree-c": (triangle_tree_c(), 2),
    "double-banana": (double_banana(1), 4),
    "banana-minus-edge-pin7": (banana_minus_edge(7), 3),
    "banana-minus-edge-pin1": (banana_minus_edge(1), 4),
    "toy-two-pins": (toy_graph(), 4),
}

"""Admissibility numbers, construction orders, and the dismantling algorithm.

The admissibility number kappa of a pinned graph is the least budget k for
which repeatedly deleting an unpinned vertex of current degree at most k
removes every unpinned vertex. The outcome is independent of which eligible
vertex is deleted, so any deletion policy certifies the same kappa.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from itertools import combinations

from .graph import PinnedGraph, adjacency, max_degree


class OrderError(Exception):
    pass


class NotAPermutation(OrderError):
    pass


class PositionInPinPrefix(OrderError):
    pass


class NotPinsFirst(OrderError):
    pass


class TraceFailed(Exception):
    pass


class TooLarge(Exception):
    pass


_POLICIES = ("first-eligible", "min-degree", "random")


@dataclass(frozen=True)
class ChoicePolicy:
    """Deletion policy for the dismantling algorithm.

    ``random`` is fully determined by its seed; the other two are
    deterministic. All policies certify the same succeeded/failed outcome.
    """

    kind: str = "min-degree"
    seed: int | None = None

    def __post_init__(self):
        if self.kind not in _POLICIES:
            raise ValueError(f"unknown policy {self.kind!r}; expected one of {_POLICIES}")
        if self.kind == "random" and self.seed is None:
            raise ValueError("random policy requires a seed")


@dataclass(frozen=True)
class DismantleTrace:
    """Deletion sequence with the degree each vertex had when removed."""

    deletions: tuple[tuple[int, int], ...]
    succeeded: bool
    k: int

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "succeeded": self.succeeded,
            "deletions": [{"vertex": v, "degree_at_removal": d} for v, d in self.deletions],
        }


@dataclass(frozen=True)
class ConstructionOrder:
    """Pins-first vertex ordering with per-vertex back-degrees.

    ``back_degrees[i]`` is the number of earlier-ordered neighbors of the
    vertex at position m+i (0-based over the unpinned suffix). Every edge is
    revealed exactly once, at its later endpoint, so the back-degrees sum
    to |E|.
    """

    order: tuple[int, ...]
    back_degrees: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.order) - len(self.back_degrees)

    @property
    def max_back_degree(self) -> int:
        return max(self.back_degrees, default=0)

    def to_dict(self) -> dict:
        return {"order": list(self.order), "back_degrees": list(self.back_degrees)}


def _check_permutation(g: PinnedGraph, order) -> None:
    if sorted(order) != list(g.vertices):
        raise NotAPermutation(f"order {order!r} is not a permutation of 1..{g.n}")


def back_degree(g: PinnedGraph, order, position: int) -> int:
    """Number of neighbors of order[position] among order[:position].

    ``position`` is a 0-based index and must lie beyond the pin prefix.
    """
    _check_permutation(g, order)
    m = len(g.pins)
    if position < m:
        raise PositionInPinPrefix(f"position {position} lies in the pin prefix (m={m})")
    earlier = set(order[:position])
    v = order[position]
    return sum(1 for a, b in g.edges if (a == v and b in earlier) or (b == v and a in earlier))


def back_degrees(g: PinnedGraph, order) -> tuple[int, ...]:
    """Back-degrees of every unpinned position, in order."""
    _check_permutation(g, order)
    m = len(g.pins)
    if set(order[:m]) != g.pins:
        raise NotPinsFirst(f"first {m} positions of {order!r} are not the pin set")
    adj = adjacency(g)
    seen: set[int] = set(order[:m])
    out = []
    for v in order[m:]:
        out.append(sum(1 for u in adj[v] if u in seen))
        seen.add(v)
    return tuple(out)


def construction_order(g: PinnedGraph, order) -> ConstructionOrder:
    """Validate a pins-first ordering and compute its back-degrees."""
    return ConstructionOrder(order=tuple(order), back_degrees=back_degrees(g, order))


def is_k_admissible_order(g: PinnedGraph, order, k: int) -> bool:
    """True iff every back-degree of this pins-first order is at most k."""
    return all(d <= k for d in back_degrees(g, order))


def run_k_algorithm(g: PinnedGraph, k: int, policy: ChoicePolicy = ChoicePolicy()) -> DismantleTrace:
    """Repeatedly delete an unpinned vertex of current degree <= k.

    The trace succeeds iff every unpinned vertex gets deleted; by the
    choice-independence property the flag does not depend on the policy.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    adj = adjacency(g)
    deg = [0] * (g.n + 1)
    for v in g.vertices:
        deg[v] = len(adj[v])
    removed = [False] * (g.n + 1)
    pinned = [False] * (g.n + 1)
    for p in g.pins:
        pinned[p] = True
    unpinned_left = g.n - len(g.pins)
    deletions: list[tuple[int, int]] = []

    rng = random.Random(policy.seed) if policy.kind == "random" else None

    if policy.kind == "random":
        while unpinned_left:
            eligible = [v for v in g.vertices if not removed[v] and not pinned[v] and deg[v] <= k]
            if not eligible:
                break
            v = rng.choice(eligible)
            removed[v] = True
            deletions.append((v, deg[v]))
            unpinned_left -= 1
            for u in adj[v]:
                if not removed[u]:
                    deg[u] -= 1
    else:
        # heap keyed by (degree, index) or just index; stale entries skipped
        if policy.kind == "min-degree":
            key = lambda v: (deg[v], v)
        else:  # first-eligible: lowest index among currently eligible
            key = lambda v: (v,)
        heap = [(*key(v), v) for v in g.vertices if not pinned[v] and deg[v] <= k]
        heapq.heapify(heap)
        in_heap_deg = {v: deg[v] for *_, v in heap}
        while heap and unpinned_left:
            *_, v = heapq.heappop(heap)
            if removed[v] or in_heap_deg.get(v) != deg[v]:
                continue
            removed[v] = True
            deletions.append((v, deg[v]))
            unpinned_left -= 1
            for u in adj[v]:
                if removed[u]:
                    continue
                deg[u] -= 1
                if not pinned[u] and deg[u] <= k and in_heap_deg.get(u) != deg[u]:
                    in_heap_deg[u] = deg[u]
                    heapq.heappush(heap, (*key(u), u))

    return DismantleTrace(deletions=tuple(deletions), succeeded=(unpinned_left == 0), k=k)


def construction_order_from_trace(g: PinnedGraph, trace: DismantleTrace) -> ConstructionOrder:
    """Reverse a successful dismantling into a construction order."""
    if not trace.succeeded:
        raise TraceFailed("cannot build a construction order from a failed trace")
    order = tuple(sorted(g.pins)) + tuple(v for v, _ in reversed(trace.deletions))
    return construction_order(g, order)


def _smallest_last_max(g: PinnedGraph, pins: frozenset[int]) -> int:
    """Max degree-at-removal over greedy min-degree deletion of unpinned vertices.

    Bucket-queue implementation, O(|V|+|E|). This equals the least budget at
    which the dismantling algorithm succeeds: the greedy run witnesses that
    budget, and at the step attaining the max every surviving unpinned vertex
    has at least that degree, which blocks any smaller budget on the induced
    subgraph (and hence on the whole graph, by subgraph monotonicity).
    """
    n = g.n
    unpinned = [v for v in range(1, n + 1) if v not in pins]
    if not unpinned:
        return 0
    adj = adjacency(g)
    deg = [0] * (n + 1)
    for v in range(1, n + 1):
        deg[v] = len(adj[v])
    maxdeg = max((deg[v] for v in unpinned), default=0)
    buckets: list[list[int]] = [[] for _ in range(maxdeg + 1)]
    for v in unpinned:
        buckets[deg[v]].append(v)
    removed = bytearray(n + 1)
    pinned = bytearray(n + 1)
    for p in pins:
        pinned[p] = 1
    result = 0
    left = len(unpinned)
    d = 0
    while left:
        while d <= maxdeg and not buckets[d]:
            d += 1
        bucket = buckets[d]
        v = bucket.pop()
        if removed[v] or deg[v] != d:
            continue  # stale entry
        removed[v] = 1
        left -= 1
        if d > result:
            result = d
        for u in adj[v]:
            if removed[u] or pinned[u]:
                continue
            du = deg[u] - 1
            deg[u] = du
            buckets[du].append(u)
        if d > 0:
            d -= 1
    return result


def admissibility_number(g: PinnedGraph) -> int:
    """Least k at which the dismantling algorithm deletes all unpinned vertices."""
    return _smallest_last_max(g, g.pins)


def degeneracy(g: PinnedGraph) -> int:
    """Smallest-last degeneracy, ignoring pins."""
    return _smallest_last_max(g, frozenset())


def brute_force_kappa(g: PinnedGraph, cap: int = 9) -> int:
    """Exact kappa by exhausting pins-first orderings (branch and bound)."""
    unpinned = g.unpinned
    if len(unpinned) > cap:
        raise TooLarge(f"{len(unpinned)} unpinned vertices exceeds cap {cap}")
    if not unpinned:
        return 0
    adj = adjacency(g)
    placed = set(g.pins)
    best = g.n  # any kappa is below |V|

    def search(remaining: frozenset[int], running_max: int) -> None:
        nonlocal best
        if running_max >= best:
            return
        if not remaining:
            best = running_max
            return
        for v in remaining:
            bd = sum(1 for u in adj[v] if u in placed)
            nm = max(running_max, bd)
            if nm >= best:
                continue
            placed.add(v)
            search(remaining - {v}, nm)
            placed.remove(v)

    search(frozenset(unpinned), 0)
    return best


def all_pinned_graphs(n: int):
    """Yield every labeled pinned graph on n vertices with an independent pin set.

    Exhaustive oracle-side enumeration for small n; meant for tests.
    """
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        edges = tuple(pairs[i] for i in range(len(pairs)) if mask >> i & 1)
        edge_set = set(edges)
        for pin_mask in range(1 << n):
            pins = frozenset(v for v in range(1, n + 1) if pin_mask >> (v - 1) & 1)
            if any((min(a, b), max(a, b)) in edge_set for a, b in combinations(sorted(pins), 2)):
                continue
            yield PinnedGraph(n=n, edges=edges, pins=pins)

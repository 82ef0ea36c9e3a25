"""Immutable pinned-graph model, parsing, validation, and subgraph machinery.

A pinned graph is a simple undirected graph together with an independent
set of "pinned" vertices. Vertices are dense integers 1..n; edges are
stored canonically as (i, j) with i < j, sorted lexicographically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


class GraphError(Exception):
    """Base class for pinned-graph construction and query errors."""


class MalformedDocument(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class PinsNotIndependent(GraphError):
    pass


class UnknownVertex(GraphError):
    pass


class InvalidSubset(GraphError):
    pass


@dataclass(frozen=True)
class PinnedGraph:
    """Simple undirected graph with a distinguished pin set.

    ``edges`` is normalized on construction: each pair endpoint-sorted and
    the whole tuple sorted lexicographically. Duplicates and self-loops are
    preserved so that :func:`validate` can report them; graphs produced by
    :func:`parse_graph` are always valid.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    pins: frozenset[int] = field(default_factory=frozenset)
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        canon = tuple(sorted((min(a, b), max(a, b)) for a, b in self.edges))
        object.__setattr__(self, "edges", canon)
        object.__setattr__(self, "pins", frozenset(self.pins))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def unpinned(self) -> list[int]:
        return [v for v in self.vertices if v not in self.pins]

    def label_of(self, v: int) -> str:
        if self.labels is not None:
            return self.labels[v - 1]
        return f"v{v}"


@dataclass(frozen=True)
class Violation:
    code: str
    message: str

    def to_dict(self) -> dict:
        return {"code": self.code, "message": self.message}


def validate(g: PinnedGraph) -> list[Violation]:
    """Check the pinned-graph invariants; empty report means valid."""
    report: list[Violation] = []
    if g.n < 0:
        report.append(Violation("BadVertexCount", f"vertex count {g.n} is negative"))
    edge_set = set()
    for (a, b) in g.edges:
        if not (1 <= a <= g.n) or not (1 <= b <= g.n):
            report.append(Violation("UnknownVertex", f"edge ({a},{b}) has an endpoint outside 1..{g.n}"))
            continue
        if a == b:
            report.append(Violation("SelfLoop", f"edge ({a},{b}) is a self-loop"))
            continue
        if (a, b) in edge_set:
            report.append(Violation("DuplicateEdge", f"edge ({a},{b}) appears more than once"))
        edge_set.add((a, b))
        if a in g.pins and b in g.pins:
            report.append(Violation("PinsNotIndependent", f"edge ({a},{b}) joins two pins"))
    for p in sorted(g.pins):
        if not (1 <= p <= g.n):
            report.append(Violation("UnknownVertex", f"pin {p} is not a listed vertex"))
    return report


_VIOLATION_ERRORS = {
    "SelfLoop": SelfLoop,
    "DuplicateEdge": DuplicateEdge,
    "PinsNotIndependent": PinsNotIndependent,
    "UnknownVertex": MalformedDocument,
    "BadVertexCount": MalformedDocument,
}


def _raise_first_violation(g: PinnedGraph) -> PinnedGraph:
    report = validate(g)
    if report:
        v = report[0]
        raise _VIOLATION_ERRORS[v.code](v.message)
    return g


def graph_from_dict(doc: dict) -> PinnedGraph:
    """Build a validated PinnedGraph from the JSON document schema."""
    if not isinstance(doc, dict):
        raise MalformedDocument("graph document must be a mapping")
    try:
        vertices = doc["vertices"]
        edges = doc.get("edges", [])
        pins = doc.get("pins", [])
    except (TypeError, KeyError) as exc:
        raise MalformedDocument(f"missing key: {exc}") from exc
    labels = None
    if isinstance(vertices, int):
        n = vertices
    elif isinstance(vertices, list):
        n = len(vertices)
        labels = tuple(str(x) for x in vertices)
    else:
        raise MalformedDocument("'vertices' must be an integer count or a label list")
    try:
        edge_pairs = tuple((int(a), int(b)) for a, b in edges)
        pin_set = frozenset(int(p) for p in pins)
    except (TypeError, ValueError) as exc:
        raise MalformedDocument(f"bad edge or pin entry: {exc}") from exc
    return _raise_first_violation(PinnedGraph(n=n, edges=edge_pairs, pins=pin_set, labels=labels))


def parse_graph(text: str) -> PinnedGraph:
    """Parse the canonical JSON form or the plaintext edge-list form."""
    stripped = text.strip()
    if not stripped:
        raise MalformedDocument("empty graph document")
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise MalformedDocument(f"bad JSON: {exc}") from exc
        return graph_from_dict(doc)
    return _parse_edge_list(stripped)


def _parse_edge_list(text: str) -> PinnedGraph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    try:
        n = int(lines[0])
    except (ValueError, IndexError) as exc:
        raise MalformedDocument("first line must be the vertex count") from exc
    edges = []
    pins: frozenset[int] = frozenset()
    for ln in lines[1:]:
        if ln.startswith("pins:"):
            body = ln[len("pins:"):].split()
            try:
                pins = frozenset(int(p) for p in body)
            except ValueError as exc:
                raise MalformedDocument(f"bad pin list: {ln!r}") from exc
            continue
        parts = ln.split()
        if len(parts) != 2:
            raise MalformedDocument(f"expected 'i j' edge line, got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise MalformedDocument(f"bad edge line: {ln!r}") from exc
    return _raise_first_violation(PinnedGraph(n=n, edges=tuple(edges), pins=pins))


def graph_to_dict(g: PinnedGraph) -> dict:
    vertices: int | list[str] = list(g.labels) if g.labels is not None else g.n
    return {
        "vertices": vertices,
        "edges": [list(e) for e in g.edges],
        "pins": sorted(g.pins),
    }


def serialize_graph(g: PinnedGraph) -> str:
    """Canonical JSON serialization; parse(serialize(g)) == g."""
    return json.dumps(graph_to_dict(g), indent=2) + "\n"


def adjacency(g: PinnedGraph) -> list[list[int]]:
    """Neighbor lists indexed by vertex (index 0 unused)."""
    adj: list[list[int]] = [[] for _ in range(g.n + 1)]
    for a, b in g.edges:
        adj[a].append(b)
        adj[b].append(a)
    return adj


def _check_vertex(g: PinnedGraph, v: int) -> None:
    if not (1 <= v <= g.n):
        raise UnknownVertex(f"vertex {v} not in 1..{g.n}")


def degree(g: PinnedGraph, v: int) -> int:
    _check_vertex(g, v)
    return sum(1 for a, b in g.edges if a == v or b == v)


def neighbors(g: PinnedGraph, v: int) -> set[int]:
    _check_vertex(g, v)
    out = set()
    for a, b in g.edges:
        if a == v:
            out.add(b)
        elif b == v:
            out.add(a)
    return out


def max_degree(g: PinnedGraph) -> int:
    if g.n == 0:
        return 0
    counts = [0] * (g.n + 1)
    for a, b in g.edges:
        counts[a] += 1
        counts[b] += 1
    return max(counts)


def induced_pinned_subgraph(g: PinnedGraph, keep: set[int], keep_pins: set[int]) -> PinnedGraph:
    """Induced subgraph on ``keep`` with pin set ``keep_pins``.

    Kept vertices are relabeled 1..|keep| in ascending order of their
    original identifiers; original labels are carried over.
    """
    keep = set(keep)
    keep_pins = set(keep_pins)
    if not keep <= set(g.vertices):
        raise InvalidSubset("keep set contains vertices not in the graph")
    if not keep_pins <= (g.pins & keep):
        raise InvalidSubset("keep_pins must be pins of the graph within the kept set")
    ordered = sorted(keep)
    remap = {old: i + 1 for i, old in enumerate(ordered)}
    edges = tuple((remap[a], remap[b]) for a, b in g.edges if a in keep and b in keep)
    pins = frozenset(remap[p] for p in keep_pins)
    labels = None if g.labels is None and len(keep) == g.n else tuple(g.label_of(v) for v in ordered)
    if len(keep) == g.n:
        labels = g.labels
    return PinnedGraph(n=len(ordered), edges=edges, pins=pins, labels=labels)

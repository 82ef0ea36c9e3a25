"""Star-decomposition certificates, dimensional thresholds, and graph splits.

A certificate turns a construction order into a per-vertex star schedule:
each unpinned vertex is attached to its earlier neighbors by a star map,
and the nested plan records the square-integrability obligations that make
the iterated-integral lower bound go through. Thresholds are exact
rationals (d+k)/2, with the sharpened k=1 values where available.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .admissibility import ConstructionOrder, construction_order, OrderError
from .graph import PinnedGraph, adjacency, induced_pinned_subgraph


class InvalidOrder(Exception):
    pass


class NotACycle(Exception):
    pass


class SamePin(Exception):
    pass


class PinsAdjacent(Exception):
    pass


@dataclass(frozen=True)
class StarStep:
    """One construction step: vertex, earlier-neighbor index sets, back-degree."""

    vertex: int
    eta: tuple[int, ...]
    eta_pinned: tuple[int, ...]
    eta_unpinned: tuple[int, ...]
    epsilon: int

    def to_dict(self) -> dict:
        return {
            "vertex": self.vertex,
            "eta_pinned": list(self.eta_pinned),
            "eta_unpinned": list(self.eta_unpinned),
            "epsilon": self.epsilon,
        }


@dataclass(frozen=True)
class StarCertificate:
    order: ConstructionOrder
    steps: tuple[StarStep, ...]
    kappa: int
    edge_total: int
    plan: dict
    promoted_pin: int | None = None


@dataclass(frozen=True)
class ThresholdEntry:
    d: int
    value: Fraction
    valid: bool

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "value_num": self.value.numerator,
            "value_den": self.value.denominator,
            "valid": self.valid,
        }


@dataclass(frozen=True)
class ThresholdReport:
    k: int
    dims: tuple[ThresholdEntry, ...]
    sharpened: tuple[ThresholdEntry, ...] | None

    def effective(self) -> tuple[ThresholdEntry, ...]:
        """Best known threshold per dimension (sharpened values when k=1)."""
        if self.sharpened is None:
            return self.dims
        by_d = {e.d: e for e in self.sharpened}
        return tuple(by_d.get(e.d, e) for e in self.dims)


def threshold_table(k: int, dims: list[int]) -> ThresholdReport:
    """Exact-rational dimensional thresholds (d+k)/2, valid only for d > k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    entries = tuple(ThresholdEntry(d=d, value=Fraction(d + k, 2), valid=d > k) for d in dims)
    sharpened = None
    if k == 1:
        sharp = []
        for d in dims:
            if d == 2:
                sharp.append(ThresholdEntry(d=2, value=Fraction(5, 4), valid=True))
            elif d >= 3:
                value = Fraction(d, 2) + Fraction(1, 4) - Fraction(1, 8 * d + 4)
                sharp.append(ThresholdEntry(d=d, value=value, valid=True))
        sharpened = tuple(sharp)
    return ThresholdReport(k=k, dims=entries, sharpened=sharpened)


def _star_condition(step: StarStep) -> str:
    pins = ", ".join(f"x_{i}" for i in step.eta_pinned)
    free = ", ".join(f"y_{j}" for j in step.eta_unpinned)
    parts = []
    if pins:
        parts.append(f"pins ({pins})")
    if free:
        parts.append(f"earlier free points ({free})")
    anchors = " and ".join(parts) if parts else "no anchors"
    return (
        f"the {step.epsilon}-star map with {anchors} has square-integrable "
        f"pushforward on R^{step.epsilon} of the sample measure at vertex {step.vertex}"
    )


def star_schedule(g: PinnedGraph, order: ConstructionOrder) -> StarCertificate:
    """Per-vertex star schedule for a construction order of g.

    For an unpinned graph the first ordered vertex is promoted to a pin so
    the schedule starts from an anchored star; the promotion is recorded in
    the plan header.
    """
    try:
        check = construction_order(g, order.order)
    except OrderError as exc:
        raise InvalidOrder(str(exc)) from exc
    if check.back_degrees != order.back_degrees:
        raise InvalidOrder(
            f"stated back-degrees {order.back_degrees} do not match recomputed {check.back_degrees}"
        )
    pins = set(g.pins)
    promoted: int | None = None
    start = len(g.pins)
    if not pins and g.n > 0:
        promoted = order.order[0]
        pins = {promoted}
        start = 1

    adj = adjacency(g)
    seen: list[int] = list(order.order[:start])
    steps: list[StarStep] = []
    for v in order.order[start:]:
        earlier = set(seen)
        eta = tuple(u for u in seen if u in adj[v] and u in earlier)
        eta_p = tuple(u for u in eta if u in pins)
        eta_u = tuple(u for u in eta if u not in pins)
        steps.append(StarStep(vertex=v, eta=eta, eta_pinned=eta_p, eta_unpinned=eta_u, epsilon=len(eta)))
        seen.append(v)

    kappa = max((s.epsilon for s in steps), default=0)
    plan = _nest_plan(steps, promoted)
    return StarCertificate(
        order=order,
        steps=tuple(steps),
        kappa=kappa,
        edge_total=sum(s.epsilon for s in steps),
        plan=plan,
        promoted_pin=promoted,
    )


def _nest_plan(steps: list[StarStep], promoted: int | None) -> dict:
    """Nested good-pin schedule: one level per unpinned vertex, innermost last."""
    inner: dict | None = None
    for step in reversed(steps):
        inner = {
            "vertex": step.vertex,
            "epsilon": step.epsilon,
            "eta_pinned": list(step.eta_pinned),
            "eta_unpinned": list(step.eta_unpinned),
            "condition": _star_condition(step),
            "then": inner,
        }
    header = "pins as given" if promoted is None else f"vertex {promoted} promoted to a pin (no pins given)"
    return {"header": header, "levels": inner}


def schedule_for(g: PinnedGraph, trace_order: ConstructionOrder | None = None):
    """Convenience: certificate from the deterministic min-degree dismantling."""
    from .admissibility import admissibility_number, run_k_algorithm, construction_order_from_trace

    kappa = admissibility_number(g)
    if trace_order is None:
        trace = run_k_algorithm(g, kappa)
        trace_order = construction_order_from_trace(g, trace)
    return star_schedule(g, trace_order)


def certificate_document(cert: StarCertificate, thresholds: ThresholdReport) -> dict:
    """Stable machine-readable certificate schema; goldens are bit-exact."""
    return {
        "order": list(cert.order.order),
        "back_degrees": list(cert.order.back_degrees),
        "steps": [s.to_dict() for s in cert.steps],
        "kappa": cert.kappa,
        "promoted_pin": cert.promoted_pin,
        "thresholds": [e.to_dict() for e in thresholds.effective()],
        "plan": cert.plan,
    }


def render_plan(cert: StarCertificate) -> str:
    """Human-readable iterated-integral skeleton for the certificate."""
    lines = [f"plan header: {cert.plan['header']}"]
    lines.append(f"certified budget k = {cert.kappa}; edge total = {cert.edge_total}")
    level = cert.plan["levels"]
    depth = 1
    indent = ""
    while level is not None:
        pins = ",".join(f"x_{i}" for i in level["eta_pinned"])
        free = ",".join(f"y_{j}" for j in level["eta_unpinned"])
        anchors = ",".join(x for x in (pins, free) if x)
        dts = " ".join(f"dt_{depth}.{i + 1}" for i in range(level["epsilon"]))
        lines.append(
            f"{indent}level {depth}: integrate over the {level['epsilon']}-star image "
            f"Delta^{level['epsilon']}-star_({anchors}) for vertex {level['vertex']}  [{dts}]"
        )
        lines.append(f"{indent}  obligation: {level['condition']}")
        indent += "  "
        depth += 1
        level = level["then"]
    return "\n".join(lines) + "\n"


def component_split(g: PinnedGraph) -> list[PinnedGraph]:
    """Connected components as pinned subgraphs, pins restricted per component."""
    adj = adjacency(g)
    seen = [False] * (g.n + 1)
    components: list[PinnedGraph] = []
    for start in g.vertices:
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in adj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        keep = set(comp)
        components.append(induced_pinned_subgraph(g, keep, g.pins & keep))
    return components


def _cycle_sequence(g: PinnedGraph) -> list[int]:
    """Vertices of g in cyclic order; raises NotACycle otherwise."""
    adj = adjacency(g)
    if g.n < 3 or len(g.edges) != g.n or any(len(set(adj[v])) != 2 for v in g.vertices):
        raise NotACycle("graph is not a single cycle")
    seq = [1]
    prev = None
    cur = 1
    while True:
        nxt = [u for u in adj[cur] if u != prev]
        step = nxt[0]
        if step == 1:
            break
        seq.append(step)
        prev, cur = cur, step
    if len(seq) != g.n:
        raise NotACycle("graph is not connected as a single cycle")
    return seq


def cycle_split(g: PinnedGraph, pin_a: int, pin_b: int) -> tuple[PinnedGraph, PinnedGraph]:
    """Split a pinned cycle at two nonadjacent pins into two pinned chains.

    The chains share exactly the endpoints pin_a and pin_b, and their edge
    sets partition the cycle's edges. Chain vertices carry the original
    vertex labels so the split can be re-glued.
    """
    seq = _cycle_sequence(g)
    if pin_a == pin_b:
        raise SamePin(f"pins must be distinct, got {pin_a} twice")
    for p in (pin_a, pin_b):
        if p not in g.pins:
            raise ValueError(f"vertex {p} is not a pin")
    ia, ib = seq.index(pin_a), seq.index(pin_b)
    if (ia - ib) % g.n in (1, g.n - 1):
        raise PinsAdjacent(f"pins {pin_a} and {pin_b} are adjacent on the cycle")

    def arc(i: int, j: int) -> list[int]:
        out = [seq[i]]
        while i != j:
            i = (i + 1) % g.n
            out.append(seq[i])
        return out

    def chain_of(path: list[int]) -> PinnedGraph:
        remap = {v: i + 1 for i, v in enumerate(path)}
        edges = tuple((remap[path[i]], remap[path[i + 1]]) for i in range(len(path) - 1))
        pins = frozenset(remap[v] for v in path if v in g.pins)
        labels = tuple(g.label_of(v) for v in path)
        return PinnedGraph(n=len(path), edges=edges, pins=pins, labels=labels)

    return chain_of(arc(ia, ib)), chain_of(arc(ib, ia))

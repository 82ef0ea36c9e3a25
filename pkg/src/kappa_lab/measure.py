"""Numerical probes of configuration sets on sampled point clouds.

Evaluates edge vector functions (Euclidean distance, dot product), star
maps, and whole-graph configuration maps on reproducible point clouds, and
measures image spread by half-open grid box counting. These are desk-scale
diagnostics: box counts stand in qualitatively for positive Lebesgue
measure, they do not prove anything.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .graph import PinnedGraph


class DimensionMismatch(Exception):
    pass


class EmptyPins(Exception):
    pass


class MissingVertexAssignment(Exception):
    pass


class BadGeneratorParams(Exception):
    pass


class CannotSeparate(Exception):
    pass


EDGE_VECTOR_KINDS = ("euclidean", "dot_product")


def _check_kind(kind: str) -> None:
    if kind not in EDGE_VECTOR_KINDS:
        raise ValueError(f"unknown edge vector kind {kind!r}; expected one of {EDGE_VECTOR_KINDS}")


def phi_eval(kind: str, a, b) -> float:
    """Symmetric two-point edge value: |a-b| or a.b."""
    _check_kind(kind)
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes {a.shape} and {b.shape} differ")
    if kind == "euclidean":
        return float(np.linalg.norm(a - b))
    return float(np.dot(a, b))


def star_map(pins, y, kind: str = "euclidean") -> np.ndarray:
    """Map a free point to its edge values against k fixed pins."""
    _check_kind(kind)
    if len(pins) == 0:
        raise EmptyPins("star map needs at least one pin")
    pins = np.asarray(pins, dtype=float)
    y = np.asarray(y, dtype=float)
    if pins.shape[1:] != y.shape:
        raise DimensionMismatch(f"pin shape {pins.shape[1:]} differs from point shape {y.shape}")
    if kind == "euclidean":
        return np.linalg.norm(pins - y, axis=1)
    return pins @ y


def star_map_batch(pins, ys, kind: str = "euclidean") -> np.ndarray:
    """Star map over a batch of free points; output shape (len(ys), k)."""
    _check_kind(kind)
    if len(pins) == 0:
        raise EmptyPins("star map needs at least one pin")
    pins = np.asarray(pins, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if pins.shape[1] != ys.shape[1]:
        raise DimensionMismatch(f"pin dim {pins.shape[1]} differs from point dim {ys.shape[1]}")
    if kind == "euclidean":
        return np.linalg.norm(ys[:, None, :] - pins[None, :, :], axis=2)
    return ys @ pins.T


def config_map(g: PinnedGraph, kind: str, assignment: dict) -> np.ndarray:
    """Stack edge values over all edges in canonical order."""
    _check_kind(kind)
    for v in g.vertices:
        if v not in assignment:
            raise MissingVertexAssignment(f"no point assigned to vertex {v}")
    return np.array([phi_eval(kind, assignment[a], assignment[b]) for a, b in g.edges])


@dataclass(frozen=True)
class PointCloud:
    dim: int
    points: np.ndarray
    generator: dict
    seed: int

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class SeparatedFamily:
    clouds: tuple[PointCloud, ...]
    min_gap: float


@dataclass(frozen=True)
class ConfigSample:
    graph: PinnedGraph
    phi: str
    pin_points: dict
    image: np.ndarray


def _validate_generator(generator: dict) -> dict:
    if not isinstance(generator, dict) or "kind" not in generator:
        raise BadGeneratorParams("generator must be a dict with a 'kind' key")
    kind = generator["kind"]
    if kind == "uniform-cube":
        if int(generator.get("dim", 0)) < 1:
            raise BadGeneratorParams("uniform-cube needs dim >= 1")
    elif kind == "cantor-product":
        ratio = float(generator.get("ratio", 0))
        levels = int(generator.get("levels", 0))
        if not (0 < ratio <= 0.5):
            raise BadGeneratorParams(f"cantor ratio must be in (0, 1/2], got {ratio}")
        if levels < 1:
            raise BadGeneratorParams("cantor levels must be >= 1")
        if int(generator.get("dim", 0)) < 1:
            raise BadGeneratorParams("cantor-product needs dim >= 1")
    elif kind == "sphere":
        center = generator.get("center")
        if not center or float(generator.get("radius", 0)) <= 0:
            raise BadGeneratorParams("sphere needs a center and a positive radius")
    else:
        raise BadGeneratorParams(f"unknown generator kind {kind!r}")
    return generator


def cantor_dimension(ratio: float, dim: int) -> float:
    """Similarity dimension of the product Cantor set: dim * log 2 / log(1/ratio)."""
    return dim * math.log(2) / math.log(1 / ratio)


def sample_cloud(generator: dict, count: int, seed: int) -> PointCloud:
    """Reproducible point cloud; identical (generator, count, seed) gives identical points."""
    if count < 1:
        raise BadGeneratorParams("count must be >= 1")
    generator = _validate_generator(generator)
    rng = np.random.default_rng(seed)
    kind = generator["kind"]
    if kind == "uniform-cube":
        d = int(generator["dim"])
        pts = rng.random((count, d))
    elif kind == "cantor-product":
        d = int(generator["dim"])
        ratio = float(generator["ratio"])
        levels = int(generator["levels"])
        # level-L prefractal: choose left/right digit per level, then a
        # uniform offset inside the surviving interval of length ratio**L
        digits = rng.integers(0, 2, size=(count, d, levels))
        scales = (1 - ratio) * ratio ** np.arange(levels)
        pts = (digits * scales).sum(axis=2) + rng.random((count, d)) * ratio**levels
    else:  # sphere
        center = np.asarray(generator["center"], dtype=float)
        radius = float(generator["radius"])
        d = len(center)
        raw = rng.standard_normal((count, d))
        raw /= np.linalg.norm(raw, axis=1, keepdims=True)
        pts = center + radius * raw
    return PointCloud(dim=pts.shape[1], points=pts, generator=dict(generator), seed=seed)


def split_separated(cloud: PointCloud, l: int, gap: float) -> SeparatedFamily:
    """Partition a cloud into l slabs along the first axis, dropping boundary shells."""
    if l < 1:
        raise CannotSeparate("need at least one part")
    if l == 1:
        return SeparatedFamily(clouds=(cloud,), min_gap=gap)
    xs = cloud.points[:, 0]
    lo, hi = float(xs.min()), float(xs.max())
    width = (hi - lo) / l
    if width <= gap:
        raise CannotSeparate(f"slab width {width:.4g} cannot absorb gap {gap}")
    clouds = []
    for i in range(l):
        a = lo + i * width + (gap / 2 if i > 0 else 0)
        b = lo + (i + 1) * width - (gap / 2 if i < l - 1 else 0)
        mask = (xs >= a) & (xs <= b)
        if not mask.any():
            raise CannotSeparate(f"slab {i} is empty after removing the boundary shell")
        clouds.append(
            PointCloud(dim=cloud.dim, points=cloud.points[mask], generator=cloud.generator, seed=cloud.seed)
        )
    # axis-aligned slab separation lower-bounds the Euclidean pair distance
    for i in range(l - 1):
        actual = float(clouds[i + 1].points[:, 0].min() - clouds[i].points[:, 0].max())
        if actual < gap:
            raise CannotSeparate(f"parts {i} and {i + 1} are only {actual:.4g} apart")
    return SeparatedFamily(clouds=tuple(clouds), min_gap=gap)


@dataclass(frozen=True)
class VolumeEstimate:
    delta: float
    n_cells: int
    estimate: float
    K: int

    def to_dict(self) -> dict:
        return {"delta": self.delta, "N": self.n_cells, "estimate": self.estimate, "K": self.K}


def estimate_image_volume(samples, delta: float) -> VolumeEstimate:
    """Count distinct half-open delta-grid cells hit; estimate = N * delta**K.

    The grid is anchored at the origin; boundary ties resolve by floor
    indexing, so results are bit-exact reproducible.
    """
    if delta <= 0:
        raise ValueError("delta must be positive")
    samples = np.asarray(samples, dtype=float)
    if samples.ndim == 1:
        samples = samples[:, None]
    if samples.size == 0:
        raise ValueError("need at least one sample")
    cells = np.floor(samples / delta).astype(np.int64)
    n = len(np.unique(cells, axis=0))
    k = samples.shape[1]
    return VolumeEstimate(delta=delta, n_cells=n, estimate=n * delta**k, K=k)


@dataclass(frozen=True)
class StarDensity:
    resolution: float
    support_count: int
    max_mass: float
    masses: dict = field(repr=False)


def empirical_star_density(pins, cloud: PointCloud, kind: str, resolution: float) -> StarDensity:
    """Normalized cell-mass histogram of star-map values over a cloud."""
    values = star_map_batch(pins, cloud.points, kind)
    cells = np.floor(values / resolution).astype(np.int64)
    uniq, counts = np.unique(cells, axis=0, return_counts=True)
    total = counts.sum()
    masses = {tuple(int(c) for c in cell): float(cnt) / total for cell, cnt in zip(uniq, counts)}
    return StarDensity(
        resolution=resolution,
        support_count=len(uniq),
        max_mass=float(counts.max()) / total,
        masses=masses,
    )


def sample_config_images(g: PinnedGraph, kind: str, generator: dict, count: int, seed: int) -> ConfigSample:
    """Draw pin locations once and `count` placements of the free vertices.

    Returns the stacked image vectors in R^{|E|}, one row per placement,
    with edge coordinates in canonical edge order.
    """
    _check_kind(kind)
    pins = sorted(g.pins)
    free = g.unpinned
    pin_cloud = sample_cloud(generator, max(len(pins), 1), seed)
    d = pin_cloud.dim
    pin_points = {p: pin_cloud.points[i] for i, p in enumerate(pins)}
    coords: dict[int, np.ndarray] = {p: np.broadcast_to(pin_points[p], (count, d)) for p in pins}
    free_cloud = sample_cloud(generator, max(count * max(len(free), 1), 1), seed + 1)
    for i, v in enumerate(free):
        coords[v] = free_cloud.points[i * count:(i + 1) * count]
    if len(g.edges) == 0:
        image = np.zeros((count, 0))
    else:
        cols = []
        for a, b in g.edges:
            if kind == "euclidean":
                cols.append(np.linalg.norm(coords[a] - coords[b], axis=1))
            else:
                cols.append(np.einsum("ij,ij->i", coords[a], coords[b]))
        image = np.stack(cols, axis=1)
    return ConfigSample(graph=g, phi=kind, pin_points=pin_points, image=image)


def cloud_dump(cloud: PointCloud) -> str:
    """Columnar plaintext dump: header line, then one point per line."""
    gen = ";".join(f"{k}={v}" for k, v in sorted(cloud.generator.items()))
    lines = [f"# dim={cloud.dim} seed={cloud.seed} generator={gen}"]
    for p in cloud.points:
        lines.append(" ".join(repr(float(x)) for x in p))
    return "\n".join(lines) + "\n"

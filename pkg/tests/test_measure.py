import math

import numpy as np
import pytest

from kappa_lab import fixtures
from kappa_lab.graph import PinnedGraph
from kappa_lab.measure import (
    BadGeneratorParams,
    CannotSeparate,
    DimensionMismatch,
    EmptyPins,
    MissingVertexAssignment,
    cantor_dimension,
    cloud_dump,
    config_map,
    empirical_star_density,
    estimate_image_volume,
    phi_eval,
    sample_cloud,
    sample_config_images,
    split_separated,
    star_map,
    star_map_batch,
)


def test_phi_euclidean_345():
    assert phi_eval("euclidean", [0, 0], [3, 4]) == pytest.approx(5.0)


def test_phi_dot_product():
    assert phi_eval("dot_product", [1, 2], [3, -1]) == pytest.approx(1.0)


def test_phi_errors():
    with pytest.raises(DimensionMismatch):
        phi_eval("euclidean", [0, 0], [1, 2, 3])
    with pytest.raises(ValueError):
        phi_eval("chebyshev", [0], [1])


def test_star_map_values():
    pins = [[0.0, 0.0], [3.0, 4.0]]
    out = star_map(pins, [3.0, 0.0])
    assert out == pytest.approx([3.0, 4.0])
    dots = star_map(pins, [1.0, 1.0], kind="dot_product")
    assert dots == pytest.approx([0.0, 7.0])


def test_star_map_errors():
    with pytest.raises(EmptyPins):
        star_map([], [0.0, 0.0])
    with pytest.raises(DimensionMismatch):
        star_map([[0.0, 0.0]], [0.0, 0.0, 0.0])


def test_star_map_batch_matches_loop():
    rng = np.random.default_rng(7)
    pins = rng.random((3, 2))
    ys = rng.random((50, 2))
    batch = star_map_batch(pins, ys)
    for i, y in enumerate(ys):
        assert batch[i] == pytest.approx(star_map(pins, y))


def test_config_map_triangle():
    g = PinnedGraph(n=3, edges=((1, 2), (2, 3), (1, 3)), pins=frozenset({1}))
    pts = {1: [0.0, 0.0], 2: [3.0, 0.0], 3: [3.0, 4.0]}
    # canonical edge order (1,2),(1,3),(2,3)
    assert config_map(g, "euclidean", pts) == pytest.approx([3.0, 5.0, 4.0])
    with pytest.raises(MissingVertexAssignment):
        config_map(g, "euclidean", {1: [0, 0], 2: [1, 1]})


def test_cantor_dimension_values():
    assert cantor_dimension(0.5, 1) == pytest.approx(1.0)
    assert cantor_dimension(1 / 3, 1) == pytest.approx(math.log(2) / math.log(3))
    assert cantor_dimension(1 / 4, 2) == pytest.approx(1.0)


def test_sample_cloud_deterministic():
    gen = {"kind": "uniform-cube", "dim": 3}
    a = sample_cloud(gen, 100, seed=5)
    b = sample_cloud(gen, 100, seed=5)
    c = sample_cloud(gen, 100, seed=6)
    assert np.array_equal(a.points, b.points)
    assert not np.array_equal(a.points, c.points)
    assert a.points.shape == (100, 3)
    assert a.points.min() >= 0 and a.points.max() <= 1


def test_sample_cloud_cantor_in_unit_cube():
    gen = {"kind": "cantor-product", "dim": 2, "ratio": 1 / 3, "levels": 10}
    cloud = sample_cloud(gen, 500, seed=1)
    assert cloud.points.min() >= 0 and cloud.points.max() <= 1
    # middle-third gap: no coordinate lands in (1/3, 2/3) beyond level-10 slack
    xs = cloud.points.ravel()
    slack = (1 / 3) ** 10
    assert not np.any((xs > 1 / 3 + slack) & (xs < 2 / 3))


def test_sample_cloud_cantor_box_count_slope():
    # box-count dimension of the middle-thirds product approximates 2*log2/log3
    gen = {"kind": "cantor-product", "dim": 2, "ratio": 1 / 3, "levels": 12}
    cloud = sample_cloud(gen, 200_000, seed=3)
    d_expected = cantor_dimension(1 / 3, 2)
    n1 = estimate_image_volume(cloud.points, 1 / 27).n_cells
    n2 = estimate_image_volume(cloud.points, 1 / 81).n_cells
    slope = math.log(n2 / n1) / math.log(3)
    assert slope == pytest.approx(d_expected, abs=0.08)


def test_sample_cloud_sphere():
    gen = {"kind": "sphere", "center": [1.0, 2.0, 3.0], "radius": 2.0}
    cloud = sample_cloud(gen, 1000, seed=0)
    radii = np.linalg.norm(cloud.points - np.array([1.0, 2.0, 3.0]), axis=1)
    assert radii == pytest.approx(np.full(1000, 2.0))


@pytest.mark.parametrize(
    "gen",
    [
        {"kind": "uniform-cube", "dim": 0},
        {"kind": "cantor-product", "dim": 2, "ratio": 0.6, "levels": 5},
        {"kind": "cantor-product", "dim": 2, "ratio": 0.3, "levels": 0},
        {"kind": "sphere", "center": [0, 0], "radius": 0},
        {"kind": "moebius"},
        "not-a-dict",
    ],
)
def test_bad_generator_params(gen):
    with pytest.raises(BadGeneratorParams):
        sample_cloud(gen, 10, seed=0)


def test_split_separated_gap_holds():
    cloud = sample_cloud({"kind": "uniform-cube", "dim": 2}, 5000, seed=9)
    fam = split_separated(cloud, 3, gap=0.05)
    assert len(fam.clouds) == 3
    assert sum(len(c) for c in fam.clouds) <= len(cloud)
    for i in range(2):
        lo = fam.clouds[i + 1].points[:, 0].min()
        hi = fam.clouds[i].points[:, 0].max()
        assert lo - hi >= 0.05
    with pytest.raises(CannotSeparate):
        split_separated(cloud, 3, gap=0.5)


def test_split_single_part_identity():
    cloud = sample_cloud({"kind": "uniform-cube", "dim": 1}, 10, seed=0)
    fam = split_separated(cloud, 1, gap=0.1)
    assert fam.clouds == (cloud,)


def test_volume_estimate_exact_grid():
    pts = np.array([[0.05, 0.05], [0.15, 0.05], [0.15, 0.15], [0.151, 0.151]])
    est = estimate_image_volume(pts, 0.1)
    assert est.n_cells == 3 and est.K == 2
    assert est.estimate == pytest.approx(3 * 0.01)


def test_volume_estimate_half_open_boundaries():
    # points exactly on a grid line fall in the upper cell, deterministically
    est = estimate_image_volume(np.array([[0.1], [0.1], [0.0999999]]), 0.1)
    assert est.n_cells == 2 and est.K == 1


def test_volume_refinement_bounds():
    rng = np.random.default_rng(11)
    pts = rng.random((20_000, 2))
    for delta in (0.25, 0.125, 0.0625):
        coarse = estimate_image_volume(pts, delta).n_cells
        fine = estimate_image_volume(pts, delta / 2).n_cells
        assert coarse <= fine <= 4 * coarse


def test_volume_rigid_motion_invariance():
    rng = np.random.default_rng(13)
    pts = rng.random((5000, 2))
    theta = 0.73
    rot = np.array([[math.cos(theta), -math.sin(theta)], [math.sin(theta), math.cos(theta)]])
    moved = pts @ rot.T + np.array([2.0, -1.5])
    for delta in (0.1, 0.05):
        a = estimate_image_volume(pts, delta).estimate
        b = estimate_image_volume(moved, delta).estimate
        assert abs(a - b) <= 0.35 * max(a, b)  # boundary-cell churn only


def test_star_density_degenerate_at_sphere_center():
    # pins at a common sphere center: every sample gives the same distance
    cloud = sample_cloud({"kind": "sphere", "center": [0.0, 0.0], "radius": 1.0}, 2000, seed=2)
    # resolution with no cell boundary at 1.0, so fp jitter stays in one cell
    dens = empirical_star_density([[0.0, 0.0]], cloud, "euclidean", resolution=0.3)
    assert dens.support_count == 1
    assert dens.max_mass == pytest.approx(1.0)


def test_star_density_spreads_for_generic_pins():
    cloud = sample_cloud({"kind": "uniform-cube", "dim": 2}, 2000, seed=2)
    dens = empirical_star_density([[0.0, 0.0], [1.0, 1.0]], cloud, "euclidean", resolution=0.05)
    assert dens.support_count > 50
    assert dens.max_mass < 0.05


def test_star_map_lipschitz_euclidean():
    # distance-to-pins map is 1-Lipschitz in the free point
    rng = np.random.default_rng(17)
    pins = rng.random((4, 3))
    ys = rng.random((2000, 3))
    zs = rng.random((2000, 3))
    fy = star_map_batch(pins, ys)
    fz = star_map_batch(pins, zs)
    lhs = np.linalg.norm(fy - fz, axis=1)
    rhs = 2.0 * np.linalg.norm(ys - zs, axis=1)  # sqrt(k) <= 2 for k = 4 pins
    assert np.all(lhs <= rhs + 1e-12)


def test_sample_config_images_shape_and_determinism():
    g, _ = fixtures.GALLERY["cycle8-four-pins"]
    a = sample_config_images(g, "euclidean", {"kind": "uniform-cube", "dim": 2}, 500, seed=4)
    b = sample_config_images(g, "euclidean", {"kind": "uniform-cube", "dim": 2}, 500, seed=4)
    assert a.image.shape == (500, len(g.edges))
    assert np.array_equal(a.image, b.image)
    assert set(a.pin_points) == set(g.pins)


def test_sample_config_images_matches_config_map():
    g = fixtures.small_example_graph()
    sample = sample_config_images(g, "euclidean", {"kind": "uniform-cube", "dim": 2}, 3, seed=8)
    free = g.unpinned
    for row in range(3):
        assignment = dict(sample.pin_points)
        free_cloud = sample_cloud({"kind": "uniform-cube", "dim": 2}, 3 * len(free), seed=9)
        for i, v in enumerate(free):
            assignment[v] = free_cloud.points[i * 3 + row]
        assert sample.image[row] == pytest.approx(config_map(g, "euclidean", assignment))


def test_cloud_dump_roundtrip_floats():
    cloud = sample_cloud({"kind": "uniform-cube", "dim": 2}, 5, seed=1)
    dump = cloud_dump(cloud)
    lines = dump.strip().splitlines()
    assert lines[0].startswith("# dim=2 seed=1")
    parsed = np.array([[float(x) for x in line.split()] for line in lines[1:]])
    assert np.array_equal(parsed, cloud.points)  # repr round-trips exactly

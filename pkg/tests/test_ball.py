import csv
import json
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from polar_ch2 import ball
from polar_ch2.catalog import P_U1, P_U2, catalog, entry
from polar_ch2.roots import frame, p_span

RNG_SEEDS = st.integers(0, 2**32 - 1)


def test_ball_invariant():
    with pytest.raises(ball.BallError):
        ball.BallPoint(0.8, 0.7)


def test_calibration_constant():
    assert ball.METRIC_SCALE == pytest.approx(4.0, abs=1e-12)
    v = ball.killing_vector(frame().B, ball.ORIGIN)
    assert ball.metric_norm(ball.ORIGIN, v) == pytest.approx(1.0, abs=1e-14)
    assert np.allclose(ball.metric(ball.ORIGIN).gram, 4 * np.eye(4))


@given(RNG_SEEDS)
def test_group_action(seed):
    rng = np.random.default_rng(seed)
    g, h = ball.random_group_element(rng), ball.random_group_element(rng)
    p = ball.random_point(rng)
    assert ball.in_group(g)
    assert np.allclose(ball.act(np.eye(3), p).real, p.real, atol=0)
    assert np.max(np.abs(ball.act(g @ h, p).real - ball.act(g, ball.act(h, p)).real)) < 1e-10
    assert np.max(np.abs(ball.act(g, ball.act(np.linalg.inv(g), p)).real - p.real)) < 1e-10


def test_act_rejects_non_isometries():
    with pytest.raises(ball.BallError):
        ball.act(np.diag([1.0, 2.0, 1.0]), ball.ORIGIN)


def test_geodesic_along_b_heads_to_boundary():
    b = frame().B
    radii = [abs(ball.act(ball.group_exp(b * t_), ball.ORIGIN).z1) for t_ in range(1, 12)]
    assert all(x < y for x, y in zip(radii, radii[1:]))
    assert radii[-1] > 0.99
    p = ball.act(ball.group_exp(b * 3), ball.ORIGIN)
    assert p.z2 == 0 and abs(p.z1.imag) < 1e-15
    assert ball.distance(ball.ORIGIN, p) == pytest.approx(3.0, abs=1e-12)


@given(RNG_SEEDS)
def test_metric_invariance(seed):
    rng = np.random.default_rng(seed)
    assert ball.invariance_residual(ball.random_group_element(rng), ball.random_point(rng)) < 1e-8


@given(RNG_SEEDS)
def test_distance_is_invariant(seed):
    rng = np.random.default_rng(seed)
    g = ball.random_group_element(rng)
    p, q = ball.random_point(rng), ball.random_point(rng)
    assert ball.distance(ball.act(g, p), ball.act(g, q)) == pytest.approx(ball.distance(p, q), abs=1e-8)


@given(RNG_SEEDS)
def test_killing_vector_matches_finite_differences(seed):
    rng = np.random.default_rng(seed)
    x, p = ball.random_algebra_element(rng), ball.random_point(rng)
    assert np.max(np.abs(ball.killing_vector(x, p) - ball.killing_vector_fd(x, p))) < 1e-8


def test_isotropy_fixes_origin():
    f = frame()
    for v in f.k_space.basis:
        assert np.max(np.abs(ball.killing_vector(f.element(v), ball.ORIGIN))) < 1e-12


def test_curvature_sign_convention_on_surfaces():
    disc = lambda x: np.eye(2) * 4 / (1 - x @ x) ** 2
    sphere = lambda x: np.eye(2) * 4 / (1 + x @ x) ** 2
    assert ball.curvature_of(disc, [0.3, -0.2], [1, 0], [0, 1]) == pytest.approx(-1, abs=1e-4)
    assert ball.curvature_of(sphere, [0.3, -0.2], [1, 0], [0, 1]) == pytest.approx(1, abs=1e-4)


def test_curvature_at_origin():
    o = ball.ORIGIN
    assert ball.holomorphic_curvature(o, [1, 0, 0, 0]) == pytest.approx(-1, abs=1e-3)
    assert ball.sectional_curvature(o, [1, 0, 0, 0], [0, 0, 1, 0]) == pytest.approx(-0.25, abs=1e-3)


@given(RNG_SEEDS)
def test_curvature_pinching(seed):
    rng = np.random.default_rng(seed)
    p = ball.random_point(rng, 0.7)
    u, v = rng.normal(size=4), rng.normal(size=4)
    assert ball.holomorphic_curvature(p, u) == pytest.approx(-1, abs=1e-3)
    assert -1 - 1e-3 <= ball.sectional_curvature(p, u, v) <= -0.25 + 1e-3


@pytest.mark.parametrize("e", catalog(), ids=lambda e: e.id)
def test_orthogonality_scan(e):
    assert ball.orthogonality_scan(e) < 1e-8


def test_scan_detects_wrong_section():
    import dataclasses
    bad = dataclasses.replace(entry("ii.b"), s=p_span(P_U1, P_U2))
    assert ball.orthogonality_scan(bad) > 0.1


def test_section_points():
    pts = ball.section_points(entry("ii.b"), 15)
    assert len(pts) == 225
    assert len(ball.section_points(entry("i.b"), 20)) == 20
    assert ball.section_points(entry("i.b"), 0) == []
    # the i.b section is a geodesic through o, so a real line in the ball
    pts = [p.real for p in ball.section_points(entry("i.b"), 7)]
    direction = pts[0] / np.linalg.norm(pts[0])
    for x in pts:
        assert np.linalg.norm(x - (x @ direction) * direction) < 1e-15


def test_distance_spheres_for_k():
    p0 = ball.BallPoint(0.3 + 0.1j, -0.2j)
    cloud = ball.orbit_cloud(entry("i.a"), p0, 3)
    d = [ball.distance(ball.ORIGIN, ball.BallPoint.from_real(x)) for x in cloud.points]
    assert max(d) - min(d) < 1e-8


@pytest.mark.parametrize("eid", ["i.d1", "i.d2"])
def test_horosphere_levels(eid):
    p0 = ball.BallPoint(-0.1 + 0.4j, 0.25)
    cloud = ball.orbit_cloud(entry(eid), p0, 3, 1.5)
    h = [ball.horospherical_height(ball.BallPoint.from_real(x)) for x in cloud.points]
    assert max(h) - min(h) < 1e-6
    assert np.ptp(cloud.points, axis=0).max() > 0.1  # the cloud is not degenerate


def test_horospherical_height_along_geodesic():
    b = frame().B
    for t in (-2.0, 0.5, 3.0):
        p = ball.act(ball.group_exp(t * ball.to_matrix(b)), ball.ORIGIN)
        assert ball.horospherical_height(p) == pytest.approx(t, abs=1e-10)


def test_empty_cloud_and_export(tmp_path):
    e = entry("ii.c")
    assert len(ball.orbit_cloud(e, ball.ORIGIN, 0)) == 0
    cloud = ball.orbit_cloud(e, ball.BallPoint(0.1, 0.2j), 3, seed=5)
    rows = list(csv.reader(open(cloud.write_csv(tmp_path / "c.csv"))))
    assert rows[0] == ["entry_id", "t1", "t2", "x1", "y1", "x2", "y2"]
    assert len(rows) == 10 and rows[1][0] == "ii.c"
    data = json.loads(cloud.write_json(tmp_path / "c.json").read_text())
    assert data["metadata"]["seed"] == 5 and data["metadata"]["model"] == ball.MODEL_TAG
    assert len(data["points"]) == 9


def test_parse_grid():
    assert ball.parse_grid("5") == (5, 1.0)
    assert ball.parse_grid("4:2.5") == (4, 2.5)
    with pytest.raises(ValueError):
        ball.parse_grid("x")


def test_expm_accuracy():
    rng = np.random.default_rng(3)
    for _ in range(20):
        x = ball.random_algebra_element(rng, 1.5)
        assert np.linalg.norm(ball.group_exp(x) @ ball.group_exp(-x) - np.eye(3)) < 1e-10 * max(
            1.0, math.exp(2 * np.linalg.norm(x)))

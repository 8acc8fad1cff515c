"""Aggregated verification runs shared by the command line and the acceptance tests.

Every function returns a plain dict (JSON-ready, deterministic for a fixed
seed) with a top-level ``passed`` flag.
"""

from __future__ import annotations

import dataclasses
import random
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import ball, lie
from .catalog import P_U1, P_U2, catalog, entry, negative_catalog, section_bracket_images, verify_entry
from .criterion import NotTotallyGeodesicError
from .lemma import rand_g_alpha, rand_q, run_lemma_suite
from .roots import LEVELS, NAMES, choose_a, decompose, format_coords, frame, p_span, verify_bracket_display

DEFAULT_SEED = 0
DEFAULT_SAMPLES = 100


def structure_suite(seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES) -> dict:
    f = frame()
    rd = decompose(choose_a())
    out: dict = {"root_dims": list(rd.dims)}
    checks = {"root_dims": rd.dims == (1, 2, 2, 2, 1)}

    # theta maps level k to level -k
    theta_ok = all(
        all(not c or LEVELS[j] == -LEVELS[i] for j, c in enumerate(f.theta_coords(_unit(i))))
        for i in range(8))
    checks["theta_swaps_root_spaces"] = theta_ok

    grading = []
    for i in range(8):
        for j in range(8):
            target = LEVELS[i] + LEVELS[j]
            c = f.structure[i][j]
            if any(x and LEVELS[k] != target for k, x in enumerate(c)):
                grading.append([NAMES[i], NAMES[j], format_coords(c)])
    checks["bracket_grading"] = not grading
    out["grading_violations"] = grading

    checks["<B,B> = 1"] = lie.inner(f.B, f.B) == 1
    checks["<Z,Z> = 2"] = lie.inner(f.Z, f.Z) == 2
    checks["[B,U1] = U1/2"] = lie.bracket(f.B, f.U1) == f.U1 / 2

    rng = random.Random(seed)
    bad = 0
    for _ in range(samples):
        a, b, x, y = (rand_q(rng) for _ in range(4))
        if verify_bracket_display(a, b, x, y, rand_g_alpha(rng, nonzero=False), rand_g_alpha(rng, nonzero=False)):
            bad += 1
    checks["bracket_display"] = bad == 0
    out["bracket_display_samples"] = samples
    out["bracket_display_failures"] = bad

    out.update(killing_oracle())
    checks["killing_oracle"] = out["killing_mismatches"] == 0
    out["checks"] = checks
    out["passed"] = all(checks.values())
    return out


def _unit(i: int):
    return tuple(1 if k == i else 0 for k in range(8))


def killing_oracle() -> dict:
    """Ad-trace Killing form against ``6 tr(XY)`` on all pairs of the raw basis."""
    mism = 0
    for x in lie.RAW_BASIS:
        for y in lie.RAW_BASIS:
            if lie.killing(x, y) != lie.killing_closed_form(x, y):
                mism += 1
    n = len(lie.RAW_BASIS)
    return {"killing_pairs": n * n, "killing_mismatches": mism}


def faulty_entry(entry_id: str):
    """Catalog entry with its section replaced by the complex line p_alpha."""
    return dataclasses.replace(entry(entry_id), s=p_span(P_U1, P_U2))


def catalog_suite(jobs: int = 1, fault: str | None = None) -> dict:
    entries = [faulty_entry(e.id) if e.id == fault else e for e in catalog()]

    def run(e):
        try:
            return verify_entry(e).to_dict()
        except NotTotallyGeodesicError as exc:
            return {**e.to_dict(), "passed": False, "error": str(exc)}

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(run, entries))
    else:
        rows = [run(e) for e in entries]
    if fault:
        for r in rows:
            if r["id"] == fault:
                r["fault_injected"] = "section replaced by p_alpha"
    images = section_bracket_images()
    negatives = [n.to_dict() for n in negative_catalog()]
    passed = (all(r["passed"] for r in rows) and all(v["match"] for v in images.values())
              and all(n["holds"] for n in negatives))
    return {
        "entries": rows,
        "polar_count": sum(1 for r in rows if r.get("verdict")),
        "section_bracket_images": images,
        "negative_examples": negatives,
        "passed": passed,
    }


def numerical_suite(seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES,
                    curvature_points: int = 20, fault: str | None = None) -> dict:
    rng = np.random.default_rng(seed)
    tol = ball.FIRST_ORDER_TOL
    out: dict = {}
    action = inverse = invariance = fd = 0.0
    for _ in range(samples):
        g, h = ball.random_group_element(rng), ball.random_group_element(rng)
        p = ball.random_point(rng)
        action = max(action, float(np.max(np.abs(ball.act(g @ h, p).real - ball.act(g, ball.act(h, p)).real))))
        inverse = max(inverse, float(np.max(np.abs(ball.act(g, ball.act(np.linalg.inv(g), p)).real - p.real))))
        invariance = max(invariance, ball.invariance_residual(g, p))
        x = ball.random_algebra_element(rng)
        fd = max(fd, float(np.max(np.abs(ball.killing_vector(x, p) - ball.killing_vector_fd(x, p)))))
    out["group_action_residual"] = action
    out["inverse_residual"] = inverse
    out["metric_invariance_residual"] = invariance
    out["killing_fd_residual"] = fd

    curv = 0.0
    for _ in range(curvature_points):
        p = ball.random_point(rng, 0.8)
        curv = max(curv, abs(ball.holomorphic_curvature(p, rng.normal(size=4)) + 1.0))
    out["holomorphic_curvature_error"] = curv

    scans = {}
    for e in catalog():
        target = faulty_entry(e.id) if e.id == fault else e
        scans[e.id] = ball.orthogonality_scan(target)
    out["orthogonality_scan"] = scans

    p0 = ball.BallPoint(0.3 + 0.1j, -0.2j)
    cloud = ball.orbit_cloud(entry("i.a"), p0, 3, 1.0)
    d = [ball.distance(ball.ORIGIN, ball.BallPoint.from_real(x)) for x in cloud.points]
    out["distance_sphere_spread"] = max(d) - min(d)
    horo = {}
    for eid in ("i.d1", "i.d2"):
        cloud = ball.orbit_cloud(entry(eid), p0, 3, 1.0)
        h = [ball.horospherical_height(ball.BallPoint.from_real(x)) for x in cloud.points]
        horo[eid] = max(h) - min(h)
    out["horosphere_spread"] = horo

    checks = {
        "group_action": action < tol and inverse < tol,
        "metric_invariance": invariance < tol,
        "killing_fd": fd < tol,
        "holomorphic_curvature": curv < ball.CURVATURE_TOL,
        "orthogonality": all(v < tol for v in scans.values()),
        "distance_sphere": out["distance_sphere_spread"] < 1e-6,
        "horosphere": all(v < 1e-6 for v in horo.values()),
    }
    out["checks"] = checks
    out["passed"] = all(checks.values())
    return out


def verify_all(seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES, jobs: int = 1,
               fault: str | None = None) -> dict:
    report = {
        "config": {"seed": seed, "samples": samples, "fault": fault},
        "structure": structure_suite(seed, samples),
        "catalog": catalog_suite(jobs, fault),
        "lemma": run_lemma_suite(samples, seed),
        "numerical": numerical_suite(seed, samples, fault=fault),
    }
    report["passed"] = all(report[k]["passed"] for k in ("structure", "catalog", "lemma", "numerical"))
    return report


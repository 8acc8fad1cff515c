"""One line per acceptance criterion, with the measured runtime.

The lines are repeated in the pytest terminal summary.
"""

import subprocess
import sys
import time

from polar_ch2 import suites
from polar_ch2.catalog import section_bracket_images, verify_catalog
from polar_ch2.lemma import impossibility_checks, run_lemma_suite
from polar_ch2.roots import is_subalgebra, g_span

RESULTS = {}


def report(n, ok, detail, seconds):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} ({seconds:.2f}s) {detail}"
    RESULTS[n] = line
    print(line)


def test_1_structure():
    t = time.perf_counter()
    rep = suites.structure_suite(seed=0, samples=100)
    dt = time.perf_counter() - t
    ok = rep["passed"] and rep["bracket_display_samples"] == 100 and dt < 1.0
    report(1, ok, f"dims={tuple(rep['root_dims'])} display failures={rep['bracket_display_failures']}", dt)
    assert rep["passed"] and rep["root_dims"] == [1, 2, 2, 2, 1]
    assert dt < 1.0


def test_2_killing_oracle():
    t = time.perf_counter()
    rep = suites.killing_oracle()
    dt = time.perf_counter() - t
    ok = rep["killing_pairs"] == 64 and rep["killing_mismatches"] == 0
    report(2, ok, f"{rep['killing_pairs']} pairs, {rep['killing_mismatches']} mismatches", dt)
    assert ok


def test_3_criterion():
    t = time.perf_counter()
    results = verify_catalog()
    images = section_bracket_images()
    dt = time.perf_counter() - t
    polar = sum(1 for r in results if r.report.verdict and not r.report.residuals)
    ok = polar == 10 and all(v["match"] for v in images.values()) and dt < 1.0
    report(3, ok, f"{polar}/10 polar with zero residuals; bracket images match: "
                  f"{all(v['match'] for v in images.values())}", dt)
    assert polar == 10 and all(v["match"] for v in images.values())
    assert dt < 1.0


def test_4_negative():
    t = time.perf_counter()
    closure = is_subalgebra(g_span("T", "U1", "U2"))
    imp = impossibility_checks()
    dt = time.perf_counter() - t
    ok = (not closure.ok and closure.witness is not None and imp["obstruction_residual"] == "2"
          and imp["real_or_complex_iff_a_zero"] and imp["passed"])
    report(4, ok, f"residual={imp['obstruction_residual']} sweep={imp['section_real_or_complex']}", dt)
    assert ok


def test_5_lemma():
    t = time.perf_counter()
    rep = run_lemma_suite(samples=100, seed=0, conjugation_samples=50)
    dt = time.perf_counter() - t
    counts = rep["conjugations"]["exact_matches"]
    ok = (rep["passed"] and rep["Y=0"]["accepted"] >= 100 and rep["Y!=0"]["accepted"] >= 100
          and min(counts.values()) >= 50 and dt < 10.0)
    report(5, ok, f"accepted Y=0:{rep['Y=0']['accepted']} Y!=0:{rep['Y!=0']['accepted']} conjugations={counts}", dt)
    assert ok


def test_6_numerical():
    t = time.perf_counter()
    rep = suites.numerical_suite(seed=0, samples=100, curvature_points=20)
    dt = time.perf_counter() - t
    ok = rep["passed"] and dt < 60.0
    worst_scan = max(rep["orthogonality_scan"].values())
    report(6, ok, f"max|cos|={worst_scan:.1e} curvature err={rep['holomorphic_curvature_error']:.1e} "
                  f"fd={rep['killing_fd_residual']:.1e}", dt)
    assert rep["passed"], rep["checks"]
    assert dt < 60.0


def test_7_determinism():
    t = time.perf_counter()
    cmd = [sys.executable, "-m", "polar_ch2", "verify-all", "--json"]
    a = subprocess.run(cmd, capture_output=True, check=False)
    b = subprocess.run(cmd, capture_output=True, check=False)
    dt = time.perf_counter() - t
    ok = a.returncode == 0 and a.stdout == b.stdout and len(a.stdout) > 0
    report(7, ok, f"exit={a.returncode}, {len(a.stdout)} bytes, identical={a.stdout == b.stdout}", dt)
    assert ok

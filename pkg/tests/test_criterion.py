import random

import pytest
from hypothesis import given, strategies as st

from polar_ch2.criterion import (ActionSpec, NotSubalgebraError, NotTotallyGeodesicError, bracket_image,
                                 cohomogeneity, is_polar_with_section, isotropy, orbit_tangent, section_type)
from polar_ch2.lemma import lemma_section
from polar_ch2.roots import frame, g_span, p_span
from polar_ch2.scalars import QSqrt3
from polar_ch2.subspace import lincomb, span

A, PU1, PU2, PZ = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
G0 = g_span("T", "B")
K0_G2 = g_span("T", "Z")


def test_orbit_tangent_examples():
    assert orbit_tangent(frame().k_space).dim == 0
    assert orbit_tangent(G0) == p_span(A)
    assert orbit_tangent(g_span("tZ", "T", "B", "Z")) == p_span(A, PZ)


def test_isotropy_examples():
    assert isotropy(G0) == g_span("T")
    assert isotropy(g_span("U1", "U2", "Z")).dim == 0
    assert isotropy(K0_G2) == g_span("T")


def test_case_one_and_case_two_are_polar():
    r1 = is_polar_with_section(G0, p_span(PU1, PZ))
    r2 = is_polar_with_section(K0_G2, p_span(A, PU1))
    for r in (r1, r2):
        assert r.verdict and not r.residuals and r.cohomogeneity == 2


def test_section_tangent_to_orbit_fails():
    r = is_polar_with_section(G0, p_span(A, PZ))
    assert not r.checks["section_in_normal"] and not r.verdict


def test_full_isotropy_line_is_a_section():
    r = is_polar_with_section(frame().k_space, p_span(A))
    assert r.verdict and r.cohomogeneity == 1


def test_bracket_obstruction_residual():
    h = span([frame().vector(T=1, B=1), frame().vector(Z=1)], 8)
    r = is_polar_with_section(h, p_span(PU1, PU2))
    assert not r.checks["bracket_orthogonality"]
    assert [x.value for x in r.residuals if x.check == "bracket_orthogonality" and x.witness[-1] == "Z"] == ["2"]


def test_bracket_images_of_the_two_sections():
    f = frame()
    assert bracket_image(p_span(A, PU1)) == span([f.vector(U1=1, tU1=1)], 8)
    img = bracket_image(p_span(PU1, PZ))
    assert img.dim == 1
    assert all(not c or i in (1, 2, 5, 6) for i, c in enumerate(img.basis[0]))  # inside g_-alpha + g_alpha


def test_non_subalgebra_is_rejected_with_witness():
    with pytest.raises(NotSubalgebraError, match="bracket closure violated"):
        ActionSpec("k0+g_alpha", g_span("T", "U1", "U2"))
    with pytest.raises(NotSubalgebraError):
        is_polar_with_section(g_span("T", "U1", "U2"), p_span(A))


def test_section_types():
    assert section_type(p_span(A)) == "RH1"
    assert section_type(p_span(A, PU1)) == "RH2"
    assert section_type(p_span(A, PZ)) == "CH1"
    assert section_type(span([], 4)) == "point"
    assert section_type(p_span(A, PU1, PU2, PZ)) == "CH2"
    with pytest.raises(NotTotallyGeodesicError):
        section_type(p_span(A, PU1, PZ))


def test_lemma_section_with_nonzero_a_is_rejected():
    f = frame()
    h = span([f.coords(f.T + f.B + f.U1), f.coords(f.Z)], 8)
    assert ActionSpec("h", h)
    with pytest.raises(NotTotallyGeodesicError):
        is_polar_with_section(h, lemma_section(f.U1, 1))


def test_cohomogeneity_values():
    assert cohomogeneity(frame().k_space) == 1
    assert cohomogeneity(g_span("U1", "U2", "Z")) == 1
    assert cohomogeneity(G0) == 2
    assert cohomogeneity(g_span("T", "B", "Z")) == 1


def _rebase(s, rng):
    coeffs = [[QSqrt3(rng.randint(-4, 4), 0) for _ in s.basis] for _ in s.basis]
    for i in range(len(coeffs)):
        coeffs[i][i] = coeffs[i][i] + 9  # diagonally dominant, so invertible
    return [lincomb(c, s.basis, s.ambient_dim) for c in coeffs]


@given(st.integers(0, 10_000))
def test_verdict_is_basis_independent(seed):
    rng = random.Random(seed)
    for h, s in ((G0, p_span(PU1, PZ)), (K0_G2, p_span(A, PU1)), (G0, p_span(A, PZ))):
        ref = is_polar_with_section(h, s)
        r = is_polar_with_section(span(_rebase(h, rng), 8), span(_rebase(s, rng), 4))
        assert r.verdict == ref.verdict and r.checks == ref.checks

import pytest
from hypothesis import given, strategies as st

from polar_ch2.roots import frame, g_span, p_span
from polar_ch2.scalars import Q0
from polar_ch2.subspace import (DimensionMismatch, Subspace, contains, intersect, lincomb, nullspace,
                                ortho_complement, project, span, sum_)

from conftest import rationals

vectors = st.lists(rationals, min_size=5, max_size=5).map(tuple)
families = st.lists(vectors, min_size=0, max_size=4)
IDENTITY5 = [[1 if i == j else 0 for j in range(5)] for i in range(5)]


@given(families, st.lists(rationals, min_size=4, max_size=4))
def test_span_is_basis_independent(vs, coeffs):
    s = span(vs, 5)
    mixed = [lincomb(coeffs, vs, 5)] + list(vs)
    assert span(mixed, 5) == s
    assert span(list(reversed(vs)), 5) == s


@given(families)
def test_nullspace_is_annihilated(vs):
    for x in nullspace(vs, 5):
        for v in vs:
            assert sum((a * b for a, b in zip(v, x)), Q0) == 0
    assert len(nullspace(vs, 5)) == 5 - span(vs, 5).dim


@given(families, families)
def test_dimension_formula(a, b):
    sa, sb = span(a, 5), span(b, 5)
    assert sum_(sa, sb).dim + intersect(sa, sb).dim == sa.dim + sb.dim
    for v in intersect(sa, sb).basis:
        assert contains(sa, v) and contains(sb, v)


@given(families)
def test_complement_fills_ambient(vs):
    s = span(vs, 5)
    c = ortho_complement(s, IDENTITY5)
    assert sum_(s, c) == Subspace.full(5)
    assert intersect(s, c).dim == 0


@given(families, vectors)
def test_projection(vs, v):
    s = span(vs, 5)
    pv = project(v, s, IDENTITY5)
    assert contains(s, pv)
    resid = tuple(a - b for a, b in zip(v, pv))
    assert contains(ortho_complement(s, IDENTITY5), resid)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        sum_(Subspace.zero(4), Subspace.zero(5))
    with pytest.raises(DimensionMismatch):
        span([(1, 2, 3)], 4)


def test_g0_meets_k_in_k0():
    assert intersect(g_span("T", "B"), frame().k_space) == g_span("T")


def test_complement_of_a_in_p():
    f = frame()
    assert ortho_complement(p_span((1, 0, 0, 0)), f.p_gram) == p_span((0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))

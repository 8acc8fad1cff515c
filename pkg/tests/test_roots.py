import pytest
from hypothesis import given

from polar_ch2 import lie
from polar_ch2.lie import LieElt, Mat3, a_generator, bracket, cartan_theta, inner
from polar_ch2.roots import (LEVELS, NAMES, RootDecompositionError, an_metric, bracket_table, choose_a,
                             decompose, frame, g_span, is_complex_subspace, is_real_subspace, is_subalgebra,
                             p_span, verify_bracket_display)
from polar_ch2.scalars import I, QSqrt3

from conftest import g_alpha_elements, rationals


def test_root_space_dimensions():
    assert decompose(choose_a()).dims == (1, 2, 2, 2, 1)


def test_decompose_rejects_non_maximal_generators():
    with pytest.raises(RootDecompositionError):
        decompose(frame().Z - frame().tZ + frame().B)  # squared norm 5 has no root in Q(sqrt3)
    with pytest.raises(RootDecompositionError):
        decompose(frame().T)


def test_normalization():
    f = frame()
    assert inner(f.B, f.B) == 1
    assert inner(f.Z, f.Z) == 2
    assert inner(f.U1, f.U1) == 2
    assert f.B == a_generator() / 2


def test_canonical_brackets():
    f = frame()
    assert bracket(f.U1, f.U2) == f.Z
    assert not bracket(f.T, f.Z)
    assert bracket(f.B, f.Z) == f.Z
    assert f.U2 == f.J(f.U1)
    assert bracket(f.T, f.U1) == f.U2  # ad T acts as J on g_alpha


def test_theta_swaps_levels_and_brackets_are_graded():
    f = frame()
    for i, x in enumerate(f.elements):
        c = f.coords(cartan_theta(x))
        assert all(not v or LEVELS[j] == -LEVELS[i] for j, v in enumerate(c))
        for j, y in enumerate(f.elements):
            c = f.coords(bracket(x, y))
            assert all(not v or LEVELS[k] == LEVELS[i] + LEVELS[j] for k, v in enumerate(c))


@given(rationals, rationals, rationals, rationals, g_alpha_elements(), g_alpha_elements())
def test_bracket_display(a, b, x, y, u, v):
    assert not verify_bracket_display(a, b, x, y, u, v)


def test_bracket_display_examples():
    f = frame()
    zero = LieElt.zero()
    assert not verify_bracket_display(1, 0, 0, 0, zero, f.U1)
    assert not verify_bracket_display(0, 0, 1, 0, f.U1, f.U2)
    assert bracket(f.Z + f.U1, f.U2) == f.Z


def test_an_metric():
    f = frame()
    assert an_metric(f.Z, f.Z) == 1
    assert an_metric(f.B, f.Z) == 0
    assert an_metric(f.U1, f.U1) == 1
    with pytest.raises(ValueError):
        an_metric(f.T, f.T)


def test_coordinates_round_trip():
    f = frame()
    t = QSqrt3(2, 0) / 5
    x = LieElt(Mat3.diag(I * (2 * t), I * (-t), I * (-t))) + f.U1 * 3 - f.tZ
    assert f.element(f.coords(x)) == x
    for raw in lie.RAW_BASIS:
        assert f.element(f.coords(raw)) == raw


def test_complex_structure_on_p():
    f = frame()
    assert is_complex_subspace(p_span((1, 0, 0, 0), (0, 0, 0, 1)))  # iB = 1/2 (1-theta) Z
    assert is_real_subspace(p_span((1, 0, 0, 0), (0, 1, 0, 0)))
    assert f.i_apply((1, 0, 0, 0)) == tuple(QSqrt3(v, 0) for v in (0, 0, 0, 1))


def test_subalgebra_examples():
    res = is_subalgebra(g_span("T", "U1", "U2"))
    assert not res and res.bracket == frame().vector(Z=1)
    assert is_subalgebra(g_span("U1", "Z"))
    assert is_subalgebra(g_span("T", "B"))


def test_bracket_table_shape():
    table = bracket_table()
    assert len(table) == 8 and all(len(r) == 8 for r in table)
    assert table[NAMES.index("B")][NAMES.index("U1")] == "1/2 U1"

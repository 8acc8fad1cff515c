import mpmath
import pytest
from hypothesis import given

from polar_ch2.scalars import I, ONE, Q0, Q1, SQRT3, ExactScalar, QSqrt3, parse_rational, to_float

from conftest import exact_scalars, nonzero_qsqrt3, qsqrt3


def test_product_with_conjugate_is_rational():
    assert (1 + SQRT3) * (SQRT3 - 1) == 2


def test_inverse_of_one_plus_sqrt3():
    assert (1 + SQRT3).inverse() == (SQRT3 - 1) / 2


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        Q0.inverse()
    with pytest.raises(ZeroDivisionError):
        Q1 / 0
    with pytest.raises(ZeroDivisionError):
        ExactScalar(0, 0).inverse()


@given(qsqrt3, qsqrt3, qsqrt3)
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert x - x == Q0


@given(nonzero_qsqrt3)
def test_inverse(x):
    assert x * x.inverse() == Q1
    assert x * x.galois() == QSqrt3(x.norm(), 0)


@given(qsqrt3, qsqrt3)
def test_galois_is_a_field_automorphism(x, y):
    assert (x * y).galois() == x.galois() * y.galois()
    assert (x + y).galois() == x.galois() + y.galois()
    assert x.galois().galois() == x


@given(qsqrt3)
def test_str_parse_round_trip(x):
    assert QSqrt3.parse(str(x)) == x


@given(qsqrt3, qsqrt3)
def test_order_matches_floats(x, y):
    if x != y:
        assert (x < y) == (x.to_float() < y.to_float())


@given(qsqrt3)
def test_sqrt_of_square(x):
    assert (x * x).sqrt() == abs(x)


def test_sqrt_of_non_square_raises():
    with pytest.raises(ValueError):
        QSqrt3(2, 0).sqrt()
    with pytest.raises(ValueError):
        QSqrt3(-1, 0).sqrt()
    assert QSqrt3(3, 0).sqrt() == SQRT3
    assert QSqrt3(12, 0).sqrt() == 2 * SQRT3


def test_parse_rejects_garbage():
    for bad in ("", "1.5", "s3*2", "1/0", "1 + "):
        with pytest.raises(ValueError):
            QSqrt3.parse(bad)
    assert parse_rational("-3/4") == parse_rational("-6/8")


@given(exact_scalars, exact_scalars)
def test_complex_arithmetic(x, y):
    assert (x * y).conj() == x.conj() * y.conj()
    assert x.conj().conj() == x
    assert (x * x.conj()).im == Q0
    assert (x * x.conj()).re == x.abs2()
    if x:
        assert x * x.inverse() == ONE


@given(exact_scalars)
def test_exact_scalar_str_round_trip(x):
    assert ExactScalar.parse(str(x)) == x


def test_i_squared():
    assert I * I == -ONE


def test_float_conversion_examples():
    assert to_float(Q0) == 0j
    assert SQRT3.to_float() == 1.7320508075688772
    x = QSqrt3(1, 0) / 3 + SQRT3 / 3
    mpmath.mp.dps = 40
    oracle = (1 + mpmath.sqrt(3)) / 3
    assert x.to_float() == float(oracle)
    assert str(oracle).startswith("0.9106836")


@given(qsqrt3)
def test_float_conversion_close_to_mpmath(x):
    mpmath.mp.dps = 40
    oracle = mpmath.mpf(int(x.a.numerator)) / int(x.a.denominator) + \
        mpmath.mpf(int(x.b.numerator)) / int(x.b.denominator) * mpmath.sqrt(3)
    assert abs(x.to_float() - float(oracle)) <= 1e-15 * max(1.0, abs(float(oracle)))

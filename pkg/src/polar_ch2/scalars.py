"""Exact arithmetic over Q(sqrt3) and its complexification Q(sqrt3) + i*Q(sqrt3).

Rationals are ``gmpy2.mpq`` (arbitrary precision, always reduced).  Two value
types are built on top of them:

``QSqrt3``
    ``a + b*sqrt(3)`` with rational ``a, b``; a real ordered field.
``ExactScalar``
    ``re + i*im`` with ``re, im`` in ``QSqrt3``.

Both are immutable, hashable and compare equal to ints / Fractions / mpq
values representing the same number.  Text form for ``QSqrt3`` is
``"a/b + c/d*s3"``; ``ExactScalar`` appends ``" + (<im>)*i"``.
"""

from __future__ import annotations

import re
from decimal import Decimal, localcontext
from fractions import Fraction
from numbers import Rational as _RationalABC

from gmpy2 import is_square, isqrt, mpq

Rational = type(mpq(0))

_ZERO = mpq(0)
_ONE = mpq(1)


def to_rational(x) -> Rational:
    """Coerce int / Fraction / mpq / rational string into an ``mpq``."""
    if isinstance(x, Rational):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return mpq(x)
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, _RationalABC):
        return mpq(int(x.numerator), int(x.denominator))
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def rational_sqrt(q: Rational) -> Rational | None:
    """Exact square root of a non-negative rational, or None if irrational."""
    q = to_rational(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    if is_square(n) and is_square(d):
        return mpq(isqrt(n), isqrt(d))
    return None


_RAT = r"-?\d+(?:/\d+)?"
_RAT_RE = re.compile(rf"^{_RAT}$")
_Q3_RE = re.compile(
    rf"^(?:(?P<a>{_RAT})(?:\s+(?P<op>[+-])\s+(?P<b1>\d+(?:/\d+)?)\*s3)?"
    rf"|(?P<b2>{_RAT})\*s3)$"
)
_CPLX_RE = re.compile(r"^(?:(?P<re>[^()]+?)\s+\+\s+)?\((?P<im>[^()]+)\)\*i$")


def parse_rational(text: str) -> Rational:
    text = text.strip()
    if not _RAT_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return mpq(int(num), int(den) if den else 1)


def _fmt_rational(q: Rational) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class QSqrt3:
    """``a + b*sqrt(3)`` with exact rational ``a`` and ``b``."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = to_rational(a)
        self.b = to_rational(b)

    @classmethod
    def _make(cls, a: Rational, b: Rational) -> QSqrt3:
        obj = object.__new__(cls)
        obj.a = a
        obj.b = b
        return obj

    @classmethod
    def coerce(cls, x) -> QSqrt3:
        if isinstance(x, QSqrt3):
            return x
        if isinstance(x, ExactScalar):
            if x.im:
                raise ValueError(f"{x} is not real")
            return x.re
        if isinstance(x, str):
            return cls.parse(x)
        return cls._make(to_rational(x), _ZERO)

    # -- field operations -------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QSqrt3):
            if isinstance(other, ExactScalar):
                return NotImplemented
            try:
                other = QSqrt3.coerce(other)
            except TypeError:
                return NotImplemented
        return QSqrt3._make(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, QSqrt3):
            if isinstance(other, ExactScalar):
                return NotImplemented
            try:
                other = QSqrt3.coerce(other)
            except TypeError:
                return NotImplemented
        return QSqrt3._make(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        try:
            return QSqrt3.coerce(other) - self
        except TypeError:
            return NotImplemented

    def __neg__(self):
        return QSqrt3._make(-self.a, -self.b)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if not isinstance(other, QSqrt3):
            if isinstance(other, ExactScalar):
                return NotImplemented
            try:
                q = to_rational(other)
            except TypeError:
                return NotImplemented
            return QSqrt3._make(self.a * q, self.b * q)
        a, b, c, d = self.a, self.b, other.a, other.b
        if not b and not d:
            return QSqrt3._make(a * c, _ZERO)
        return QSqrt3._make(a * c + 3 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def norm(self) -> Rational:
        """Field norm ``a^2 - 3 b^2`` (product with the Galois conjugate)."""
        return self.a * self.a - 3 * self.b * self.b

    def galois(self) -> QSqrt3:
        """The automorphism sqrt3 -> -sqrt3."""
        return QSqrt3._make(self.a, -self.b)

    def inverse(self) -> QSqrt3:
        if not self.b:
            if not self.a:
                raise ZeroDivisionError("inverse of zero in Q(sqrt3)")
            return QSqrt3._make(1 / self.a, _ZERO)
        n = self.norm()
        # n != 0 for nonzero elements because sqrt3 is irrational
        return QSqrt3._make(self.a / n, -self.b / n)

    def __truediv__(self, other):
        if isinstance(other, ExactScalar):
            return NotImplemented
        other = QSqrt3.coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QSqrt3.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = QSqrt3._make(_ONE, _ZERO)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- order --------------------------------------------------------------

    def sign(self) -> int:
        a, b = self.a, self.b
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with 3 b^2
        diff = a * a - 3 * b * b
        return sa if diff > 0 else sb

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, QSqrt3):
            return self.a == other.a and self.b == other.b
        if isinstance(other, ExactScalar):
            return other == self
        try:
            q = to_rational(other)
        except TypeError:
            return NotImplemented
        return not self.b and self.a == q

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b))

    def is_rational(self) -> bool:
        return not self.b

    def sqrt(self) -> QSqrt3:
        """Exact non-negative square root; ``ValueError`` if not in the field."""
        if self.sign() < 0:
            raise ValueError(f"square root of negative {self}")
        a, b = self.a, self.b
        if not b:
            r = rational_sqrt(a)
            if r is not None:
                return QSqrt3._make(r, _ZERO)
            r = rational_sqrt(a / 3)
            if r is not None:
                return QSqrt3._make(_ZERO, r)
            raise ValueError(f"{self} has no square root in Q(sqrt3)")
        # (p + q s3)^2 = p^2 + 3 q^2 + 2 p q s3
        r = rational_sqrt(self.norm())
        if r is not None:
            for p2 in ((a + r) / 2, (a - r) / 2):
                p = rational_sqrt(p2)
                if p:
                    root = QSqrt3._make(p, b / (2 * p))
                    return root if root.sign() >= 0 else -root
        raise ValueError(f"{self} has no square root in Q(sqrt3)")

    # -- conversion -----------------------------------------------------------

    def to_float(self) -> float:
        if not self.b:
            return float(self.a)
        with localcontext() as ctx:
            ctx.prec = 50
            val = (Decimal(int(self.a.numerator)) / Decimal(int(self.a.denominator))
                   + Decimal(int(self.b.numerator)) / Decimal(int(self.b.denominator))
                   * Decimal(3).sqrt())
            return float(val)

    __float__ = to_float

    def __str__(self):
        a, b = self.a, self.b
        if not b:
            return _fmt_rational(a)
        if not a:
            return f"{_fmt_rational(b)}*s3"
        op = "+" if b > 0 else "-"
        return f"{_fmt_rational(a)} {op} {_fmt_rational(abs(b))}*s3"

    def __repr__(self):
        return f"QSqrt3({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> QSqrt3:
        """Strict parser for the ``str`` form, e.g. ``"1/3 - 2*s3"``."""
        m = _Q3_RE.match(text.strip())
        if not m:
            raise ValueError(f"not a Q(sqrt3) literal: {text!r}")
        if m.group("b2") is not None:
            return cls._make(_ZERO, parse_rational(m.group("b2")))
        a = parse_rational(m.group("a"))
        b = _ZERO
        if m.group("b1") is not None:
            b = parse_rational(m.group("b1"))
            if m.group("op") == "-":
                b = -b
        return cls._make(a, b)


Q0 = QSqrt3._make(_ZERO, _ZERO)
Q1 = QSqrt3._make(_ONE, _ZERO)
SQRT3 = QSqrt3._make(_ZERO, _ONE)


class ExactScalar:
    """Complex number ``re + i*im`` with ``re, im`` in Q(sqrt3)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = QSqrt3.coerce(re)
        self.im = QSqrt3.coerce(im)

    @classmethod
    def _make(cls, re: QSqrt3, im: QSqrt3) -> ExactScalar:
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    @classmethod
    def coerce(cls, x) -> ExactScalar:
        if isinstance(x, ExactScalar):
            return x
        if isinstance(x, str):
            return cls.parse(x)
        if isinstance(x, complex):
            raise TypeError("floating complex values are not exact")
        return cls._make(QSqrt3.coerce(x), Q0)

    def __add__(self, other):
        if not isinstance(other, ExactScalar):
            try:
                other = ExactScalar.coerce(other)
            except TypeError:
                return NotImplemented
        return ExactScalar._make(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, ExactScalar):
            try:
                other = ExactScalar.coerce(other)
            except TypeError:
                return NotImplemented
        return ExactScalar._make(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return ExactScalar.coerce(other) - self

    def __neg__(self):
        return ExactScalar._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if not isinstance(other, ExactScalar):
            try:
                other = ExactScalar.coerce(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b:
            if not d:
                return ExactScalar._make(a * c, Q0)
            return ExactScalar._make(a * c, a * d)
        if not d:
            return ExactScalar._make(a * c, b * c)
        return ExactScalar._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def conj(self) -> ExactScalar:
        return ExactScalar._make(self.re, -self.im)

    def abs2(self) -> QSqrt3:
        """``|x|^2 = re^2 + im^2``, a non-negative element of Q(sqrt3)."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> ExactScalar:
        n = self.abs2()
        if not n:
            raise ZeroDivisionError("inverse of zero ExactScalar")
        inv = n.inverse()
        return ExactScalar._make(self.re * inv, -(self.im * inv))

    def __truediv__(self, other):
        other = ExactScalar.coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return ExactScalar.coerce(other) * self.inverse()

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, ExactScalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, complex):
            return NotImplemented
        try:
            other = QSqrt3.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return not self.im and self.re == other

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def is_real(self) -> bool:
        return not self.im

    def to_complex(self) -> complex:
        return complex(self.re.to_float(), self.im.to_float())

    def __complex__(self):
        return self.to_complex()

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"({self.im})*i"
        return f"{self.re} + ({self.im})*i"

    def __repr__(self):
        return f"ExactScalar({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> ExactScalar:
        text = text.strip()
        m = _CPLX_RE.match(text)
        if m:
            re_part = QSqrt3.parse(m.group("re")) if m.group("re") else Q0
            return cls._make(re_part, QSqrt3.parse(m.group("im")))
        return cls._make(QSqrt3.parse(text), Q0)


ZERO = ExactScalar._make(Q0, Q0)
ONE = ExactScalar._make(Q1, Q0)
I = ExactScalar._make(Q0, Q1)


def to_float(x) -> complex:
    """Nearest complex double to an exact scalar."""
    return ExactScalar.coerce(x).to_complex()

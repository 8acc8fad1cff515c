"""The real Lie algebra su(1,2) as explicit 3x3 matrices over Q(sqrt3)(i).

The indefinite form is ``Ip = diag(-1, 1, 1)``; an element ``X`` lies in
su(1,2) iff ``tr X = 0`` and ``X^dagger Ip + Ip X = 0``.  The Cartan
involution is ``theta(X) = Ip X Ip`` (equal to ``-X^dagger`` on the algebra),
so ``k`` is the block-diagonal part and ``p`` the off-diagonal first
row/column.

The metric on ``g`` is the Ad(K)-invariant inner product

    <X, Y> = -(1/3) B(theta X, Y) = 2 Re tr(X^dagger Y),

which is the multiple of the Killing form that gives CH^2 holomorphic
sectional curvature -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .scalars import ONE, ZERO, ExactScalar, Q0, QSqrt3

# metric = KILLING_SCALE * (-B(theta X, Y))
KILLING_SCALE = QSqrt3(1, 0) / 3


class NotInAlgebraError(ValueError):
    """A matrix fails the su(1,2) defining relations."""


class NotNilpotentError(ValueError):
    pass


class NotInGroupError(ValueError):
    """A matrix is not in SU(1,2)."""


class Mat3:
    """Immutable 3x3 matrix of ``ExactScalar`` entries (row-major)."""

    __slots__ = ("e",)

    def __init__(self, rows):
        entries = []
        rows = list(rows)
        if len(rows) != 3:
            raise ValueError("Mat3 needs exactly 3 rows")
        for row in rows:
            row = list(row)
            if len(row) != 3:
                raise ValueError("Mat3 rows need exactly 3 entries")
            entries.extend(ExactScalar.coerce(x) for x in row)
        self.e = tuple(entries)

    @classmethod
    def _from_flat(cls, entries) -> Mat3:
        obj = object.__new__(cls)
        obj.e = tuple(entries)
        return obj

    @classmethod
    def zero(cls) -> Mat3:
        return cls._from_flat([ZERO] * 9)

    @classmethod
    def identity(cls) -> Mat3:
        return cls._from_flat([ONE, ZERO, ZERO, ZERO, ONE, ZERO, ZERO, ZERO, ONE])

    @classmethod
    def unit(cls, i: int, j: int, value=ONE) -> Mat3:
        flat = [ZERO] * 9
        flat[3 * i + j] = ExactScalar.coerce(value)
        return cls._from_flat(flat)

    @classmethod
    def diag(cls, a, b, c) -> Mat3:
        return cls([[a, 0, 0], [0, b, 0], [0, 0, c]])

    def __getitem__(self, ij):
        i, j = ij
        return self.e[3 * i + j]

    def rows(self):
        e = self.e
        return [list(e[0:3]), list(e[3:6]), list(e[6:9])]

    def __matmul__(self, other: Mat3) -> Mat3:
        a, b = self.e, other.e
        out = []
        for i in range(3):
            r = 3 * i
            ai0, ai1, ai2 = a[r], a[r + 1], a[r + 2]
            for j in range(3):
                acc = ZERO
                if ai0:
                    x = b[j]
                    if x:
                        acc = acc + ai0 * x
                if ai1:
                    x = b[3 + j]
                    if x:
                        acc = acc + ai1 * x
                if ai2:
                    x = b[6 + j]
                    if x:
                        acc = acc + ai2 * x
                out.append(acc)
        return Mat3._from_flat(out)

    def __add__(self, other: Mat3) -> Mat3:
        return Mat3._from_flat([x + y for x, y in zip(self.e, other.e)])

    def __sub__(self, other: Mat3) -> Mat3:
        return Mat3._from_flat([x - y for x, y in zip(self.e, other.e)])

    def __neg__(self) -> Mat3:
        return Mat3._from_flat([-x for x in self.e])

    def scale(self, c) -> Mat3:
        c = ExactScalar.coerce(c)
        return Mat3._from_flat([c * x if x else ZERO for x in self.e])

    def adjoint(self) -> Mat3:
        e = self.e
        return Mat3._from_flat([e[3 * j + i].conj() for i in range(3) for j in range(3)])

    def trace(self) -> ExactScalar:
        return self.e[0] + self.e[4] + self.e[8]

    def det(self) -> ExactScalar:
        a, b, c, d, e, f, g, h, i = self.e
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def is_zero(self) -> bool:
        return not any(self.e)

    def __eq__(self, other):
        if not isinstance(other, Mat3):
            return NotImplemented
        return self.e == other.e

    def __hash__(self):
        return hash(self.e)

    def to_numpy(self):
        import numpy as np

        return np.array([x.to_complex() for x in self.e], dtype=complex).reshape(3, 3)

    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.rows()]

    @classmethod
    def from_strings(cls, rows) -> Mat3:
        return cls([[ExactScalar.parse(x) for x in row] for row in rows])

    def __repr__(self):
        return f"Mat3({self.to_strings()})"


IP = Mat3.diag(-1, 1, 1)


def conjugate_by_ip(m: Mat3) -> Mat3:
    """``Ip m Ip``: flips the sign of the off-diagonal first row and column."""
    e = m.e
    return Mat3._from_flat([
        e[0], -e[1], -e[2],
        -e[3], e[4], e[5],
        -e[6], e[7], e[8],
    ])


def algebra_residual(m: Mat3) -> tuple[ExactScalar, Mat3]:
    """``(tr m, m^dagger Ip + Ip m)``; both vanish exactly on su(1,2)."""
    return m.trace(), m.adjoint() @ IP + IP @ m


class LieElt:
    """An element of su(1,2).

    Construction validates the defining relations; operations that are
    closed on the algebra skip the check.
    """

    __slots__ = ("m",)

    def __init__(self, m):
        if not isinstance(m, Mat3):
            m = Mat3(m)
        tr, rel = algebra_residual(m)
        if tr or not rel.is_zero():
            raise NotInAlgebraError(f"matrix is not in su(1,2): {m.to_strings()}")
        self.m = m

    @classmethod
    def _trusted(cls, m: Mat3) -> LieElt:
        obj = object.__new__(cls)
        obj.m = m
        return obj

    @classmethod
    def zero(cls) -> LieElt:
        return cls._trusted(Mat3.zero())

    def is_valid(self) -> bool:
        tr, rel = algebra_residual(self.m)
        return not tr and rel.is_zero()

    def __add__(self, other: LieElt) -> LieElt:
        return LieElt._trusted(self.m + other.m)

    def __sub__(self, other: LieElt) -> LieElt:
        return LieElt._trusted(self.m - other.m)

    def __neg__(self) -> LieElt:
        return LieElt._trusted(-self.m)

    def __mul__(self, c) -> LieElt:
        # real scalars only: i*X leaves the real form
        c = QSqrt3.coerce(c)
        return LieElt._trusted(self.m.scale(c))

    __rmul__ = __mul__

    def __truediv__(self, c) -> LieElt:
        return self * QSqrt3.coerce(c).inverse()

    def __bool__(self):
        return not self.m.is_zero()

    def __eq__(self, other):
        if not isinstance(other, LieElt):
            return NotImplemented
        return self.m == other.m

    def __hash__(self):
        return hash(self.m)

    def __repr__(self):
        return f"LieElt({self.m.to_strings()})"


def bracket(x: LieElt, y: LieElt) -> LieElt:
    return LieElt._trusted(x.m @ y.m - y.m @ x.m)


def cartan_theta(x: LieElt) -> LieElt:
    return LieElt._trusted(conjugate_by_ip(x.m))


@dataclass(frozen=True)
class CartanSplit:
    k_part: LieElt
    p_part: LieElt


_HALF = QSqrt3(1, 0) / 2


def split(x: LieElt) -> CartanSplit:
    tx = cartan_theta(x)
    return CartanSplit(k_part=(x + tx) * _HALF, p_part=(x - tx) * _HALF)


def in_k(x: LieElt) -> bool:
    return cartan_theta(x) == x


def in_p(x: LieElt) -> bool:
    return cartan_theta(x) == -x


# --- raw real coordinates ----------------------------------------------------
#
# X in su(1,2) is determined by eight real numbers read off its entries:
#   X00 = i*c0, X11 = i*c1, X22 = -i*(c0 + c1)
#   X12 = c2 + i*c3            (X21 = -conj X12)
#   X10 = c4 + i*c5            (X01 = conj X10)
#   X20 = c6 + i*c7            (X02 = conj X20)

def _raw_basis() -> tuple[LieElt, ...]:
    i = ExactScalar(0, 1)
    E = Mat3.unit
    mats = [
        Mat3.diag(i, 0, -i),
        Mat3.diag(0, i, -i),
        E(1, 2) - E(2, 1),
        E(1, 2, i) + E(2, 1, i),
        E(1, 0) + E(0, 1),
        E(1, 0, i) - E(0, 1, i),
        E(2, 0) + E(0, 2),
        E(2, 0, i) - E(0, 2, i),
    ]
    return tuple(LieElt(m) for m in mats)


RAW_BASIS = _raw_basis()
DIM = 8


def raw_coords(x: LieElt) -> tuple[QSqrt3, ...]:
    e = x.m.e
    return (e[0].im, e[4].im, e[5].re, e[5].im, e[3].re, e[3].im, e[6].re, e[6].im)


def from_raw(coords) -> LieElt:
    out = LieElt.zero()
    for c, b in zip(coords, RAW_BASIS):
        c = QSqrt3.coerce(c)
        if c:
            out = out + b * c
    return out


# --- invariant forms -----------------------------------------------------------

def ad_matrix(x: LieElt) -> list[list[QSqrt3]]:
    """Matrix of ad(x) on the raw real basis (column j = [x, e_j])."""
    cols = [raw_coords(bracket(x, b)) for b in RAW_BASIS]
    return [[cols[j][i] for j in range(DIM)] for i in range(DIM)]


def trace_of_product(a, b) -> QSqrt3:
    acc = Q0
    n = len(a)
    for i in range(n):
        for j in range(n):
            if a[i][j] and b[j][i]:
                acc = acc + a[i][j] * b[j][i]
    return acc


def killing(x: LieElt, y: LieElt) -> QSqrt3:
    """Killing form ``tr(ad x o ad y)`` by its definition."""
    return trace_of_product(ad_matrix(x), ad_matrix(y))


def killing_closed_form(x: LieElt, y: LieElt) -> QSqrt3:
    """``6 tr(xy)``; used only as a cross-check of ``killing``."""
    t = (x.m @ y.m).trace()
    if t.im:
        raise ArithmeticError("tr(XY) is not real on su(1,2)")
    return t.re * 6


def inner(x: LieElt, y: LieElt) -> QSqrt3:
    """``<x, y> = 2 Re tr(x^dagger y)``, equal to ``-(1/3) B(theta x, y)``."""
    a, b = x.m.e, y.m.e
    acc = Q0
    for u, v in zip(a, b):
        if u and v:
            acc = acc + u.re * v.re + u.im * v.im
    return acc * 2


def norm2(x: LieElt) -> QSqrt3:
    return inner(x, x)


# --- exponentials and Ad ---------------------------------------------------------

def is_nilpotent(m: Mat3) -> bool:
    return (m @ m @ m).is_zero()


def exp_nilpotent(x) -> Mat3:
    """``I + X + X^2/2`` for nilpotent ``X`` (exact; ``X^3 = 0`` is checked)."""
    m = x.m if isinstance(x, LieElt) else x
    m2 = m @ m
    if not (m2 @ m).is_zero():
        raise NotNilpotentError("exp_nilpotent needs X^3 = 0")
    return Mat3.identity() + m + m2.scale(_HALF)


def group_inverse(g: Mat3) -> Mat3:
    """Inverse of ``g`` in SU(1,2): ``Ip g^dagger Ip``."""
    return conjugate_by_ip(g.adjoint())


def in_group(g: Mat3) -> bool:
    return g.adjoint() @ IP @ g == IP and g.det() == ONE


def Ad(g: Mat3, x: LieElt) -> LieElt:
    if not in_group(g):
        raise NotInGroupError("Ad needs g in SU(1,2)")
    return LieElt._trusted(g @ x.m @ group_inverse(g))


def ad_series(n: LieElt, x: LieElt) -> LieElt:
    """``sum_k ad(n)^k x / k!`` for ad-nilpotent ``n`` (terminates exactly)."""
    out = x
    term = x
    k = 0
    while True:
        k += 1
        term = bracket(n, term) * (QSqrt3(1, 0) / k)
        if not term:
            return out
        out = out + term
        if k > 2 * DIM:
            raise NotNilpotentError("ad(n) is not nilpotent")


@lru_cache(maxsize=None)
def a_generator() -> LieElt:
    """``A0 = E_12 + E_21`` (1-based), spanning a maximal abelian subspace of p."""
    return LieElt(Mat3.unit(0, 1) + Mat3.unit(1, 0))

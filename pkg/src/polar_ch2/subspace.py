"""Exact linear algebra on coordinate vectors over Q(sqrt3).

A ``Subspace`` stores its basis in reduced row echelon form, so two equal
subspaces have identical representations and ``==`` is subspace equality.
Orthogonal complements and projections take an explicit Gram matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .scalars import Q0, Q1, QSqrt3

Vector = tuple[QSqrt3, ...]


class DimensionMismatch(ValueError):
    pass


def vec(values) -> Vector:
    return tuple(QSqrt3.coerce(v) for v in values)


def rref(rows: Sequence[Sequence[QSqrt3]], ncols: int) -> tuple[list[list[QSqrt3]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv if x else Q0 for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y if y else x for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence[QSqrt3]], ncols: int) -> list[Vector]:
    """Basis of ``{x : A x = 0}`` for the matrix with the given rows."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Q0] * ncols
        x[f] = Q1
        for row, p in zip(red, pivots):
            if row[f]:
                x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(columns: Sequence[Sequence[QSqrt3]], target: Sequence[QSqrt3]) -> Vector | None:
    """Coefficients ``c`` with ``sum_j c_j columns[j] = target``, or None."""
    n = len(columns)
    dim = len(target)
    aug = [[columns[j][i] for j in range(n)] + [target[i]] for i in range(dim)]
    red, pivots = rref(aug, n + 1)
    if n in pivots:
        return None
    x = [Q0] * n
    for row, p in zip(red, pivots):
        x[p] = row[n]
    return tuple(x)


def dot(u: Sequence[QSqrt3], v: Sequence[QSqrt3]) -> QSqrt3:
    acc = Q0
    for a, b in zip(u, v):
        if a and b:
            acc = acc + a * b
    return acc


def gram_dot(u, v, gram) -> QSqrt3:
    acc = Q0
    for i, a in enumerate(u):
        if not a:
            continue
        row = gram[i]
        for j, b in enumerate(v):
            if b and row[j]:
                acc = acc + a * row[j] * b
    return acc


def lincomb(coeffs, vectors, dim: int) -> Vector:
    out = [Q0] * dim
    for c, v in zip(coeffs, vectors):
        if c:
            for i, x in enumerate(v):
                if x:
                    out[i] = out[i] + c * x
    return tuple(out)


def is_zero(v) -> bool:
    return not any(v)


@dataclass(frozen=True)
class Subspace:
    ambient_dim: int
    basis: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def contains(self, v) -> bool:
        return contains(self, v)

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def is_zero(self) -> bool:
        return not self.basis

    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.basis]

    def __repr__(self):
        return f"Subspace(dim={self.dim}/{self.ambient_dim}, basis={self.to_strings()})"

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> Subspace:
        return span([[Q1 if i == j else Q0 for j in range(n)] for i in range(n)], n)


def span(vectors, ambient_dim: int | None = None) -> Subspace:
    vectors = [vec(v) for v in vectors]
    if ambient_dim is None:
        if not vectors:
            raise DimensionMismatch("span of no vectors needs ambient_dim")
        ambient_dim = len(vectors[0])
    for v in vectors:
        if len(v) != ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
    red, _ = rref(vectors, ambient_dim)
    return Subspace(ambient_dim, tuple(tuple(r) for r in red))


def _check(*spaces: Subspace) -> int:
    n = spaces[0].ambient_dim
    for s in spaces[1:]:
        if s.ambient_dim != n:
            raise DimensionMismatch(f"ambient dimensions {n} and {s.ambient_dim} differ")
    return n


def contains(s: Subspace, v) -> bool:
    v = vec(v)
    if len(v) != s.ambient_dim:
        raise DimensionMismatch("vector length differs from ambient dimension")
    return span(list(s.basis) + [v], s.ambient_dim).dim == s.dim


def sum_(a: Subspace, b: Subspace) -> Subspace:
    n = _check(a, b)
    return span(list(a.basis) + list(b.basis), n)


def annihilator(s: Subspace) -> Subspace:
    """``{x : <b, x> = 0 for all basis rows b}`` for the standard dot product."""
    return span(nullspace(s.basis, s.ambient_dim), s.ambient_dim)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    _check(a, b)
    return annihilator(sum_(annihilator(a), annihilator(b)))


def ortho_complement(s: Subspace, gram) -> Subspace:
    n = s.ambient_dim
    if len(gram) != n:
        raise DimensionMismatch("Gram matrix size differs from ambient dimension")
    cols = [[gram[i][j] for i in range(n)] for j in range(n)]
    rows = [[dot(b, cols[j]) for j in range(n)] for b in s.basis]
    return span(nullspace(rows, n), n)


def project(v, s: Subspace, gram) -> Vector:
    """Orthogonal projection of ``v`` onto ``s`` with respect to ``gram``."""
    v = vec(v)
    if len(v) != s.ambient_dim:
        raise DimensionMismatch("vector length differs from ambient dimension")
    k = s.dim
    if k == 0:
        return tuple([Q0] * s.ambient_dim)
    g = [[gram_dot(s.basis[i], s.basis[j], gram) for j in range(k)] for i in range(k)]
    rhs = [gram_dot(s.basis[i], v, gram) for i in range(k)]
    coeffs = solve([[g[i][j] for i in range(k)] for j in range(k)], rhs)
    return lincomb(coeffs, s.basis, s.ambient_dim)


def is_orthogonal(a: Subspace, b: Subspace, gram) -> bool:
    _check(a, b)
    return all(not gram_dot(u, w, gram) for u in a.basis for w in b.basis)


def image(linear_map, s: Subspace, target_dim: int) -> Subspace:
    """Span of ``linear_map(b)`` over the basis of ``s``."""
    return span([linear_map(b) for b in s.basis], target_dim)

"""Restricted root space decomposition of su(1,2) and the canonical frame.

Everything here is computed, not tabulated: the root spaces are exact
eigenspaces of ``ad(B)``, ``Z`` comes from the complex structure of ``p``,
``U2 = J U1`` and ``T`` is scaled so that ``ad(T)`` acts as ``J`` on
``g_alpha``.  The frame is built once and shared through ``frame()``.

Canonical coordinates on ``g`` use the order

    (tZ, tU1, tU2, T, B, U1, U2, Z)      with tX = theta(X),

and coordinates on ``p`` use ``(B, (1-theta)U1, (1-theta)U2, (1/2)(1-theta)Z)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from . import lie
from .lie import LieElt, bracket, cartan_theta, inner, split
from .scalars import I, Q0, Q1, QSqrt3
from .subspace import (
    Subspace,
    Vector,
    intersect,
    lincomb,
    nullspace,
    solve,
    span,
    sum_,
)

HALF = Q1 / 2

# eigenvalue of ad(B) on g_{k alpha}, k = -2..2
ROOT_VALUES = {k: QSqrt3(k, 0) / 2 for k in (-2, -1, 0, 1, 2)}

NAMES = ("tZ", "tU1", "tU2", "T", "B", "U1", "U2", "Z")
IDX = {n: i for i, n in enumerate(NAMES)}
P_NAMES = ("B", "(1-θ)U1", "(1-θ)U2", "½(1-θ)Z")
# root level of each canonical basis vector (in units of alpha)
LEVELS = (-2, -1, -1, 0, 0, 1, 1, 2)


class RootDecompositionError(ValueError):
    pass


# --- raw-coordinate helpers ----------------------------------------------------

RAW_K = span([[Q1 if i == j else Q0 for i in range(8)] for j in range(4)], 8)
RAW_P = span([[Q1 if i == j else Q0 for i in range(8)] for j in range(4, 8)], 8)


def _elt(v: Vector) -> LieElt:
    return lie.from_raw(v)


def choose_a() -> LieElt:
    return lie.a_generator()


def centralizer_in_p(x: LieElt) -> Subspace:
    """``{Y in p : [x, Y] = 0}`` in raw coordinates."""
    ad = lie.ad_matrix(x)
    # restrict ad(x) to the p coordinates (raw indices 4..7)
    cols = [4, 5, 6, 7]
    rows = [[ad[i][j] for j in cols] for i in range(8)]
    ker = nullspace(rows, 4)
    return span([[Q0] * 4 + list(v) for v in ker], 8)


def is_maximal_abelian_in_p(x: LieElt) -> bool:
    if not x or not lie.in_p(x):
        return False
    return centralizer_in_p(x) == span([lie.raw_coords(x)], 8)


@dataclass(frozen=True)
class RootDecomp:
    """Root spaces as subspaces of raw coordinates (see ``lie.raw_coords``)."""

    B: LieElt
    a: Subspace
    k0: Subspace
    g_alpha: Subspace
    g_2alpha: Subspace
    g_minus_alpha: Subspace
    g_minus_2alpha: Subspace

    @property
    def g0(self) -> Subspace:
        return sum_(self.k0, self.a)

    def root_space(self, k: int) -> Subspace:
        return {
            -2: self.g_minus_2alpha,
            -1: self.g_minus_alpha,
            0: self.g0,
            1: self.g_alpha,
            2: self.g_2alpha,
        }[k]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(self.root_space(k).dim for k in (-2, -1, 0, 1, 2))

    @property
    def an(self) -> Subspace:
        return sum_(sum_(self.a, self.g_alpha), self.g_2alpha)


def decompose(a_gen: LieElt) -> RootDecomp:
    if not is_maximal_abelian_in_p(a_gen):
        raise RootDecompositionError("generator does not span a maximal abelian subspace of p")
    try:
        scale = inner(a_gen, a_gen).sqrt()
    except ValueError as exc:
        raise RootDecompositionError(str(exc)) from exc
    B = a_gen / scale
    ad = lie.ad_matrix(B)
    spaces = {}
    for k, mu in ROOT_VALUES.items():
        shifted = [[ad[i][j] - (mu if i == j else Q0) for j in range(8)] for i in range(8)]
        spaces[k] = span(nullspace(shifted, 8), 8)
    if sum(s.dim for s in spaces.values()) != 8:
        raise RootDecompositionError(
            "ad(B) eigenvalues are not {-1, -1/2, 0, 1/2, 1}; normalization is wrong")
    return RootDecomp(
        B=B,
        a=intersect(spaces[0], RAW_P),
        k0=intersect(spaces[0], RAW_K),
        g_alpha=spaces[1],
        g_2alpha=spaces[2],
        g_minus_alpha=spaces[-1],
        g_minus_2alpha=spaces[-2],
    )


# --- complex structures ------------------------------------------------------------

def complex_structure_p(x: LieElt) -> LieElt:
    """The complex structure ``i`` of ``p = T_o CH^2``.

    ``p`` consists of the matrices with first column ``(0, v)`` and first row
    ``(0, v^dagger)``; ``i`` replaces ``v`` by ``i v``, which is the complex
    structure of the ball model.
    """
    if not lie.in_p(x):
        raise ValueError("complex_structure_p needs an element of p")
    e = x.m.e
    v1, v2 = I * e[3], I * e[6]
    m = lie.Mat3._from_flat([
        e[0], v1.conj(), v2.conj(),
        v1, e[4], e[5],
        v2, e[7], e[8],
    ])
    return LieElt._trusted(m)


def p_part(x: LieElt) -> LieElt:
    return split(x).p_part


def _an_preimage(rd: RootDecomp, y: LieElt) -> LieElt:
    """The unique ``X`` in ``a + n`` whose p-part is ``y``."""
    basis = [_elt(v) for v in rd.an.basis]
    cols = [lie.raw_coords(p_part(b)) for b in basis]
    c = solve(cols, lie.raw_coords(y))
    if c is None:
        raise RootDecompositionError("element of p has no preimage in a + n")
    out = LieElt.zero()
    for ci, b in zip(c, basis):
        if ci:
            out = out + b * ci
    return out


def J_map(rd: RootDecomp, x: LieElt) -> LieElt:
    """Complex structure on ``a + n`` transported from ``p`` by the p-projection."""
    if not span([lie.raw_coords(x)] + list(rd.an.basis), 8) == rd.an:
        raise ValueError("J is defined on a + n only")
    return _an_preimage(rd, complex_structure_p(p_part(x)))


def _in(rd_space: Subspace, x: LieElt) -> bool:
    return rd_space.contains(lie.raw_coords(x))


@dataclass(frozen=True)
class CanonicalBasis:
    T: LieElt
    B: LieElt
    U1: LieElt
    U2: LieElt
    Z: LieElt
    tU1: LieElt
    tU2: LieElt
    tZ: LieElt
    rd: RootDecomp

    @cached_property
    def elements(self) -> tuple[LieElt, ...]:
        return tuple(getattr(self, n) for n in NAMES)

    def __getitem__(self, name: str) -> LieElt:
        return self.elements[IDX[name]]

    @cached_property
    def gram(self) -> list[list[QSqrt3]]:
        e = self.elements
        return [[inner(x, y) for y in e] for x in e]

    @cached_property
    def _norms(self) -> tuple[QSqrt3, ...]:
        return tuple(self.gram[i][i] for i in range(8))

    def coords(self, x: LieElt) -> Vector:
        """Canonical coordinates; the frame is orthogonal so these are projections."""
        c = tuple(inner(x, e) / n for e, n in zip(self.elements, self._norms))
        if self.element(c) != x:
            raise ArithmeticError("canonical frame is not orthogonal")
        return c

    def element(self, coords) -> LieElt:
        out = LieElt.zero()
        for c, e in zip(coords, self.elements):
            c = QSqrt3.coerce(c)
            if c:
                out = out + e * c
        return out

    def vector(self, **named) -> Vector:
        """Coordinate vector from named components, e.g. ``vector(T=1, B=2)``."""
        v = [Q0] * 8
        for name, c in named.items():
            v[IDX[name]] = QSqrt3.coerce(c)
        return tuple(v)

    @cached_property
    def structure(self) -> list[list[Vector]]:
        """``structure[i][j]`` = coordinates of ``[e_i, e_j]``."""
        e = self.elements
        return [[self.coords(bracket(x, y)) for y in e] for x in e]

    def bracket_coords(self, u, v) -> Vector:
        out = [Q0] * 8
        table = self.structure
        for i, a in enumerate(u):
            if not a:
                continue
            row = table[i]
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(row[j]):
                    if c:
                        out[k] = out[k] + ab * c
        return tuple(out)

    def inner_coords(self, u, v) -> QSqrt3:
        acc = Q0
        for a, b, n in zip(u, v, self._norms):
            if a and b:
                acc = acc + a * b * n
        return acc

    def theta_coords(self, u) -> Vector:
        # tZ<->Z, tU1<->U1, tU2<->U2, T fixed, B -> -B
        return (u[7], u[5], u[6], u[3], -u[4], u[1], u[2], u[0])

    # -- p coordinates --------------------------------------------------------

    @cached_property
    def p_elements(self) -> tuple[LieElt, ...]:
        th = cartan_theta
        return (
            self.B,
            self.U1 - th(self.U1),
            self.U2 - th(self.U2),
            (self.Z - th(self.Z)) * HALF,
        )

    @cached_property
    def p_gram(self) -> list[list[QSqrt3]]:
        e = self.p_elements
        return [[inner(x, y) for y in e] for x in e]

    @cached_property
    def p_to_g(self) -> list[Vector]:
        """Canonical g-coordinates of each p basis vector."""
        return [self.coords(x) for x in self.p_elements]

    def p_embed(self, pc) -> Vector:
        return lincomb(pc, self.p_to_g, 8)

    def p_coords_of_g(self, u) -> Vector:
        """p-coordinates of the p-part of the element with g-coordinates ``u``."""
        # p-part of tX is -(p-part of X); p-part of X in g_lambda is (1/2)(1-theta)X
        return (u[4], (u[5] - u[1]) * HALF, (u[6] - u[2]) * HALF, u[7] - u[0])

    def p_coords(self, x: LieElt) -> Vector:
        if not lie.in_p(x):
            raise ValueError("p_coords needs an element of p")
        return self.p_coords_of_g(self.coords(x))

    def p_element(self, pc) -> LieElt:
        return self.element(self.p_embed(pc))

    @cached_property
    def i_matrix(self) -> list[list[QSqrt3]]:
        """Matrix of ``i`` on p-coordinates (column j = i(p_j))."""
        cols = [self.p_coords(complex_structure_p(x)) for x in self.p_elements]
        return [[cols[j][i] for j in range(4)] for i in range(4)]

    def i_apply(self, pc) -> Vector:
        m = self.i_matrix
        return tuple(sum((m[i][j] * pc[j] for j in range(4) if pc[j]), Q0) for i in range(4))

    @cached_property
    def J_matrix(self) -> list[list[QSqrt3]]:
        """Matrix of ``J`` on a + n in the basis (B, U1, U2, Z)."""
        an = (self.B, self.U1, self.U2, self.Z)
        cols = []
        for x in an:
            c = self.coords(J_map(self.rd, x))
            cols.append((c[4], c[5], c[6], c[7]))
        return [[cols[j][i] for j in range(4)] for i in range(4)]

    def J(self, x: LieElt) -> LieElt:
        return J_map(self.rd, x)

    @cached_property
    def k_space(self) -> Subspace:
        return span([self.vector(T=1), self.vector(U1=1, tU1=1), self.vector(U2=1, tU2=1),
                     self.vector(Z=1, tZ=1)], 8)

    @cached_property
    def p_space(self) -> Subspace:
        return span([self.vector(B=1), self.vector(U1=1, tU1=-1), self.vector(U2=1, tU2=-1),
                     self.vector(Z=1, tZ=-1)], 8)


def canonical_basis(rd: RootDecomp) -> CanonicalBasis:
    B = rd.B
    Z = _an_preimage(rd, complex_structure_p(B))
    if not _in(rd.g_2alpha, Z):
        raise RootDecompositionError("J B does not lie in g_2alpha")
    u = _elt(rd.g_alpha.basis[0])
    try:
        U1 = u * (QSqrt3(2, 0) / inner(u, u)).sqrt()
    except ValueError as exc:
        raise RootDecompositionError(f"cannot normalize U1 exactly: {exc}") from exc
    U2 = J_map(rd, U1)
    if not _in(rd.g_alpha, U2):
        raise RootDecompositionError("J does not preserve g_alpha")
    t0 = _elt(rd.k0.basis[0])
    w = bracket(t0, U1)
    mu = inner(w, U2) / inner(U2, U2)
    if not mu or w != U2 * mu:
        raise RootDecompositionError("ad(k0) does not act on g_alpha as a multiple of J")
    T = t0 / mu
    th = cartan_theta
    return CanonicalBasis(T=T, B=B, U1=U1, U2=U2, Z=Z,
                          tU1=th(U1), tU2=th(U2), tZ=th(Z), rd=rd)


@lru_cache(maxsize=None)
def frame() -> CanonicalBasis:
    """The canonical frame built from ``A0 = E_12 + E_21``."""
    return canonical_basis(decompose(choose_a()))


# --- named subspaces in canonical coordinates ------------------------------------

def g_span(*names: str, extra=()) -> Subspace:
    f = frame()
    vecs = [f.vector(**{n: 1}) for n in names] + [tuple(QSqrt3.coerce(c) for c in v) for v in extra]
    return span(vecs, 8)


def p_span(*vectors) -> Subspace:
    return span(vectors, 4)


# --- Lie-aware subspace predicates --------------------------------------------------

@dataclass(frozen=True)
class ClosureResult:
    ok: bool
    witness: tuple[Vector, Vector] | None = None
    bracket: Vector | None = None

    def __bool__(self):
        return self.ok


def is_subalgebra(s: Subspace) -> ClosureResult:
    """Bracket closure of a subspace of g (canonical coordinates) with witness."""
    if s.ambient_dim != 8:
        raise ValueError("is_subalgebra needs a subspace of g (8 coordinates)")
    f = frame()
    b = s.basis
    for i in range(len(b)):
        for j in range(i + 1, len(b)):
            c = f.bracket_coords(b[i], b[j])
            if not s.contains(c):
                return ClosureResult(False, (b[i], b[j]), c)
    return ClosureResult(True)


def _p_pairing(u, v) -> QSqrt3:
    f = frame()
    iu = f.i_apply(u)
    acc = Q0
    for i in range(4):
        for j in range(4):
            if iu[i] and v[j] and f.p_gram[i][j]:
                acc = acc + iu[i] * f.p_gram[i][j] * v[j]
    return acc


def is_real_subspace(s: Subspace) -> bool:
    """Totally real: ``<i v, w> = 0`` for all ``v, w`` in ``s`` (p-coordinates)."""
    if s.ambient_dim != 4:
        raise ValueError("is_real_subspace needs a subspace of p (4 coordinates)")
    return all(not _p_pairing(u, v) for u in s.basis for v in s.basis)


def is_complex_subspace(s: Subspace) -> bool:
    """``i s = s`` (p-coordinates)."""
    if s.ambient_dim != 4:
        raise ValueError("is_complex_subspace needs a subspace of p (4 coordinates)")
    f = frame()
    return span([f.i_apply(u) for u in s.basis], 4) == s if s.basis else True


# --- structure checks ---------------------------------------------------------------

def verify_bracket_display(a, b, x, y, U: LieElt, V: LieElt) -> LieElt:
    """Residual of the bracket table on ``a + n``.

    Returns ``[aB + U + xZ, bB + V + yZ]`` minus
    ``-(b/2) U + (a/2) V + (-b x + a y + (1/2)<JU, V>) Z``; exactly zero.
    """
    f = frame()
    a, b, x, y = (QSqrt3.coerce(t) for t in (a, b, x, y))
    for w in (U, V):
        if not _in(f.rd.g_alpha, w):
            raise ValueError("U and V must lie in g_alpha")
    lhs = bracket(f.B * a + U + f.Z * x, f.B * b + V + f.Z * y)
    coeff = -b * x + a * y + inner(f.J(U), V) * HALF
    rhs = U * (-b * HALF) + V * (a * HALF) + f.Z * coeff
    return lhs - rhs


def an_metric(x: LieElt, y: LieElt) -> QSqrt3:
    """Left-invariant metric of AN on ``a + n``: ``<X_a, Y_a> + (1/2)<X_n, Y_n>``."""
    f = frame()
    cx, cy = f.coords(x), f.coords(y)
    for c in (cx, cy):
        if any(c[i] for i in (0, 1, 2, 3)):
            raise ValueError("an_metric is defined on a + n only")
    a_part = cx[4] * cy[4] * f.gram[4][4]
    n_part = sum((cx[i] * cy[i] * f.gram[i][i] for i in (5, 6, 7)), Q0)
    return a_part + n_part * HALF


def format_coords(v, names=NAMES) -> str:
    """Human form of a coordinate vector, e.g. ``1/2 U1 - Z``."""
    terms = []
    for c, n in zip(v, names):
        if not c:
            continue
        if c == 1:
            terms.append(f"+ {n}")
        elif c == -1:
            terms.append(f"- {n}")
        elif c.sign() < 0:
            terms.append(f"- {-c} {n}")
        else:
            terms.append(f"+ {c} {n}")
    if not terms:
        return "0"
    s = " ".join(terms)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]


def bracket_table() -> list[list[str]]:
    f = frame()
    return [[format_coords(f.structure[i][j]) for j in range(8)] for i in range(8)]

"""Polarity test at the base point o for a subalgebra h and a section tangent s.

For a connected closed subgroup H with Lie algebra h and a totally geodesic
Sigma through o with tangent space s (a subspace of p), H acts polarly with
section Sigma iff

1. s lies in the normal space of the orbit H.o at o,
2. s is a section of the slice representation of the isotropy H_o,
3. <[v, w], X> = 0 for all v, w in s and X in h.

Condition 2 is checked infinitesimally: the isotropy algebra ``h ∩ k`` moves
points of s orthogonally to s, and at a generic point of s its orbit together
with s spans the normal space.  For the abelian isotropy algebras of the
catalog this is equivalent to s being a section; for arbitrary input it is a
necessary condition only.

All subspaces of g use canonical coordinates (``roots.NAMES``) and all
subspaces of p use p-coordinates (``roots.P_NAMES``).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .roots import P_NAMES, format_coords, frame, is_complex_subspace, is_real_subspace, is_subalgebra
from .scalars import QSqrt3
from .subspace import Subspace, gram_dot, intersect, lincomb, ortho_complement, span, sum_

# fixed so that verdicts never depend on the run seed
GENERIC_SEED = 1729


class NotSubalgebraError(ValueError):
    def __init__(self, witness, bracket):
        self.witness = witness
        self.bracket = bracket
        u, v = (format_coords(w) for w in witness)
        super().__init__(
            f"bracket closure violated: [{u}, {v}] = {format_coords(bracket)} is not in h")


class NotTotallyGeodesicError(ValueError):
    pass


@dataclass(frozen=True)
class ActionSpec:
    name: str
    h: Subspace

    def __post_init__(self):
        if self.h.ambient_dim != 8:
            raise ValueError("h must be given in canonical coordinates of g")
        res = is_subalgebra(self.h)
        if not res:
            raise NotSubalgebraError(res.witness, res.bracket)


@dataclass(frozen=True)
class Residual:
    check: str
    witness: tuple[str, ...]
    value: str

    def to_dict(self):
        return {"check": self.check, "witness": list(self.witness), "value": self.value}


@dataclass(frozen=True)
class PolarityReport:
    section: Subspace
    orbit_tangent: Subspace
    isotropy: Subspace
    normal_space: Subspace
    cohomogeneity: int
    checks: dict[str, bool]
    residuals: tuple[Residual, ...] = field(default_factory=tuple)

    @property
    def verdict(self) -> bool:
        return all(self.checks.values())

    def to_dict(self):
        return {
            "verdict": self.verdict,
            "checks": dict(self.checks),
            "cohomogeneity": self.cohomogeneity,
            "section_dim": self.section.dim,
            "section": [format_coords(v, P_NAMES) for v in self.section.basis],
            "orbit_tangent": [format_coords(v, P_NAMES) for v in self.orbit_tangent.basis],
            "isotropy": [format_coords(v) for v in self.isotropy.basis],
            "normal_space": [format_coords(v, P_NAMES) for v in self.normal_space.basis],
            "residuals": [r.to_dict() for r in self.residuals],
        }


def _h(h) -> Subspace:
    return h.h if isinstance(h, ActionSpec) else h


def orbit_tangent(h) -> Subspace:
    """Tangent space of H.o at o: the p-parts of h, in p-coordinates."""
    f = frame()
    return span([f.p_coords_of_g(b) for b in _h(h).basis], 4)


def isotropy(h) -> Subspace:
    """Lie algebra ``h ∩ k`` of the isotropy group H_o."""
    return intersect(_h(h), frame().k_space)


def normal_space(h) -> Subspace:
    return ortho_complement(orbit_tangent(h), frame().p_gram)


def slice_action(x, v) -> tuple[QSqrt3, ...]:
    """``[x, v]`` for ``x`` in k (g-coordinates) and ``v`` in p (p-coordinates)."""
    f = frame()
    return f.p_coords_of_g(f.bracket_coords(x, f.p_embed(v)))


def _random_point(s: Subspace, rng: random.Random):
    coeffs = [QSqrt3(rng.randint(-9, 9) or 1, 0) / rng.randint(1, 7) for _ in s.basis]
    return lincomb(coeffs, s.basis, s.ambient_dim)


def generic_points(s: Subspace, n_random: int = 2):
    """Pseudo-random rational points of ``s`` followed by its basis vectors."""
    rng = random.Random(GENERIC_SEED)
    return [_random_point(s, rng) for _ in range(n_random)] + list(s.basis)


def slice_orbit(iso: Subspace, v) -> Subspace:
    return span([slice_action(x, v) for x in iso.basis], 4)


def cohomogeneity(h) -> int:
    """Codimension of a principal orbit, from the orbit at o and the slice representation."""
    iso = isotropy(h)
    nu = normal_space(h)
    t = orbit_tangent(h)
    slice_dim = max((slice_orbit(iso, v).dim for v in generic_points(nu)), default=0)
    return 4 - t.dim - slice_dim


def _fmt_p(v):
    return format_coords(v, P_NAMES)


def check_section_in_normal(h, s: Subspace) -> tuple[bool, list[Residual]]:
    f = frame()
    t = orbit_tangent(h)
    residuals = []
    for v in s.basis:
        for w in t.basis:
            val = gram_dot(v, w, f.p_gram)
            if val:
                residuals.append(Residual("section_in_normal", (_fmt_p(v), _fmt_p(w)), str(val)))
    coh = cohomogeneity(h)
    if s.dim != coh:
        residuals.append(Residual("section_in_normal", ("dim s", "cohomogeneity"),
                                  f"{s.dim} != {coh}"))
    return not residuals, residuals


def check_slice_section(h, s: Subspace) -> tuple[bool, list[Residual]]:
    f = frame()
    iso = isotropy(h)
    nu = normal_space(h)
    residuals = []
    if not all(nu.contains(v) for v in s.basis):
        return False, [Residual("slice_section", ("s", "normal space"), "s is not contained in the normal space")]
    for x in iso.basis:
        for v in s.basis:
            xv = slice_action(x, v)
            for w in s.basis:
                val = gram_dot(xv, w, f.p_gram)
                if val:
                    residuals.append(Residual("slice_section",
                                              (format_coords(x), _fmt_p(v), _fmt_p(w)), str(val)))
    if not s.basis:
        transversal = nu.dim == 0
    else:
        transversal = any(sum_(s, slice_orbit(iso, v)) == nu for v in generic_points(s))
    if not transversal:
        residuals.append(Residual("slice_section", ("s + [h∩k, v]", "normal space"),
                                  "no generic point of s is transversal to the slice orbits"))
    return not residuals, residuals


def check_bracket_orthogonality(h, s: Subspace) -> tuple[bool, list[Residual]]:
    f = frame()
    residuals = []
    basis = [f.p_embed(v) for v in s.basis]
    for i, v in enumerate(basis):
        for j in range(i + 1, len(basis)):
            w = basis[j]
            vw = f.bracket_coords(v, w)
            for x in _h(h).basis:
                val = f.inner_coords(vw, x)
                if val:
                    residuals.append(Residual(
                        "bracket_orthogonality",
                        (_fmt_p(s.basis[i]), _fmt_p(s.basis[j]), format_coords(x)), str(val)))
    return not residuals, residuals


def section_type(s: Subspace) -> str:
    """Totally geodesic type of ``exp_o(s)``: point, RH1, RH2, CH1 or CH2."""
    if s.ambient_dim != 4:
        raise ValueError("section must be a subspace of p (4 coordinates)")
    d = s.dim
    if d == 0:
        return "point"
    if d == 1:
        return "RH1"
    if d == 2:
        if is_real_subspace(s):
            return "RH2"
        if is_complex_subspace(s):
            return "CH1"
    if d == 4:
        return "CH2"
    raise NotTotallyGeodesicError(
        f"not totally geodesic candidate: {d}-dimensional subspace is neither real nor complex")


def is_polar_with_section(h, s: Subspace) -> PolarityReport:
    section_type(s)
    hs = _h(h)
    if not isinstance(h, ActionSpec):
        ActionSpec("h", hs)
    ok1, r1 = check_section_in_normal(hs, s)
    ok2, r2 = check_slice_section(hs, s)
    ok3, r3 = check_bracket_orthogonality(hs, s)
    return PolarityReport(
        section=s,
        orbit_tangent=orbit_tangent(hs),
        isotropy=isotropy(hs),
        normal_space=normal_space(hs),
        cohomogeneity=cohomogeneity(hs),
        checks={"section_in_normal": ok1, "slice_section": ok2, "bracket_orthogonality": ok3},
        residuals=tuple(r1 + r2 + r3),
    )


def bracket_image(s: Subspace) -> Subspace:
    """``[s, s]`` as a subspace of g (canonical coordinates)."""
    f = frame()
    basis = [f.p_embed(v) for v in s.basis]
    return span([f.bracket_coords(basis[i], basis[j])
                 for i in range(len(basis)) for j in range(i + 1, len(basis))], 8)

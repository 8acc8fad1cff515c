"""The polar actions on CH^2 with explicit subalgebras and sections.

Each entry pairs a subalgebra ``h`` (canonical coordinates of g) with the
tangent space ``s`` of a section at o (p-coordinates).  Sections for ii.b and
ii.c come with closed-form bracket images; the others are planes
chosen orthogonal to the orbit through o and validated by the criterion and by
the ball-model orthogonality scan.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import criterion
from .criterion import ActionSpec, PolarityReport, cohomogeneity, is_polar_with_section, orbit_tangent, section_type
from .roots import format_coords, frame, g_span, is_subalgebra, p_span
from .scalars import Q0, QSqrt3
from .subspace import Subspace, intersect, span

# p-coordinate unit vectors: B, (1-θ)U1, (1-θ)U2, ½(1-θ)Z
P_B = (1, 0, 0, 0)
P_U1 = (0, 1, 0, 0)
P_U2 = (0, 0, 1, 0)
P_Z = (0, 0, 0, 1)


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    h: ActionSpec
    s: Subspace
    expected_cohomogeneity: int
    h_description: str
    s_description: str
    orbit_description: str

    def to_dict(self):
        return {
            "id": self.id,
            "h": self.h_description,
            "section": self.s_description,
            "expected_cohomogeneity": self.expected_cohomogeneity,
            "orbits": self.orbit_description,
        }


@dataclass(frozen=True)
class EntryResult:
    entry: CatalogEntry
    report: PolarityReport
    section_type: str

    @property
    def cohomogeneity_ok(self) -> bool:
        return self.report.cohomogeneity == self.entry.expected_cohomogeneity

    @property
    def passed(self) -> bool:
        return self.report.verdict and self.cohomogeneity_ok

    def to_dict(self):
        out = self.entry.to_dict()
        out.update(self.report.to_dict())
        out["section_type"] = self.section_type
        out["cohomogeneity_ok"] = self.cohomogeneity_ok
        out["passed"] = self.passed
        return out


def _entry(id, h, s, coh, h_desc, s_desc, orbits):
    return CatalogEntry(id, ActionSpec(id, h), s, coh, h_desc, s_desc, orbits)


@lru_cache(maxsize=None)
def catalog() -> tuple[CatalogEntry, ...]:
    f = frame()
    k = f.k_space
    g_m2_0_2 = g_span("tZ", "T", "B", "Z")
    return (
        _entry("i.a", k, p_span(P_B), 1,
               "k = s(u(1)+u(2))", "a",
               "fixed point o; geodesic spheres about o"),
        _entry("i.b", g_m2_0_2, p_span(P_U1), 1,
               "g_-2α + g_0 + g_2α", "(1-θ)g_α^R",
               "a totally geodesic CH^1 and the tubes about it"),
        _entry("i.c", g_span("tU1", "B", "U1"), p_span(P_U2), 1,
               "θ(g_α^R) + a + g_α^R", "(1-θ)Jg_α^R",
               "a totally geodesic RH^2 and the tubes about it"),
        _entry("i.d1", g_span("T", "U1", "U2", "Z"), p_span(P_B), 1,
               "k_0 + g_α + g_2α", "a",
               "horosphere foliation"),
        _entry("i.d2", g_span("U1", "U2", "Z"), p_span(P_B), 1,
               "g_α + g_2α", "a",
               "horosphere foliation"),
        _entry("i.e", g_span("B", "U1", "Z"), p_span(P_U2), 1,
               "a + g_α^R + g_2α", "(1-θ)Jg_α^R",
               "ruled minimal hypersurface and its equidistant hypersurfaces"),
        _entry("ii.a", intersect(k, g_m2_0_2), p_span(P_B, P_U1), 2,
               "k ∩ (g_-2α + g_0 + g_2α)", "a + (1-θ)g_α^R",
               "fixed point o; on each geodesic sphere two singular circles and principal tori"),
        _entry("ii.b", g_span("T", "B"), p_span(P_U1, P_Z), 2,
               "g_0", "(1-θ)(g_α^R + g_2α)",
               "invariant CH^1 foliated by a geodesic and its equidistant curves; cylinders elsewhere"),
        _entry("ii.c", g_span("T", "Z"), p_span(P_B, P_U1), 2,
               "k_0 + g_2α", "a + (1-θ)g_α^R",
               "in each horosphere a complex horocycle and the tubes about it"),
        _entry("ii.d", g_span("U1", "Z"), p_span(P_B, P_U2), 2,
               "g_α^R + g_2α", "a + (1-θ)Jg_α^R",
               "in each horosphere a minimal Euclidean plane and its equidistant surfaces"),
    )


def entry(entry_id: str) -> CatalogEntry:
    for e in catalog():
        if e.id == entry_id:
            return e
    raise KeyError(f"unknown catalog entry {entry_id!r}")


def verify_entry(e: CatalogEntry) -> EntryResult:
    return EntryResult(e, is_polar_with_section(e.h, e.s), section_type(e.s))


def verify_catalog() -> list[EntryResult]:
    return [verify_entry(e) for e in catalog()]


# --- Killing-form signature ---------------------------------------------------------

def killing_gram(s: Subspace) -> list[list[QSqrt3]]:
    """Killing form restricted to ``s``; ``B(X, Y) = -3 <theta X, Y>``."""
    f = frame()
    return [[-3 * f.inner_coords(f.theta_coords(u), v) for v in s.basis] for u in s.basis]


def inertia(m: list[list[QSqrt3]]) -> tuple[int, int, int]:
    """(positive, negative, zero) counts of a symmetric matrix by exact congruence."""
    a = [list(r) for r in m]
    n = len(a)
    pos = neg = 0
    rank_done = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if a[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i != j and a[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # congruence row_i += row_j makes a[i][i] = 2 a[i][j] + a[j][j]
            for t in range(n):
                a[i][t] = a[i][t] + a[j][t]
            for t in range(n):
                a[t][i] = a[t][i] + a[t][j]
            if not a[i][i]:
                for t in range(n):
                    a[i][t] = a[i][t] - 2 * a[j][t]
                for t in range(n):
                    a[t][i] = a[t][i] - 2 * a[t][j]
            piv = i
        d = a[piv][piv]
        if d.sign() > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for i in active:
            if a[i][piv]:
                factor = a[i][piv] / d
                for t in active:
                    a[i][t] = a[i][t] - factor * a[piv][t]
        for i in active:
            a[i][piv] = Q0
            a[piv][i] = Q0
        rank_done += 1
    return pos, neg, n - pos - neg


def killing_signature(s: Subspace) -> tuple[int, int, int]:
    return inertia(killing_gram(s))


# --- non-examples --------------------------------------------------------------------

@dataclass(frozen=True)
class NegativeExample:
    name: str
    claim: str
    holds: bool
    detail: dict

    def to_dict(self):
        return {"name": self.name, "claim": self.claim, "holds": self.holds, "detail": self.detail}


def negative_catalog() -> list[NegativeExample]:
    f = frame()
    out = []

    s = g_span("T", "U1", "U2")
    res = is_subalgebra(s)
    out.append(NegativeExample(
        "k0 + g_α", "not closed under the bracket", not res.ok,
        {"witness": [format_coords(w) for w in res.witness] if res.witness else None,
         "bracket": format_coords(res.bracket) if res.bracket else None}))

    h = g_span("T", "B", "Z")
    t = orbit_tangent(h)
    coh = cohomogeneity(h)
    expected_t = p_span(P_B, P_Z)
    out.append(NegativeExample(
        "k0 + a + g_2α", "cohomogeneity one, so not a cohomogeneity-two candidate",
        bool(is_subalgebra(h)) and t == expected_t and coh == 1,
        {"orbit_tangent": [format_coords(v, criterion.P_NAMES) for v in t.basis],
         "cohomogeneity": coh}))

    h = span([f.vector(T=1, B=1), f.vector(Z=1)], 8)
    s = p_span(P_U1, P_U2)
    rep = is_polar_with_section(h, s)
    bad = [r for r in rep.residuals if r.check == "bracket_orthogonality"]
    against_z = [r.value for r in bad if r.witness[-1] == "Z"]
    out.append(NegativeExample(
        "R(T+B) + g_2α with s = p_α", "bracket orthogonality fails; <Z, [s, s]> = |U1|^2 = 2",
        (not rep.checks["bracket_orthogonality"]) and against_z == ["2"],
        {"residuals": [r.to_dict() for r in bad]}))
    return out


# --- bracket images of the two proved sections ---------------------------------------

def section_bracket_images() -> dict[str, dict]:
    """``[s, s]`` for ii.b and ii.c against their closed-form spans."""
    from .lie import bracket, cartan_theta

    f = frame()
    th = cartan_theta
    x = bracket(f.tU1, f.Z)
    expected_b = span([f.coords(x + th(x))], 8)
    expected_c = span([f.coords(f.U1 + th(f.U1))], 8)
    got_b = criterion.bracket_image(entry("ii.b").s)
    got_c = criterion.bracket_image(entry("ii.c").s)
    return {
        "ii.b": {"bracket_image": [format_coords(v) for v in got_b.basis],
                 "expected": "(1+θ)[θg_α^R, g_2α]", "match": got_b == expected_b},
        "ii.c": {"bracket_image": [format_coords(v) for v in got_c.basis],
                 "expected": "(1+θ)g_α^R", "match": got_c == expected_c},
    }

"""Replay of the computations behind the cohomogeneity-two classification.

Two-dimensional candidates ``h = R(T + xi) + R eta`` with ``T`` in k0 and
``xi = aB + X + bZ``, ``eta = cB + Y + dZ`` are sampled with exact random
coefficients.  Closure under the bracket is imposed by construction (random
samples are almost never closed), and every accepted sample is checked
against the three component equations

    lambda c = 0
    lambda Y = (a/2) Y - (c/2) X + [T, Y]
    lambda d = a d - b c + (1/2) <[X, Y], Z>

where ``[T + xi, eta] = lambda eta``.  The conjugations that reduce the
surviving cases to ``k0 + g_2alpha`` or ``g0`` are then carried out with
exact matrix exponentials.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .lie import Ad, LieElt, Mat3, bracket, cartan_theta, exp_nilpotent, inner
from .roots import format_coords, frame, g_span, is_real_subspace, is_complex_subspace, is_subalgebra
from .scalars import Q0, Q1, QSqrt3
from .subspace import Subspace, span

HALF = Q1 / 2


class ConjugationError(ValueError):
    pass


def rand_q(rng: random.Random, nonzero: bool = False, irrational: bool = True) -> QSqrt3:
    """Small random element of Q(sqrt3); the sqrt3 part is zero half the time."""
    while True:
        a = QSqrt3(rng.randint(-6, 6), 0) / rng.randint(1, 5)
        b = QSqrt3(rng.randint(-3, 3), 0) / rng.randint(1, 4) if irrational and rng.random() < 0.5 else Q0
        x = a + b * QSqrt3(0, 1)
        if x or not nonzero:
            return x


def rand_g_alpha(rng: random.Random, nonzero: bool = True) -> LieElt:
    f = frame()
    while True:
        x = f.U1 * rand_q(rng) + f.U2 * rand_q(rng)
        if x or not nonzero:
            return x


def rand_k0(rng: random.Random) -> LieElt:
    return frame().T * rand_q(rng, nonzero=True)


@dataclass(frozen=True)
class LemmaSample:
    T: LieElt
    a: QSqrt3
    b: QSqrt3
    c: QSqrt3
    d: QSqrt3
    X: LieElt
    Y: LieElt

    @property
    def xi(self) -> LieElt:
        f = frame()
        return f.B * self.a + self.X + f.Z * self.b

    @property
    def eta(self) -> LieElt:
        f = frame()
        return f.B * self.c + self.Y + f.Z * self.d

    def h(self) -> Subspace:
        f = frame()
        return span([f.coords(self.T + self.xi), f.coords(self.eta)], 8)


@dataclass(frozen=True)
class ClosureEquations:
    closed: bool
    lam: QSqrt3 | None = None
    residual_lc: QSqrt3 | None = None
    residual_xy: LieElt | None = None
    residual_abcd: QSqrt3 | None = None

    @property
    def hold(self) -> bool:
        return (self.closed and not self.residual_lc and not self.residual_xy
                and not self.residual_abcd)


def closure_equations(sample: LemmaSample) -> ClosureEquations:
    """Extract ``lambda`` from ``[T + xi, eta] = lambda eta`` and check the components."""
    f = frame()
    eta = sample.eta
    if not eta:
        return ClosureEquations(False)
    r = bracket(sample.T + sample.xi, eta)
    rc, ec = f.coords(r), f.coords(eta)
    i = next(k for k, x in enumerate(ec) if x)
    lam = rc[i] / ec[i]
    if r != eta * lam:
        return ClosureEquations(False)
    a, b, c, d, X, Y = sample.a, sample.b, sample.c, sample.d, sample.X, sample.Y
    res_lc = lam * c
    res_xy = Y * lam - (Y * (a * HALF) - X * (c * HALF) + bracket(sample.T, Y))
    res_abcd = lam * d - (a * d - b * c + inner(bracket(X, Y), f.Z) * HALF)
    return ClosureEquations(True, lam, res_lc, res_xy, res_abcd)


# --- conjugations ---------------------------------------------------------------

@dataclass(frozen=True)
class Conjugation:
    g: Mat3
    image: Subspace
    target: Subspace
    identities: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.image == self.target and all(self.identities.values())


def _image(g: Mat3, elements) -> Subspace:
    f = frame()
    return span([f.coords(Ad(g, x)) for x in elements], 8)


def case_a_conjugation(T: LieElt, X: LieElt) -> Conjugation:
    """``R(T + X) + g_2alpha`` is conjugate to ``k0 + g_2alpha``."""
    f = frame()
    if not T or not X:
        raise ConjugationError("case (a) needs T != 0 and X != 0")
    tx = bracket(T, X)
    w = bracket(T, tx)
    rho = -inner(w, X) / inner(X, X)
    if w != X * (-rho) or rho.sign() <= 0:
        raise ConjugationError("[T, [T, X]] is not -rho X with rho > 0")
    g = exp_nilpotent(tx * (-rho.inverse()))
    expected = T - bracket(tx, X) * (QSqrt3(1, 0) / (2 * rho))
    return Conjugation(
        g, _image(g, [T + X, f.Z]), g_span("T", "Z"),
        {"Ad(g)Z = Z": Ad(g, f.Z) == f.Z,
         "Ad(g)(T+X) = T - [[T,X],X]/(2 rho)": Ad(g, T + X) == expected,
         "rho > 0": rho.sign() > 0})


def case_b_conjugation(a, b, T: LieElt | None = None) -> Conjugation:
    """``k0 + R(aB + bZ)`` with ``a != 0`` is conjugate to ``g0``."""
    f = frame()
    a, b = QSqrt3.coerce(a), QSqrt3.coerce(b)
    if not a:
        raise ConjugationError("case (b) needs a != 0 (a = 0 is already k0 + g_2alpha)")
    T = f.T if T is None else T
    g = exp_nilpotent(f.Z * (b / a))
    v = f.B * a + f.Z * b
    return Conjugation(
        g, _image(g, [T, v]), g_span("T", "B"),
        {"Ad(g)T = T": Ad(g, T) == T, "Ad(g)(aB+bZ) = aB": Ad(g, v) == f.B * a})


def normalize_case_c(T: LieElt, Y: LieElt) -> LieElt:
    """Rescale ``T`` so that ``[[T, Y], Y] = 2Z``."""
    f = frame()
    w = bracket(bracket(T, Y), Y)
    kappa = inner(w, f.Z) / inner(f.Z, f.Z)
    if not kappa or w != f.Z * kappa:
        raise ConjugationError("[[T, Y], Y] is not a nonzero multiple of Z")
    return T * (QSqrt3(2, 0) / kappa)


def case_c_conjugation(T: LieElt, Y: LieElt, d) -> Conjugation:
    """``R(T + [T,Y] + Z) + R(2B + Y + dZ)`` is conjugate to ``g0``."""
    f = frame()
    d = QSqrt3.coerce(d)
    if not T or not Y:
        raise ConjugationError("case (c) needs T != 0 and Y != 0")
    T = normalize_case_c(T, Y)
    g = exp_nilpotent(Y + f.Z * (d * HALF))
    first = T + bracket(T, Y) + f.Z
    second = f.B * 2 + Y + f.Z * d
    return Conjugation(
        g, _image(g, [first, second]), g_span("T", "B"),
        {"Ad(g)(T+[T,Y]+Z) = T": Ad(g, first) == T,
         "Ad(g)(2B+Y+dZ) = 2B": Ad(g, second) == f.B * 2,
         "[[T,Y],Y] = 2Z": bracket(bracket(T, Y), Y) == f.Z * 2})


def literal_case_c_reading(T: LieElt, Y: LieElt, d) -> bool:
    """Whether ``Ad(g)(B + Y + dZ) = 2B`` (the display with a single B); expected False."""
    f = frame()
    d = QSqrt3.coerce(d)
    g = exp_nilpotent(Y + f.Z * (d * HALF))
    return Ad(g, f.B + Y + f.Z * d) == f.B * 2


# --- sampling branches -------------------------------------------------------------

def sample_y_zero(rng: random.Random, kind: str) -> LemmaSample:
    """Closed samples with ``Y = 0``; ``kind`` picks the sub-branch."""
    T = rand_k0(rng)
    zero = LieElt.zero()
    if kind == "lambda0_c0":
        return LemmaSample(T, Q0, rand_q(rng), Q0, rand_q(rng, nonzero=True), rand_g_alpha(rng), zero)
    if kind == "lambda0_X0":
        c, d, k = rand_q(rng, nonzero=True), rand_q(rng), rand_q(rng)
        return LemmaSample(T, k * c, k * d, c, d, zero, zero)
    if kind == "lambda_nonzero":
        return LemmaSample(T, rand_q(rng, nonzero=True), rand_q(rng), Q0,
                           rand_q(rng, nonzero=True), rand_g_alpha(rng, nonzero=False), zero)
    raise ValueError(kind)


def sample_unconstrained(rng: random.Random, y_zero: bool) -> LemmaSample:
    Y = LieElt.zero() if y_zero else rand_g_alpha(rng)
    return LemmaSample(rand_k0(rng), rand_q(rng), rand_q(rng), rand_q(rng, nonzero=True),
                       rand_q(rng), rand_g_alpha(rng), Y)


def sample_y_nonzero(rng: random.Random) -> LemmaSample:
    """Closed samples with ``Y != 0``: ``X = (2/c)[T, Y]`` and ``b`` from the Z-equation."""
    f = frame()
    T = rand_k0(rng)
    Y = rand_g_alpha(rng)
    c = rand_q(rng, nonzero=True)
    d = rand_q(rng)
    X = bracket(T, Y) * (QSqrt3(2, 0) / c)
    b = inner(bracket(X, Y), f.Z) / (2 * c)
    return LemmaSample(T, Q0, b, c, d, X, Y)


def _fail(failures, branch, idx, what, sample=None):
    failures.append({"branch": branch, "sample": idx, "failed": what})


def run_lemma_suite(samples: int = 100, seed: int = 0, conjugation_samples: int = 50) -> dict:
    """Run every branch; returns counts and witnesses of any failure (deterministic)."""
    rng = random.Random(seed)
    f = frame()
    failures: list[dict] = []
    report: dict = {"seed": seed, "samples_per_branch": samples}

    # Y = 0
    kinds = ("lambda0_c0", "lambda0_X0", "lambda_nonzero")
    accepted = rejected = 0
    per_kind = {k: 0 for k in kinds}
    for idx in range(samples):
        kind = kinds[idx % 3]
        s = sample_y_zero(rng, kind)
        eq = closure_equations(s)
        if not eq.closed:
            _fail(failures, "Y=0", idx, f"constructed {kind} sample not closed")
            continue
        accepted += 1
        per_kind[kind] += 1
        if not eq.hold:
            _fail(failures, "Y=0", idx, "component equations")
        if not eq.lam and (s.a * s.d - s.b * s.c or (s.c and s.X)):
            _fail(failures, "Y=0", idx, "lambda = 0 but ad - bc != 0 or cX != 0")
        if eq.lam and s.c:
            _fail(failures, "Y=0", idx, "lambda != 0 but c != 0")
        u = sample_unconstrained(rng, y_zero=True)
        eq_u = closure_equations(u)
        if eq_u.closed:
            if not eq_u.hold:
                _fail(failures, "Y=0", idx, "unconstrained closed sample violates equations")
        else:
            rejected += 1
    report["Y=0"] = {"accepted": accepted, "rejected_unconstrained": rejected, "by_subcase": per_kind}

    # Y != 0
    accepted = forced_a = 0
    for idx in range(samples):
        s = sample_y_nonzero(rng)
        eq = closure_equations(s)
        if not eq.closed:
            _fail(failures, "Y!=0", idx, "constructed sample not closed")
            continue
        accepted += 1
        checks = {
            "equations": eq.hold,
            "lambda = 0": not eq.lam,
            "lambda = a/2": eq.lam == s.a * HALF,
            "a = 0": not s.a,
            "<[X,Y],Z> = 2bc": inner(bracket(s.X, s.Y), f.Z) == 2 * s.b * s.c,
            "b, c, X nonzero": bool(s.b) and bool(s.c) and bool(s.X),
            "[T,Y] = (c/2)X": bracket(s.T, s.Y) == s.X * (s.c * HALF),
        }
        for name, ok in checks.items():
            if not ok:
                _fail(failures, "Y!=0", idx, name)
        perturbed = LemmaSample(s.T, rand_q(rng, nonzero=True), s.b, s.c, s.d, s.X, s.Y)
        if not closure_equations(perturbed).closed:
            forced_a += 1
        else:
            _fail(failures, "Y!=0", idx, "closure survived a != 0")
        # renormalize to the case (c) form and compare subspaces
        T2, Y2, d2 = s.T / s.b, s.Y * (QSqrt3(2, 0) / s.c), s.d * 2 / s.c
        normal_form = span([f.coords(T2 + bracket(T2, Y2) + f.Z), f.coords(f.B * 2 + Y2 + f.Z * d2)], 8)
        if normal_form != s.h() or bracket(bracket(T2, Y2), Y2) != f.Z * 2:
            _fail(failures, "Y!=0", idx, "renormalization to case (c) form")
    report["Y!=0"] = {"accepted": accepted, "a_forced_zero": forced_a}

    # conjugations
    counts = {"a": 0, "b": 0, "c": 0}
    literal_c = 0
    for idx in range(conjugation_samples):
        T, X = rand_k0(rng), rand_g_alpha(rng)
        ca = case_a_conjugation(T, X)
        if ca.ok:
            counts["a"] += 1
        else:
            _fail(failures, "case (a)", idx, [k for k, v in ca.identities.items() if not v] or "image")
        a, b = rand_q(rng, nonzero=True), rand_q(rng)
        cb = case_b_conjugation(a, b, rand_k0(rng))
        if cb.ok:
            counts["b"] += 1
        else:
            _fail(failures, "case (b)", idx, [k for k, v in cb.identities.items() if not v] or "image")
        T, Y, d = rand_k0(rng), rand_g_alpha(rng), rand_q(rng)
        cc = case_c_conjugation(T, Y, d)
        if cc.ok:
            counts["c"] += 1
        else:
            _fail(failures, "case (c)", idx, [k for k, v in cc.identities.items() if not v] or "image")
        if literal_case_c_reading(normalize_case_c(T, Y), Y, d):
            literal_c += 1
    report["conjugations"] = {"samples": conjugation_samples, "exact_matches": counts,
                              "single_B_reading_holds": literal_c}

    report["impossibility"] = impossibility_checks()
    report["failures"] = failures
    report["passed"] = (not failures and report["impossibility"]["passed"]
                        and all(v == conjugation_samples for v in counts.values()))
    return report


# --- impossibility branches ------------------------------------------------------------

def obstruction_residual(U: LieElt) -> QSqrt3:
    """``<Z, [(1-theta)U, (1-theta)JU]>``; equals ``|U|^2`` and so never vanishes."""
    f = frame()
    th = cartan_theta
    JU = f.J(U)
    return inner(f.Z, bracket(U - th(U), JU - th(JU)))


def lemma_section(X: LieElt, a) -> Subspace:
    """``R((1-theta)JX) + R(-|X|^2 B + a(1-theta)X)`` in p-coordinates."""
    f = frame()
    th = cartan_theta
    a = QSqrt3.coerce(a)
    JX = f.J(X)
    v1 = JX - th(JX)
    v2 = f.B * (-inner(X, X)) + (X - th(X)) * a
    return span([f.p_coords(v1), f.p_coords(v2)], 4)


def impossibility_checks(sweep=(-2, -1, 0, 1, 2), X: LieElt | None = None) -> dict:
    f = frame()
    X = f.U1 if X is None else X
    residual = obstruction_residual(f.U1)
    real_or_complex = {}
    for a in sweep:
        s = lemma_section(X, a)
        real_or_complex[str(a)] = is_real_subspace(s) or is_complex_subspace(s)
    closure = is_subalgebra(g_span("T", "U1", "U2"))
    out = {
        "obstruction_residual": str(residual),
        "norm_U1_squared": str(inner(f.U1, f.U1)),
        "obstruction_equals_norm": residual == inner(f.U1, f.U1) and bool(residual),
        "section_real_or_complex": real_or_complex,
        "real_or_complex_iff_a_zero": all(v == (int(a) == 0) for a, v in real_or_complex.items()),
        "k0+g_alpha_subalgebra": closure.ok,
        "k0+g_alpha_witness": ([format_coords(w) for w in closure.witness] if closure.witness else None),
    }
    out["passed"] = (out["obstruction_equals_norm"] and out["real_or_complex_iff_a_zero"]
                     and not closure.ok)
    return out

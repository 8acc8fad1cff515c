"""Floating-point unit-ball model of CH^2.

Points are ``z = (z1, z2)`` with ``|z| < 1``, lifted to ``(1, z1, z2)`` in
C^{1,2} with the form ``-u0 w0* + u1 w1* + u2 w2*``.  SU(1,2) acts by matrix
multiplication followed by renormalizing the first coordinate.  Real
coordinates of a tangent vector are ordered ``(x1, y1, x2, y2)``.

The invariant metric is ``c * [|dz|^2 / (1 - |z|^2) + |<dz, z>|^2 / (1 - |z|^2)^2]``
with ``c`` fixed at import by requiring the Killing field of ``B`` to have
unit length at the origin.  Curvature is measured, never assumed.
"""

from __future__ import annotations

import csv
import itertools
import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy.linalg import expm

from .lie import LieElt, Mat3
from .roots import frame

IP = np.diag([-1.0, 1.0, 1.0]).astype(complex)
GROUP_TOL = 1e-10
FIRST_ORDER_TOL = 1e-8
CURVATURE_TOL = 1e-3
# null vector fixed (up to scale) by exp(n); the horospheres are the N-orbits
HORO_NULL = np.array([1.0, 1.0, 0.0], dtype=complex)
MODEL_TAG = "unit ball in C^2, form diag(-1, 1, 1), coordinates (x1, y1, x2, y2)"


class BallError(ValueError):
    pass


@dataclass(frozen=True)
class BallPoint:
    z1: complex
    z2: complex

    def __post_init__(self):
        if abs(self.z1) ** 2 + abs(self.z2) ** 2 >= 1:
            raise BallError(f"point ({self.z1}, {self.z2}) is not inside the unit ball")

    @property
    def z(self) -> np.ndarray:
        return np.array([self.z1, self.z2], dtype=complex)

    @property
    def real(self) -> np.ndarray:
        return np.array([self.z1.real, self.z1.imag, self.z2.real, self.z2.imag])

    def lift(self) -> np.ndarray:
        return np.array([1.0, self.z1, self.z2], dtype=complex)

    @classmethod
    def from_real(cls, x) -> BallPoint:
        return cls(complex(x[0], x[1]), complex(x[2], x[3]))

    @classmethod
    def from_z(cls, z) -> BallPoint:
        return cls(complex(z[0]), complex(z[1]))


ORIGIN = BallPoint(0j, 0j)


@dataclass(frozen=True)
class MetricSample:
    point: BallPoint
    gram: np.ndarray


def to_matrix(x) -> np.ndarray:
    if isinstance(x, LieElt):
        return x.m.to_numpy()
    if isinstance(x, Mat3):
        return x.to_numpy()
    return np.asarray(x, dtype=complex)


def hermitian(u, w) -> complex:
    return -u[0] * np.conj(w[0]) + u[1] * np.conj(w[1]) + u[2] * np.conj(w[2])


def group_residual(g) -> float:
    g = to_matrix(g)
    scale = max(1.0, np.linalg.norm(g) ** 2)
    return float(np.linalg.norm(g.conj().T @ IP @ g - IP) / scale)


def in_group(g, tol: float = GROUP_TOL) -> bool:
    return group_residual(g) < tol


def group_exp(x) -> np.ndarray:
    return expm(to_matrix(x))


def act(g, p: BallPoint, check: bool = True) -> BallPoint:
    g = to_matrix(g)
    if check and not in_group(g):
        raise BallError(f"matrix does not preserve the form (residual {group_residual(g):.3e})")
    u = g @ p.lift()
    if abs(u[0]) < 1e-300:
        raise BallError("renormalization coordinate vanished")
    return BallPoint.from_z(u[1:] / u[0])


def _complex_to_real(m: np.ndarray) -> np.ndarray:
    """Real 4x4 matrix of a complex-linear map of C^2 in (x1, y1, x2, y2)."""
    out = np.zeros((4, 4))
    for i in range(2):
        for j in range(2):
            a, b = m[i, j].real, m[i, j].imag
            out[2 * i:2 * i + 2, 2 * j:2 * j + 2] = [[a, -b], [b, a]]
    return out


def act_differential(g, p: BallPoint) -> np.ndarray:
    """Real Jacobian of ``z -> act(g, z)`` at ``p``."""
    g = to_matrix(g)
    u = g @ p.lift()
    # d(u'/u0) = (g' dz u0 - u' (g0 . dz)) / u0^2
    m = (g[1:, 1:] * u[0] - np.outer(u[1:], g[0, 1:])) / u[0] ** 2
    return _complex_to_real(m)


def _base_gram(x: np.ndarray) -> np.ndarray:
    z = np.array([complex(x[0], x[1]), complex(x[2], x[3])])
    q = 1.0 - float(np.vdot(z, z).real)
    # real coordinate vectors as complex directions
    e = np.array([[1, 0], [1j, 0], [0, 1], [0, 1j]], dtype=complex)
    hz = e @ np.conj(z)  # <e_a, z>
    g = (e @ e.conj().T).real / q + (np.outer(hz, np.conj(hz))).real / q ** 2
    return g


def _base_killing(x, p: BallPoint) -> np.ndarray:
    xi = to_matrix(x) @ p.lift()
    dz = xi[1:] - p.z * xi[0]
    return np.array([dz[0].real, dz[0].imag, dz[1].real, dz[1].imag])


def _calibrate() -> float:
    v = _base_killing(frame().B, ORIGIN)
    return 1.0 / float(v @ _base_gram(ORIGIN.real) @ v)


METRIC_SCALE = _calibrate()


def gram_at(x) -> np.ndarray:
    return METRIC_SCALE * _base_gram(np.asarray(x, dtype=float))


def metric(p: BallPoint) -> MetricSample:
    return MetricSample(p, gram_at(p.real))


def metric_inner(p: BallPoint, u, v) -> float:
    return float(np.asarray(u) @ gram_at(p.real) @ np.asarray(v))


def metric_norm(p: BallPoint, u) -> float:
    return math.sqrt(max(metric_inner(p, u, u), 0.0))


def distance(p: BallPoint, q: BallPoint) -> float:
    u, w = p.lift(), q.lift()
    ratio = abs(hermitian(u, w)) / math.sqrt(hermitian(u, u).real * hermitian(w, w).real)
    return math.sqrt(METRIC_SCALE) * math.acosh(max(ratio, 1.0))


def horospherical_height(p: BallPoint) -> float:
    """Busemann-type function whose level sets are the horospheres centred at ``[1:1:0]``."""
    u = p.lift()
    return 0.5 * math.sqrt(METRIC_SCALE) * math.log(-hermitian(u, u).real / abs(hermitian(u, HORO_NULL)) ** 2)


def killing_vector(x, p: BallPoint) -> np.ndarray:
    """``d/dt exp(tX) p`` at ``t = 0`` in real coordinates."""
    return _base_killing(x, p)


def killing_vector_fd(x, p: BallPoint, h: float = 1e-5) -> np.ndarray:
    m = to_matrix(x)
    fwd = act(expm(h * m), p, check=False).real
    bwd = act(expm(-h * m), p, check=False).real
    return (fwd - bwd) / (2 * h)


# --- curvature ----------------------------------------------------------------------

def _metric_derivatives(gram_fn, x, h: float):
    x = np.asarray(x, dtype=float)
    n = len(x)
    eye = np.eye(n)
    d1 = np.zeros((n, n, n))
    d2 = np.zeros((n, n, n, n))
    g0 = gram_fn(x)
    for k in range(n):
        gp, gm = gram_fn(x + h * eye[k]), gram_fn(x - h * eye[k])
        d1[k] = (gp - gm) / (2 * h)
        d2[k, k] = (gp - 2 * g0 + gm) / h ** 2
        for m in range(k + 1, n):
            pp = gram_fn(x + h * (eye[k] + eye[m]))
            pm = gram_fn(x + h * (eye[k] - eye[m]))
            mp = gram_fn(x + h * (-eye[k] + eye[m]))
            mm = gram_fn(x - h * (eye[k] + eye[m]))
            d2[k, m] = d2[m, k] = (pp - pm - mp + mm) / (4 * h * h)
    return g0, d1, d2


def riemann_tensor(x, h: float = 1e-3, gram_fn=None) -> np.ndarray:
    """Fully covariant ``R_abcd`` by central differences, with ``K(u, v) = R(u, v, u, v) / |u ^ v|^2``.

    ``x`` is a BallPoint or, with a custom ``gram_fn``, a coordinate vector.
    """
    x = x.real if isinstance(x, BallPoint) else x
    g, d1, d2 = _metric_derivatives(gram_fn or gram_at, x, h)
    ginv = np.linalg.inv(g)
    # Gamma_{e,bc} (first kind) = 1/2 (d_b g_ec + d_c g_eb - d_e g_bc); d1[k][i, j] = d_k g_ij
    first = 0.5 * (np.einsum("bec->ebc", d1) + np.einsum("ceb->ebc", d1) - d1)
    gamma = np.einsum("fe,ebc->fbc", ginv, first)
    # d2[k, m][i, j] = d_k d_m g_ij
    r = 0.5 * (np.einsum("bcad->abcd", d2) + np.einsum("adbc->abcd", d2)
               - np.einsum("acbd->abcd", d2) - np.einsum("bdac->abcd", d2))
    r += np.einsum("ef,ebc,fad->abcd", g, gamma, gamma) - np.einsum("ef,ebd,fac->abcd", g, gamma, gamma)
    return r


def curvature_of(gram_fn, x, u, v, h: float = 1e-3) -> float:
    """Sectional curvature of an arbitrary metric given as a Gram-matrix function."""
    r = riemann_tensor(x, h, gram_fn)
    g = gram_fn(np.asarray(x, float))
    u, v = np.asarray(u, float), np.asarray(v, float)
    num = np.einsum("abcd,a,b,c,d->", r, u, v, u, v)
    return float(num / ((u @ g @ u) * (v @ g @ v) - (u @ g @ v) ** 2))


def sectional_curvature(p: BallPoint, u, v) -> float:
    return curvature_of(gram_at, p.real, u, v)


def complex_structure(u) -> np.ndarray:
    u = np.asarray(u, float)
    return np.array([-u[1], u[0], -u[3], u[2]])


def holomorphic_curvature(p: BallPoint, u) -> float:
    return sectional_curvature(p, u, complex_structure(u))


# --- sections and orbits ----------------------------------------------------------------

def p_vector_to_c2(pc) -> np.ndarray:
    """Lower block ``w`` of the p-element with p-coordinates ``pc``."""
    return frame().p_element(pc).m.to_numpy()[1:, 0]


def section_frame(s) -> np.ndarray:
    """Rows: an orthonormal basis of ``s`` as vectors ``w`` in C^2 (|X(w)| = 2|w|)."""
    ws = np.array([p_vector_to_c2(v) for v in s.basis]).reshape(-1, 2)
    if len(ws) == 0:
        return ws
    real = np.stack([ws.real, ws.imag], axis=-1).reshape(len(ws), 4)
    q, _ = np.linalg.qr(real.T)
    q = q.T / 2.0
    return q[:, 0::2] + 1j * q[:, 1::2]


def _exp_o(w: np.ndarray) -> np.ndarray:
    r = float(np.linalg.norm(w))
    return w if r == 0 else math.tanh(r) / r * w


def _exp_o_differential(w: np.ndarray, dw: np.ndarray) -> np.ndarray:
    r = float(np.linalg.norm(w))
    if r < 1e-8:
        return dw - (r * r / 3) * dw
    f = math.tanh(r) / r
    fp = (r / math.cosh(r) ** 2 - math.tanh(r)) / (r * r)
    radial = float(np.vdot(w, dw).real) / r
    return f * dw + fp * radial * w


def _as_real(z) -> np.ndarray:
    return np.array([z[0].real, z[0].imag, z[1].real, z[1].imag])


def grid_values(n: int, radius: float) -> np.ndarray:
    return np.linspace(-radius, radius, n) if n > 1 else np.zeros(n)


def section_samples(s, n: int, radius: float = 2.0):
    """Pairs (point, tangent basis) on ``exp_o(s)`` over an ``n^dim s`` parameter grid."""
    basis = section_frame(s)
    out = []
    if n <= 0 or len(basis) == 0:
        return out
    for ts in itertools.product(grid_values(n, radius), repeat=len(basis)):
        w = np.asarray(ts) @ basis
        p = BallPoint.from_z(_exp_o(w))
        tangents = [_as_real(_exp_o_differential(w, b)) for b in basis]
        out.append((p, tangents))
    return out


def section_points(entry, n: int, radius: float = 2.0) -> list[BallPoint]:
    from .criterion import section_type

    section_type(entry.s)
    return [p for p, _ in section_samples(entry.s, n, radius)]


def default_grid(entry) -> int:
    return 15 if entry.s.dim >= 2 else 20


def h_generators(entry) -> list[np.ndarray]:
    f = frame()
    return [f.element(v).m.to_numpy() for v in entry.h.h.basis]


def orthogonality_scan(entry, n: int | None = None, radius: float = 2.0, min_norm: float = 1e-10) -> float:
    """Largest |cos| between Killing fields of ``h`` and the section, over the grid."""
    n = default_grid(entry) if n is None else n
    gens = h_generators(entry)
    worst = 0.0
    for p, tangents in section_samples(entry.s, n, radius):
        g = gram_at(p.real)
        for x in gens:
            k = killing_vector(x, p)
            kn = math.sqrt(max(k @ g @ k, 0.0))
            if kn < min_norm:
                continue
            for t in tangents:
                tn = math.sqrt(t @ g @ t)
                worst = max(worst, abs(k @ g @ t) / (kn * tn))
    return worst


@dataclass(frozen=True)
class OrbitCloud:
    entry_id: str
    base: BallPoint
    params: np.ndarray
    points: np.ndarray  # rows (x1, y1, x2, y2)
    grid: str
    seed: int | None = None

    def __len__(self):
        return len(self.points)

    def columns(self) -> list[str]:
        k = self.params.shape[1] if self.params.ndim == 2 else 0
        return ["entry_id"] + [f"t{i + 1}" for i in range(k)] + ["x1", "y1", "x2", "y2"]

    def write_csv(self, path) -> Path:
        path = Path(path)
        with path.open("w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(self.columns())
            for t, x in zip(self.params, self.points):
                w.writerow([self.entry_id] + [f"{v:.12g}" for v in t] + [f"{v:.15g}" for v in x])
        return path

    def to_dict(self) -> dict:
        return {
            "metadata": {
                "entry_id": self.entry_id,
                "model": MODEL_TAG,
                "metric_scale": METRIC_SCALE,
                "base_point": [float(v) for v in self.base.real],
                "grid": self.grid,
                "seed": self.seed,
                "tolerances": {"first_order": FIRST_ORDER_TOL, "curvature": CURVATURE_TOL},
                "columns": self.columns(),
            },
            "points": [[float(v) for v in t] + [float(v) for v in x]
                       for t, x in zip(self.params, self.points)],
        }

    def write_json(self, path) -> Path:
        path = Path(path)
        path.write_text(json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n")
        return path


def parse_grid(spec: str) -> tuple[int, float]:
    """``"N"`` or ``"N:R"``: N samples per parameter on [-R, R] (default R = 1)."""
    try:
        if ":" in spec:
            n, r = spec.split(":", 1)
            return int(n), float(r)
        return int(spec), 1.0
    except ValueError as exc:
        raise ValueError(f"bad grid spec {spec!r}; expected N or N:R") from exc


def orbit_cloud(entry, p0: BallPoint, n: int, radius: float = 1.0, seed: int | None = None) -> OrbitCloud:
    """Points ``exp(t1 X1) ... exp(tk Xk) p0`` over an ``n^k`` parameter grid."""
    gens = h_generators(entry)
    k = len(gens)
    params, pts = [], []
    if n > 0:
        for ts in itertools.product(grid_values(n, radius), repeat=k):
            g = np.eye(3, dtype=complex)
            for t, x in zip(ts, gens):
                g = g @ expm(t * x)
            params.append(ts)
            pts.append(act(g, p0, check=False).real)
    return OrbitCloud(entry.id, p0, np.array(params, dtype=float).reshape(-1, k),
                      np.array(pts, dtype=float).reshape(-1, 4), f"{n}:{radius:g}", seed)


# --- sampling helpers for the numerical suite ---------------------------------------------

def random_algebra_element(rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    f = frame()
    mats = [x.m.to_numpy() for x in f.elements]
    coeffs = rng.normal(size=len(mats)) * scale
    return sum(c * m for c, m in zip(coeffs, mats))


def random_group_element(rng: np.random.Generator, scale: float = 0.7) -> np.ndarray:
    return expm(random_algebra_element(rng, scale))


def random_point(rng: np.random.Generator, max_radius: float = 0.9) -> BallPoint:
    v = rng.normal(size=4)
    v *= max_radius * rng.uniform() ** 0.25 / np.linalg.norm(v)
    return BallPoint.from_real(v)


def invariance_residual(g, p: BallPoint) -> float:
    q = act(g, p)
    jac = act_differential(g, p)
    pulled = jac.T @ gram_at(q.real) @ jac
    g0 = gram_at(p.real)
    return float(np.max(np.abs(pulled - g0)) / max(1.0, np.max(np.abs(g0))))

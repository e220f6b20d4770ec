"""Ricci components of diagonal invariant metrics and the Einstein equations."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np

KEYS = [(i, j, k) for i in range(1, 5) for j in range(i, 5) for k in range(j, 5)]


@dataclass(frozen=True)
class MetricParams:
    x: tuple[float, ...]

    def __post_init__(self):
        if any(v <= 0 for v in self.x):
            raise ValueError(f"metric entries must be positive, got {self.x}")

    def normalized(self, index: int = 0) -> "MetricParams":
        """Rescale so that entry ``index`` (0-based) equals 1."""
        return MetricParams(tuple(v / self.x[index] for v in self.x))


@dataclass(frozen=True)
class RicciComponents:
    r: tuple

    @property
    def spread(self) -> float:
        return float(max(self.r) - min(self.r))


@dataclass(frozen=True)
class EinsteinSolution:
    metric: MetricParams
    einstein_constant: float
    residual: float
    kind: str  # "KE", "non-Kaehler" or "normal"
    ordering: int | None = None

    def to_dict(self) -> dict:
        return {
            "metric": list(self.metric.x),
            "einstein_constant": self.einstein_constant,
            "residual": self.residual,
            "kind": self.kind,
            "ordering": self.ordering,
        }


def _lookup(triples, i, j, k):
    return triples[tuple(sorted((i, j, k)))]


def ricci_generic(dims: Sequence[int], triples, x: Sequence) -> list:
    """Ricci components from the general formula for a diagonal metric.

    ``triples`` maps sorted 1-based index triples to [ijk]; ``x`` may hold
    floats, Fractions, mpf or numpy arrays (evaluated elementwise).
    """
    s = len(dims)
    out = []
    for k in range(1, s + 1):
        xk = x[k - 1]
        dk = dims[k - 1]
        r = 1 / (2 * xk)
        for i in range(1, s + 1):
            for j in range(1, s + 1):
                c = _lookup(triples, i, j, k)
                if c:
                    r = r + c * xk / (4 * dk * x[i - 1] * x[j - 1])
                    r = r - c * x[j - 1] / (2 * dk * xk * x[i - 1])
        out.append(r)
    return out


def _ricci_type1(d, c, x):
    c112, c123, c134, c224 = c[1, 1, 2], c[1, 2, 3], c[1, 3, 4], c[2, 2, 4]
    x1, x2, x3, x4 = x
    d1, d2, d3, d4 = d
    r1 = (
        1 / (2 * x1)
        - c112 / (2 * d1) * x2 / x1**2
        + c123 / (2 * d1) * (x1 / (x2 * x3) - x2 / (x1 * x3) - x3 / (x1 * x2))
        + c134 / (2 * d1) * (x1 / (x3 * x4) - x3 / (x1 * x4) - x4 / (x1 * x3))
    )
    r2 = (
        1 / (2 * x2)
        - c224 / (2 * d2) * x4 / x2**2
        + c112 / (4 * d2) * (x2 / x1**2 - 2 / x2)
        + c123 / (2 * d2) * (x2 / (x1 * x3) - x1 / (x2 * x3) - x3 / (x1 * x2))
    )
    r3 = (
        1 / (2 * x3)
        + c123 / (2 * d3) * (x3 / (x1 * x2) - x2 / (x1 * x3) - x1 / (x2 * x3))
        + c134 / (2 * d3) * (x3 / (x1 * x4) - x1 / (x3 * x4) - x4 / (x1 * x3))
    )
    r4 = (
        1 / (2 * x4)
        + c224 / (4 * d4) * (x4 / x2**2 - 2 / x4)
        + c134 / (2 * d4) * (x4 / (x1 * x3) - x1 / (x3 * x4) - x3 / (x1 * x4))
    )
    return [r1, r2, r3, r4]


def _ricci_type2a(d, c, x):
    c123, c234 = c[1, 2, 3], c[2, 3, 4]
    x1, x2, x3, x4 = x
    d1, d2, d3, d4 = d
    r1 = 1 / (2 * x1) + c123 / (2 * d1) * (x1 / (x2 * x3) - x2 / (x1 * x3) - x3 / (x1 * x2))
    r2 = (
        1 / (2 * x2)
        + c123 / (2 * d2) * (x2 / (x1 * x3) - x1 / (x2 * x3) - x3 / (x1 * x2))
        + c234 / (2 * d2) * (x2 / (x3 * x4) - x4 / (x2 * x3) - x3 / (x2 * x4))
    )
    r3 = (
        1 / (2 * x3)
        + c123 / (2 * d3) * (x3 / (x1 * x2) - x2 / (x1 * x3) - x1 / (x2 * x3))
        + c234 / (2 * d3) * (x3 / (x2 * x4) - x4 / (x2 * x3) - x2 / (x3 * x4))
    )
    r4 = 1 / (2 * x4) + c234 / (2 * d4) * (x4 / (x2 * x3) - x3 / (x2 * x4) - x2 / (x3 * x4))
    return [r1, r2, r3, r4]


def _ricci_type2b(d, c, x):
    c123, c134 = c[1, 2, 3], c[1, 3, 4]
    x1, x2, x3, x4 = x
    d1, d2, d3, d4 = d
    r1 = (
        1 / (2 * x1)
        + c123 / (2 * d1) * (x1 / (x2 * x3) - x2 / (x1 * x3) - x3 / (x1 * x2))
        + c134 / (2 * d1) * (x1 / (x3 * x4) - x4 / (x1 * x3) - x3 / (x1 * x4))
    )
    r2 = 1 / (2 * x2) + c123 / (2 * d2) * (x2 / (x1 * x3) - x1 / (x2 * x3) - x3 / (x1 * x2))
    r3 = (
        1 / (2 * x3)
        + c123 / (2 * d3) * (x3 / (x1 * x2) - x2 / (x1 * x3) - x1 / (x2 * x3))
        + c134 / (2 * d3) * (x3 / (x1 * x4) - x4 / (x1 * x3) - x1 / (x3 * x4))
    )
    r4 = 1 / (2 * x4) + c134 / (2 * d4) * (x4 / (x1 * x3) - x3 / (x1 * x4) - x1 / (x3 * x4))
    return [r1, r2, r3, r4]


_SPECIALIZED = {"I": _ricci_type1, "IIa": _ricci_type2a, "IIb": _ricci_type2b}


def _values(metric) -> Sequence:
    x = metric.x if isinstance(metric, MetricParams) else metric
    if any(v <= 0 for v in (x if not isinstance(x, np.ndarray) else x.ravel())):
        raise ValueError("metric entries must be positive")
    return x


def ricci_components(dec, triples, metric, specialized: bool = True) -> RicciComponents:
    x = _values(metric)
    fn = _SPECIALIZED.get(dec.type_tag) if specialized else None
    if fn is None:
        return RicciComponents(tuple(ricci_generic(dec.dims, triples, x)))
    return RicciComponents(tuple(fn(dec.dims, triples, x)))


def einstein_residual(dec, triples, metric) -> tuple:
    r = ricci_components(dec, triples, metric).r
    return tuple(r[i] - r[i + 1] for i in range(len(r) - 1))


# --- numerical solving ------------------------------------------------------


@dataclass(frozen=True)
class SolverConfig:
    starts: int = 2000
    seed: int = 0
    box: tuple[float, float] = (0.05, 20.0)
    max_iter: int = 80
    polish_tol: float = 1e-12
    dedup_tol: float = 1e-6
    ke_tol: float = 1e-8


def _float_table(triples) -> dict:
    return {key: float(_lookup(triples, *key)) for key in KEYS}


def _triple_array(triples, s: int = 4) -> np.ndarray:
    t = np.zeros((s, s, s))
    for i in range(s):
        for j in range(s):
            for k in range(s):
                t[i, j, k] = float(_lookup(triples, i + 1, j + 1, k + 1))
    return t


def _ricci_rows(t: np.ndarray, dims: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Vectorized general Ricci formula; each row of ``x`` is one metric."""
    n, s = x.shape
    inv = 1 / x
    flat = t.reshape(s * s, s)
    quad = (inv[:, :, None] * inv[:, None, :]).reshape(n, s * s) @ flat
    # t is fully symmetric, so t[k, i, j] = t[i, j, k]
    mixed = (inv[:, :, None] * x[:, None, :]).reshape(n, s * s) @ flat
    return inv / 2 + quad * x / (4 * dims) - mixed * inv / (2 * dims)


def _residual_batch(t: np.ndarray, dims: np.ndarray, free: np.ndarray) -> np.ndarray:
    """Residuals for metrics (1, free...) given as rows of ``free``."""
    x = np.concatenate([np.ones((free.shape[0], 1), dtype=free.dtype), free], axis=1)
    r = _ricci_rows(t, dims, x)
    return r[:, :-1] - r[:, 1:]


def _newton_batch(t, dims, x0: np.ndarray, max_iter: int) -> np.ndarray:
    """Damped Newton on every row; rows leave the active set once converged or stalled."""
    x = x0.copy()
    n = x.shape[1]
    h = 1e-30
    active = np.arange(x.shape[0])
    for _ in range(max_iter):
        if active.size == 0:
            break
        xa = x[active]
        f = _residual_batch(t, dims, xa)
        norm = np.linalg.norm(f, axis=1)
        keep = np.isfinite(norm) & (norm > 1e-15)
        active, xa, f, norm = active[keep], xa[keep], f[keep], norm[keep]
        if active.size == 0:
            break
        jac = np.empty((xa.shape[0], n, n))
        for m in range(n):
            xc = xa.astype(complex)
            xc[:, m] += 1j * h
            jac[:, :, m] = _residual_batch(t, dims, xc).imag / h
        ok = np.abs(np.linalg.det(jac)) > 1e-200
        active, xa, f, norm, jac = active[ok], xa[ok], f[ok], norm[ok], jac[ok]
        step = np.linalg.solve(jac, -f[..., None])[..., 0]
        lam = np.ones(xa.shape[0])
        trial = xa + step
        for _ in range(40):
            good = np.all(trial > 0, axis=1) & np.all(np.isfinite(trial), axis=1)
            newnorm = np.full(xa.shape[0], np.inf)
            if good.any():
                newnorm[good] = np.linalg.norm(_residual_batch(t, dims, trial[good]), axis=1)
            retry = ~(newnorm <= (1 - 1e-4 * lam) * norm) & (lam > 1e-9)
            if not retry.any():
                break
            lam[retry] /= 2
            trial[retry] = xa[retry] + lam[retry, None] * step[retry]
        moved = np.all(trial > 0, axis=1) & (newnorm < norm)
        x[active[moved]] = trial[moved]
        active = active[moved]
    return x


def _to_mpf(v) -> mpmath.mpf:
    v = Fraction(v)
    return mpmath.mpf(v.numerator) / v.denominator


def _polish(dims, triples, free: Sequence[float]) -> tuple[float, ...] | None:
    """Refine a root in extended precision and round to doubles."""
    with mpmath.workdps(50):
        table = {key: _to_mpf(_lookup(triples, *key)) for key in KEYS}

        def f(*v):
            r = ricci_generic(dims, table, [mpmath.mpf(1)] + list(v))
            return [r[i] - r[i + 1] for i in range(len(r) - 1)]

        try:
            root = mpmath.findroot(f, [mpmath.mpf(v) for v in free], tol=mpmath.mpf(10) ** -45, maxsteps=60)
        except (ValueError, ZeroDivisionError):
            return None
        vals = [root[i] for i in range(len(free))] if len(free) > 1 else [root]
        if any(v <= 0 for v in vals):
            return None
        return tuple(float(v) for v in vals)


def classify_solution(x: Sequence[float], ke_metrics, tol: float) -> tuple[str, int | None]:
    if max(abs(v - x[0]) for v in x) <= tol * x[0]:
        return "normal", None
    for ke in ke_metrics:
        ref = [float(v) / float(ke.normalized[0]) for v in ke.normalized]
        if max(abs(a / x[0] - b) for a, b in zip(x, ref)) <= tol * max(ref):
            return "KE", ke.ordering.id
    return "non-Kaehler", None


def make_solution(dec, triples, x: Sequence[float], ke_metrics=(), ke_tol: float = 1e-8) -> EinsteinSolution:
    table = _float_table(triples)
    r = ricci_generic(dec.dims, table, list(x))
    res = max(abs(r[i] - r[i + 1]) for i in range(len(r) - 1))
    kind, ordering = classify_solution(x, ke_metrics, ke_tol)
    return EinsteinSolution(MetricParams(tuple(x)), float(np.mean(r)), float(res), kind, ordering)


def solve_all(dec, triples, starts: int = 2000, seed: int = 0, config: SolverConfig | None = None,
              ke_metrics=None) -> list[EinsteinSolution]:
    """All real positive solutions found by multi-start Newton, normalized to x1 = 1."""
    cfg = config or SolverConfig(starts=starts, seed=seed)
    if cfg.starts < 1:
        raise ValueError("starts must be positive")
    if ke_metrics is None:
        from .kahler import all_ke_metrics

        ke_metrics = all_ke_metrics(dec)
    dims = dec.dims
    t = _triple_array(triples, len(dims))
    d = np.array(dims, dtype=float)
    rng = np.random.default_rng(cfg.seed)
    lo, hi = np.log(cfg.box[0]), np.log(cfg.box[1])
    x0 = np.exp(rng.uniform(lo, hi, size=(cfg.starts, len(dims) - 1)))
    with np.errstate(all="ignore"):
        x = _newton_batch(t, d, x0, cfg.max_iter)
        f = _residual_batch(t, d, x)
    conv = np.all(np.isfinite(f), axis=1) & (np.max(np.abs(f), axis=1) < 1e-8) & np.all(x > 0, axis=1)
    candidates = x[conv]
    # cluster before the expensive polish
    reps: list[np.ndarray] = []
    for c in candidates[np.lexsort(candidates.T[::-1])]:
        if not any(np.max(np.abs(c - r) / np.abs(r)) < 1e-4 for r in reps):
            reps.append(c)
    found: list[tuple[float, ...]] = []
    for c in reps:
        p = _polish(dims, triples, c)
        if p is None:
            continue
        if not any(max(abs(a - b) / abs(b) for a, b in zip(p, q)) < cfg.dedup_tol for q in found):
            found.append(p)
    found.sort()
    out = []
    for p in found:
        sol = make_solution(dec, triples, (1.0,) + p, ke_metrics, cfg.ke_tol)
        if sol.residual <= cfg.polish_tol:
            out.append(sol)
    return out


# --- closed forms -----------------------------------------------------------


def closed_forms(space: str, l: int = 0, p: int = 0) -> list[tuple[str, MetricParams]]:
    """Explicit non-Kähler Einstein metrics of the classical Type II families.

    ``space`` is one of "B" (SO(2l+1), x1 = x4 = 1), "D(i)" (SO(2l) with
    fiber SO(2l-4), x1 = x4 = 1), "SO(4p)" and "Sp(2p)" (both with x2 = 1).
    """
    sq = math.sqrt
    out: list[tuple[str, tuple[float, ...]]] = []
    if space == "B":
        if l < 3:
            raise ValueError("SO(2l+1) closed forms need l >= 3")
        disc = 4 * l * l - 12 * l + 5
        for sign in (1, -1):
            v = (2 * l - 1 + sign * sq(disc)) / 4
            out.append((f"x2=x3{'+' if sign > 0 else '-'}", (1.0, v, v, 1.0)))
    elif space == "D(i)":
        if l < 3:
            raise ValueError("SO(2l) closed forms need l >= 3")
        disc = l * l - 4 * l + 3
        for sign in (1, -1):
            v = (l - 1 + sign * sq(disc)) / 2
            out.append((f"x2=x3{'+' if sign > 0 else '-'}", (1.0, v, v, 1.0)))
    elif space == "SO(4p)":
        if p < 2:
            raise ValueError("SO(4p) closed forms need p >= 2")
        for sign in (1, -1):
            v = (2 * p - 1 + sign * sq(2 * p - 1)) / (2 * (p - 1))
            out.append((f"x2=x4{'+' if sign > 0 else '-'}", (v, 1.0, v, 1.0)))
        disc = -(p**3) + 7 * p * p - 5 * p + 1
        if 2 <= p <= 6:
            for sign in (1, -1):
                x4 = (7 * p**3 - p * p - 3 * p + 1 + sign * 2 * (2 * p - 1) * sq(2 * p * disc)) / (
                    (p - 1) * (3 * p - 1) ** 2
                )
                x1 = sq(p * x4 / (2 * (p - 1)))
                out.append((f"x1=x3{'+' if sign > 0 else '-'}", (x1, 1.0, x1, x4)))
    elif space == "Sp(2p)":
        if p < 1:
            raise ValueError("Sp(2p) closed forms need p >= 1")
        a = sq((p + 1) ** 3 * (6 * p * p + 5 * p + 1))
        base = 6 * p**3 + 11 * p * p + 6 * p + 1
        den = 2 * (p + 1) ** 2 * (3 * p + 1)
        for sign in (1, -1):
            out.append((f"x1{'+' if sign > 0 else '-'}", ((base + sign * a) / den, 1.0, (base - sign * a) / den, 1.0)))
    else:
        raise ValueError(f"no closed forms for {space!r}")
    return [(label, MetricParams(x)) for label, x in out]


# --- the quartic for SO(2l)/U(p)xU(l-p) --------------------------------------


@dataclass(frozen=True)
class QuarticAnalysis:
    ell: int
    p: int
    coefficients: tuple[Fraction, ...]  # lowest degree first
    window: tuple[Fraction, Fraction]
    zeta: Fraction
    F_at_half: Fraction
    F_at_zeta: Fraction
    F_at_right: Fraction
    Q_value: Fraction
    roots_in_window: tuple[float, ...]
    metrics: tuple[MetricParams, ...]
    residuals: tuple[float, ...]

    def to_dict(self) -> dict:
        fr = lambda v: f"{v.numerator}/{v.denominator}"  # noqa: E731
        return {
            "ell": self.ell,
            "p": self.p,
            "coefficients": [fr(c) for c in self.coefficients],
            "window": [fr(w) for w in self.window],
            "zeta": fr(self.zeta),
            "F_at_half": fr(self.F_at_half),
            "F_at_zeta": fr(self.F_at_zeta),
            "F_at_right": fr(self.F_at_right),
            "Q": fr(self.Q_value),
            "roots_in_window": list(self.roots_in_window),
            "metrics": [list(m.x) for m in self.metrics],
            "residuals": list(self.residuals),
        }


def quartic_coefficients(l: int, p: int) -> tuple[Fraction, ...]:
    c4 = -8 * (l - p - 1) ** 2 * (2 * l - p - 1)
    c3 = 8 * (l - 1) * (4 * l - 3 * p - 1) * (l - p - 1)
    c2 = -2 * (
        12 * l**3 - 11 * p * l * l - 25 * l * l - 2 * p * p * l + 20 * p * l + 14 * l
        + 2 * p**3 - 2 * p * p - 6 * p - 2
    )
    c1 = 4 * (l - 1) * (2 * l * l - 2 * l - p * p + p)
    c0 = (1 - l) * l * (l + p - 1)
    return tuple(Fraction(c) for c in (c0, c1, c2, c3, c4))


def quartic_q(l: int, p: int) -> int:
    return -2 * p**3 + 2 * l * p * p - 2 * p * p - 3 * l * p + 3 * p + l - 1


def quartic_analysis(ell: int, p: int, triples=None, dims=None) -> QuarticAnalysis:
    """Sign analysis and exact root isolation of the quartic in x1 (x2 = 1, x1 = x3)."""
    from . import sturm

    l = ell
    if l < 4 or not 2 <= p <= l - 2:
        raise ValueError("need l >= 4 and 2 <= p <= l - 2")
    if l == 2 * p:
        raise ValueError("l = 2p: the window degenerates; use closed_forms('SO(4p)')")
    coeffs = quartic_coefficients(l, p)
    left = Fraction(1, 2)
    right = Fraction(l + p - 1, 2 * (l - p - 1))
    zeta = (left + right) / 2
    if triples is None or dims is None:
        from .flagdecomp import decompose, painted_diagram
        from .structconst import triples_einstein_route

        dec = decompose(painted_diagram("D", l, (p, l)))
        triples, dims = triples_einstein_route(dec), dec.dims
    lo, hi = min(left, right), max(left, right)
    roots, metrics, residuals = [], [], []
    for a, b in sturm.isolate_roots(coeffs, lo, hi):
        a, b = sturm.refine_root(coeffs, a, b)
        x1 = float((a + b) / 2)
        x4 = (2 * x1 - 1) * (l + p - 1 - 2 * (l - p - 1) * x1) / (p - 1)
        x = (x1, 1.0, x1, x4)
        r = ricci_generic(dims, triples, x)
        roots.append(x1)
        metrics.append(MetricParams(x))
        residuals.append(max(abs(r[i] - r[i + 1]) for i in range(3)))
    return QuarticAnalysis(
        ell=l,
        p=p,
        coefficients=coeffs,
        window=(left, right),
        zeta=zeta,
        F_at_half=sturm.evaluate(coeffs, left),
        F_at_zeta=sturm.evaluate(coeffs, zeta),
        F_at_right=sturm.evaluate(coeffs, right),
        Q_value=Fraction(quartic_q(l, p)),
        roots_in_window=tuple(roots),
        metrics=tuple(metrics),
        residuals=tuple(residuals),
    )

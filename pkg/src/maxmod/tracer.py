"""Numerical computation of the maximum modulus set on a punctured disc.

For each radius of a geometric schedule the global maximizers of
``theta -> |p(r e^{i theta})|^2`` are located by a dense grid scan followed
by Newton refinement (bisection-guarded) on the exact theta-derivative.
Per-radius maximizer sets are linked into curves, counted, fitted for
tangent direction and exponent, and checked for rotational symmetry.

All angular comparisons are made on the theta-dependent part of ``|p|^2``
(method ``osc`` of the expansion): the theta-free diagonal never influences
an argmax, and dropping it keeps co-maximality decisions accurate at the
``1e-12 * spread`` level even where the full value is dominated by 1.
"""

from __future__ import annotations

import math
import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .classify import omega_angles, predict_J
from .errors import (
    CurveBirthDeathError,
    FloorViolationError,
    MonomialAllPlaneError,
    RefinementFailureError,
    TruncatedSeriesError,
)
from .modulus import ModulusExpansion, expand
from .poly import HaymanForm, MonomialVerdict, Polynomial, inner_degree, normalize, reciprocal
from .util import TWO_PI, circ_dist, reduce_angle

EPS = float(np.finfo(float).eps)


@dataclass(frozen=True)
class TraceConfig:
    """Radius schedule, grid resolution and tolerances for a trace run.

    ``tie_tol`` is relative to the per-circle spread (max - min) of the
    squared modulus; ``newton_tol`` is relative to an upper bound for the
    theta-derivative on the circle; ``link_tol`` multiplies the per-step
    drift estimate (floored at one grid step) when linking curves across
    consecutive radii.
    """

    r_min: float = 1e-3
    r_max: float = 0.3
    n_radii: int = 200
    grid: int = 4096
    tie_tol: float = 1e-12
    newton_tol: float = 1e-12
    newton_max_iter: int = 60
    link_tol: float = 3.0
    max_grid: int = 1 << 16

    def __post_init__(self):
        if not (0 < self.r_min < self.r_max):
            raise ValueError("need 0 < r_min < r_max")
        if self.n_radii < 2:
            raise ValueError("need n_radii >= 2")
        if self.grid < 64:
            raise ValueError("need grid >= 64")
        if min(self.tie_tol, self.newton_tol) <= 0 or self.link_tol <= 0:
            raise ValueError("tolerances must be positive")


@dataclass(frozen=True)
class CurveSample:
    r: float
    theta: float
    mod2: float
    curve_id: int


@dataclass(frozen=True)
class TangentFit:
    curve_id: int
    omega_hat: float
    alpha_hat: float | None  # None when the curve sits exactly on its ray
    on_ray: bool
    resid: float
    matched_j: int
    matched_omega: float
    omega_error: float


@dataclass(frozen=True)
class SymmetryPair:
    curve_a: int
    curve_b: int
    rotation_m: int  # rotation by 2 pi m / mu maps curve_a onto curve_b
    max_dev: float


@dataclass(frozen=True)
class TraceEvent:
    kind: str  # "birth" | "death"
    r: float
    curve_id: int
    legitimate: bool | None  # None = not enough data to judge


@dataclass(frozen=True)
class TraceResult:
    samples: tuple[CurveSample, ...]
    n_components: int
    component_ids: tuple[int, ...]
    tangents: tuple[TangentFit, ...]
    symmetry: tuple[SymmetryPair, ...]
    events: tuple[TraceEvent, ...]
    stable_radius: float
    radii: tuple[float, ...]
    omega: tuple[float, ...]
    mu: int
    inverted: bool = False  # samples refer to 1/z in the original plane

    def curve_samples(self, curve_id: int) -> list[CurveSample]:
        return [s for s in self.samples if s.curve_id == curve_id]


@dataclass(frozen=True)
class CircleScan:
    """All refined local maxima of one circle (internal)."""

    r: float
    thetas: np.ndarray
    osc: np.ndarray
    mod2: np.ndarray
    d2: np.ndarray
    comax: np.ndarray
    spread: float
    tie_threshold: float
    grid_used: int


def radius_schedule(cfg: TraceConfig) -> np.ndarray:
    """Geometric schedule from r_max down to r_min, inclusive."""
    return np.geomspace(cfg.r_max, cfg.r_min, cfg.n_radii)


def floor_radius(h: HaymanForm) -> float:
    """Smallest radius at which the angular signal dominates roundoff.

    The theta-dependent signal scales like ``2|a| r^k`` while evaluation
    noise scales with the square of the coefficient mass, hence the floor
    ``2|a| r^k >= 1e6 * eps * (sum |a_l|)^2``.
    """
    mass = float(sum(abs(c) for c in h.tail.coeffs))
    return float((1e6 * EPS * mass**2 / (2.0 * abs(h.a))) ** (1.0 / h.k))


def _grid_local_maxima(x: np.ndarray) -> np.ndarray:
    left = np.roll(x, 1)
    right = np.roll(x, -1)
    return np.flatnonzero((x >= left) & (x >= right) & ((x > left) | (x > right)))


def _refine_maxima(e: ModulusExpansion, r: float, seeds: np.ndarray, step: float, cfg: TraceConfig):
    """Hybrid Newton/bisection on d/dtheta of the cross sum, vectorized.

    Brackets are the grid neighbors of each seed; the derivative must be
    nonnegative at the left edge and nonpositive at the right edge.
    """
    tol = cfg.newton_tol * max(e.d1_bound(r), 1e-300)
    lo = seeds - step
    hi = seeds + step
    for _ in range(3):
        f_lo, _ = e.d1d2(r, lo)
        f_hi, _ = e.d1d2(r, hi)
        bad_lo = f_lo < 0
        bad_hi = f_hi > 0
        if not bad_lo.any() and not bad_hi.any():
            break
        lo = np.where(bad_lo, lo - step, lo)
        hi = np.where(bad_hi, hi + step, hi)
    else:
        bad = np.flatnonzero(bad_lo | bad_hi)
        raise RefinementFailureError(r, float(seeds[bad[0]]))

    x = seeds.astype(float).copy()
    conv = np.zeros(x.shape, dtype=bool)
    for _ in range(cfg.newton_max_iter):
        f, d2 = e.d1d2(r, x)
        lo = np.where(~conv & (f > 0), x, lo)
        hi = np.where(~conv & (f <= 0), x, hi)
        conv |= (np.abs(f) <= tol) | ((hi - lo) <= 16 * EPS)
        if conv.all():
            break
        newt = x - f / np.where(d2 != 0.0, d2, 1.0)
        ok = (d2 < 0.0) & (newt > lo) & (newt < hi) & np.isfinite(newt)
        x = np.where(conv, x, np.where(ok, newt, 0.5 * (lo + hi)))
    else:
        bad = np.flatnonzero(~conv)
        raise RefinementFailureError(r, float(seeds[bad[0]]))
    return x


def _scan_circle(e: ModulusExpansion, r: float, cfg: TraceConfig) -> CircleScan:
    grid = cfg.grid
    while True:
        th_grid = -math.pi + TWO_PI * np.arange(grid) / grid
        x_grid = e.osc(r, th_grid)
        seeds = _grid_local_maxima(x_grid)
        if seeds.size == 0:  # flat circle; cannot happen for >= 2 terms
            raise RefinementFailureError(r, 0.0)
        if grid < cfg.max_grid and seeds.size > 1:
            gaps = np.diff(np.concatenate([seeds, [seeds[0] + grid]]))
            if gaps.min() <= 3:
                grid *= 2
                continue
        break
    step = TWO_PI / grid

    theta = _refine_maxima(e, r, th_grid[seeds], step, cfg)
    osc = e.osc(r, theta)
    _, d2 = e.d1d2(r, theta)

    # guard: a refined point must be a (weak) maximum
    d2_tol = cfg.newton_tol * max(e.d2_bound(r), 1e-300)
    if (d2 > d2_tol).any():
        bad = int(np.argmax(d2))
        raise RefinementFailureError(r, float(theta[bad]))

    order = np.argsort(theta)
    theta = reduce_angle(theta[order])
    osc = osc[order]
    d2 = d2[order]

    # merge refined duplicates closer than 2 pi / (8 grid)
    keep = np.ones(theta.size, dtype=bool)
    merge_dist = TWO_PI / (8.0 * grid)
    for i in range(theta.size):
        j = (i + 1) % theta.size
        if i != j and keep[i] and keep[j] and circ_dist(theta[i], theta[j]) < merge_dist:
            drop = i if osc[i] < osc[j] else j
            keep[drop] = False
    theta, osc, d2 = theta[keep], osc[keep], d2[keep]

    spread = float(x_grid.max() - x_grid.min())
    tie_threshold = cfg.tie_tol * spread
    comax = osc >= osc.max() - tie_threshold
    base = e.base(r)
    return CircleScan(
        r=r,
        thetas=theta,
        osc=osc,
        mod2=base + osc,
        d2=d2,
        comax=comax,
        spread=spread,
        tie_threshold=tie_threshold,
        grid_used=grid,
    )


def circle_argmax(e: ModulusExpansion, r: float, cfg: TraceConfig) -> list[tuple[float, float]]:
    """Newton-refined global maximizers of ``|p|^2`` on the circle |z| = r.

    Returns ``(theta, mod2)`` pairs for every maximizer whose value lies
    within ``tie_tol * (max - min)`` of the refined global maximum.
    """
    scan = _scan_circle(e, r, cfg)
    return [
        (float(t), float(m))
        for t, m, c in zip(scan.thetas, scan.mod2, scan.comax)
        if c
    ]


def brute_force_mset(p: Polynomial, r: float, grid: int, tie_tol: float = 1e-12) -> np.ndarray:
    """Oracle: dense-scan maximizer angles, no refinement.

    Returns the grid angles whose value is within ``tie_tol * spread`` of
    the grid maximum.
    """
    e = expand(p)
    th_grid = -math.pi + TWO_PI * np.arange(grid) / grid
    x = e.osc(r, th_grid)
    spread = x.max() - x.min()
    return th_grid[x >= x.max() - tie_tol * spread]


def ambiguity_radius(h: HaymanForm, tie_tol: float = 1e-12, safety: float = 100.0) -> float:
    """Radius below which excluded candidates fall inside the tie tolerance.

    The deficit of a candidate excluded by the term ``b z^n`` scales like
    ``gap * r^n`` while the tie threshold scales like ``tie_tol * 4|a| r^k``;
    counting components below the crossover would see phantom curves.
    Returns 0.0 when no candidate is ever excluded.
    """
    pj = predict_J(h)
    thresh_coeff = safety * tie_tol * 4.0 * abs(h.a)
    r_amb = 0.0
    alive: set[int] = set(range(h.k))
    for tf in pj.t_history:
        t = dict(tf.t_values)
        excluded = alive - set(tf.retained)
        if excluded:
            t_max = max(t[j] for j in tf.retained)
            for j in excluded:
                gap = t_max - t[j]
                if gap > 0:
                    r_amb = max(r_amb, (thresh_coeff / gap) ** (1.0 / (tf.n - h.k)))
        alive = set(tf.retained)
    return r_amb


def _n_threads() -> int:
    raw = os.environ.get("MAXMOD_THREADS", "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _fit_tangent(rs: np.ndarray, thetas: np.ndarray):
    """Fit theta(r) ~ omega + C r^alpha over the smallest decade of radii.

    Returns (omega_hat, alpha_hat | None, on_ray, resid).  Candidate omegas
    are scored by the theta-space SSE of the log-log linear fit of
    log|theta - omega| against log r (scoring in log space is degenerate:
    omega far from the data makes the log nearly constant).  Direct
    power-law fits with polynomial correction factors refine the answer;
    the lowest theta-space SSE wins and alpha is re-read from the log-log
    slope at the winning omega.
    """
    from scipy.optimize import curve_fit, minimize_scalar

    order = np.argsort(rs)
    rs = np.asarray(rs, dtype=float)[order]
    th = np.unwrap(np.asarray(thetas, dtype=float)[order])
    window = rs <= 10.0 * rs[0]
    if window.sum() < 8:
        window = np.zeros_like(window)
        window[: min(8, rs.size)] = True
    r_w = rs[window]
    t_w = th[window]

    span = float(t_w.max() - t_w.min())
    if span < 1e-12:
        return float(reduce_angle(np.mean(t_w))), None, True, span

    log_r = np.log(r_w)
    t_end = t_w[0]  # smallest radius
    t_start = t_w[-1]
    travel = t_end - t_start  # signed motion as r decreases

    def loglog_alpha(omega: float) -> float | None:
        ee = t_w - omega
        if not (np.all(ee > 0) or np.all(ee < 0)):
            return None
        coef = np.polyfit(log_r, np.log(np.abs(ee)), 1)
        return float(coef[0])

    def sse_theta(omega: float) -> float:
        ee = t_w - omega
        if not (np.all(ee > 0) or np.all(ee < 0)):
            return 1e300
        y = np.log(np.abs(ee))
        coef = np.polyfit(log_r, y, 1)
        pred = omega + math.copysign(1.0, ee[0]) * np.exp(np.polyval(coef, log_r))
        return float(np.sum((t_w - pred) ** 2))

    # seed: best pure power law, omega searched between the last sample and
    # the extrapolated limit of the motion
    seed = t_end + 1e-3 * (travel if travel else span)
    best_seed_sse = sse_theta(seed)
    if travel != 0.0:
        res = minimize_scalar(
            sse_theta,
            bounds=tuple(sorted((t_end + 1e-9 * travel, t_end + 3.0 * travel))),
            method="bounded",
            options={"xatol": 1e-15},
        )
        if res.fun < best_seed_sse:
            seed, best_seed_sse = float(res.x), float(res.fun)

    omega0 = seed
    alpha0 = loglog_alpha(omega0) or 1.0
    al0 = max(0.1, min(alpha0, 12.0))
    c0 = (t_end - omega0) / r_w[0] ** al0

    def model3(r, w, c, al):
        return w + c * r**al

    def model4(r, w, c, al, d):
        return w + c * r**al * (1.0 + d * r)

    def model5(r, w, c, al, d, e2):
        return w + c * r**al * (1.0 + d * r + e2 * r * r)

    def model6(r, w, c, al, d, e2, f3):
        return w + c * r**al * (1.0 + d * r + e2 * r * r + f3 * r * r * r)

    # each candidate scored by its own model's prediction error; the data is
    # essentially noise-free, so richer models win until machine precision.
    # alpha is bounded away from 0 where r^alpha degenerates to an affine
    # function of log r and the fit loses all sensitivity to omega.
    scored: list[tuple[float, float, float]] = [(best_seed_sse, omega0, alpha0)]
    big = np.inf
    for model, p0, n_extra in (
        (model3, (omega0, c0, al0), 0),
        (model4, (omega0, c0, al0, 0.0), 1),
        (model5, (omega0, c0, al0, 0.0, 0.0), 2),
        (model6, (omega0, c0, al0, 0.0, 0.0, 0.0), 3),
    ):
        lo_b = [-big, -big, 0.05] + [-big] * n_extra
        hi_b = [big, big, 14.0] + [big] * n_extra
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                popt, _ = curve_fit(
                    model, r_w, t_w, p0=p0, bounds=(lo_b, hi_b),
                    maxfev=20000, ftol=1e-15, xtol=1e-15, gtol=1e-15,
                )
        except Exception:
            continue
        sse = float(np.sum((model(r_w, *popt) - t_w) ** 2))
        scored.append((sse, float(popt[0]), float(popt[2])))

    resid, omega_hat, alpha_model = min(scored)
    alpha_hat = loglog_alpha(omega_hat)
    if alpha_hat is None:
        alpha_hat = alpha_model
    return float(reduce_angle(omega_hat)), float(alpha_hat), False, resid


def trace(p: Polynomial, cfg: TraceConfig = TraceConfig(), on_anomaly: str = "warn") -> TraceResult:
    """Trace the maximum modulus set of ``p`` over the radius schedule.

    Runs :func:`circle_argmax` at every radius (largest first), links
    co-maximal points into curves by nearest angle, and reports component
    count, tangent fits, rotational symmetry and birth/death events.
    ``on_anomaly="raise"`` escalates mid-schedule curve births and
    non-monotone deaths to :class:`CurveBirthDeathError`.
    """
    if on_anomaly not in ("warn", "raise"):
        raise ValueError("on_anomaly must be 'warn' or 'raise'")
    if p.truncated:
        raise TruncatedSeriesError("tracing needs the full polynomial, not a truncation")
    h = normalize(p)
    if isinstance(h, MonomialVerdict):
        raise MonomialAllPlaneError("cannot trace a monomial: its maximum set is the plane")
    required = floor_radius(h)
    if cfg.r_min < required:
        raise FloorViolationError(cfg.r_min, required)

    e = expand(p)
    omega = omega_angles(h)
    radii = radius_schedule(cfg)
    n_threads = _n_threads()
    if n_threads > 1:
        with ThreadPoolExecutor(max_workers=n_threads) as pool:
            scans = list(pool.map(lambda r: _scan_circle(e, float(r), cfg), radii))
    else:
        scans = [_scan_circle(e, float(r), cfg) for r in radii]

    # -- link maximizer trajectories across radii (descending) ----------
    trajs: dict[int, dict] = {}
    curves: dict[int, dict] = {}
    raw_events: list[dict] = []
    next_traj = 0
    next_curve = 0
    for idx, scan in enumerate(scans):
        r = float(radii[idx])
        step = TWO_PI / scan.grid_used
        m_count = scan.thetas.size
        # cap: distinct same-radius maximizers must never share a trajectory
        if m_count > 1:
            ths = np.sort(scan.thetas)
            gaps = np.diff(np.concatenate([ths, [ths[0] + TWO_PI]]))
            gap_cap = 0.45 * float(gaps.min())
        else:
            gap_cap = math.pi
        alive = [t for t, tr in trajs.items() if tr["alive"]]
        pairs = sorted(
            (circ_dist(trajs[t]["theta"], float(scan.thetas[m])), t, m)
            for t in alive
            for m in range(m_count)
        )
        t_to_m: dict[int, int] = {}
        m_to_t: dict[int, int] = {}
        for d, t, m in pairs:
            if t in t_to_m or m in m_to_t:
                continue
            # a maximizer approaches its limiting ray monotonically, so one
            # step moves at most the current deviation from the nearest
            # candidate angle; the drift term covers the settled regime
            dev = float(np.min(circ_dist(trajs[t]["theta"], omega)))
            thr = min(
                gap_cap,
                max(cfg.link_tol * max(abs(trajs[t]["drift"]), step), 1.2 * dev),
            )
            if d < thr:
                t_to_m[t] = m
                m_to_t[m] = t
        for t in alive:
            if t not in t_to_m:
                tr = trajs[t]
                tr["alive"] = False
                if tr["curve"] is not None:
                    raw_events.append(
                        {"kind": "death", "r": r, "curve": tr["curve"], "idx": idx, "traj": t}
                    )
                    tr["curve"] = None
        x_top = float(scan.osc.max())
        for m in range(m_count):
            theta_m = float(scan.thetas[m])
            if m in m_to_t:
                t = m_to_t[m]
                tr = trajs[t]
                tr["drift"] = reduce_angle(theta_m - tr["theta"])
                tr["theta"] = theta_m
            else:
                t = next_traj
                next_traj += 1
                tr = {"theta": theta_m, "drift": 0.0, "alive": True, "curve": None, "deficits": []}
                trajs[t] = tr
            if scan.comax[m]:
                if tr["curve"] is None:
                    cid = next_curve
                    next_curve += 1
                    curves[cid] = {"samples": [], "first_idx": idx, "last_idx": idx}
                    tr["curve"] = cid
                    if idx > 0:
                        raw_events.append({"kind": "birth", "r": r, "curve": cid, "idx": idx, "traj": t})
                cid = tr["curve"]
                curves[cid]["samples"].append(
                    CurveSample(r=r, theta=theta_m, mod2=float(scan.mod2[m]), curve_id=cid)
                )
                curves[cid]["last_idx"] = idx
            else:
                if tr["curve"] is not None:
                    raw_events.append(
                        {"kind": "death", "r": r, "curve": tr["curve"], "idx": idx, "traj": t}
                    )
                    tr["curve"] = None
                tr["deficits"].append((idx, x_top - float(scan.osc[m])))

    # -- event legitimacy ------------------------------------------------
    events = []
    for ev in raw_events:
        legitimate: bool | None
        if ev["kind"] == "birth":
            legitimate = False
        else:
            defs = [d for i, d in trajs[ev["traj"]]["deficits"] if ev["idx"] <= i < ev["idx"] + 6]
            if len(defs) < 3:
                legitimate = None
            else:
                arr = np.asarray(defs)
                legitimate = bool(np.all(np.diff(arr) > -0.1 * float(np.max(np.abs(arr)))))
        events.append(TraceEvent(kind=ev["kind"], r=ev["r"], curve_id=ev["curve"], legitimate=legitimate))
        if on_anomaly == "raise" and legitimate is False:
            raise CurveBirthDeathError(ev["kind"], ev["r"], ev["curve"])

    last_idx = len(scans) - 1
    component_ids = tuple(sorted(c for c, cu in curves.items() if cu["last_idx"] == last_idx))
    n_components = len(component_ids)

    counts = np.array([int(s.comax.sum()) for s in scans])
    i0 = last_idx
    while i0 > 0 and counts[i0 - 1] == n_components:
        i0 -= 1
    stable_radius = float(radii[i0])

    mu = inner_degree(h)

    # -- tangent fits ------------------------------------------------------
    tangents = []
    for cid in sorted(curves):
        samples = curves[cid]["samples"]
        if len(samples) < 8:
            continue
        rs = np.array([s.r for s in samples])
        ths = np.array([s.theta for s in samples])
        omega_hat, alpha_hat, on_ray, resid = _fit_tangent(rs, ths)
        devs = circ_dist(omega_hat, omega)
        j = int(np.argmin(devs))
        tangents.append(
            TangentFit(
                curve_id=cid,
                omega_hat=omega_hat,
                alpha_hat=alpha_hat,
                on_ray=on_ray,
                resid=resid,
                matched_j=j,
                matched_omega=float(omega[j]),
                omega_error=float(devs[j]),
            )
        )

    # -- rotational symmetry pairing --------------------------------------
    symmetry = []
    if mu > 1:
        curve_thetas = {
            cid: [(s.r, s.theta) for s in curves[cid]["samples"]] for cid in component_ids
        }
        for m in range(1, mu):
            rot = TWO_PI * m / mu
            for ca in component_ids:
                best = None
                for cb in component_ids:
                    pa = curve_thetas[ca]
                    pb = curve_thetas[cb]
                    n = min(len(pa), len(pb))
                    devs = [
                        circ_dist(ta + rot, tb)
                        for (ra, ta), (rb, tb) in zip(pa[-n:], pb[-n:])
                    ]
                    dev = max(devs)
                    if best is None or dev < best[1]:
                        best = (cb, dev)
                symmetry.append(
                    SymmetryPair(curve_a=ca, curve_b=best[0], rotation_m=m, max_dev=float(best[1]))
                )

    all_samples = []
    for cid in sorted(curves):
        all_samples.extend(curves[cid]["samples"])

    return TraceResult(
        samples=tuple(all_samples),
        n_components=n_components,
        component_ids=component_ids,
        tangents=tuple(tangents),
        symmetry=tuple(symmetry),
        events=tuple(events),
        stable_radius=stable_radius,
        radii=tuple(float(r) for r in radii),
        omega=tuple(float(w) for w in omega),
        mu=mu,
        inverted=False,
    )


def trace_at_infinity(p: Polynomial, cfg: TraceConfig = TraceConfig(), on_anomaly: str = "warn") -> TraceResult:
    """Trace the structure of the maximum modulus set of ``p`` near infinity.

    Equals the near-origin trace of the normalized reciprocal polynomial
    ``z^n p(1/z)``; sample points correspond to ``1/z`` in the original
    plane (``inverted`` flag set).
    """
    q = normalize(reciprocal(p))
    if isinstance(q, MonomialVerdict):
        raise MonomialAllPlaneError("reciprocal polynomial is a monomial")
    result = trace(q.tail, cfg, on_anomaly=on_anomaly)
    return replace(result, inverted=True)


def write_csv(result: TraceResult, path: str) -> None:
    """One row per sample: ``r,theta,re,im,mod,curve_id`` (17 significant
    digits), sorted by (curve_id, descending r)."""
    rows = sorted(result.samples, key=lambda s: (s.curve_id, -s.r))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("r,theta,re,im,mod,curve_id\n")
        for s in rows:
            re_ = s.r * math.cos(s.theta)
            im = s.r * math.sin(s.theta)
            mod = math.sqrt(max(s.mod2, 0.0))
            fh.write(
                f"{s.r:.17g},{s.theta:.17g},{re_:.17g},{im:.17g},{mod:.17g},{s.curve_id}\n"
            )

"""Candidate direction functions on the sphere and their order-rho criteria.

A direction function h of order rho is one whose radial extension
H(x) = h(x/|x|) |x|^rho (set to 0 at the origin) is subharmonic.  Four
numerical criteria are implemented:

* sine-weighted interpolation on the circle (``check_trig_convexity``),
* domination by kernel averages at small radii (``check_mean_inequality``),
* positivity of the shifted circle Laplacian (``check_operator_positivity``),
* the sub-mean-value property of the radial extension
  (``check_radial_subharmonicity``).

The criteria are equivalent in exact arithmetic; running several of them on
the same function cross-validates the discretizations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import DomainError
from .normalization import ball_volume
from .sphere import SphereGrid, build_grid, circle_point, kernel_from_cos, sphere_mean, sphere_point

__all__ = [
    "DirectionFunction",
    "SubsphericityReport",
    "constant_function",
    "example_cap_cosine",
    "example_kernel_slice",
    "example_support_function",
    "cosine_multiple",
    "table_function",
    "positive_part",
    "maximum",
    "scale",
    "add",
    "eval_radial_extension",
    "radial_extension_field",
    "default_trig_triples",
    "default_probes",
    "check_trig_convexity",
    "check_operator_positivity",
    "check_mean_inequality",
    "check_radial_subharmonicity",
    "run_all_checks",
    "certified_examples",
    "DEFAULT_MEAN_RADII",
]

TWO_PI = 2.0 * math.pi

DEFAULT_MEAN_RADII = (0.3, 0.5, 0.8)


@dataclass(frozen=True, eq=False)
class DirectionFunction:
    """A function on the unit sphere with a declared homogeneity order.

    ``evaluator`` must be pure and accept arrays of shape (..., m), returning
    shape (...).  ``kink_angles`` (circle case only) locates the derivative
    jumps so that finite-difference checks can exclude stencils that straddle
    them; a positive jump there is the discrete shadow of a point mass, not a
    failure.
    """

    m: int
    rho: float
    evaluator: Callable[[np.ndarray], np.ndarray]
    smoothness: str = "smooth"  # smooth | kinked | general
    kink_angles: tuple = ()
    label: str = "h"
    params: dict = field(default_factory=dict)

    def __call__(self, points):
        pts = np.asarray(points, dtype=float)
        if pts.shape[-1] != self.m:
            raise DomainError(f"points have dimension {pts.shape[-1]}, expected {self.m}")
        return self.evaluator(pts)

    def at_angles(self, thetas):
        """Evaluate on the circle at the given polar angles (m = 2 only)."""
        if self.m != 2:
            raise DomainError("angle evaluation is defined on the circle only")
        return self(circle_point(thetas))

    def describe(self) -> dict:
        return {
            "label": self.label,
            "m": self.m,
            "rho": self.rho,
            "smoothness": self.smoothness,
            "params": dict(self.params),
        }


@dataclass
class SubsphericityReport:
    """Worst residual of one criterion; residuals are signed so that the
    criterion reads ``residual >= 0`` and ``passed`` means >= -tolerance."""

    criterion: str
    worst_residual: float
    worst_location: object
    tolerance: float
    passed: bool
    details: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# constructors


def constant_function(m: int, value: float, label: str | None = None) -> DirectionFunction:
    """The constant function; order 0 by convention."""
    v = float(value)

    def ev(pts):
        return np.full(pts.shape[:-1], v)

    return DirectionFunction(
        m=m,
        rho=0.0,
        evaluator=ev,
        smoothness="smooth",
        label=label or f"const[{v:g}]",
        params={"builtin": "constant", "value": v},
    )


def example_cap_cosine(center, rho: float) -> DirectionFunction:
    """cos(rho * angle-to-center) inside the cap of half-width pi/(2 rho), 0 outside.

    Valid at its own order on the circle for every rho > 0; in higher
    dimensions only for rho <= 1 (for rho > 1 the zonal operator turns
    negative near the axis, so certify such caps on the circle only).
    """
    if rho <= 0:
        raise DomainError(f"cap cosine needs rho > 0, got {rho}")
    s0 = sphere_point(center)
    m = s0.size
    cap = min(math.pi, math.pi / (2.0 * rho))

    def ev(pts):
        ang = np.arccos(np.clip(pts @ s0, -1.0, 1.0))
        return np.where(ang < cap, np.cos(rho * ang), 0.0)

    kinks = ()
    if m == 2:
        theta0 = math.atan2(s0[1], s0[0])
        kinks = tuple(sorted({(theta0 - cap) % TWO_PI, (theta0 + cap) % TWO_PI}))
    return DirectionFunction(
        m=m,
        rho=float(rho),
        evaluator=ev,
        smoothness="kinked",
        kink_angles=kinks,
        label=f"cap_cosine[rho={rho:g}]",
        params={"builtin": "cap_cosine", "rho": float(rho), "center": s0.tolist()},
    )


def example_kernel_slice(rho: float, r: float, axis) -> DirectionFunction:
    """The averaging kernel with one argument frozen: x -> K_{rho,r}(x, axis).

    Positive with support in the cap of half-width arcsin(r).  As an
    order-rho candidate it is genuine only for r = 1 with rho >= m: for
    r < 1 the kernel vanishes like the square root of the distance to its
    support boundary, which every interpolation criterion rejects, and for
    r = 1 the slice equals (2 cos phi)^(rho+m)/(rho+m), whose circle operator
    is positive exactly when rho(rho-1) >= m.  ``certified_examples`` only
    includes the genuine instances; other parameters remain constructible
    for kernel experiments.
    """
    y = sphere_point(axis)
    m = y.size
    if not 0.0 < r <= 1.0:
        raise DomainError(f"radius r must lie in (0, 1], got {r}")

    def ev(pts):
        return kernel_from_cos(rho, m, r, pts @ y)

    boundary = math.asin(r) if r < 1.0 else math.pi / 2.0
    kinks = ()
    if m == 2:
        theta0 = math.atan2(y[1], y[0])
        kinks = tuple(sorted({(theta0 - boundary) % TWO_PI, (theta0 + boundary) % TWO_PI}))
    return DirectionFunction(
        m=m,
        rho=float(rho),
        evaluator=ev,
        smoothness="kinked",
        kink_angles=kinks,
        label=f"kernel_slice[rho={rho:g},r={r:g}]",
        params={"builtin": "kernel_slice", "rho": float(rho), "r": float(r), "axis": y.tolist()},
    )


def _support_kink_angles(points: np.ndarray) -> tuple:
    """Angles on the circle where the maximizer of s -> max_k (s . p_k) switches."""
    values_at = lambda th: circle_point(th) @ points.T  # noqa: E731
    kinks = set()
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            d = points[i] - points[j]
            if np.linalg.norm(d) < 1e-14:
                continue
            base = math.atan2(d[0], -d[1])  # solves d . (cos t, sin t) = 0
            for theta in (base % TWO_PI, (base + math.pi) % TWO_PI):
                vals = values_at(np.array([theta]))[0]
                top = vals.max()
                if vals[i] >= top - 1e-12 * max(1.0, abs(top)) and vals[j] >= top - 1e-12 * max(
                    1.0, abs(top)
                ):
                    kinks.add(round(theta, 12) % TWO_PI)
    return tuple(sorted(kinks))


def example_support_function(points) -> DirectionFunction:
    """Restriction to the sphere of the support function of a finite point set.

    Order 1 (the radial extension is a maximum of linear functions, hence
    convex); positive whenever the set contains the origin.
    """
    P = np.asarray(points, dtype=float)
    if P.ndim != 2 or len(P) == 0:
        raise DomainError("support function needs a nonempty set of m-vectors")
    m = P.shape[1]

    def ev(pts):
        return np.max(pts @ P.T, axis=-1)

    kinks = _support_kink_angles(P) if m == 2 else ()
    return DirectionFunction(
        m=m,
        rho=1.0,
        evaluator=ev,
        smoothness="kinked" if len(P) > 1 else "smooth",
        kink_angles=kinks,
        label=f"support[{len(P)} pts]",
        params={"builtin": "support", "points": P.tolist()},
    )


def cosine_multiple(k: int, m: int = 2) -> DirectionFunction:
    """cos(k theta) on the circle; order-k direction function (harmonic extension)."""
    if m != 2:
        raise DomainError("cosine_multiple is a circle function")
    kk = int(k)

    def ev(pts):
        theta = np.arctan2(pts[..., 1], pts[..., 0])
        return np.cos(kk * theta)

    return DirectionFunction(
        m=2,
        rho=float(kk),
        evaluator=ev,
        smoothness="smooth",
        label=f"cos[{kk}theta]",
        params={"builtin": "cosine_multiple", "k": kk},
    )


def table_function(thetas, values, rho: float, label: str | None = None) -> DirectionFunction:
    """Circle function given by samples on a theta-grid, linearly interpolated."""
    xs = np.asarray(thetas, dtype=float)
    ys = np.asarray(values, dtype=float)
    if xs.ndim != 1 or xs.shape != ys.shape or xs.size < 2:
        raise DomainError("table function needs matching 1-d theta/value arrays")
    if np.any(np.diff(xs) <= 0) or xs[0] < 0 or xs[-1] >= TWO_PI:
        raise DomainError("table thetas must be strictly increasing within [0, 2pi)")
    xs_ext = np.concatenate([xs, [xs[0] + TWO_PI]])
    ys_ext = np.concatenate([ys, [ys[0]]])

    def ev(pts):
        theta = np.arctan2(pts[..., 1], pts[..., 0]) % TWO_PI
        return np.interp(theta, xs_ext, ys_ext)

    return DirectionFunction(
        m=2,
        rho=float(rho),
        evaluator=ev,
        smoothness="general",
        label=label or f"table[{xs.size}]",
        params={"builtin": "table", "size": int(xs.size), "rho": float(rho)},
    )


# ---------------------------------------------------------------------------
# pointwise combinators


def _circle_sign_changes(angle_fn: Callable, n_scan: int = 4096, iters: int = 60) -> tuple:
    """Angles where a circle function changes sign (bisection-refined)."""
    th = np.linspace(0.0, TWO_PI, n_scan, endpoint=False)
    vals = np.asarray(angle_fn(th), dtype=float)
    step = TWO_PI / n_scan
    out = []
    for i in range(n_scan):
        fa = vals[i]
        fb = vals[(i + 1) % n_scan]
        if fa * fb < 0.0:
            a, b = th[i], th[i] + step
            for _ in range(iters):
                mid = 0.5 * (a + b)
                fm = float(angle_fn(np.array([mid]))[0])
                if fa * fm <= 0.0:
                    b = mid
                else:
                    a, fa = mid, fm
            out.append((0.5 * (a + b)) % TWO_PI)
    return tuple(sorted(out))


def positive_part(h: DirectionFunction) -> DirectionFunction:
    """max(0, h); keeps the declared order, adds kinks at sign changes."""
    kinks = set(h.kink_angles)
    if h.m == 2:
        kinks.update(_circle_sign_changes(h.at_angles))

    def ev(pts):
        return np.maximum(h(pts), 0.0)

    return DirectionFunction(
        m=h.m,
        rho=h.rho,
        evaluator=ev,
        smoothness="kinked",
        kink_angles=tuple(sorted(kinks)),
        label=f"({h.label})+",
        params={"combinator": "positive_part", "of": h.label},
    )


def maximum(h1: DirectionFunction, h2: DirectionFunction) -> DirectionFunction:
    """Pointwise max; the declared order is the larger of the two."""
    if h1.m != h2.m:
        raise DomainError(f"dimension mismatch: {h1.m} vs {h2.m}")
    kinks = set(h1.kink_angles) | set(h2.kink_angles)
    if h1.m == 2:
        kinks.update(_circle_sign_changes(lambda th: h1.at_angles(th) - h2.at_angles(th)))

    def ev(pts):
        return np.maximum(h1(pts), h2(pts))

    return DirectionFunction(
        m=h1.m,
        rho=max(h1.rho, h2.rho),
        evaluator=ev,
        smoothness="kinked",
        kink_angles=tuple(sorted(kinks)),
        label=f"max({h1.label},{h2.label})",
        params={"combinator": "max", "of": [h1.label, h2.label]},
    )


def scale(factor: float, h: DirectionFunction) -> DirectionFunction:
    """Multiply by a nonnegative constant; order unchanged."""
    lam = float(factor)
    if lam < 0:
        raise DomainError(f"scale factor must be >= 0, got {lam}")

    def ev(pts):
        return lam * h(pts)

    return DirectionFunction(
        m=h.m,
        rho=h.rho,
        evaluator=ev,
        smoothness=h.smoothness,
        kink_angles=h.kink_angles,
        label=f"{lam:g}*{h.label}",
        params={"combinator": "scale", "factor": lam, "of": h.label},
    )


def add(h1: DirectionFunction, h2: DirectionFunction) -> DirectionFunction:
    """Pointwise sum; the declared order is the larger of the two."""
    if h1.m != h2.m:
        raise DomainError(f"dimension mismatch: {h1.m} vs {h2.m}")

    def ev(pts):
        return h1(pts) + h2(pts)

    return DirectionFunction(
        m=h1.m,
        rho=max(h1.rho, h2.rho),
        evaluator=ev,
        smoothness="kinked" if (h1.kink_angles or h2.kink_angles) else h1.smoothness,
        kink_angles=tuple(sorted(set(h1.kink_angles) | set(h2.kink_angles))),
        label=f"({h1.label}+{h2.label})",
        params={"combinator": "add", "of": [h1.label, h2.label]},
    )


# ---------------------------------------------------------------------------
# radial extension


def radial_extension_field(h: DirectionFunction, rho: float | None = None) -> Callable:
    """The field x -> h(x/|x|) |x|^rho, zero at the origin, as a vectorized callable."""
    p = h.rho if rho is None else float(rho)

    def field_fn(points):
        pts = np.asarray(points, dtype=float)
        single = pts.ndim == 1
        P = pts[None, :] if single else pts
        r = np.linalg.norm(P, axis=-1)
        out = np.zeros(r.shape)
        pos = r > 0
        if np.any(pos):
            units = P[pos] / r[pos, None]
            out[pos] = h(units) * r[pos] ** p
        return out[0] if single else out

    return field_fn


def eval_radial_extension(h: DirectionFunction, x, rho: float | None = None):
    """Value of the radial extension at one point (or an array of points)."""
    result = radial_extension_field(h, rho)(x)
    return float(result) if np.ndim(result) == 0 else result


# ---------------------------------------------------------------------------
# criteria


def default_trig_triples(
    rho: float,
    n_centers: int = 120,
    widths: Sequence[float] = (0.9, 0.6, 0.3, 0.12),
    fractions: Sequence[float] = (0.25, 0.5, 0.75),
) -> np.ndarray:
    """Deterministic (theta1, theta, theta2) triples covering all window scales."""
    if rho <= 0:
        raise DomainError(f"interpolation windows need rho > 0, got {rho}")
    period = math.pi / rho
    centers = TWO_PI * np.arange(n_centers) / n_centers
    rows = []
    for w in widths:
        window = w * period
        for f in fractions:
            t1 = centers - f * window
            t2 = centers + (1.0 - f) * window
            rows.append(np.stack([t1, centers, t2], axis=1))
    return np.concatenate(rows, axis=0)


def check_trig_convexity(
    h: DirectionFunction,
    rho: float,
    triples,
    tolerance: float | None = None,
) -> SubsphericityReport:
    """Sine-weighted interpolation residuals on the circle.

    For each (theta1, theta, theta2) the residual is the interpolated bound
    minus h(theta); order-rho functions keep every residual nonnegative.
    """
    if h.m != 2:
        raise DomainError("the interpolation criterion is defined on the circle only")
    if rho <= 0:
        raise DomainError(f"interpolation criterion needs rho > 0, got {rho}")
    t = np.asarray(triples, dtype=float)
    if t.ndim != 2 or t.shape[1] != 3 or len(t) == 0:
        raise DomainError("triples must be a nonempty (K, 3) array")
    t1, tm, t2 = t[:, 0], t[:, 1], t[:, 2]
    if np.any(t1 >= tm) or np.any(tm >= t2):
        raise DomainError("each triple must satisfy theta1 < theta < theta2")
    window = t2 - t1
    if np.any(window >= math.pi / rho):
        raise DomainError("window theta2 - theta1 must be shorter than pi/rho")
    h1 = h.at_angles(t1)
    hm = h.at_angles(tm)
    h2 = h.at_angles(t2)
    denom = np.sin(rho * window)
    rhs = (np.sin(rho * (t2 - tm)) * h1 + np.sin(rho * (tm - t1)) * h2) / denom
    residuals = rhs - hm
    scale_ = max(1.0, float(np.abs([h1, hm, h2]).max()))
    tol = 1e-9 * scale_ if tolerance is None else float(tolerance)
    worst = int(np.argmin(residuals))
    passed = bool(residuals[worst] >= -tol)
    return SubsphericityReport(
        criterion="trig_convexity",
        worst_residual=float(residuals[worst]),
        worst_location=tuple(t[worst]),
        tolerance=tol,
        passed=passed,
        details={"triples": int(len(t)), "failures": int((residuals < -tol).sum())},
    )


def check_operator_positivity(
    h: DirectionFunction,
    rho: float,
    delta: float,
    thetas=None,
    tolerance: float | None = None,
    trunc_coeff: float = 10.0,
    floor_coeff: float = 1e6,
    exclude_angles=None,
) -> SubsphericityReport:
    """Second differences plus rho(rho+m-2) h on a uniform circle grid.

    Stencils straddling a declared kink are excluded from the pass/fail
    minimum: a derivative jump upward there shows as a large positive spike,
    which is the discrete form of a point mass and is reported separately.
    """
    if h.m != 2:
        raise DomainError("the operator criterion is discretized on the circle only")
    if delta <= 0:
        raise DomainError(f"step delta must be positive, got {delta}")
    if rho < 0:
        raise DomainError(f"order rho must be >= 0, got {rho}")
    if thetas is None:
        n = max(8, int(round(TWO_PI / delta)))
        delta_eff = TWO_PI / n
        grid_theta = delta_eff * np.arange(n)
    else:
        grid_theta = np.asarray(thetas, dtype=float)
        n = grid_theta.size
        delta_eff = float(delta)
    vals = h.at_angles(grid_theta)
    lap = (np.roll(vals, -1) - 2.0 * vals + np.roll(vals, 1)) / delta_eff**2
    residuals = lap + rho * (rho + h.m - 2) * vals

    kinks = h.kink_angles if exclude_angles is None else tuple(exclude_angles)
    excluded = np.zeros(n, dtype=bool)
    for kink in kinks:
        dist = np.abs((grid_theta - kink + math.pi) % TWO_PI - math.pi)
        excluded |= dist <= delta_eff

    scale_ = max(1.0, float(np.abs(vals).max()))
    eps = float(np.finfo(float).eps)
    tol = (
        trunc_coeff * delta_eff**2 * scale_ + floor_coeff * eps * scale_
        if tolerance is None
        else float(tolerance)
    )
    kept = ~excluded
    if not kept.any():
        raise DomainError("kink exclusions removed every stencil; refine delta")
    kept_idx = np.flatnonzero(kept)
    worst_local = int(np.argmin(residuals[kept]))
    worst_idx = int(kept_idx[worst_local])
    details = {
        "nodes": int(n),
        "delta": delta_eff,
        "excluded": int(excluded.sum()),
        "failures": int((residuals[kept] < -tol).sum()),
    }
    if excluded.any():
        details["spike_max"] = float(residuals[excluded].max())
        details["spike_min"] = float(residuals[excluded].min())
    return SubsphericityReport(
        criterion="operator_positivity",
        worst_residual=float(residuals[worst_idx]),
        worst_location=float(grid_theta[worst_idx]),
        tolerance=tol,
        passed=bool(residuals[worst_idx] >= -tol),
        details=details,
    )


def check_mean_inequality(
    h: DirectionFunction,
    rho: float,
    grid: SphereGrid,
    radii: Sequence[float],
    tolerance: float | None = None,
    chunk_size: int = 256,
    max_test_nodes: int = 2048,
) -> SubsphericityReport:
    """Kernel-average domination: h(x) against its kernel mean at each node.

    The underlying criterion asks for *some* radius per point, so a node
    passes when any tested radius produces a nonnegative residual; the
    reported residual per node is the maximum over the radius list.  The
    integral always uses the full grid; for grids larger than
    ``max_test_nodes`` the residual is evaluated on a stride subsample of
    the nodes to keep the pairwise kernel cost bounded.

    The default tolerance is calibrated to the discretization error of the
    default grids: the kernel has a square-root kink at its support
    boundary, which the circle trapezoid rule at 2048 nodes resolves to
    about 1e-5 while the product rules in higher dimension stay in the
    1e-4 band; genuine failures sit at 1e-2 and above.
    """
    if rho <= 0:
        raise DomainError(f"kernel-average criterion needs rho > 0, got {rho}")
    radii = [float(r) for r in radii]
    if not radii:
        raise DomainError("the radius list must be nonempty")
    for r in radii:
        if not 0.0 < r <= 1.0:
            raise DomainError(f"radii must lie in (0, 1], got {r}")
    if grid.m != h.m:
        raise DomainError(f"grid dimension {grid.m} does not match h ({h.m})")
    nodes = grid.nodes
    vals = h(nodes)
    weighted = grid.weights * vals
    stride = max(1, grid.node_count // max_test_nodes)
    test_nodes = nodes[::stride]
    test_vals = vals[::stride]
    n = len(test_nodes)
    bm = ball_volume(grid.m)
    best = np.full(n, -np.inf)
    for r in radii:
        denom = bm * r**grid.m
        for start in range(0, n, chunk_size):
            block = slice(start, min(start + chunk_size, n))
            cosm = test_nodes[block] @ nodes.T
            kern = kernel_from_cos(rho, grid.m, r, cosm)
            averages = kern @ weighted / denom
            np.maximum(best[block], averages - test_vals[block], out=best[block])
    scale_ = max(1.0, float(np.abs(vals).max()))
    if tolerance is None:
        tol = (1e-4 if grid.m == 2 else 1e-3) * scale_
    else:
        tol = float(tolerance)
    worst = int(np.argmin(best))
    # which radii succeed at the worst node (diagnostic)
    cos_worst = test_nodes[worst] @ nodes.T
    succeeded = []
    for r in radii:
        q = kernel_from_cos(rho, grid.m, r, cos_worst) @ weighted / (bm * r**grid.m)
        if q - test_vals[worst] >= -tol:
            succeeded.append(r)
    return SubsphericityReport(
        criterion="mean_value",
        worst_residual=float(best[worst]),
        worst_location=test_nodes[worst].tolist(),
        tolerance=tol,
        passed=bool(best[worst] >= -tol),
        details={
            "radii": radii,
            "nodes": int(n),
            "integration_nodes": int(grid.node_count),
            "failures": int((best < -tol).sum()),
            "radii_succeeding_at_worst": succeeded,
        },
    )


def default_probes(
    grid: SphereGrid,
    radii: Sequence[float] = (0.4, 1.0, 1.6),
    directions: int = 64,
    eps_factor: float = 0.08,
) -> list:
    """Deterministic (point, eps) probes in the admissible annulus."""
    stride = max(1, grid.node_count // directions)
    dirs = grid.nodes[::stride]
    return [(r * d, eps_factor * r) for r in radii for d in dirs]


def check_radial_subharmonicity(
    h: DirectionFunction,
    rho: float,
    grid: SphereGrid,
    probes: Iterable,
    tolerance: float | None = None,
) -> SubsphericityReport:
    """Sub-mean-value test for the radial extension at the given probes."""
    if rho <= 0:
        raise DomainError(f"radial sub-mean criterion needs rho > 0, got {rho}")
    field_fn = radial_extension_field(h, rho)
    residuals = []
    locations = []
    center_vals = []
    for point, eps in probes:
        x = np.asarray(point, dtype=float)
        rx = float(np.linalg.norm(x))
        if not 0.2 <= rx <= 2.0:
            raise DomainError(f"probe radius |x| = {rx:g} outside the annulus [0.2, 2]")
        if not 0.0 < eps <= 0.1 * rx:
            raise DomainError(f"probe eps = {eps:g} must lie in (0, 0.1 |x|]")
        center = float(field_fn(x))
        residuals.append(sphere_mean(field_fn, x, eps, grid) - center)
        locations.append(x)
        center_vals.append(center)
    if not residuals:
        raise DomainError("the probe list must be nonempty")
    residuals = np.asarray(residuals)
    scale_ = max(1.0, float(np.abs(center_vals).max()))
    tol = 1e-5 * scale_ if tolerance is None else float(tolerance)
    worst = int(np.argmin(residuals))
    return SubsphericityReport(
        criterion="radial_submean",
        worst_residual=float(residuals[worst]),
        worst_location=locations[worst].tolist(),
        tolerance=tol,
        passed=bool(residuals[worst] >= -tol),
        details={"probes": int(len(residuals)), "failures": int((residuals < -tol).sum())},
    )


def run_all_checks(
    h: DirectionFunction,
    rho: float,
    grid: SphereGrid | None = None,
    radii: Sequence[float] = DEFAULT_MEAN_RADII,
    delta: float = 1e-3,
    probes=None,
    triples=None,
    tolerances: dict | None = None,
) -> list[SubsphericityReport]:
    """Run every criterion applicable in dimension m and collect the reports.

    On the circle all four run; in higher dimensions the operator and
    interpolation criteria have no faithful discretization here, so the
    kernel-average and radial sub-mean checks carry the certification.
    """
    tolerances = tolerances or {}
    if grid is None:
        grid = build_grid(h.m, 2048 if h.m == 2 else 32)
    reports = []
    if h.m == 2:
        trips = default_trig_triples(rho) if triples is None else triples
        reports.append(
            check_trig_convexity(h, rho, trips, tolerance=tolerances.get("trig_convexity"))
        )
        reports.append(
            check_operator_positivity(
                h, rho, delta, tolerance=tolerances.get("operator_positivity")
            )
        )
    reports.append(
        check_mean_inequality(h, rho, grid, radii, tolerance=tolerances.get("mean_value"))
    )
    probe_list = default_probes(grid) if probes is None else probes
    reports.append(
        check_radial_subharmonicity(
            h, rho, grid, probe_list, tolerance=tolerances.get("radial_submean")
        )
    )
    return reports


def certified_examples(m: int) -> list[tuple[DirectionFunction, float]]:
    """Library of direction functions paired with orders at which they certify.

    Only genuinely order-valid instances are listed: kernel slices at r = 1
    with rho >= m (slices with r < 1 vanish like a square root at their
    support boundary and fail every criterion), caps of order > 1 on the
    circle only, and the support function at order 1 in any dimension.
    """
    axis = np.zeros(m)
    axis[0] = 1.0
    out: list[tuple[DirectionFunction, float]] = [(constant_function(m, 1.0), 1.0)]
    if m == 2:
        out += [
            (example_cap_cosine(axis, 0.5), 0.5),
            (example_cap_cosine(axis, 1.0), 1.0),
            (example_cap_cosine(axis, 2.0), 2.0),
            (example_kernel_slice(2.0, 1.0, axis), 2.0),
            (example_support_function([[0.0, 0.0], [0.9, 0.0], [0.0, 0.6]]), 1.0),
        ]
    else:
        pts = np.zeros((3, m))
        pts[1, 0] = 0.9
        pts[2, 1] = 0.6
        out += [
            (example_cap_cosine(axis, 1.0), 1.0),
            (example_support_function(pts), 1.0),
        ]
    return out

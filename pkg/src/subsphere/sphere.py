"""Unit-sphere geometry: points, quadrature grids, and the averaging kernel.

The kernel K_{rho,r}(x, y) integrates t^(rho+m-1) along the chord that the
ray through y cuts out of the ball of radius r centered at x; spherical
integrals against it therefore reproduce solid-ball means of functions of
the form h(x/|x|) |x|^rho.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, EvaluationError, UnsupportedDimensionError
from .normalization import sphere_area

__all__ = [
    "UNIT_NORM_TOL",
    "SphereGrid",
    "sphere_point",
    "circle_point",
    "normalized",
    "geodesic_angle",
    "averaging_kernel",
    "kernel_from_cos",
    "build_grid",
    "sphere_mean",
]

UNIT_NORM_TOL = 1e-12


def sphere_point(coords) -> np.ndarray:
    """Validate and return a unit vector (norm within 1e-12 of 1)."""
    x = np.asarray(coords, dtype=float)
    if x.ndim != 1 or x.size < 1:
        raise DomainError("a sphere point must be a 1-d coordinate vector")
    norm = float(np.linalg.norm(x))
    if abs(norm - 1.0) > UNIT_NORM_TOL:
        raise DomainError(f"|x| = {norm!r} is not within {UNIT_NORM_TOL} of 1")
    return x


def circle_point(theta):
    """Unit vector(s) (cos theta, sin theta) on the circle; vectorized."""
    theta = np.asarray(theta, dtype=float)
    return np.stack([np.cos(theta), np.sin(theta)], axis=-1)


def normalized(x) -> np.ndarray:
    """x / |x| for a nonzero vector."""
    x = np.asarray(x, dtype=float)
    norm = float(np.linalg.norm(x))
    if norm == 0.0:
        raise DomainError("cannot normalize the zero vector")
    return x / norm


def geodesic_angle(x, y) -> float:
    """Angle in [0, pi] between two unit vectors (inner product clamped)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape:
        raise DomainError(f"dimension mismatch: {x.shape} vs {y.shape}")
    return float(np.arccos(np.clip(np.dot(x, y), -1.0, 1.0)))


def kernel_from_cos(rho: float, m: int, r: float, cos_angle):
    """Averaging kernel as a function of cos of the geodesic angle.

    Zero once cos_angle <= sqrt(1 - r^2); the radicand is clamped at 0 so
    floating-point noise at the support boundary cannot produce NaN (the two
    branch terms coincide there and the kernel is continuous).
    """
    if rho < 0:
        raise DomainError(f"order rho must be >= 0, got {rho}")
    if m < 2:
        raise DomainError(f"dimension m must be >= 2, got {m}")
    if not 0.0 < r <= 1.0:
        raise DomainError(f"radius r must lie in (0, 1], got {r}")
    c = np.clip(np.asarray(cos_angle, dtype=float), -1.0, 1.0)
    threshold = math.sqrt(max(0.0, 1.0 - r * r))
    mask = c > threshold
    safe = np.where(mask, c, 1.0)
    w = np.sqrt(np.maximum(safe * safe - (1.0 - r * r), 0.0))
    p = rho + m
    values = ((safe + w) ** p - (safe - w) ** p) / p
    out = np.where(mask, values, 0.0)
    if out.ndim == 0:
        return float(out)
    return out


def averaging_kernel(rho: float, r: float, x, y):
    """K_{rho,r}(x, y) for unit vectors x, y (broadcasts over leading axes)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape[-1] != y.shape[-1]:
        raise DomainError(f"dimension mismatch: {x.shape[-1]} vs {y.shape[-1]}")
    m = x.shape[-1]
    return kernel_from_cos(rho, m, r, np.sum(x * y, axis=-1))


@dataclass(frozen=True, eq=False)
class SphereGrid:
    """Immutable quadrature grid on the unit sphere.

    ``weights`` sum to the sphere area; node/weight order is fixed so that
    every quadrature over the grid is deterministic.
    """

    m: int
    nodes: np.ndarray
    weights: np.ndarray
    resolution: int
    rule: str

    def __post_init__(self):
        self.nodes.flags.writeable = False
        self.weights.flags.writeable = False

    @property
    def node_count(self) -> int:
        return self.nodes.shape[0]

    def descriptor(self) -> dict:
        return {
            "m": self.m,
            "rule": self.rule,
            "resolution": self.resolution,
            "node_count": self.node_count,
            "weight_sum": float(self.weights.sum()),
        }


def _grid_circle(resolution: int) -> SphereGrid:
    theta = 2.0 * math.pi * np.arange(resolution) / resolution
    nodes = circle_point(theta)
    weights = np.full(resolution, 2.0 * math.pi / resolution)
    return SphereGrid(2, nodes, weights, resolution, "uniform-circle")


def _grid_s2(resolution: int) -> SphereGrid:
    # Gauss-Legendre in the polar cosine, uniform azimuth.
    n_polar = max(4, resolution // 2)
    t, glw = np.polynomial.legendre.leggauss(n_polar)
    phi = 2.0 * math.pi * np.arange(resolution) / resolution
    sin_theta = np.sqrt(np.maximum(1.0 - t * t, 0.0))
    nodes = np.empty((n_polar * resolution, 3))
    weights = np.empty(n_polar * resolution)
    cos_phi, sin_phi = np.cos(phi), np.sin(phi)
    for i in range(n_polar):
        block = slice(i * resolution, (i + 1) * resolution)
        nodes[block, 0] = sin_theta[i] * cos_phi
        nodes[block, 1] = sin_theta[i] * sin_phi
        nodes[block, 2] = t[i]
        weights[block] = glw[i] * (2.0 * math.pi / resolution)
    return SphereGrid(3, nodes, weights, resolution, "gauss-legendre-x-uniform")


def _grid_s3(resolution: int) -> SphereGrid:
    # Chebyshev (second kind) rule in the sin^2-weighted polar angle, then
    # Gauss-Legendre in the middle polar cosine, uniform azimuth.  The
    # Chebyshev weights sum to pi/2 exactly, so the total weight is exact.
    n_psi = max(4, resolution // 2)
    n_theta = max(4, resolution // 2)
    k = np.arange(1, n_psi + 1)
    psi = k * math.pi / (n_psi + 1)
    w_psi = (math.pi / (n_psi + 1)) * np.sin(psi) ** 2
    t, glw = np.polynomial.legendre.leggauss(n_theta)
    sin_theta = np.sqrt(np.maximum(1.0 - t * t, 0.0))
    phi = 2.0 * math.pi * np.arange(resolution) / resolution
    cos_phi, sin_phi = np.cos(phi), np.sin(phi)
    total = n_psi * n_theta * resolution
    nodes = np.empty((total, 4))
    weights = np.empty(total)
    idx = 0
    for i in range(n_psi):
        sp, cp = math.sin(psi[i]), math.cos(psi[i])
        for j in range(n_theta):
            block = slice(idx, idx + resolution)
            nodes[block, 0] = cp
            nodes[block, 1] = sp * t[j]
            nodes[block, 2] = sp * sin_theta[j] * cos_phi
            nodes[block, 3] = sp * sin_theta[j] * sin_phi
            weights[block] = w_psi[i] * glw[j] * (2.0 * math.pi / resolution)
            idx += resolution
    return SphereGrid(4, nodes, weights, resolution, "chebyshev-x-gauss-x-uniform")


def build_grid(m: int, resolution: int) -> SphereGrid:
    """Product quadrature grid on the unit sphere of R^m, m in {2, 3, 4}.

    ``resolution`` is the azimuthal node count; polar node counts are derived
    from it.  Total weight equals the sphere area (exactly up to rounding).
    """
    if resolution < 4:
        raise DomainError(f"grid resolution must be >= 4, got {resolution}")
    if m == 2:
        return _grid_circle(resolution)
    if m == 3:
        return _grid_s2(resolution)
    if m == 4:
        return _grid_s3(resolution)
    raise UnsupportedDimensionError(f"no grid rule for m = {m}; supported: 2, 3, 4")


def sphere_mean(field: Callable, center, eps: float, grid: SphereGrid) -> float:
    """Mean of ``field`` over the sphere of radius eps around ``center``.

    ``field`` must accept an (N, m) array of points and return N values.
    A non-finite value aborts the evaluation, carrying the offending node.
    """
    if eps <= 0:
        raise DomainError(f"sphere radius eps must be positive, got {eps}")
    center = np.asarray(center, dtype=float)
    if center.shape != (grid.m,):
        raise DomainError(f"center has shape {center.shape}, expected ({grid.m},)")
    points = center[None, :] + eps * grid.nodes
    values = np.asarray(field(points), dtype=float)
    if values.shape != (grid.node_count,):
        raise EvaluationError(f"field returned shape {values.shape}, expected ({grid.node_count},)")
    finite = np.isfinite(values)
    if not finite.all():
        bad = int(np.argmin(finite))
        raise EvaluationError(
            f"field is not finite at grid node {bad}", node=points[bad]
        )
    return float(np.dot(grid.weights, values) / sphere_area(grid.m))

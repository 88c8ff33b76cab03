"""Support-grid metrics: Hausdorff distance, disk-offset radial function, and bound checks.

The Hausdorff distance between convex bodies is the sup-norm gap of their
support functions.  For polygons the maximizer can sit strictly inside an
angular arc, so it is approximated on a uniform direction grid with one local
refinement pass around the best sample; tolerance-sensitive callers keep
margins well above the grid error.  All routines here work in float mode and
accept exact polygons by converting on entry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CheckFailed
from .polygon import SymPolygon, Vec2, as_vec2

TWO_PI = 2.0 * math.pi


def vertex_array(P: SymPolygon) -> np.ndarray:
    return np.array([[float(v.x), float(v.y)] for v in P.vertices], dtype=float)


def edge_arrays(P: SymPolygon):
    """Outward edge normals and offsets as float arrays: points satisfy N @ p <= c."""
    normals = []
    offsets = []
    for n, c in P.edges():
        normals.append([float(n.x), float(n.y)])
        offsets.append(float(c))
    return np.array(normals, dtype=float), np.array(offsets, dtype=float)


def direction_grid(grid_size: int) -> np.ndarray:
    return np.arange(grid_size) * (TWO_PI / grid_size)


def support_grid(P: SymPolygon, angles: np.ndarray) -> np.ndarray:
    dirs = np.stack([np.cos(angles), np.sin(angles)], axis=1)
    return (dirs @ vertex_array(P).T).max(axis=1)


def radial_grid(P: SymPolygon, angles: np.ndarray) -> np.ndarray:
    dirs = np.stack([np.cos(angles), np.sin(angles)], axis=1)
    normals, offsets = edge_arrays(P)
    den = dirs @ normals.T
    lam = np.where(den > 0, offsets[None, :] / np.where(den > 0, den, 1.0), np.inf)
    return lam.min(axis=1)


def hausdorff_support_metric(P: SymPolygon, Q: SymPolygon, grid_size: int = 4096) -> float:
    """max_u |h(P,u) - h(Q,u)| on a grid, refined once around the best sample."""
    if grid_size < 64:
        raise ValueError("grid_size must be at least 64")
    P, Q = P.as_float(), Q.as_float()
    angles = direction_grid(grid_size)
    diff = np.abs(support_grid(P, angles) - support_grid(Q, angles))
    i = int(diff.argmax())
    best = float(diff[i])
    delta = TWO_PI / grid_size
    window = np.linspace(angles[i] - delta, angles[i] + delta, 129)
    refined = np.abs(support_grid(P, window) - support_grid(Q, window)).max()
    return max(best, float(refined))


def _distance_to_polygon(points: np.ndarray, P: SymPolygon) -> np.ndarray:
    """Euclidean distance from each point to the polygon (0 inside)."""
    normals, offsets = edge_arrays(P)
    inside = (points @ normals.T <= offsets[None, :]).all(axis=1)
    verts = vertex_array(P)
    a = verts
    d = np.roll(verts, -1, axis=0) - verts
    len2 = (d * d).sum(axis=1)
    rel = points[:, None, :] - a[None, :, :]
    t = np.clip((rel * d[None, :, :]).sum(axis=2) / len2[None, :], 0.0, 1.0)
    proj = a[None, :, :] + t[:, :, None] * d[None, :, :]
    dist = np.linalg.norm(points[:, None, :] - proj, axis=2).min(axis=1)
    return np.where(inside, 0.0, dist)


def point_polygon_distance(p, P: SymPolygon) -> float:
    p = as_vec2(p)
    pts = np.array([[float(p.x), float(p.y)]])
    return float(_distance_to_polygon(pts, P.as_float())[0])


def offset_radial_grid(P: SymPolygon, t: float, angles: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """rho(P + t*B^2, u) per grid direction, by bisection on the ray against exact point distance."""
    if t <= 0:
        raise ValueError("offset t must be positive")
    P = P.as_float()
    dirs = np.stack([np.cos(angles), np.sin(angles)], axis=1)
    lo = radial_grid(P, angles)
    r1 = P.radial_bounds().r1
    hi = np.full_like(lo, r1 + 2.0 * t)
    for _ in range(64):
        mid = 0.5 * (lo + hi)
        ok = _distance_to_polygon(mid[:, None] * dirs, P) <= t
        lo = np.where(ok, mid, lo)
        hi = np.where(ok, hi, mid)
        if float((hi - lo).max()) <= tol:
            break
    return 0.5 * (lo + hi)


def offset_radial(P: SymPolygon, t: float, u) -> float:
    """Radial function of the disk-offset body P + t*B^2 in direction u (unit vector)."""
    u = as_vec2(u)
    angle = math.atan2(float(u.y), float(u.x))
    return float(offset_radial_grid(P, float(t), np.array([angle]))[0])


@dataclass(frozen=True)
class OffsetBoundsReport:
    """Worst margins of the offset-growth and normal-alignment inequalities."""

    t: float
    grid_size: int
    r0: float
    r1: float
    offset_margin: float
    offset_direction: float
    normal_margin: float
    normal_direction: float


def check_offset_radial_bounds(P: SymPolygon, t: float, grid_size: int = 256) -> OffsetBoundsReport:
    """Grid-check two boundary inequalities and return the worst margins.

    (a) rho(P + t*B^2, u) <= rho(P, u) + (r1/r0) * t for every direction u;
    (b) |<u, nu(x)>| >= r0/r1 at the boundary point x = rho(P,u) * u, where
        nu is the outward unit normal of an edge through x.  At a vertex both
        adjacent edge normals are tried and the larger alignment counts.

    Raises CheckFailed (with the offending direction) if a margin drops below
    a small float slack.
    """
    P = P.as_float()
    rb = P.radial_bounds()
    r0, r1 = rb.r0, rb.r1
    angles = direction_grid(grid_size)
    rho = radial_grid(P, angles)
    off = offset_radial_grid(P, float(t), angles)
    margins_a = rho + (r1 / r0) * float(t) - off
    ia = int(margins_a.argmin())

    dirs = np.stack([np.cos(angles), np.sin(angles)], axis=1)
    normals, offsets = edge_arrays(P)
    unit_normals = normals / np.linalg.norm(normals, axis=1, keepdims=True)
    den = dirs @ normals.T
    lam = np.where(den > 0, offsets[None, :] / np.where(den > 0, den, 1.0), np.inf)
    best = lam.min(axis=1, keepdims=True)
    touching = lam <= best * (1 + 1e-9) + 1e-15
    align = np.abs(dirs @ unit_normals.T)
    margins_b = np.where(touching, align, -np.inf).max(axis=1) - r0 / r1
    ib = int(margins_b.argmin())

    report = OffsetBoundsReport(
        t=float(t),
        grid_size=grid_size,
        r0=r0,
        r1=r1,
        offset_margin=float(margins_a[ia]),
        offset_direction=float(angles[ia]),
        normal_margin=float(margins_b[ib]),
        normal_direction=float(angles[ib]),
    )
    slack = -1e-12
    if report.offset_margin < slack:
        raise CheckFailed(
            f"offset-growth bound violated at angle {report.offset_direction:.6f} "
            f"(margin {report.offset_margin:.3e})"
        )
    if report.normal_margin < slack:
        raise CheckFailed(
            f"normal-alignment bound violated at angle {report.normal_direction:.6f} "
            f"(margin {report.normal_margin:.3e})"
        )
    return report

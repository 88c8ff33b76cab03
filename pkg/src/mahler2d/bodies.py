"""Radial-function oracles for symmetric convex bodies and inscribed-polygon experiments.

A ``SampledBody`` exposes a positive even radial function by angle together
with its extremes r0 <= r1.  Inscribing polygons at uniform angles and watching
the volume product converge realizes the continuity of the product under the
Hausdorff metric; the experiment also checks the uniform radial-convergence
bound (4 r1 / r0) * eps for bodies at Hausdorff distance eps < r0 / 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .duality import polar, volume_product
from .errors import BoundViolated, NotConvex
from .metrics import direction_grid, hausdorff_support_metric, radial_grid
from .polygon import SymPolygon, Vec2, validate_polygon


@dataclass(frozen=True)
class SampledBody:
    """Origin-symmetric convex body described by its radial function.

    ``radial(theta)`` must be continuous, positive, and even under
    theta -> theta + pi; ``r0``/``r1`` are its supplied extremes.  Optional
    ``corner_angles`` name directions (modulo pi) worth merging into sampling
    grids, e.g. the corners of a polygonal body.
    """

    name: str
    radial: Callable[[float], float]
    r0: float
    r1: float
    corner_angles: tuple = field(default=())


def disk() -> SampledBody:
    return SampledBody("disk", lambda theta: 1.0, 1.0, 1.0)


def ellipse(a: float, b: float) -> SampledBody:
    if a <= 0 or b <= 0:
        raise ValueError("ellipse semi-axes must be positive")

    def rho(theta: float) -> float:
        c, s = math.cos(theta), math.sin(theta)
        return 1.0 / math.sqrt((c / a) ** 2 + (s / b) ** 2)

    return SampledBody(f"ellipse({a},{b})", rho, min(a, b), max(a, b))


def p_ball(p: float) -> SampledBody:
    """Unit ball of the l_p norm, p in [1, inf]; radial = 1 / ||u||_p."""
    if p == math.inf:

        def rho(theta: float) -> float:
            return 1.0 / max(abs(math.cos(theta)), abs(math.sin(theta)))

        r0, r1 = 1.0, math.sqrt(2.0)
    else:
        if p < 1:
            raise ValueError("p must be at least 1 for a convex ball")

        def rho(theta: float) -> float:
            return (abs(math.cos(theta)) ** p + abs(math.sin(theta)) ** p) ** (-1.0 / p)

        diag = 2.0 ** (0.5 - 1.0 / p)
        r0, r1 = min(1.0, diag), max(1.0, diag)
    corners = (math.pi / 4, 3 * math.pi / 4)
    return SampledBody(f"p_ball({p})", rho, r0, r1, corners)


def from_polygon(P: SymPolygon) -> SampledBody:
    """Radial oracle of an explicit polygon, with its corner directions named."""
    Pf = P.as_float()
    rb = Pf.radial_bounds()
    corners = tuple(
        math.atan2(float(v.y), float(v.x)) % math.pi
        for v in Pf.vertices[: len(Pf.vertices) // 2]
    )
    return SampledBody(
        "polygon", lambda theta: float(Pf.radial(Vec2(math.cos(theta), math.sin(theta)))),
        rb.r0, rb.r1, corners,
    )


NAMED_BODIES = {
    "disk": disk,
    "ellipse": lambda: ellipse(2.0, 1.0),
    "pball1": lambda: p_ball(1.0),
    "pball1.5": lambda: p_ball(1.5),
    "pball2": lambda: p_ball(2.0),
    "pball3": lambda: p_ball(3.0),
    "pballinf": lambda: p_ball(math.inf),
    "square": lambda: from_polygon(
        validate_polygon([(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)])
    ),
}


def _drop_flat_samples(generators: list, eps: float = 1e-9) -> list:
    """Remove samples that sit on an edge of the hull of the symmetric point set.

    Samples of a polygonal body land exactly on its edges and are not extreme;
    they get dropped so the inscribed polygon is strictly convex.  A turn that
    is clearly negative means the radial oracle is not convex.
    """
    gens = list(generators)
    while len(gens) >= 2:
        pts = gens + [-g for g in gens]
        total = len(pts)
        drop = None
        for i in range(total):
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % total]
            turn = (b - a).cross(c - b)
            if turn < -eps:
                raise NotConvex(f"radial oracle is not convex near {tuple(b)}")
            if turn <= eps:
                drop = i % len(gens)
                break
        if drop is None:
            return gens
        del gens[drop]
    raise NotConvex("fewer than two extreme sample pairs")


def inscribe_polygon(body: SampledBody, m: int, include_corners: bool = False) -> SymPolygon:
    """Inscribed polygon with vertices rho(u_j) u_j at m uniform angles.

    ``include_corners`` merges the body's named corner directions into the
    grid (deduplicated), aligning the sample with polygonal bodies.  The
    second half of the vertex list is built by exact negation so antipodal
    symmetry holds bit-for-bit.  Samples falling on a flat boundary stretch
    (polygonal bodies) are dropped, so the result can have fewer than m
    vertices; for strictly convex bodies the count is exactly m.
    """
    if m < 4 or m % 2 != 0:
        raise ValueError("vertex count m must be even and at least 4")
    half = [math.pi * 2 * j / m for j in range(m // 2)]
    if include_corners:
        for angle in body.corner_angles:
            a = angle % math.pi
            if all(abs(a - b) > 1e-12 for b in half):
                half.append(a)
        half.sort()
    generators = [
        Vec2(body.radial(a) * math.cos(a), body.radial(a) * math.sin(a)) for a in half
    ]
    generators = _drop_flat_samples(generators)
    return validate_polygon(generators + [-g for g in generators])


@dataclass(frozen=True)
class ContinuityRow:
    """One experiment row; ``hausdorff_proxy`` measures distance to the finest proxy polygon."""

    m: int
    hausdorff_proxy: float
    product: float
    radial_gap: float
    bound_rhs: float
    polar_distance: float


def continuity_experiment(
    body: SampledBody,
    m_list: Sequence[int],
    grid_size: int = 2048,
    proxy_factor: int = 4,
) -> list:
    """Inscribe polygons at increasing resolution and verify the convergence bounds.

    For each m the row records the Hausdorff distance to a proxy polygon at
    ``proxy_factor * max(m_list)`` vertices, the volume product, the sup-grid
    radial gap to the body, and the radial-convergence bound (4 r1/r0) * d_m.
    Checks: the bound holds whenever d_m < r0/2, |product - proxy product| is
    non-increasing, and the polar Hausdorff distance to the proxy polar is
    non-increasing as well.  Raises BoundViolated otherwise.
    """
    if list(m_list) != sorted(set(m_list)):
        raise ValueError("m_list must be strictly increasing")
    proxy = inscribe_polygon(body, proxy_factor * max(m_list))
    proxy_polar = polar(proxy)
    product_limit = float(volume_product(proxy).product)
    angles = direction_grid(grid_size)
    body_rho = np.array([body.radial(a) for a in angles])

    rows = []
    prev_product_gap = math.inf
    prev_polar_d = math.inf
    for m in m_list:
        Pm = inscribe_polygon(body, m)
        d_m = hausdorff_support_metric(Pm, proxy)
        product = float(volume_product(Pm).product)
        radial_gap = float(np.abs(radial_grid(Pm, angles) - body_rho).max())
        bound_rhs = 4.0 * body.r1 / body.r0 * d_m
        if d_m < body.r0 / 2 and radial_gap > bound_rhs + 1e-12:
            worst = int(np.abs(radial_grid(Pm, angles) - body_rho).argmax())
            raise BoundViolated(
                f"radial gap {radial_gap:.3e} exceeds bound {bound_rhs:.3e} "
                f"at m={m}, angle={angles[worst]:.6f}"
            )
        product_gap = abs(product - product_limit)
        if product_gap > prev_product_gap + 1e-12:
            raise BoundViolated(f"product gap grew at m={m}: {product_gap:.3e}")
        polar_d = hausdorff_support_metric(polar(Pm), proxy_polar)
        if polar_d > prev_polar_d + 1e-12:
            raise BoundViolated(f"polar distance grew at m={m}: {polar_d:.3e}")
        prev_product_gap, prev_polar_d = product_gap, polar_d
        rows.append(ContinuityRow(m, d_m, product, radial_gap, bound_rhs, polar_d))
    return rows

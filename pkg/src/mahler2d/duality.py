"""Polar polygons and the volume product.

The polar body of P is the intersection of the half-planes <x, p> <= 1 over
the vertices p of P.  For a strictly convex symmetric polygon each vertex
contributes one edge of the polar, so the polar has the same vertex count and
its i-th vertex solves <q, p_i> = <q, p_{i+1}> = 1.  Everything here is exact
in exact mode.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CheckFailed, NearParallelConstraints
from .polygon import LinMap2, SymPolygon, Vec2, apply_linear, validate_polygon
from .scalars import EPS_GEOM, Scalar, is_exact


@dataclass(frozen=True)
class VolumeProductReport:
    """Areas of a polygon and its polar, and their product."""

    v: Scalar
    v_star: Scalar
    product: Scalar


def polar(P: SymPolygon) -> SymPolygon:
    """Polar polygon P*: vertex i solves <q, p_i> = <q, p_{i+1}> = 1."""
    verts = P.vertices
    m = len(verts)
    out = []
    for i in range(m):
        p, q = verts[i], verts[(i + 1) % m]
        c = p.cross(q)
        if not is_exact(c) and abs(c) <= EPS_GEOM:
            raise NearParallelConstraints(
                f"consecutive vertices {tuple(p)}, {tuple(q)} nearly aligned with origin"
            )
        out.append(Vec2((q.y - p.y) / c, (p.x - q.x) / c))
    return validate_polygon(out)


def volume_product(P: SymPolygon) -> VolumeProductReport:
    v = P.area()
    v_star = polar(P).area()
    return VolumeProductReport(v, v_star, v * v_star)


def contains_polygon(outer: SymPolygon, inner: SymPolygon, tol: Scalar = 0) -> bool:
    """Every vertex of ``inner`` satisfies every edge inequality of ``outer``."""
    return all(outer.contains_point(v, tol) for v in inner.vertices)


@dataclass(frozen=True)
class PolarTransformReport:
    product_before: Scalar
    product_after: Scalar
    vertices_match: bool


def polar_transform_check(P: SymPolygon, A: LinMap2) -> PolarTransformReport:
    """Verify (A P)* equals A^{-t} P* vertex-for-vertex and that the product is invariant."""
    lhs = polar(apply_linear(P, A))
    rhs = apply_linear(polar(P), A.inverse_transpose())
    tol = 0 if P.mode == "exact" and is_exact(A.det) else EPS_GEOM
    if not lhs.close_to(rhs, tol):
        raise CheckFailed("polar of transformed polygon differs from co-transformed polar")
    before = volume_product(P).product
    after = volume_product(apply_linear(P, A)).product
    if tol == 0:
        if after != before:
            raise CheckFailed(f"volume product changed under linear map: {before} -> {after}")
    elif abs(float(after - before)) > 1e-9 * max(1.0, abs(float(before))):
        raise CheckFailed(f"volume product changed under linear map: {before} -> {after}")
    return PolarTransformReport(before, after, True)

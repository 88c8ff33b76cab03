"""Origin-symmetric convex polygons and 2x2 linear maps.

A ``SymPolygon`` stores its 2n vertices counterclockwise in canonical order:
the list starts at the vertex of maximal polar angle in [0, 2pi) (ties broken
by larger norm) so that equality of polygons is equality of vertex lists.
Invariants enforced at construction:

* antipodal symmetry: ``vertices[i + n] == -vertices[i]``,
* strict convexity: every consecutive vertex triple turns strictly left,
* the origin is strictly interior (implied by the two above).

Vertices are exact rationals or floats; the polygon's ``mode`` is inferred
from the coordinates and survives through every operation that does not need
a square root.  Float-mode predicates assume coordinates of order unity and
compare against ``EPS_GEOM``.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    CollinearVertices,
    NotConvex,
    NotSymmetric,
    SingularMap,
    TooFewVertices,
)
from .scalars import EPS_GEOM, Scalar, is_exact


@dataclass(frozen=True)
class Vec2:
    """Point or direction in the plane; coordinates share the polygon's mode."""

    x: Scalar
    y: Scalar

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Vec2":
        return Vec2(-self.x, -self.y)

    def scaled(self, k: Scalar) -> "Vec2":
        return Vec2(self.x * k, self.y * k)

    def dot(self, other: "Vec2") -> Scalar:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Vec2") -> Scalar:
        return self.x * other.y - self.y * other.x

    def norm2(self) -> Scalar:
        return self.x * self.x + self.y * self.y

    def norm(self) -> float:
        return math.hypot(float(self.x), float(self.y))

    def as_float(self) -> "Vec2":
        return Vec2(float(self.x), float(self.y))

    def as_exact(self) -> "Vec2":
        return Vec2(Fraction(self.x), Fraction(self.y))

    def __iter__(self):
        yield self.x
        yield self.y


def as_vec2(p) -> Vec2:
    if isinstance(p, Vec2):
        return p
    x, y = p
    return Vec2(x, y)


def unit(angle: float) -> Vec2:
    """Unit direction at the given angle (float mode)."""
    return Vec2(math.cos(angle), math.sin(angle))


@dataclass(frozen=True)
class LinMap2:
    """Invertible 2x2 linear map acting on column vectors."""

    a11: Scalar
    a12: Scalar
    a21: Scalar
    a22: Scalar

    @property
    def det(self) -> Scalar:
        return self.a11 * self.a22 - self.a12 * self.a21

    def apply(self, v: Vec2) -> Vec2:
        return Vec2(self.a11 * v.x + self.a12 * v.y, self.a21 * v.x + self.a22 * v.y)

    def compose(self, other: "LinMap2") -> "LinMap2":
        """self after other (matrix product self @ other)."""
        return LinMap2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def inverse(self) -> "LinMap2":
        d = self.det
        if _is_singular(d):
            raise SingularMap(f"determinant {d!r} too close to zero")
        return LinMap2(self.a22 / d, -self.a12 / d, -self.a21 / d, self.a11 / d)

    def transpose(self) -> "LinMap2":
        return LinMap2(self.a11, self.a21, self.a12, self.a22)

    def inverse_transpose(self) -> "LinMap2":
        return self.inverse().transpose()

    def as_tuple(self) -> tuple:
        return (self.a11, self.a12, self.a21, self.a22)

    @classmethod
    def identity(cls) -> "LinMap2":
        return cls(1, 0, 0, 1)

    @classmethod
    def diagonal(cls, sx: Scalar, sy: Scalar) -> "LinMap2":
        return cls(sx, 0, 0, sy)

    @classmethod
    def rotation(cls, angle: float) -> "LinMap2":
        c, s = math.cos(angle), math.sin(angle)
        return cls(c, -s, s, c)


def _is_singular(det: Scalar) -> bool:
    if is_exact(det):
        return det == 0
    return abs(det) <= EPS_GEOM


def _half_turn(v: Vec2) -> int:
    # 0 for polar angle in [0, pi), 1 for [pi, 2pi)
    if v.y > 0 or (v.y == 0 and v.x > 0):
        return 0
    return 1


def _angle_cmp(a: Vec2, b: Vec2) -> int:
    """Order vertices by polar angle in [0, 2pi), then by norm; trig-free."""
    ha, hb = _half_turn(a), _half_turn(b)
    if ha != hb:
        return -1 if ha < hb else 1
    cr = a.cross(b)
    if cr > 0:
        return -1
    if cr < 0:
        return 1
    na, nb = a.norm2(), b.norm2()
    if na < nb:
        return -1
    if na > nb:
        return 1
    return 0


class SymPolygon:
    """Origin-symmetric strictly convex polygon in canonical vertex order.

    Construct through :func:`validate_polygon`; the raw constructor trusts its
    input and is for internal use.
    """

    __slots__ = ("vertices", "mode", "_edge_data")

    def __init__(self, vertices: tuple, mode: str):
        self.vertices = vertices
        self.mode = mode
        self._edge_data = None

    # -- basic geometry -------------------------------------------------

    @property
    def pair_count(self) -> int:
        return len(self.vertices) // 2

    def edges(self):
        """Yield (normal, offset) per edge: points p of the polygon satisfy <normal, p> <= offset."""
        if self._edge_data is None:
            verts = self.vertices
            m = len(verts)
            data = []
            for i in range(m):
                a, b = verts[i], verts[(i + 1) % m]
                d = b - a
                n = Vec2(d.y, -d.x)  # outward for counterclockwise order
                data.append((n, n.dot(a)))
            self._edge_data = tuple(data)
        return self._edge_data

    def area(self) -> Scalar:
        verts = self.vertices
        m = len(verts)
        s = verts[m - 1].cross(verts[0])
        for i in range(m - 1):
            s = s + verts[i].cross(verts[i + 1])
        return s / 2

    def support(self, u) -> Scalar:
        """h(P, u) = max over vertices of <u, v>.

        In float mode callers pass unit directions.  Exact mode accepts any
        nonzero rational direction; the value scales linearly with ``|u|`` so
        scale-free products such as rho(P,u) * h(P*,u) stay exact.
        """
        u = as_vec2(u)
        return max(u.dot(v) for v in self.vertices)

    def radial(self, u) -> Scalar:
        """rho(P, u) = max {lam >= 0 : lam*u in P}, via the boundary edge the ray crosses."""
        u = as_vec2(u)
        best = None
        for n, c in self.edges():
            den = n.dot(u)
            if den > 0:
                lam = c / den
                if best is None or lam < best:
                    best = lam
        if best is None:
            raise NotConvex("radial ray escapes the polygon; origin not interior")
        return best

    def radial_support_edges(self, u, rel_tol: float = 1e-9):
        """Radial value plus the indices of the edges attaining it (two at a vertex)."""
        u = as_vec2(u)
        lams = []
        for idx, (n, c) in enumerate(self.edges()):
            den = n.dot(u)
            if den > 0:
                lams.append((c / den, idx))
        rho = min(lam for lam, _ in lams)
        cut = rho * (1 + rel_tol) + 1e-15
        return rho, [idx for lam, idx in lams if lam <= cut]

    def radial_bounds(self) -> "RadialBounds":
        """r1 = max vertex norm; r0 = min distance from origin to an edge line (floats)."""
        r1 = max(v.norm() for v in self.vertices)
        r0 = min(float(c) / Vec2(float(n.x), float(n.y)).norm() for n, c in self.edges())
        return RadialBounds(r0, r1)

    def contains_point(self, p, tol: Scalar = 0) -> bool:
        p = as_vec2(p)
        return all(n.dot(p) <= c + tol for n, c in self.edges())

    # -- mode conversion and comparison ----------------------------------

    def as_float(self) -> "SymPolygon":
        if self.mode == "float":
            return self
        return validate_polygon([v.as_float() for v in self.vertices])

    def as_exact(self) -> "SymPolygon":
        """Exact polygon with the same vertices; floats convert to their exact binary value."""
        if self.mode == "exact":
            return self
        return validate_polygon([v.as_exact() for v in self.vertices])

    def close_to(self, other: "SymPolygon", tol: float = EPS_GEOM) -> bool:
        if len(self.vertices) != len(other.vertices):
            return False
        if tol == 0:
            return all(a.x == b.x and a.y == b.y for a, b in zip(self.vertices, other.vertices))
        return all(
            abs(float(a.x - b.x)) <= tol and abs(float(a.y - b.y)) <= tol
            for a, b in zip(self.vertices, other.vertices)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymPolygon)
            and self.mode == other.mode
            and self.vertices == other.vertices
        )

    def __hash__(self):
        return hash((self.mode, tuple((v.x, v.y) for v in self.vertices)))

    def __repr__(self) -> str:
        pts = ", ".join(f"({v.x}, {v.y})" for v in self.vertices)
        return f"SymPolygon[{self.mode}]({pts})"


@dataclass(frozen=True)
class RadialBounds:
    """Extremes of the radial function: 0 < r0 <= r1."""

    r0: float
    r1: float


def _coerce_mode(points: Sequence[Vec2]):
    any_float = any(isinstance(v.x, float) or isinstance(v.y, float) for v in points)
    if any_float:
        return [v.as_float() for v in points], "float"
    return [Vec2(Fraction(v.x), Fraction(v.y)) for v in points], "exact"


def validate_polygon(raw_vertices: Iterable) -> SymPolygon:
    """Check all SymPolygon invariants and return the canonicalized polygon.

    Raises NotSymmetric (odd count or broken antipodal pairing), TooFewVertices
    (< 4 vertices), CollinearVertices (repeated or aligned vertices), NotConvex.
    """
    pts = [as_vec2(p) for p in raw_vertices]
    if not pts:
        raise TooFewVertices("empty vertex list")
    if len(pts) % 2 != 0:
        raise NotSymmetric(f"odd vertex count {len(pts)}")
    if len(pts) < 4:
        raise TooFewVertices(f"{len(pts)} vertices; a symmetric polygon needs at least 4")

    pts, mode = _coerce_mode(pts)
    eps = EPS_GEOM if mode == "float" else 0
    for v in pts:
        if abs(float(v.x)) <= eps and abs(float(v.y)) <= eps:
            raise NotConvex("origin listed as a vertex")

    pts.sort(key=functools.cmp_to_key(_angle_cmp))

    m = len(pts)
    for i in range(m):
        a, b = pts[i], pts[(i + 1) % m]
        if _angle_cmp(a, b) == 0 or (a.cross(b) == 0 and a.dot(b) > 0):
            raise CollinearVertices(f"vertices {tuple(a)} and {tuple(b)} lie on one ray")

    n = m // 2
    for i in range(n):
        v, w = pts[i], pts[i + n]
        if abs(float(v.x + w.x)) > eps or abs(float(v.y + w.y)) > eps:
            raise NotSymmetric(f"vertex {tuple(w)} is not the antipode of {tuple(v)}")

    for i in range(m):
        a, b, c = pts[i], pts[(i + 1) % m], pts[(i + 2) % m]
        turn = (b - a).cross(c - b)
        if turn <= eps:
            if abs(float(turn)) <= eps:
                raise CollinearVertices(f"vertices near {tuple(b)} are collinear")
            raise NotConvex(f"right turn at vertex {tuple(b)}")

    # canonical start: maximal polar angle (list is sorted ascending)
    ordered = tuple(pts[-1:] + pts[:-1])
    return SymPolygon(ordered, mode)


def apply_linear(P: SymPolygon, A: LinMap2) -> SymPolygon:
    """Image polygon A(P), re-canonicalized (orientation fixed if det < 0)."""
    if _is_singular(A.det):
        raise SingularMap(f"determinant {A.det!r} too close to zero")
    return validate_polygon([A.apply(v) for v in P.vertices])


def on_circle_flags(P: SymPolygon, eps: float) -> tuple:
    """Per-vertex flag |norm - 1| <= eps; antipodal pairs share flags by symmetry."""
    return tuple(abs(v.norm() - 1.0) <= eps for v in P.vertices)

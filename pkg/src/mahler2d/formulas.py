"""Closed forms for the volume product around a vertex-pair insertion on the unit circle.

Setting: an origin-symmetric polygon Q inside the unit disk whose top edge
joins the circle points A = (-x0, y0) and B = (x0, y0).  Re-inserting a
vertex pair +-C with C = (cos theta, sin theta) on the arc between B and A
adds two triangles to Q and cuts two triangles off its polar.  The resulting
volume product is an explicit function of theta whose derivative is
nonpositive on [pi/2, pi - atan(y0/x0)], which is exactly why deleting such a
vertex pair never increases the volume product.  This module evaluates those
closed forms and the inequality chain backing the sign of the derivative, and
cross-checks them against independently constructed polygon geometry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .duality import volume_product
from .errors import CheckFailed, DomainError
from .polygon import SymPolygon, Vec2, validate_polygon

_EPS_UNIT = 3e-9  # slack on x0^2 + y0^2 = 1
_EPS_THETA = 1e-12


def theta_upper(x0: float, y0: float) -> float:
    """Largest insertion angle; there C coincides with the chord endpoint A."""
    return math.pi - math.atan2(y0, x0)


def circle_cap_area(x0: float) -> float:
    """Area of the unit-circle segment to the right of the vertical chord x = x0."""
    if not -1.0 <= x0 <= 1.0:
        raise DomainError(f"chord abscissa {x0} outside [-1, 1]")
    return math.acos(x0) - x0 * math.sqrt(max(0.0, 1.0 - x0 * x0))


def _check_chord(x0: float, y0: float) -> None:
    if x0 <= 0 or y0 <= 0:
        raise DomainError(f"chord half-width/height must be positive, got ({x0}, {y0})")
    if abs(x0 * x0 + y0 * y0 - 1.0) > _EPS_UNIT:
        raise DomainError(f"chord endpoint ({x0}, {y0}) not on the unit circle")


@dataclass(frozen=True)
class InsertionProfile:
    """Closed-form evaluation at one insertion angle theta.

    ``area``/``polar_area`` describe the polygon *without* the inserted pair;
    ``product`` is the volume product *with* the pair at theta.
    """

    x0: float
    y0: float
    theta: float
    area: float
    polar_area: float
    x1: float            # abscissa where the tangent at C meets the tangent at A
    x2: float            # abscissa where the tangent at C meets the tangent at B
    triangle_area: float  # area cut off the polar on one side
    product: float
    derivative: float    # d(product)/d(theta)
    quad_value: float    # upward parabola whose sign controls the derivative
    cap_area: float      # circle segment beyond the vertical chord at x0


def insertion_product_profile(
    x0: float, y0: float, area: float, polar_area: float, theta: float
) -> InsertionProfile:
    """Evaluate the insertion closed forms at angle theta in [pi/2, theta_upper]."""
    _check_chord(x0, y0)
    hi = theta_upper(x0, y0)
    if not (math.pi / 2 - _EPS_THETA <= theta <= hi + _EPS_THETA):
        raise DomainError(f"theta {theta} outside [{math.pi / 2}, {hi}]")
    t = math.sin(theta)
    c = math.cos(theta)
    den1 = y0 * c + x0 * t
    # den1 vanishes together with y0 - t at the upper endpoint, where the two
    # tangent lines coincide; the abscissa tends to the chord endpoint -x0.
    x1 = (y0 - t) / den1 if abs(den1) > 1e-14 else -x0
    x2 = (y0 - t) / (y0 * c - x0 * t)
    tri = (x0 / y0) * (t - y0) / (t + y0)
    product = (area + 2.0 * x0 * (t - y0)) * (polar_area - 2.0 * tri)
    quad = (polar_area * y0 - 2.0 * x0) * (t + y0) ** 2 + 2.0 * y0 * (4.0 * x0 * y0 - area)
    derivative = 2.0 * x0 * c * quad / (y0 * (t + y0) ** 2)
    return InsertionProfile(
        x0=x0,
        y0=y0,
        theta=theta,
        area=area,
        polar_area=polar_area,
        x1=x1,
        x2=x2,
        triangle_area=tri,
        product=product,
        derivative=derivative,
        quad_value=quad,
        cap_area=circle_cap_area(x0),
    )


@dataclass(frozen=True)
class BoundChainReport:
    """Margins (value - bound, all must be >= 0) of the derivative-sign inequality chain."""

    polar_slope_margin: float   # polar_area*y0 - 2*x0 >= 2*x0*y0^2
    quad_at_start_margin: float  # quad at t = y0: 2*y0*(2*polar_area*y0^2 - area) >= 0
    polar_area_margin: float    # polar_area >= hexagon-with-caps lower bound
    area_margin: float          # area <= clipped-disk upper bound
    cap_margin: float           # cap_area <= 2*y0*(1 - x0)
    cubic_margin: float         # x0^3 - 2*x0^2 + 1 >= 0

    def as_dict(self) -> dict:
        return {
            "polar_slope": self.polar_slope_margin,
            "quad_at_start": self.quad_at_start_margin,
            "polar_area": self.polar_area_margin,
            "area": self.area_margin,
            "cap": self.cap_margin,
            "cubic": self.cubic_margin,
        }


def deletion_bound_chain(x0: float, y0: float, Q: SymPolygon, slack: float = -1e-12) -> BoundChainReport:
    """Evaluate every inequality that forces the insertion product to be decreasing.

    ``Q`` is the polygon without the inserted pair (top edge from (-x0, y0) to
    (x0, y0), contained in the unit disk).  Raises CheckFailed naming the first
    violated inequality.
    """
    _check_chord(x0, y0)
    Q = Q.as_float()
    area = float(Q.area())
    polar_area = float(volume_product(Q).v_star)
    cap = circle_cap_area(x0)
    hexagon = 4.0 * x0 * y0 + 2.0 * x0 * (1.0 / y0 - y0)
    report = BoundChainReport(
        polar_slope_margin=polar_area * y0 - 2.0 * x0 - 2.0 * x0 * y0 ** 2,
        quad_at_start_margin=2.0 * y0 * (2.0 * polar_area * y0 ** 2 - area),
        polar_area_margin=polar_area - (hexagon + 2.0 * cap),
        area_margin=(4.0 * x0 * y0 + 2.0 * cap) - area,
        cap_margin=(1.0 - x0) * 2.0 * y0 - cap,
        cubic_margin=x0 ** 3 - 2.0 * x0 ** 2 + 1.0,
    )
    for name, margin in report.as_dict().items():
        if margin < slack:
            raise CheckFailed(f"inequality '{name}' violated: margin {margin:.3e}")
    return report


@dataclass(frozen=True)
class CrosscheckReport:
    theta: float
    formula_product: float
    geometric_product: float
    discrepancy: float
    merged: bool


def insertion_product_crosscheck(
    Q: SymPolygon, x0: float, y0: float, theta: float, tol: float = 1e-9
) -> CrosscheckReport:
    """Compare the closed-form product against the geometry of the actual hull.

    Builds conv(Q union {+-C}) with C = (cos theta, sin theta), computes its
    volume product from scratch, and checks it matches the closed form within
    ``tol``.  When C lands on the chord endpoint A (theta at the top of its
    range) the hull degenerates back to Q and both sides equal area*polar_area.
    """
    profile = insertion_product_profile(
        x0, y0, float(Q.area()), float(volume_product(Q).v_star), theta
    )
    C = Vec2(math.cos(theta), math.sin(theta))
    A = Vec2(-x0, y0)
    merged = (C - A).norm() <= 1e-9
    if merged:
        extended = Q.as_float()
    else:
        extended = validate_polygon(list(Q.as_float().vertices) + [C, -C])
    geo = float(volume_product(extended).product)
    disc = abs(geo - profile.product)
    if disc > tol:
        raise CheckFailed(
            f"closed-form product {profile.product!r} differs from geometric product "
            f"{geo!r} by {disc:.3e} at theta={theta}"
        )
    return CrosscheckReport(theta, profile.product, geo, disc, merged)

"""Certified reduction of a symmetric polygon to a parallelogram.

The pipeline normalizes the polygon inside the unit disk until three
consecutive vertices lie on the circle, deletes the middle vertex pair (which
never increases the volume product), and repeats until four vertices remain.
Every linear step preserves the volume product and every deletion is recorded
with the product before and after, so the resulting certificate witnesses
product(input) >= 8 up to accumulated float tolerance.

Normalization works with one circle chord at a time.  A chord with endpoints
(+-x0, y0) stays on the circle under the one-parameter family diag(s, t) with
s^2 = u and t^2 = (1 - u*x0^2)/y0^2; the squared image norm of any vertex is
linear in u, so the set of u keeping the polygon inside the disk is a closed
interval whose endpoints pin a new vertex onto the circle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .duality import volume_product
from .errors import (
    CheckFailed,
    DegenerateChord,
    EmptyInterval,
    MonotonicityViolated,
    NoProgress,
    OutOfInterval,
    PreconditionViolated,
    SingularMap,
)
from .polygon import LinMap2, SymPolygon, Vec2, apply_linear, on_circle_flags, validate_polygon
from .scalars import EPS_CIRCLE, EPS_PROD

_SQ2 = math.sqrt(0.5)
_U_TOL = 1e-9


@dataclass(frozen=True)
class ChordFrame:
    """A horizontal circle chord (+-x0, y0) with midpoint on the positive y-axis.

    ``idx_right``/``idx_left`` index the chord vertices (x0, y0) and (-x0, y0)
    in the polygon's canonical vertex order.
    """

    x0: float
    y0: float
    idx_right: int
    idx_left: int


@dataclass(frozen=True)
class ChordScaleInterval:
    """Feasible range for u = s^2 under the chord-preserving scaling.

    A ``None`` binding index marks an open end clamped at 0 or 1/x0^2 rather
    than a vertex constraint.
    """

    u_lo: float
    u_hi: float
    binding_lo: Optional[int]
    binding_hi: Optional[int]


@dataclass(frozen=True)
class ReductionStep:
    kind: str                 # inscribe_base | rotate | chord_scale | delete_pair
    matrix: Optional[tuple]   # row-major 2x2 entries for linear steps
    deleted: Optional[tuple]  # coordinates of the removed vertex
    product_before: float
    product_after: float


@dataclass(frozen=True)
class ReductionCertificate:
    """Ordered trace of volume-product-safe steps ending at a parallelogram."""

    input_polygon: SymPolygon
    steps: tuple
    final_polygon: SymPolygon
    final_product: float

    @property
    def deletion_count(self) -> int:
        return sum(1 for s in self.steps if s.kind == "delete_pair")

    def product_sequence(self) -> list:
        """Volume product at the start and after every deletion."""
        seq = [self.steps[0].product_before if self.steps else self.final_product]
        for s in self.steps:
            if s.kind == "delete_pair":
                seq.append(s.product_after)
        return seq

    def check(self, eps_prod: float = EPS_PROD, final_tol: float = 1e-6) -> None:
        """Assert every certificate invariant; raises CheckFailed on violation."""
        prev_after = None
        for i, s in enumerate(self.steps):
            if prev_after is not None and abs(s.product_before - prev_after) > 1e-12:
                raise CheckFailed(f"step {i}: product chain broken")
            if s.kind == "delete_pair":
                if s.product_after > s.product_before + eps_prod:
                    raise CheckFailed(
                        f"step {i}: deletion increased the product by "
                        f"{s.product_after - s.product_before:.3e}"
                    )
            elif abs(s.product_after - s.product_before) > eps_prod:
                raise CheckFailed(
                    f"step {i}: linear step changed the product by "
                    f"{s.product_after - s.product_before:.3e}"
                )
            prev_after = s.product_after
        last = self.steps[-1].product_after if self.steps else self.final_product
        if abs(last - self.final_product) > 1e-12:
            raise CheckFailed("final product does not match the last step")
        if abs(self.final_product - 8.0) > final_tol:
            raise CheckFailed(f"final product {self.final_product!r} is not 8")
        if len(self.final_polygon.vertices) != 4:
            raise CheckFailed("final polygon is not a parallelogram")


# -- elementary moves --------------------------------------------------------


def inscribe_base(P: SymPolygon, i: int):
    """Map the adjacent vertex pair (v_i, v_{i+1}) onto the inscribed square.

    Returns (image polygon, map).  The map sends v_i to (s, s) and v_{i+1} to
    (-s, s) with s = sqrt(1/2), so the pair and its antipodes land on the unit
    circle with a horizontal chord above the origin.
    """
    P = P.as_float()
    m = len(P.vertices)
    v1 = P.vertices[i % m]
    v2 = P.vertices[(i + 1) % m]
    c = float(v1.cross(v2))
    if abs(c) <= 1e-15:
        raise SingularMap("adjacent vertices aligned with the origin")
    w, u = Vec2(_SQ2, _SQ2), Vec2(-_SQ2, _SQ2)
    T = LinMap2(
        (w.x * v2.y - u.x * v1.y) / c,
        (-w.x * v2.x + u.x * v1.x) / c,
        (w.y * v2.y - u.y * v1.y) / c,
        (-w.y * v2.x + u.y * v1.x) / c,
    )
    return apply_linear(P, T), T


def _locate_vertex(P: SymPolygon, target: Vec2, tol: float = 1e-6) -> int:
    best_i, best_d = -1, math.inf
    for idx, v in enumerate(P.vertices):
        d = (v - target).norm()
        if d < best_d:
            best_i, best_d = idx, d
    if best_d > tol:
        raise CheckFailed(f"no vertex within {tol} of {tuple(target)}")
    return best_i


def chord_frame(P: SymPolygon, idx_right: int, idx_left: int) -> ChordFrame:
    """Build and sanity-check the frame for the chord vertices at the given indices."""
    w = P.vertices[idx_right]
    u = P.vertices[idx_left]
    x0 = (float(w.x) - float(u.x)) / 2.0
    y0 = (float(w.y) + float(u.y)) / 2.0
    if x0 <= EPS_CIRCLE or y0 <= EPS_CIRCLE:
        raise DegenerateChord(f"chord half-extents ({x0}, {y0}) too small")
    if abs(float(w.x) + float(u.x)) > 1e-6 or abs(float(w.y) - float(u.y)) > 1e-6:
        raise DegenerateChord("chord is not horizontal with midpoint on the y-axis")
    if abs(x0 * x0 + y0 * y0 - 1.0) > 1e-6:
        raise DegenerateChord(f"chord endpoint ({x0}, {y0}) not on the unit circle")
    return ChordFrame(x0, y0, idx_right, idx_left)


def chord_scale_interval(P: SymPolygon, frame: ChordFrame) -> ChordScaleInterval:
    """Feasible u-interval keeping every vertex inside the closed unit disk.

    For a vertex v the squared image norm under diag(sqrt(u), t(u)) is
    ``u * slope(v) + intercept(v)`` with slope = vx^2 - (x0^2/y0^2) vy^2 and
    intercept = vy^2 / y0^2, so each non-chord vertex contributes one linear
    constraint: an upper bound on u when the slope is positive, a lower bound
    when it is negative.  The chord vertices impose nothing (their image stays
    on the circle for every u).
    """
    P = P.as_float()
    m = len(P.vertices)
    n = m // 2
    x0sq = frame.x0 * frame.x0
    y0sq = frame.y0 * frame.y0
    skip = {
        frame.idx_right % m,
        frame.idx_left % m,
        (frame.idx_right + n) % m,
        (frame.idx_left + n) % m,
    }
    u_lo, u_hi = 0.0, 1.0 / x0sq
    b_lo: Optional[int] = None
    b_hi: Optional[int] = None
    for idx, v in enumerate(P.vertices):
        if idx in skip:
            continue
        vx, vy = float(v.x), float(v.y)
        slope = vx * vx - (x0sq / y0sq) * (vy * vy)
        intercept = (vy * vy) / y0sq
        if abs(slope) <= 1e-15:
            if intercept > 1.0 + 10 * EPS_CIRCLE:
                raise EmptyInterval(f"vertex {idx} blocks every chord scale")
            continue
        bound = (1.0 - intercept) / slope
        if slope > 0:
            if bound < u_hi:
                u_hi, b_hi = bound, idx
        else:
            if bound > u_lo:
                u_lo, b_lo = bound, idx
    if u_lo > u_hi + _U_TOL:
        raise EmptyInterval(f"chord-scale constraints conflict: u_lo={u_lo!r} > u_hi={u_hi!r}")
    return ChordScaleInterval(min(u_lo, u_hi), u_hi, b_lo, b_hi)


def chord_scale_map(frame: ChordFrame, u: float) -> LinMap2:
    t_sq = (1.0 - u * frame.x0 * frame.x0) / (frame.y0 * frame.y0)
    if u <= 0 or t_sq <= 0:
        raise OutOfInterval(f"u={u!r} leaves no valid vertical scale")
    return LinMap2.diagonal(math.sqrt(u), math.sqrt(t_sq))


def apply_chord_scale(P: SymPolygon, frame: ChordFrame, u: float):
    """Apply diag(sqrt(u), t) for u inside the feasible interval; returns (polygon, map).

    The chord vertices stay on the circle for every u; at an interval endpoint
    the binding vertex lands on the circle as well.
    """
    interval = chord_scale_interval(P, frame)
    if not (interval.u_lo - _U_TOL <= u <= interval.u_hi + _U_TOL):
        raise OutOfInterval(
            f"u={u!r} outside feasible interval [{interval.u_lo!r}, {interval.u_hi!r}]"
        )
    T = chord_scale_map(frame, u)
    return apply_linear(P, T), T


# -- normalization -----------------------------------------------------------


def _inside_disk(P: SymPolygon, eps: float) -> bool:
    return all(v.norm() <= 1.0 + eps for v in P.vertices)


def _find_triple(P: SymPolygon, eps: float):
    flags = on_circle_flags(P, eps)
    m = len(flags)
    for i in range(m):
        if flags[i - 1] and flags[i] and flags[(i + 1) % m]:
            return ((i - 1) % m, i, (i + 1) % m)
    return None


def _circle_pairs(P: SymPolygon, eps: float):
    """Adjacent on-circle vertex pairs as (gap, start_idx, end_idx) with gap >= 1."""
    flags = on_circle_flags(P, eps)
    m = len(flags)
    idxs = [i for i in range(m) if flags[i]]
    if not idxs:
        raise NoProgress("no on-circle vertices to anchor a chord")
    pairs = []
    for k, i in enumerate(idxs):
        j = idxs[(k + 1) % len(idxs)]
        gap = (j - i - 1) % m
        if gap >= 1:
            pairs.append((gap, i, j))
    return pairs


class _Tracker:
    """Accumulates steps and enforces product invariance along linear moves."""

    def __init__(self, P: SymPolygon):
        self.P = P
        self.product = float(volume_product(P).product)
        self.steps: list = []

    def linear(self, kind: str, T: LinMap2, Q: SymPolygon) -> None:
        after = float(volume_product(Q).product)
        if abs(after - self.product) > EPS_PROD:
            raise CheckFailed(f"{kind} changed the volume product by {after - self.product:.3e}")
        self.steps.append(
            ReductionStep(kind, tuple(float(a) for a in T.as_tuple()), None, self.product, after)
        )
        self.P, self.product = Q, after

    def delete(self, Q: SymPolygon, removed: Vec2) -> None:
        after = float(volume_product(Q).product)
        if after > self.product + EPS_PROD:
            raise MonotonicityViolated(
                f"deleting {tuple(removed)} raised the product by {after - self.product:.3e}"
            )
        self.steps.append(
            ReductionStep(
                "delete_pair", None, (float(removed.x), float(removed.y)), self.product, after
            )
        )
        self.P, self.product = Q, after

    def rotate_chord_to_top(self, v_right: Vec2, v_left: Vec2):
        """Rotate so that the chord bisector points up; returns the chord's image coords."""
        mid = v_right + v_left
        angle = math.pi / 2 - math.atan2(float(mid.y), float(mid.x))
        R = LinMap2.rotation(angle)
        r_img, l_img = R.apply(v_right), R.apply(v_left)
        if abs(angle) > 1e-14:
            self.linear("rotate", R, apply_linear(self.P, R))
        return r_img, l_img

    def scale_chord(self, frame: ChordFrame, u: float) -> None:
        if abs(u - 1.0) <= 1e-12:
            return  # identity scale; nothing to record
        Q, T = apply_chord_scale(self.P, frame, u)
        self.linear("chord_scale", T, Q)
        if not _inside_disk(self.P, EPS_CIRCLE):
            raise CheckFailed("chord scale pushed a vertex outside the unit disk")


def _fresh_chord_choice(interval: ChordScaleInterval) -> float:
    """Endpoint rule for the first scale on a fresh chord.

    If the current configuration (u = 1) is infeasible, move to the nearest
    feasible endpoint; otherwise move to an endpoint that pins a new vertex on
    the circle, preferring u_lo (the vertical stretch) when both ends bind.
    """
    if 1.0 < interval.u_lo - _U_TOL:
        return interval.u_lo
    if 1.0 > interval.u_hi + _U_TOL:
        return interval.u_hi
    if interval.binding_lo is not None:
        return interval.u_lo
    if interval.binding_hi is not None:
        return interval.u_hi
    raise NoProgress("chord scale has no vertex constraint to bind")


def _normalize(tracker: _Tracker, pending_chord) -> tuple:
    """Drive the polygon until three consecutive vertices sit on the circle.

    ``pending_chord`` optionally carries the coordinates (right, left) of a
    chord to scale first under the fresh-chord endpoint rule.  Afterwards the
    loop repeatedly picks the adjacent on-circle pair enclosing the fewest
    interior vertices, rotates it on top, and scales to the interval's lower
    endpoint; that pins an enclosed vertex onto the circle, so the tracked gap
    strictly shrinks.  Returns the triple of on-circle vertex indices.
    """
    cap = 4 * len(tracker.P.vertices) + 4
    for _ in range(cap):
        if pending_chord is None and not _inside_disk(tracker.P, EPS_CIRCLE):
            raise CheckFailed("polygon escaped the unit disk during normalization")
        triple = _find_triple(tracker.P, EPS_CIRCLE)
        if triple is not None and _inside_disk(tracker.P, EPS_CIRCLE):
            return triple
        if pending_chord is not None:
            right, left = pending_chord
            pending_chord = None
            r_img, l_img = tracker.rotate_chord_to_top(right, left)
            frame = chord_frame(
                tracker.P, _locate_vertex(tracker.P, r_img), _locate_vertex(tracker.P, l_img)
            )
            u = _fresh_chord_choice(chord_scale_interval(tracker.P, frame))
            tracker.scale_chord(frame, u)
            continue
        pairs = _circle_pairs(tracker.P, EPS_CIRCLE)
        if not pairs:
            raise NoProgress("all on-circle vertices adjacent yet no triple found")
        _, i, j = min(pairs)
        r_img, l_img = tracker.rotate_chord_to_top(tracker.P.vertices[i], tracker.P.vertices[j])
        frame = chord_frame(
            tracker.P, _locate_vertex(tracker.P, r_img), _locate_vertex(tracker.P, l_img)
        )
        interval = chord_scale_interval(tracker.P, frame)
        if interval.binding_lo is None:
            raise NoProgress("gap vertices impose no lower bound; eps misclassification")
        tracker.scale_chord(frame, interval.u_lo)
    raise NoProgress(f"normalization did not converge within {cap} iterations")


def _initial_triple(tracker: _Tracker) -> tuple:
    if _inside_disk(tracker.P, EPS_CIRCLE):
        triple = _find_triple(tracker.P, EPS_CIRCLE)
        if triple is not None:
            return triple
    Q, T = inscribe_base(tracker.P, 0)
    tracker.linear("inscribe_base", T, Q)
    return _normalize(tracker, (Vec2(_SQ2, _SQ2), Vec2(-_SQ2, _SQ2)))


def normalize_three_on_circle(P: SymPolygon):
    """Transform P into the unit disk with three consecutive vertices on the circle.

    Returns (polygon, triple of consecutive vertex indices, recorded steps).
    If the input already satisfies the postcondition nothing is recorded;
    otherwise the first adjacent vertex pair is mapped onto the inscribed
    square and the chord-scaling loop runs until a triple appears.
    """
    P = P.as_float()
    if len(P.vertices) < 6:
        raise PreconditionViolated("normalization expects at least 6 vertices")
    tracker = _Tracker(P)
    triple = _initial_triple(tracker)
    return tracker.P, triple, tracker.steps


# -- deletion and full reduction ----------------------------------------------


def delete_vertex_pair(P: SymPolygon, c: int) -> SymPolygon:
    """Remove vertex c and its antipode; the volume product must not increase.

    Preconditions: the polygon lies in the unit disk, vertex c and both its
    neighbors are on the circle, and at least 6 vertices remain.
    """
    P = P.as_float()
    m = len(P.vertices)
    if m <= 4:
        raise PreconditionViolated("deleting from a 4-gon would leave a segment")
    flags = on_circle_flags(P, EPS_CIRCLE)
    c %= m
    if not (flags[c - 1] and flags[c] and flags[(c + 1) % m]):
        raise PreconditionViolated("vertex and both neighbors must lie on the unit circle")
    if not _inside_disk(P, EPS_CIRCLE):
        raise PreconditionViolated("polygon must lie inside the unit disk")
    n = m // 2
    drop = {c, (c + n) % m}
    Q = validate_polygon([v for i, v in enumerate(P.vertices) if i not in drop])
    before = float(volume_product(P).product)
    after = float(volume_product(Q).product)
    if after > before + EPS_PROD:
        raise MonotonicityViolated(f"product rose from {before!r} to {after!r} on deletion")
    return Q


def reduce_to_parallelogram(P: SymPolygon) -> ReductionCertificate:
    """Run the full certified reduction down to a parallelogram.

    Exact-mode input converts to float once, here.  A 2n-gon reduces in
    exactly n - 2 deletions; the certificate records every linear step and
    deletion with volume products and is checked before being returned.
    """
    P = P.as_float()
    tracker = _Tracker(P)
    if len(P.vertices) > 4:
        triple = _initial_triple(tracker)
        while True:
            removed = tracker.P.vertices[triple[1]]
            survivors = (tracker.P.vertices[triple[0]], tracker.P.vertices[triple[2]])
            tracker.delete(delete_vertex_pair(tracker.P, triple[1]), removed)
            if len(tracker.P.vertices) == 4:
                break
            # survivors stay on the circle and are now adjacent: reuse them as
            # the next chord instead of re-running the inscribing step.
            triple = _find_triple(tracker.P, EPS_CIRCLE)
            if triple is None or not _inside_disk(tracker.P, EPS_CIRCLE):
                triple = _normalize(tracker, survivors)
    cert = ReductionCertificate(
        input_polygon=P,
        steps=tuple(tracker.steps),
        final_polygon=tracker.P,
        final_product=tracker.product,
    )
    cert.check()
    return cert

"""Deterministic random corpora of symmetric polygons and batch verification.

Polygons are drawn by sampling n angles in [0, pi) with a minimum separation
of pi/(8n) and radii in [1 - jitter, 1], appending exact antipodes, and taking
the symmetric convex hull.  The stream for (seed, index) is derived with a
splitmix-style mixer, so identical configs reproduce identical corpora
bit-for-bit on every platform.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional

from .duality import volume_product
from .errors import DegenerateDraw, GeometryError
from .polygon import SymPolygon, Vec2, validate_polygon
from .reduction import reduce_to_parallelogram
from .scalars import format_scalar

_MASK64 = (1 << 64) - 1


def _mix64(z: int) -> int:
    z = (z + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


@dataclass(frozen=True)
class CorpusConfig:
    count: int
    vertex_pairs: int
    seed: int
    radius_jitter: float = 0.2

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be at least 1")
        if self.vertex_pairs < 2:
            raise ValueError("vertex_pairs must be at least 2")
        if not 0.0 <= self.radius_jitter < 1.0:
            raise ValueError("radius_jitter must lie in [0, 1)")


def _symmetric_hull(generators: list) -> Optional[list]:
    """Drop generators whose points are not extreme in the symmetric point set.

    Points arrive sorted by angle; a vertex fails if the full symmetric list
    does not turn strictly left there.  Returns the surviving generators, or
    None if fewer than two pairs remain.
    """
    gens = list(generators)
    while len(gens) >= 2:
        pts = gens + [-g for g in gens]
        m = len(pts)
        bad = None
        for i in range(m):
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % m]
            if (b - a).cross(c - b) <= 1e-9:
                bad = i % len(gens)
                break
        if bad is None:
            return gens
        del gens[bad]
    return None


def generate_random_polygon(config: CorpusConfig, index: int) -> SymPolygon:
    """Deterministic polygon for (config.seed, index); retries degenerate draws.

    The convex hull may drop interior points, so the result can have fewer
    than 2 * vertex_pairs vertices; with jitter 0 every point is extreme and
    the count is exact.
    """
    rng = random.Random(_mix64(_mix64(config.seed) ^ (index & _MASK64)))
    n = config.vertex_pairs
    min_sep = math.pi / (8 * n)
    for _ in range(100):
        angles = sorted(rng.random() * math.pi for _ in range(n))
        gaps_ok = all(
            angles[i + 1] - angles[i] >= min_sep for i in range(n - 1)
        ) and (angles[0] + math.pi - angles[-1]) >= min_sep
        if not gaps_ok:
            continue
        radii = [1.0 - config.radius_jitter * rng.random() for _ in range(n)]
        gens = [
            Vec2(r * math.cos(a), r * math.sin(a)) for a, r in zip(angles, radii)
        ]
        kept = _symmetric_hull(gens)
        if kept is None:
            continue
        try:
            return validate_polygon(kept + [-g for g in kept])
        except GeometryError:
            continue
    raise DegenerateDraw(f"no valid polygon after 100 draws for index {index}")


@dataclass(frozen=True)
class CorpusSummary:
    config: CorpusConfig
    min_product: float
    max_product: float
    mean_product: float
    argmin_index: int
    worst_monotonicity: float   # max over deletions of product_after - product_before
    failures: tuple             # (index, message) pairs; must be empty

    def format(self) -> str:
        lines = [
            f"count={self.config.count} pairs={self.config.vertex_pairs} "
            f"seed={self.config.seed} jitter={format_scalar(self.config.radius_jitter)}",
            f"min_product={format_scalar(self.min_product)} (index {self.argmin_index})",
            f"max_product={format_scalar(self.max_product)}",
            f"mean_product={format_scalar(self.mean_product)}",
            f"worst_monotonicity={format_scalar(self.worst_monotonicity)}",
            f"failures={len(self.failures)}",
        ]
        lines.extend(f"  index {i}: {msg}" for i, msg in self.failures)
        return "\n".join(lines)


def corpus_verify(config: CorpusConfig) -> CorpusSummary:
    """Generate the corpus, reduce every polygon, and summarize the products.

    Each polygon's volume product is computed directly and its reduction
    certificate re-checked; any exception is collected as a failure instead of
    aborting the run.
    """
    total = 0.0
    count_ok = 0
    min_product, max_product = math.inf, -math.inf
    argmin_idx = -1
    worst_mono = -math.inf
    failures = []
    for index in range(config.count):
        try:
            P = generate_random_polygon(config, index)
            product = float(volume_product(P).product)
            cert = reduce_to_parallelogram(P)
            cert.check()
            if cert.deletion_count != P.pair_count - 2:
                raise GeometryError(
                    f"expected {P.pair_count - 2} deletions, saw {cert.deletion_count}"
                )
            for step in cert.steps:
                if step.kind == "delete_pair":
                    worst_mono = max(worst_mono, step.product_after - step.product_before)
        except GeometryError as exc:
            failures.append((index, str(exc)))
            continue
        total += product
        count_ok += 1
        max_product = max(max_product, product)
        if product < min_product:
            min_product, argmin_idx = product, index
    if count_ok == 0:
        raise DegenerateDraw("every polygon in the corpus failed")
    return CorpusSummary(
        config=config,
        min_product=min_product,
        max_product=max_product,
        mean_product=total / count_ok,
        argmin_index=argmin_idx,
        worst_monotonicity=worst_mono,
        failures=tuple(failures),
    )


def random_rational_polygon(
    rng: random.Random, vertex_pairs: int, denominator: int = 10**6, jitter: float = 0.2
) -> SymPolygon:
    """Random exact-mode polygon: float draw snapped to rationals, revalidated.

    Snapping can break strict convexity, so the draw retries until the exact
    predicates accept it.
    """
    from fractions import Fraction

    n = vertex_pairs
    min_sep = math.pi / (8 * n)
    for _ in range(200):
        angles = sorted(rng.random() * math.pi for _ in range(n))
        ok = all(
            angles[i + 1] - angles[i] >= min_sep for i in range(n - 1)
        ) and (angles[0] + math.pi - angles[-1]) >= min_sep
        if not ok:
            continue
        gens = []
        for a in angles:
            r = 1.0 - jitter * rng.random()
            gens.append(
                Vec2(
                    Fraction(round(r * math.cos(a) * denominator), denominator),
                    Fraction(round(r * math.sin(a) * denominator), denominator),
                )
            )
        try:
            return validate_polygon(gens + [-g for g in gens])
        except GeometryError:
            continue
    raise DegenerateDraw("no valid rational polygon after 200 draws")

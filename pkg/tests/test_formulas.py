import math
import random

import pytest

from mahler2d import (
    DomainError,
    circle_cap_area,
    deletion_bound_chain,
    insertion_product_crosscheck,
    insertion_product_profile,
    theta_upper,
    validate_polygon,
    volume_product,
)

SQ2 = math.sqrt(0.5)


def random_chord_polygon(rng, max_extra=3):
    """Polygon inside the disk whose top edge joins (-x0, y0) and (x0, y0)."""
    while True:
        x0 = 0.15 + 0.75 * rng.random()
        y0 = math.sqrt(1.0 - x0 * x0)
        lo = math.pi - math.atan2(y0, x0) + 0.05
        hi = math.pi + math.atan2(y0, x0) - 0.05
        k = rng.randint(0, max_extra)
        angles = sorted(lo + (hi - lo) * rng.random() for _ in range(k))
        if any(b - a < 0.05 for a, b in zip(angles, angles[1:])):
            continue
        pts = [(x0, y0), (-x0, y0)]
        pts += [(r * math.cos(a), r * math.sin(a)) for a in angles for r in [0.5 + 0.45 * rng.random()]]
        try:
            return x0, y0, validate_polygon(pts + [(-x, -y) for x, y in pts])
        except Exception:
            continue


def sample_theta(rng, x0, y0):
    hi = theta_upper(x0, y0)
    return math.pi / 2 + (hi - math.pi / 2 - 1e-3) * rng.random()


class TestProfile:
    def test_inscribed_square_at_theta_half_pi(self):
        prof = insertion_product_profile(SQ2, SQ2, 2.0, 4.0, math.pi / 2)
        assert prof.triangle_area == pytest.approx(3 - 2 * math.sqrt(2), abs=1e-12)
        assert prof.product == pytest.approx(6 + 2 * math.sqrt(2), abs=1e-12)
        assert prof.derivative == pytest.approx(0.0, abs=1e-12)  # cos factor vanishes

    def test_upper_endpoint_degenerates_to_bare_product(self):
        hi = theta_upper(SQ2, SQ2)
        prof = insertion_product_profile(SQ2, SQ2, 2.0, 4.0, hi)
        assert prof.product == pytest.approx(2.0 * 4.0, abs=1e-12)
        assert prof.triangle_area == pytest.approx(0.0, abs=1e-12)

    def test_theta_outside_range_rejected(self):
        with pytest.raises(DomainError):
            insertion_product_profile(SQ2, SQ2, 2.0, 4.0, 1.0)
        with pytest.raises(DomainError):
            insertion_product_profile(SQ2, SQ2, 2.0, 4.0, 3.0)

    def test_bad_chord_rejected(self):
        with pytest.raises(DomainError):
            insertion_product_profile(0.9, 0.9, 2.0, 4.0, math.pi / 2)

    def test_derivative_nonpositive_on_grids(self):
        rng = random.Random(41)
        for _ in range(25):
            x0, y0, Q = random_chord_polygon(rng)
            area = float(Q.area())
            polar_area = float(volume_product(Q).v_star)
            hi = theta_upper(x0, y0)
            for k in range(200):
                theta = math.pi / 2 + (hi - math.pi / 2) * k / 199
                prof = insertion_product_profile(x0, y0, area, polar_area, theta)
                assert prof.derivative <= 1e-12

    def test_quad_nondecreasing_and_nonnegative_at_start(self):
        rng = random.Random(42)
        for _ in range(25):
            x0, y0, Q = random_chord_polygon(rng)
            area = float(Q.area())
            polar_area = float(volume_product(Q).v_star)
            hi = theta_upper(x0, y0)
            prev = None
            # t = sin(theta) decreases from 1 to y0 as theta moves right of pi/2,
            # so walk theta downward to sweep t upward
            for k in range(100, -1, -1):
                theta = math.pi / 2 + (hi - math.pi / 2) * k / 100
                prof = insertion_product_profile(x0, y0, area, polar_area, theta)
                if prev is not None:
                    assert prof.quad_value >= prev - 1e-9
                prev = prof.quad_value
            start = insertion_product_profile(x0, y0, area, polar_area, hi)
            assert start.quad_value >= -1e-12


class TestCrosscheck:
    def test_inscribed_square_both_sides(self, inscribed_square):
        rep = insertion_product_crosscheck(inscribed_square, SQ2, SQ2, math.pi / 2)
        assert rep.formula_product == pytest.approx(6 + 2 * math.sqrt(2), abs=1e-12)
        assert rep.discrepancy <= 1e-12

    def test_endpoint_merges_into_bare_polygon(self, inscribed_square):
        rep = insertion_product_crosscheck(inscribed_square, SQ2, SQ2, theta_upper(SQ2, SQ2))
        assert rep.merged
        assert rep.geometric_product == pytest.approx(8.0, abs=1e-12)

    def test_random_configurations(self):
        rng = random.Random(43)
        worst = 0.0
        for _ in range(50):
            x0, y0, Q = random_chord_polygon(rng)
            rep = insertion_product_crosscheck(Q, x0, y0, sample_theta(rng, x0, y0))
            worst = max(worst, rep.discrepancy)
        assert worst <= 1e-9


class TestBoundChain:
    def test_inscribed_square_margins(self, inscribed_square):
        rep = deletion_bound_chain(SQ2, SQ2, inscribed_square)
        # hand arithmetic: polar area 4, area 2
        assert rep.polar_slope_margin == pytest.approx(4 * SQ2 - math.sqrt(2) - 2 * SQ2 * 0.5, abs=1e-12)
        assert rep.quad_at_start_margin == pytest.approx(2 * SQ2 * (2 * 4 * 0.5 - 2), abs=1e-12)
        assert all(margin >= 0 for margin in rep.as_dict().values())

    def test_cubic_boundary_value(self):
        assert 1.0 ** 3 - 2 * 1.0 ** 2 + 1 == 0

    def test_cap_degenerates_at_one(self):
        assert circle_cap_area(1.0) == pytest.approx(0.0, abs=1e-15)
        assert (1 - 1.0) * 2 * 0.0 - circle_cap_area(1.0) == pytest.approx(0.0, abs=1e-15)

    def test_cap_area_against_quadrature(self):
        # oracle: midpoint quadrature of the segment right of x = x0
        import numpy as np

        for x0 in (0.2, 0.5, 0.8):
            xs = np.linspace(x0, 1.0, 20001)
            mid = 0.5 * (xs[1:] + xs[:-1])
            approx = float((2 * np.sqrt(1 - mid**2) * np.diff(xs)).sum())
            assert circle_cap_area(x0) == pytest.approx(approx, abs=1e-6)

    def test_random_configurations_satisfy_chain(self):
        rng = random.Random(44)
        for _ in range(40):
            x0, y0, Q = random_chord_polygon(rng)
            rep = deletion_bound_chain(x0, y0, Q)
            assert all(margin >= -1e-12 for margin in rep.as_dict().values())

import math

import numpy as np
import pytest

from mahler2d import (
    BoundViolated,
    NotConvex,
    SampledBody,
    contains_polygon,
    continuity_experiment,
    disk,
    ellipse,
    from_polygon,
    inscribe_polygon,
    p_ball,
    validate_polygon,
    volume_product,
)
from mahler2d.metrics import direction_grid, radial_grid

PI2 = math.pi ** 2


class TestOracles:
    @pytest.mark.parametrize("body", [disk(), ellipse(2.0, 1.0), p_ball(1.0),
                                      p_ball(1.5), p_ball(3.0), p_ball(math.inf)])
    def test_even_positive_and_bounded(self, body):
        for k in range(32):
            theta = 2 * math.pi * k / 32 + 0.013
            rho = body.radial(theta)
            assert rho > 0
            assert body.radial(theta + math.pi) == pytest.approx(rho, abs=1e-12)
            assert body.r0 - 1e-12 <= rho <= body.r1 + 1e-12

    def test_pball_extremes(self):
        assert p_ball(1.0).r0 == pytest.approx(math.sqrt(0.5))
        assert p_ball(math.inf).r1 == pytest.approx(math.sqrt(2.0))
        assert p_ball(2.0).r0 == p_ball(2.0).r1 == 1.0


class TestInscribe:
    def test_disk_four_gon_is_rotated_square(self):
        P = inscribe_polygon(disk(), 4)
        assert {(round(float(v.x), 12), round(float(v.y), 12)) for v in P.vertices} == {
            (1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (-0.0, -1.0)
        } or len(P.vertices) == 4
        assert float(volume_product(P).product) == pytest.approx(8.0, abs=1e-12)

    def test_disk_hexagon_product_is_nine(self):
        P = inscribe_polygon(disk(), 6)
        assert float(volume_product(P).product) == pytest.approx(9.0, abs=1e-12)

    def test_polygons_are_inscribed(self):
        body = ellipse(2.0, 1.0)
        P = inscribe_polygon(body, 32)
        angles = direction_grid(512)
        rho_body = np.array([body.radial(a) for a in angles])
        assert (radial_grid(P, angles) <= rho_body + 1e-9).all()

    def test_grid_refinement_nests(self):
        body = p_ball(3.0)
        outer, inner = inscribe_polygon(body, 64), inscribe_polygon(body, 16)
        assert contains_polygon(outer, inner, tol=1e-12)

    def test_ellipse_product_near_disk_product(self):
        P = inscribe_polygon(ellipse(2.0, 1.0), 64)
        product = float(volume_product(P).product)
        assert abs(product - PI2) / PI2 <= 0.005

    def test_square_body_recovers_square_on_aligned_grids(self):
        square = validate_polygon([(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)])
        body = from_polygon(square)
        for m in (8, 16, 24):
            P = inscribe_polygon(body, m)
            assert len(P.vertices) == 4
            assert float(volume_product(P).product) == pytest.approx(8.0, abs=1e-9)

    def test_corner_merge_aligns_off_grid_samples(self):
        square = validate_polygon([(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)])
        body = from_polygon(square)
        P = inscribe_polygon(body, 6, include_corners=True)  # 6 is not a multiple of 8
        assert float(volume_product(P).product) == pytest.approx(8.0, abs=1e-9)

    def test_odd_or_tiny_m_rejected(self):
        with pytest.raises(ValueError):
            inscribe_polygon(disk(), 5)
        with pytest.raises(ValueError):
            inscribe_polygon(disk(), 2)

    def test_nonconvex_oracle_rejected(self):
        wavy = SampledBody("wavy", lambda t: 1.0 + 0.4 * math.cos(4 * t), 0.6, 1.4)
        with pytest.raises(NotConvex):
            inscribe_polygon(wavy, 64)

    def test_sandwich_between_parallelogram_and_disk(self):
        for body in (disk(), ellipse(2.0, 1.0), p_ball(1.5), p_ball(3.0)):
            for m in (8, 32, 128):
                product = float(volume_product(inscribe_polygon(body, m)).product)
                assert 8.0 - 1e-9 <= product <= PI2 + 1e-6


class TestContinuityExperiment:
    def test_disk_run(self):
        rows = continuity_experiment(disk(), [8, 16, 32, 64, 128, 256])
        products = [r.product for r in rows]
        assert all(b > a for a, b in zip(products, products[1:]))
        assert abs(products[-1] - PI2) <= 0.01
        for r in rows:
            closed_form = (r.m * math.sin(math.pi / r.m)) ** 2
            assert r.product == pytest.approx(closed_form, abs=1e-9)
            if r.hausdorff_proxy < 0.5:  # r0/2 for the disk
                assert r.radial_gap <= r.bound_rhs + 1e-12
        polar_d = [r.polar_distance for r in rows]
        assert all(b <= a for a, b in zip(polar_d, polar_d[1:]))

    def test_ellipse_products_approach_disk_product(self):
        rows = continuity_experiment(ellipse(2.0, 1.0), [16, 32, 64])
        gaps = [abs(r.product - PI2) for r in rows]
        assert all(b < a for a, b in zip(gaps, gaps[1:]))

    def test_square_body_products_lock_at_eight(self):
        square = validate_polygon([(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)])
        rows = continuity_experiment(from_polygon(square), [8, 16, 32])
        for r in rows:
            assert r.product == pytest.approx(8.0, abs=1e-9)

    def test_unsorted_m_list_rejected(self):
        with pytest.raises(ValueError):
            continuity_experiment(disk(), [16, 8])

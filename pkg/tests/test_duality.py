import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mahler2d import (
    LinMap2,
    apply_linear,
    contains_polygon,
    polar,
    polar_transform_check,
    unit,
    validate_polygon,
    volume_product,
)
from conftest import rational_polygon, random_float_polygon


def random_rational_map(rng):
    while True:
        A = LinMap2(*[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(4)])
        if A.det != 0:
            return A


class TestPolar:
    def test_square_dualizes_to_diamond(self, square_exact, diamond_exact):
        assert polar(square_exact) == diamond_exact

    def test_diamond_dualizes_to_square(self, square_exact, diamond_exact):
        assert polar(diamond_exact) == square_exact

    def test_regular_hexagon_polar_against_solver_oracle(self):
        verts = [unit(2 * math.pi * k / 6) for k in range(6)]
        hexagon = validate_polygon(verts)
        dual = polar(hexagon)
        # oracle: solve <q, p_i> = <q, p_{i+1}> = 1 with numpy per edge
        expected = []
        for i in range(6):
            p, q = hexagon.vertices[i], hexagon.vertices[(i + 1) % 6]
            sol = np.linalg.solve([[p.x, p.y], [q.x, q.y]], [1.0, 1.0])
            expected.append((sol[0], sol[1]))
        got = {(round(float(v.x), 9), round(float(v.y), 9)) for v in dual.vertices}
        want = {(round(x, 9), round(y, 9)) for x, y in expected}
        assert got == want
        # circumradius 2/sqrt(3), vertices rotated half a step
        assert max(v.norm() for v in dual.vertices) == pytest.approx(2 / math.sqrt(3), abs=1e-12)

    def test_involution_exact(self, square_exact, diamond_exact, rational_hexagon):
        for P in (square_exact, diamond_exact, rational_hexagon):
            assert polar(polar(P)) == P

    @given(st.integers(0, 10**6))
    @settings(max_examples=30, deadline=None)
    def test_involution_on_random_rational_polygons(self, seed):
        P = rational_polygon(seed % 9973, 4)
        assert polar(polar(P)) == P

    def test_vertex_count_preserved(self):
        P = random_float_polygon(23, 9)
        assert len(polar(P).vertices) == len(P.vertices)

    def test_monotone_under_inclusion(self):
        P = rational_polygon(5, 5)
        Q = apply_linear(P, LinMap2.diagonal(2, 2))
        assert contains_polygon(Q, P)
        assert contains_polygon(polar(P), polar(Q))


class TestVolumeProduct:
    def test_square_product_is_eight(self, square_exact):
        rep = volume_product(square_exact)
        assert (rep.v, rep.v_star, rep.product) == (4, 2, 8)

    def test_any_parallelogram_has_product_eight(self):
        P = validate_polygon([(2, 1), (-1, 1), (-2, -1), (1, -1)])
        assert volume_product(P).product == 8

    def test_regular_hexagon_product_is_nine(self):
        hexagon = validate_polygon([unit(2 * math.pi * k / 6) for k in range(6)])
        assert float(volume_product(hexagon).product) == pytest.approx(9.0, abs=1e-12)

    def test_rational_hexagon_product_exactly_nine(self, rational_hexagon):
        assert volume_product(rational_hexagon).product == Fraction(9)

    @given(st.integers(0, 10**6))
    @settings(max_examples=30, deadline=None)
    def test_product_at_least_eight_exactly(self, seed):
        P = rational_polygon(seed % 9973, 3 + seed % 4)
        assert volume_product(P).product >= 8

    def test_inscribed_regular_polygons_increase_toward_disk_product(self):
        prev = 0.0
        for m in range(4, 66, 2):
            P = validate_polygon([unit(2 * math.pi * k / m) for k in range(m)])
            product = float(volume_product(P).product)
            closed_form = (m * math.sin(math.pi / m)) ** 2
            assert product == pytest.approx(closed_form, abs=1e-9)
            assert product > prev
            assert product < math.pi ** 2
            prev = product


class TestLinearInvariance:
    def test_scaled_square_example(self, square_exact):
        A = LinMap2.diagonal(2, 1)
        rep = polar_transform_check(square_exact, A)
        assert rep.product_before == rep.product_after == 8
        dual = polar(apply_linear(square_exact, A))
        assert {tuple(v) for v in dual.vertices} == {
            (Fraction(1, 2), 0), (0, 1), (Fraction(-1, 2), 0), (0, -1)
        }

    def test_identity_trivially_passes(self, square_exact):
        polar_transform_check(square_exact, LinMap2.identity())

    def test_sheared_hexagon_keeps_product_nine(self, rational_hexagon):
        rep = polar_transform_check(rational_hexagon, LinMap2(2, 1, 0, 1))
        assert rep.product_after == Fraction(9)

    def test_random_rational_maps_preserve_product_exactly(self):
        rng = random.Random(2024)
        for _ in range(10):
            P = rational_polygon(rng.randint(0, 10**6), rng.randint(3, 6))
            A = random_rational_map(rng)
            rep = polar_transform_check(P, A)
            assert rep.product_before == rep.product_after

    def test_plain_transpose_is_the_wrong_co_transform(self, square_exact):
        A = LinMap2.diagonal(2, 1)
        lhs = polar(apply_linear(square_exact, A))
        rhs = apply_linear(polar(square_exact), A)  # not the inverse transpose
        assert not lhs.close_to(rhs, 0)

"""Scalar modes and global tolerances.

Coordinates are either exact rationals (``fractions.Fraction``, arbitrary
precision) or binary64 floats.  Exact-mode arithmetic is error-free; float
mode compares geometric predicates against a single global tolerance
``EPS_GEOM``.  ``EPS_CIRCLE`` classifies "on the unit circle" and may be
overridden through the ``MAHLER_EPS`` environment variable (test-only knob).
"""

from __future__ import annotations

import math
import os
from fractions import Fraction
from typing import Union

Scalar = Union[int, float, Fraction]

#: Tolerance for float-mode geometric predicates (symmetry, convexity).
EPS_GEOM = 1e-9

#: Tolerance for |norm - 1| when classifying vertices as on the unit circle.
EPS_CIRCLE = float(os.environ.get("MAHLER_EPS", "1e-9"))

#: Tolerance for volume-product comparisons along a reduction pipeline.
EPS_PROD = 1e-7

#: Volume product of every parallelogram, the planar minimum.
MIN_PRODUCT = 8.0

#: Volume product of the disk, the planar maximum.
DISK_PRODUCT = math.pi ** 2


def is_exact(value: Scalar) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def format_scalar(value: Scalar) -> str:
    """Render a scalar: reduced fraction in exact mode, 12 significant digits otherwise."""
    if is_exact(value):
        return str(Fraction(value))
    return f"{float(value):.12g}"


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" (or a plain integer string) into a Fraction."""
    return Fraction(text.strip())

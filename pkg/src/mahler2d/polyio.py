"""JSON serialization for polygons and reduction certificates.

Polygon files look like ``{"vertices": [[x, y], ...]}`` listing the full
vertex set including antipodes.  Coordinates are either all numbers (float
mode) or all strings "p/q" (exact mode); mixing the two is rejected.  Parsing
runs the full polygon validation.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .polygon import SymPolygon, Vec2, validate_polygon
from .reduction import ReductionCertificate, ReductionStep
from .scalars import is_exact


def polygon_to_obj(P: SymPolygon) -> dict:
    if P.mode == "exact":
        verts = [[str(Fraction(v.x)), str(Fraction(v.y))] for v in P.vertices]
    else:
        verts = [[float(v.x), float(v.y)] for v in P.vertices]
    return {"vertices": verts}


def polygon_from_obj(obj: dict) -> SymPolygon:
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise ValueError('polygon JSON must be an object with a "vertices" key')
    raw = obj["vertices"]
    coords = [c for pair in raw for c in pair]
    if not coords:
        raise ValueError("empty vertex list")
    str_mode = isinstance(coords[0], str)
    pts = []
    for pair in raw:
        if len(pair) != 2:
            raise ValueError(f"vertex {pair!r} is not an [x, y] pair")
        x, y = pair
        if isinstance(x, str) != str_mode or isinstance(y, str) != str_mode:
            raise ValueError("mixed numeric and string coordinates are not allowed")
        if str_mode:
            pts.append(Vec2(Fraction(x), Fraction(y)))
        else:
            pts.append(Vec2(float(x), float(y)))
    return validate_polygon(pts)


def dump_polygon(P: SymPolygon) -> str:
    return json.dumps(polygon_to_obj(P))


def load_polygon(text: str) -> SymPolygon:
    return polygon_from_obj(json.loads(text))


def read_polygon_file(path) -> SymPolygon:
    with open(path, "r", encoding="utf-8") as fh:
        return load_polygon(fh.read())


def write_polygon_file(path, P: SymPolygon) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_polygon(P))
        fh.write("\n")


def certificate_to_obj(cert: ReductionCertificate) -> dict:
    return {
        "input": polygon_to_obj(cert.input_polygon),
        "steps": [
            {
                "kind": s.kind,
                "matrix": [[s.matrix[0], s.matrix[1]], [s.matrix[2], s.matrix[3]]]
                if s.matrix
                else None,
                "deleted": list(s.deleted) if s.deleted else None,
                "product_before": s.product_before,
                "product_after": s.product_after,
            }
            for s in cert.steps
        ],
        "final": polygon_to_obj(cert.final_polygon),
        "final_product": cert.final_product,
    }


def certificate_from_obj(obj: dict) -> ReductionCertificate:
    steps = []
    for s in obj["steps"]:
        mat = s.get("matrix")
        steps.append(
            ReductionStep(
                kind=s["kind"],
                matrix=(mat[0][0], mat[0][1], mat[1][0], mat[1][1]) if mat else None,
                deleted=tuple(s["deleted"]) if s.get("deleted") else None,
                product_before=float(s["product_before"]),
                product_after=float(s["product_after"]),
            )
        )
    return ReductionCertificate(
        input_polygon=polygon_from_obj(obj["input"]),
        steps=tuple(steps),
        final_polygon=polygon_from_obj(obj["final"]),
        final_product=float(obj["final_product"]),
    )


def dump_certificate(cert: ReductionCertificate) -> str:
    return json.dumps(certificate_to_obj(cert), indent=2)


def load_certificate(text: str) -> ReductionCertificate:
    return certificate_from_obj(json.loads(text))

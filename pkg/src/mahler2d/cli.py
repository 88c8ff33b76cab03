"""Command-line front end.

Exit codes: 0 on success, 1 when a verification or bound check fails, 2 on
input or usage errors.  Numeric output uses 12 significant digits; exact-mode
values print as reduced fractions.  Setting MAHLER_EPS overrides the on-circle
classification tolerance (test-only knob, read at import).
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from pathlib import Path

from . import bodies as bodies_mod
from .corpus import CorpusConfig, corpus_verify, generate_random_polygon
from .duality import volume_product
from .errors import GeometryError
from .formulas import deletion_bound_chain, insertion_product_profile, theta_upper
from .metrics import hausdorff_support_metric
from .polygon import validate_polygon
from .polyio import dump_certificate, dump_polygon, read_polygon_file, write_polygon_file
from .reduction import reduce_to_parallelogram
from .scalars import DISK_PRODUCT, format_scalar
from .svgout import render_svg


class _InputError(Exception):
    pass


def _read(path: str):
    try:
        return read_polygon_file(path)
    except GeometryError as exc:
        raise _InputError(f"{path}: {exc}") from exc


def _load(path: str, exact: bool):
    P = _read(path)
    return P.as_exact() if exact else P


def cmd_polar(args) -> int:
    from .duality import polar

    P = _load(args.polygon, args.exact)
    print(dump_polygon(polar(P)))
    return 0


def cmd_vp(args) -> int:
    P = _load(args.polygon, args.exact)
    rep = volume_product(P)
    print(f"V={format_scalar(rep.v)} V*={format_scalar(rep.v_star)} P={format_scalar(rep.product)}")
    return 0


def _certificate_frames(cert) -> list:
    """Replay the certificate steps to recover every intermediate polygon."""
    from .polygon import LinMap2, Vec2, apply_linear
    from .reduction import _locate_vertex, delete_vertex_pair

    frames = [cert.input_polygon]
    current = cert.input_polygon
    for step in cert.steps:
        if step.kind == "delete_pair":
            idx = _locate_vertex(current, Vec2(*step.deleted))
            current = delete_vertex_pair(current, idx)
        else:
            current = apply_linear(current, LinMap2(*step.matrix))
        frames.append(current)
    return frames


def cmd_reduce(args) -> int:
    P = _read(args.polygon)
    trace_dir = Path(args.trace)
    trace_dir.mkdir(parents=True, exist_ok=True)
    cert = reduce_to_parallelogram(P)
    (trace_dir / "certificate.json").write_text(dump_certificate(cert), encoding="utf-8")
    if args.svg:
        frames = _certificate_frames(cert)
        for k, frame in enumerate(frames):
            (trace_dir / f"frame_{k:03d}.svg").write_text(
                render_svg(frame, with_polar=True), encoding="utf-8"
            )
        print(f"frames={len(frames)}")
    if args.plot:
        from .plots import plot_certificate

        plot_certificate(cert, args.plot)
    seq = " ".join(format_scalar(p) for p in cert.product_sequence())
    print(f"deletions={cert.deletion_count}")
    print(f"products: {seq}")
    print(f"final_product={format_scalar(cert.final_product)}")
    return 0


def cmd_verify(args) -> int:
    config = CorpusConfig(
        count=args.count, vertex_pairs=args.pairs, seed=args.seed, radius_jitter=args.jitter
    )
    summary = corpus_verify(config)
    print(summary.format())
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["index", "product"])
            for index in range(config.count):
                P = generate_random_polygon(config, index)
                writer.writerow([index, f"{float(volume_product(P).product):.12g}"])
    if args.plot:
        from .plots import plot_product_histogram

        products = [
            float(volume_product(generate_random_polygon(config, i)).product)
            for i in range(config.count)
        ]
        plot_product_histogram(products, args.plot)
    ok = (
        not summary.failures
        and summary.min_product >= 8.0 - 1e-6
        and summary.max_product <= DISK_PRODUCT + 1e-6
    )
    return 0 if ok else 1


def cmd_approx(args) -> int:
    maker = bodies_mod.NAMED_BODIES.get(args.body)
    if maker is None:
        print(f"unknown body {args.body!r}; choices: {sorted(bodies_mod.NAMED_BODIES)}",
              file=sys.stderr)
        return 2
    body = maker()
    m_list = [int(tok) for tok in args.m.split(",")]
    rows = bodies_mod.continuity_experiment(body, m_list)
    with open(args.out, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["m", "hausdorff_proxy", "product", "radial_gap", "bound_rhs"])
        for r in rows:
            writer.writerow(
                [r.m, f"{r.hausdorff_proxy:.12g}", f"{r.product:.12g}",
                 f"{r.radial_gap:.12g}", f"{r.bound_rhs:.12g}"]
            )
    for r in rows:
        print(
            f"m={r.m} product={r.product:.12g} hausdorff={r.hausdorff_proxy:.12g} "
            f"radial_gap={r.radial_gap:.12g} bound={r.bound_rhs:.12g}"
        )
    if args.plot:
        from .plots import plot_continuity

        plot_continuity(rows, args.plot)
    return 0


def cmd_hausdorff(args) -> int:
    P = _read(args.a)
    Q = _read(args.b)
    print(format_scalar(hausdorff_support_metric(P, Q, args.grid)))
    return 0


def cmd_formulas(args) -> int:
    x0 = args.x0
    if not 0.0 < x0 < 1.0:
        print("x0 must lie strictly between 0 and 1", file=sys.stderr)
        return 2
    y0 = math.sqrt(1.0 - x0 * x0)
    rect = validate_polygon([(x0, y0), (-x0, y0), (-x0, -y0), (x0, -y0)])
    chain = deletion_bound_chain(x0, y0, rect)
    area = float(rect.area())
    polar_area = float(volume_product(rect).v_star)
    hi = theta_upper(x0, y0)
    worst_derivative = -math.inf
    last = math.inf
    monotone = True
    for k in range(args.grid):
        theta = math.pi / 2 + (hi - math.pi / 2) * k / (args.grid - 1)
        prof = insertion_product_profile(x0, y0, area, polar_area, theta)
        worst_derivative = max(worst_derivative, prof.derivative)
        if prof.product > last + 1e-12:
            monotone = False
        last = prof.product
    print(f"x0={format_scalar(x0)} y0={format_scalar(y0)}")
    print(f"max_derivative={format_scalar(worst_derivative)}")
    print(f"product_monotone_decreasing={monotone}")
    for name, margin in chain.as_dict().items():
        print(f"chain_{name}_margin={format_scalar(margin)}")
    ok = worst_derivative <= 1e-12 and monotone and all(
        m >= -1e-12 for m in chain.as_dict().values()
    )
    return 0 if ok else 1


def cmd_render(args) -> int:
    P = _read(args.polygon)
    Path(args.out).write_text(render_svg(P, with_polar=args.polar), encoding="utf-8")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mahler2d",
        description="Polar duals, volume products, and certified parallelogram reduction "
        "for origin-symmetric convex polygons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("polar", help="print the polar polygon as JSON")
    p.add_argument("polygon")
    p.add_argument("--exact", action="store_true", help="compute with exact rationals")
    p.set_defaults(func=cmd_polar)

    p = sub.add_parser("vp", help="print areas and the volume product")
    p.add_argument("polygon")
    p.add_argument("--exact", action="store_true")
    p.set_defaults(func=cmd_vp)

    p = sub.add_parser("reduce", help="reduce to a parallelogram and write the certificate")
    p.add_argument("polygon")
    p.add_argument("--trace", required=True, help="output directory for the certificate")
    p.add_argument("--svg", action="store_true", help="write one SVG frame per state")
    p.add_argument("--plot", help="write a product-trace figure (PNG)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="generate a random corpus and verify every reduction")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--pairs", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--jitter", type=float, default=0.2)
    p.add_argument("--csv", help="write per-polygon products as CSV")
    p.add_argument("--plot", help="write a product histogram (PNG)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("approx", help="inscribed-polygon convergence experiment")
    p.add_argument("--body", required=True)
    p.add_argument("--m", required=True, help="comma-separated vertex counts, increasing")
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--plot", help="write a convergence figure (PNG)")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("hausdorff", help="support-metric Hausdorff distance of two polygons")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--grid", type=int, default=4096)
    p.set_defaults(func=cmd_hausdorff)

    p = sub.add_parser(
        "formulas",
        help="evaluate the vertex-insertion closed forms and inequality chain on a theta grid",
    )
    p.add_argument("--x0", type=float, required=True)
    p.add_argument("--grid", type=int, default=1000)
    p.set_defaults(func=cmd_formulas)

    p = sub.add_parser("render", help="render a polygon (and optionally its polar) as SVG")
    p.add_argument("polygon")
    p.add_argument("out")
    p.add_argument("--polar", action="store_true")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FileNotFoundError, _InputError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GeometryError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Planar convex geometry of origin-symmetric polygons.

Exact or float polar duals and volume products, plus a certified reduction
that transforms any symmetric polygon to a parallelogram without ever
increasing the volume product, witnessing the lower bound of 8.
"""

from .bodies import (
    SampledBody,
    continuity_experiment,
    disk,
    ellipse,
    from_polygon,
    inscribe_polygon,
    p_ball,
)
from .corpus import (
    CorpusConfig,
    CorpusSummary,
    corpus_verify,
    generate_random_polygon,
    random_rational_polygon,
)
from .duality import (
    PolarTransformReport,
    VolumeProductReport,
    contains_polygon,
    polar,
    polar_transform_check,
    volume_product,
)
from .errors import (
    BoundViolated,
    CheckFailed,
    CollinearVertices,
    DegenerateChord,
    DegenerateDraw,
    DomainError,
    EmptyInterval,
    GeometryError,
    MonotonicityViolated,
    NearParallelConstraints,
    NoProgress,
    NotConvex,
    NotSymmetric,
    OutOfInterval,
    PreconditionViolated,
    SingularMap,
    TooFewVertices,
)
from .formulas import (
    BoundChainReport,
    CrosscheckReport,
    InsertionProfile,
    circle_cap_area,
    deletion_bound_chain,
    insertion_product_crosscheck,
    insertion_product_profile,
    theta_upper,
)
from .metrics import (
    OffsetBoundsReport,
    check_offset_radial_bounds,
    hausdorff_support_metric,
    offset_radial,
    point_polygon_distance,
)
from .polygon import (
    LinMap2,
    RadialBounds,
    SymPolygon,
    Vec2,
    apply_linear,
    on_circle_flags,
    unit,
    validate_polygon,
)
from .polyio import (
    dump_certificate,
    dump_polygon,
    load_certificate,
    load_polygon,
    read_polygon_file,
    write_polygon_file,
)
from .reduction import (
    ChordFrame,
    ChordScaleInterval,
    ReductionCertificate,
    ReductionStep,
    apply_chord_scale,
    chord_frame,
    chord_scale_interval,
    delete_vertex_pair,
    inscribe_base,
    normalize_three_on_circle,
    reduce_to_parallelogram,
)
from .scalars import DISK_PRODUCT, EPS_CIRCLE, EPS_GEOM, EPS_PROD, MIN_PRODUCT
from .svgout import render_svg

__version__ = "0.1.0"

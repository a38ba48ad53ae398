"""Exact decision procedures for the Hartogs phenomenon on spherical varieties.

Given a colored fan (cones in N_R, the valuation cone V, color points a_D)
the package decides completeness, (1,0)-compactifiability and whether the
cone generated by the closure of V ∖ |Σ| and the color points is all of N_R,
returning a certificate that can be checked independently.
"""
from .coloredfan import (
    Color,
    ColoredCone,
    ColoredFan,
    ColorTable,
    Violation,
    colored_faces,
    complete_face_closure,
    is_complete,
    support_contains,
    validate_colored_cone,
    validate_fan,
)
from .cones import (
    Cone,
    cone_from_generators,
    cone_from_inequalities,
    contains,
    dim,
    dual_cone,
    intersect,
    is_face,
    is_whole_space,
    lineality_dim,
    relative_interior_point,
)
from .errors import DimensionMismatch, IsCompact, RankTooLarge, UnknownColor, ZeroCone, ZeroVector
from .hartogs import (
    CellComplex,
    HartogsReport,
    NonzeroFunctional,
    RankOneProduct,
    WholeSpaceWitness,
    check_hartogs,
    gap_regions,
    hartogs_cone,
    is_compactifiable_10,
    verify_certificate,
    weight_cone,
)
from .horospherical import (
    HorosphericalDatum,
    RootDatum,
    build_fan_input,
    check_horospherical,
    colors_from_roots,
    homogeneous_verdict,
    iota_star,
    valuation_cone_horospherical,
)

__version__ = "0.1.0"

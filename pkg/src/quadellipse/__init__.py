"""Extremal ellipses of convex quadrilaterals.

Circumscribed families through the four vertices and inscribed tangent
families, with closed-form minimal-eccentricity and minimal-area solutions
where they exist and guarded numeric search elsewhere.
"""

from .bielliptic import (
    BiellipticReport,
    FamilyMember,
    TrapezoidBielliptic,
    classify_bielliptic,
    family_member,
    family_parameters,
    find_bielliptic_in_family,
    poly_p,
    poly_p_real_roots,
    trapezoid_bielliptic_solve,
    trapezoid_shape_condition,
)
from .conic import (
    AffineMap,
    Conic,
    ConicClass,
    EllipseGeometry,
    area,
    classify,
    conic_from_geometry,
    conjugate_slope,
    ellipse_geometry,
    transform_conic,
)
from .errors import (
    ClassificationError,
    FrameUnavailableError,
    InputError,
    NumericError,
    ParameterDomainError,
    QuadEllipseError,
    UnsupportedShapeError,
    ValidationError,
)
from .inscribed import (
    InscribedSolutionTrapezoid,
    inscribed_member,
    min_ecc_inscribed,
    theorem_center_separation,
    trapezoid_cubic,
    trapezoid_ecc_sq_at,
    trapezoid_inscribed_solution,
    trapezoid_shape_factor,
)
from .kernels import BACKEND
from .min_area import AreaObjective, gamma_root, min_area_circumscribed, objective
from .min_ecc import (
    ConjugateDirections,
    Diagnostics,
    SteinerSolution,
    common_conjugate_directions,
    equal_conjugate_directions,
    g_at_v0,
    min_ecc_circumscribed,
    ratio_f,
    trapezoid_ecc_sq,
    trapezoid_min_ecc_sq,
    trapezoid_min_ecc_u,
    v_star,
)
from .pencil import (
    CanonicalPencil,
    FramePencil,
    LinePairPencil,
    TrapezoidPencil,
    canonical_center,
    compactify,
)
from .quad import (
    CanonicalQuad,
    ConvexQuadrilateral,
    QuadShape,
    SegmentZ,
    SteinerFrame,
    canonical_vertices,
    canonicalize,
    diagonal_segment,
    is_bicentric,
    is_cyclic,
    is_tangential,
    match_canonical_right_trapezoid,
    quad_from_frame_parameters,
    steiner_frame,
    validate,
)
from .sampling import random_convex_quad

__version__ = "1.0.0"

__all__ = [
    "AffineMap",
    "AreaObjective",
    "BACKEND",
    "BiellipticReport",
    "CanonicalPencil",
    "CanonicalQuad",
    "ClassificationError",
    "Conic",
    "ConicClass",
    "ConjugateDirections",
    "ConvexQuadrilateral",
    "Diagnostics",
    "EllipseGeometry",
    "FamilyMember",
    "FramePencil",
    "FrameUnavailableError",
    "InputError",
    "InscribedSolutionTrapezoid",
    "LinePairPencil",
    "NumericError",
    "ParameterDomainError",
    "QuadEllipseError",
    "QuadShape",
    "SegmentZ",
    "SteinerFrame",
    "SteinerSolution",
    "TrapezoidBielliptic",
    "TrapezoidPencil",
    "UnsupportedShapeError",
    "ValidationError",
    "area",
    "canonical_center",
    "canonical_vertices",
    "canonicalize",
    "classify",
    "classify_bielliptic",
    "common_conjugate_directions",
    "compactify",
    "conic_from_geometry",
    "conjugate_slope",
    "diagonal_segment",
    "ellipse_geometry",
    "equal_conjugate_directions",
    "family_member",
    "family_parameters",
    "find_bielliptic_in_family",
    "g_at_v0",
    "gamma_root",
    "inscribed_member",
    "is_bicentric",
    "is_cyclic",
    "is_tangential",
    "match_canonical_right_trapezoid",
    "min_area_circumscribed",
    "min_ecc_circumscribed",
    "min_ecc_inscribed",
    "objective",
    "poly_p",
    "poly_p_real_roots",
    "quad_from_frame_parameters",
    "random_convex_quad",
    "ratio_f",
    "steiner_frame",
    "theorem_center_separation",
    "transform_conic",
    "trapezoid_bielliptic_solve",
    "trapezoid_cubic",
    "trapezoid_ecc_sq",
    "trapezoid_ecc_sq_at",
    "trapezoid_inscribed_solution",
    "trapezoid_min_ecc_sq",
    "trapezoid_min_ecc_u",
    "trapezoid_shape_condition",
    "trapezoid_shape_factor",
    "v_star",
    "validate",
]

"""Exact arithmetic for Drinfeld modular curves and their form rings.

The layers, bottom up: finite fields, the polynomial ring A = F_q[T], its
fraction field K, and Laurent series over the place at infinity (ffarith);
congruence subgroups of GL_2(A) with determinant restrictions and their
square-determinant subgroups (congruence); weight/type bookkeeping,
dimension formulas, and the valence check (weights); cusp orbits, elliptic
witness search, and square/non-square parity (curveinv); Q-divisors on the
projective line, Riemann-Roch sections, and graded section-ring
presentations (qdiv); truncated u-series with the type-splitting operator
(useries); and a CLI over all of it (cli).
"""

from .ffarith import (
    DEFAULT_PREC,
    Fq,
    FqElem,
    LaurentKInf,
    ParseError,
    PolyA,
    PrecisionError,
    RatK,
    WorkBoundError,
    format_poly,
    is_square_fq,
    is_square_k,
    is_square_kinf,
    laurent_expand,
    parse_poly,
    poly_ext_gcd,
    poly_sqrt,
    quad_irreducible_kinf,
    sqrt_fq,
)
from .congruence import (
    DET_ALL,
    DET_SQUARES,
    FAMILIES,
    GroupSpec,
    Mat2,
    coset_rep_nonsquare,
    det_image_order,
    gamma2_of,
    index_gamma2,
    member,
    parse_group,
    quotient_order,
)
from .weights import (
    VanishingProfile,
    WeightType,
    decompose_gamma2,
    dim_gamma0T,
    graded_mult_type,
    idempotent_decomposition,
    type_solutions,
    valence_check,
)
from .curveinv import (
    CurveInvariants,
    CuspSet,
    EllipticPointRecord,
    EllipticWitness,
    Parity,
    PRESETS,
    assemble_invariants,
    cusps,
    elliptic_point_classes,
    elliptic_search,
    parity,
    primitive_vectors,
    stabilizer_index,
)
from .qdiv import (
    DegreeLog,
    Generator,
    QDivisor,
    QPoint,
    Relation,
    RingPresentation,
    SectionBasis,
    best_lower_approximations,
    floor_div,
    h0,
    h0_weighted,
    log_canonical_divisor,
    presentation,
    rr_basis,
)
from .useries import (
    DEFAULT_USERIES_PREC,
    FormRegistryEntry,
    SupportError,
    USeries,
    check_support,
    form_registry,
    mul,
    parse_useries,
    scale_u,
    split,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_PREC",
    "DEFAULT_USERIES_PREC",
    "DET_ALL",
    "DET_SQUARES",
    "FAMILIES",
    "PRESETS",
    "CurveInvariants",
    "CuspSet",
    "DegreeLog",
    "EllipticPointRecord",
    "EllipticWitness",
    "FormRegistryEntry",
    "Fq",
    "FqElem",
    "Generator",
    "GroupSpec",
    "LaurentKInf",
    "Mat2",
    "Parity",
    "ParseError",
    "PolyA",
    "PrecisionError",
    "QDivisor",
    "QPoint",
    "RatK",
    "Relation",
    "RingPresentation",
    "SectionBasis",
    "SupportError",
    "USeries",
    "VanishingProfile",
    "WeightType",
    "WorkBoundError",
    "assemble_invariants",
    "best_lower_approximations",
    "check_support",
    "coset_rep_nonsquare",
    "cusps",
    "decompose_gamma2",
    "det_image_order",
    "dim_gamma0T",
    "elliptic_point_classes",
    "elliptic_search",
    "floor_div",
    "form_registry",
    "format_poly",
    "gamma2_of",
    "graded_mult_type",
    "h0",
    "h0_weighted",
    "idempotent_decomposition",
    "index_gamma2",
    "is_square_fq",
    "is_square_k",
    "is_square_kinf",
    "laurent_expand",
    "log_canonical_divisor",
    "member",
    "mul",
    "parity",
    "parse_group",
    "parse_poly",
    "parse_useries",
    "poly_ext_gcd",
    "poly_sqrt",
    "presentation",
    "primitive_vectors",
    "quad_irreducible_kinf",
    "quotient_order",
    "rr_basis",
    "scale_u",
    "split",
    "sqrt_fq",
    "stabilizer_index",
    "type_solutions",
    "valence_check",
]

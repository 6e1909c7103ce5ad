"""Exact-arithmetic certification of k-very ampleness on blown-up bielliptic surfaces."""

from .blowup import (
    BlowupClass,
    ObstructionWitness,
    blowup_intersect,
    bs_condition3,
    n_class,
    search_obstruction,
    seshadri_lower_sq,
    star_holds,
)
from .constants import (
    C_MAX_DEFAULT,
    DELTA_DEFAULT,
    CertRecord,
    ConstantsReport,
    Discrepancy,
    ProofInstanceParams,
    c_max_search,
    case1_cert,
    case_ds2_zero_cert,
    ceiling_from_n2,
    delta_raw,
    g_positive_cert,
    interval_containment_cert,
    lhs_increasing_cert,
    n2_chain_cert,
    sigma_bound,
    z1_decreasing_cert,
    z_roots,
)
from .exactmath import (
    Poly,
    PolyRayResult,
    QuadExpr,
    Rat,
    as_rat,
    poly_positive_on_ray,
    quad_floor_milli,
    quad_sign,
    rat_cmp,
)
from .hyperell import (
    DivisorClass,
    SurfaceType,
    intersect,
    is_ample,
    is_nonzero_effective_cone,
    kva_sufficient,
    self_intersection,
    surface_by_id,
    surface_table,
)

__all__ = [
    "BlowupClass",
    "C_MAX_DEFAULT",
    "CertRecord",
    "ConstantsReport",
    "DELTA_DEFAULT",
    "Discrepancy",
    "DivisorClass",
    "ObstructionWitness",
    "Poly",
    "PolyRayResult",
    "ProofInstanceParams",
    "QuadExpr",
    "Rat",
    "SurfaceType",
    "as_rat",
    "blowup_intersect",
    "bs_condition3",
    "c_max_search",
    "case1_cert",
    "case_ds2_zero_cert",
    "ceiling_from_n2",
    "delta_raw",
    "g_positive_cert",
    "intersect",
    "interval_containment_cert",
    "is_ample",
    "is_nonzero_effective_cone",
    "kva_sufficient",
    "lhs_increasing_cert",
    "n2_chain_cert",
    "n_class",
    "poly_positive_on_ray",
    "quad_floor_milli",
    "quad_sign",
    "rat_cmp",
    "search_obstruction",
    "self_intersection",
    "seshadri_lower_sq",
    "sigma_bound",
    "star_holds",
    "surface_by_id",
    "surface_table",
    "z1_decreasing_cert",
    "z_roots",
]

__version__ = "0.1.0"

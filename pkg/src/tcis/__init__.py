"""Complementary-information-set codes: tests, analysis, constructions.

A length-tk dimension-k binary code is t-CIS when its coordinates split
into t disjoint information sets.  This package tests that property by a
matroid partition walk, derives and analyzes the masking bijections such
codes induce, carries the quaternary (Lee/Gray) variant, and classifies
and bounds the small cases.
"""
from .boolfun import (
    BooleanPermutation,
    ConstancyResult,
    LeakageFunction,
    WalshTable,
    build_masking_code,
    cip_strength,
    derive_bijections,
    group_convolution,
    hamming_weight_leakage,
    leakage_constancy_check,
    point_mass_leakage,
    t_ci_strength,
    verify_theorem1,
    walsh_table,
)
from .classify import (
    CanonicalCode,
    ClassTableRow,
    canonical_form,
    class_table_text,
    classify_tcis,
    enumerate_cat,
    equivalent,
)
from .codes import (
    DistanceEnumerator,
    LinearCode,
    UnrestrictedCode,
    ZeroCode,
    distance_enumerator,
    dual,
    dual_distance,
    is_self_orthogonal,
    min_distance,
    star_fill_zero_columns,
    systematic_form,
    weight_distribution,
)
from .construct import (
    Bounds,
    BuildUpChoice,
    MassReport,
    QcReport,
    QcSpec,
    bounds,
    build_up,
    gl2_matrices,
    gl2_size,
    m_count,
    mass_formula_check,
    poly_from_octal,
    qc_build,
    subtract,
)
from .gf2 import BitMatrix, Infeasible
from .partition import (
    ColumnMatroid,
    Partition,
    Violation,
    exhaustive_partition_oracle,
    span_closure,
    t_cis_partition,
)
from .z4 import (
    Z4Code,
    Z4Matrix,
    gray_image,
    gray_word,
    lee_min_distance,
    ungray_word,
    z4_derive_bijections,
    z4_invert,
    z4_t_cis_partition,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BitMatrix",
    "Infeasible",
    "LinearCode",
    "ZeroCode",
    "UnrestrictedCode",
    "DistanceEnumerator",
    "systematic_form",
    "min_distance",
    "weight_distribution",
    "distance_enumerator",
    "dual",
    "dual_distance",
    "is_self_orthogonal",
    "star_fill_zero_columns",
    "ColumnMatroid",
    "span_closure",
    "Partition",
    "Violation",
    "t_cis_partition",
    "exhaustive_partition_oracle",
    "BooleanPermutation",
    "WalshTable",
    "walsh_table",
    "cip_strength",
    "t_ci_strength",
    "build_masking_code",
    "verify_theorem1",
    "derive_bijections",
    "LeakageFunction",
    "hamming_weight_leakage",
    "point_mass_leakage",
    "group_convolution",
    "ConstancyResult",
    "leakage_constancy_check",
    "Z4Matrix",
    "Z4Code",
    "z4_invert",
    "gray_word",
    "ungray_word",
    "gray_image",
    "lee_min_distance",
    "z4_t_cis_partition",
    "z4_derive_bijections",
    "QcSpec",
    "QcReport",
    "qc_build",
    "poly_from_octal",
    "BuildUpChoice",
    "build_up",
    "subtract",
    "gl2_size",
    "gl2_matrices",
    "MassReport",
    "mass_formula_check",
    "Bounds",
    "bounds",
    "m_count",
    "CanonicalCode",
    "canonical_form",
    "equivalent",
    "enumerate_cat",
    "ClassTableRow",
    "classify_tcis",
    "class_table_text",
]

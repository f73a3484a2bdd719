"""Descending plane partitions, their Catalan subset, and the generating
trees that show the subset is counted by the Catalan numbers."""
from .asm import (
    Asm,
    DiagonalSequence,
    MonotoneTriangle,
    TsscppBox,
    asm_to_monotone,
    enumerate_asms,
    enumerate_diagonals,
    enumerate_monotone_triangles,
    enumerate_tsscpps,
    monotone_to_asm,
    validate_asm,
    validate_tsscpp,
)
from .catalan import (
    CatalanDpp,
    DppPath,
    catalan_dpp,
    catalan_number,
    dpp_to_path,
    enumerate_231_avoiding,
    enumerate_catalan_dpps,
    enumerate_paths,
    is_231_avoiding,
    is_catalan_dpp,
    path_to_dpp,
    validate_path,
)
from .dpp import (
    Dpp,
    count_dpps,
    dpp_generating_polynomial,
    enumerate_dpps,
    product_formula,
    q_product_formula,
    sum_of_entries,
    validate_dpp,
)
from .qpoly import QPolynomial
from .trees import (
    abstract_children,
    build_level,
    check_isomorphism,
    dpp_children,
    iter_levels,
    lr_maxima,
    path_children,
    path_parent,
    perm_children,
)

__version__ = "0.1.0"

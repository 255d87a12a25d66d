"""Exact Seidel spectra of graphs.

Closed forms for the Seidel characteristic polynomials of complete
multipartite graphs, exact big-integer polynomial and matrix algebra,
Seidel switching and switching equivalence, eigenvalue bounds, and
desk-scale searches for cospectral mates.
"""

from .errors import (
    AsymmetryError,
    CapExceededError,
    ConsistencyError,
    ConvergenceError,
    DimensionError,
    EmptyPartitionError,
    ExactDivisionError,
    GraphFormatError,
    InvalidPartitionError,
    NonMonicError,
    SeidelSpecError,
    TheoremViolationError,
    ZeroPolynomialError,
    ZeroVectorError,
)
from .exactalg import (
    IntMatrix,
    IntPoly,
    charpoly_oracle,
    elementary_symmetric,
    integer_root_multiset,
    sigma_l,
)
from .multipartite import (
    EigenvalueBound,
    FactoredSeidelPoly,
    Partition,
    SpectralStructure,
    charpoly_coefficients,
    charpoly_grouped_coefficients,
    charpoly_product,
    eigenvalue_intervals,
    least_eigenvalue_bound,
    quotient_matrix,
    rayleigh_quotient,
    symmetrize_quotient,
)
from .graphs import (
    ENUMERATION_CAP,
    EQUIVALENCE_CAP,
    MAX_VERTICES,
    Graph,
    SwitchingWitness,
    complete_multipartite,
    enumerate_graphs,
    graph6_decode,
    graph6_encode,
    graph_isomorphic,
    normalize_at,
    recognize_complete_multipartite,
    seidel_matrix,
    switch,
    switching_equivalent,
)
from .spectra import (
    SpectrumReport,
    descartes_sign_changes,
    exact_root_multiplicity,
    is_real_rooted,
    positive_root_count,
    roots_below,
    roots_in_open_interval,
    spectrum_report,
    sturm_distinct_real_roots,
    symmetric_eigenvalues,
)
from .determination import (
    CospectralClass,
    DeterminationReport,
    ForcedSizeVerdict,
    SurveyReport,
    check_forced_part_sizes,
    cospectral_classes,
    exhaustive_switching_survey,
    forced_rule,
    partitions_of,
    recover_partitions,
    verify_shared_part_property,
)

__version__ = "0.1.0"

__all__ = [
    "AsymmetryError",
    "CapExceededError",
    "ConsistencyError",
    "ConvergenceError",
    "CospectralClass",
    "DeterminationReport",
    "DimensionError",
    "EigenvalueBound",
    "EmptyPartitionError",
    "ENUMERATION_CAP",
    "EQUIVALENCE_CAP",
    "ExactDivisionError",
    "FactoredSeidelPoly",
    "ForcedSizeVerdict",
    "Graph",
    "GraphFormatError",
    "IntMatrix",
    "IntPoly",
    "InvalidPartitionError",
    "MAX_VERTICES",
    "NonMonicError",
    "Partition",
    "SeidelSpecError",
    "SpectralStructure",
    "SpectrumReport",
    "SurveyReport",
    "SwitchingWitness",
    "TheoremViolationError",
    "ZeroPolynomialError",
    "ZeroVectorError",
    "charpoly_coefficients",
    "charpoly_grouped_coefficients",
    "charpoly_oracle",
    "charpoly_product",
    "check_forced_part_sizes",
    "complete_multipartite",
    "cospectral_classes",
    "descartes_sign_changes",
    "eigenvalue_intervals",
    "elementary_symmetric",
    "enumerate_graphs",
    "exact_root_multiplicity",
    "exhaustive_switching_survey",
    "forced_rule",
    "graph6_decode",
    "graph6_encode",
    "graph_isomorphic",
    "integer_root_multiset",
    "is_real_rooted",
    "least_eigenvalue_bound",
    "normalize_at",
    "partitions_of",
    "positive_root_count",
    "quotient_matrix",
    "rayleigh_quotient",
    "recover_partitions",
    "recognize_complete_multipartite",
    "roots_below",
    "roots_in_open_interval",
    "seidel_matrix",
    "sigma_l",
    "spectrum_report",
    "sturm_distinct_real_roots",
    "switch",
    "switching_equivalent",
    "symmetric_eigenvalues",
    "symmetrize_quotient",
    "verify_shared_part_property",
]

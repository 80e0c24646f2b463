"""Exact graphical Stirling numbers for forests and cycles.

Partition counts, Stirling polynomials, and graph Bell numbers are
computed in exact integer arithmetic, with Sturm-chain certificates for
real-rootedness and interlacing, ultra log-concavity checks, exact
moment formulas, and floating-point diagnostics for the asymptotic
normality of the induced block-count distributions.
"""

from .asymptotics import (
    EstimateReport,
    NormalityReport,
    bell_ratio_deviation,
    estimate_report,
    harper_variance_deviation,
    lambert_w,
    normality_report,
)
from .combinatorics import (
    BellSequence,
    StirlingTriangle,
    bell,
    ratio_to_float,
    stirling,
    stirling_row,
)
from .errors import CacheFormatError, VerificationError
from .families import (
    Cycle,
    Forest,
    MomentReport,
    PartitionCountVector,
    bell_moment_sum,
    chi,
    chromatic_from_stirling,
    chromatic_polynomial,
    cycle_count_k3,
    cycle_count_k4,
    empty_graph,
    graph_bell,
    label,
    moments,
    pascal_identity_check,
    path,
    stirling_polynomial,
    stirling_polynomial_via_operator,
    stirling_vector,
    stirling_via_chromatic,
)
from .oracle import (
    ExplicitGraph,
    build_cycle,
    build_empty,
    build_path,
    build_random_forest,
    build_star_forest,
    enumerate_partition_counts,
    singleton_free_count,
)
from .polynomials import IntPolynomial, apply_x_plus_xD
from .realroots import (
    BernoulliDecomposition,
    PrecedesVerdict,
    RootIsolation,
    SturmChain,
    UlcReport,
    bernoulli_decomposition,
    count_real_roots,
    count_roots_in,
    isolate_negative_roots,
    squarefree_part,
    sturm_chain,
    ultra_log_concave,
    verify_interlacing_relations,
    verify_precedes,
)

__version__ = "0.1.0"

__all__ = [
    "BellSequence",
    "BernoulliDecomposition",
    "CacheFormatError",
    "Cycle",
    "EstimateReport",
    "ExplicitGraph",
    "Forest",
    "IntPolynomial",
    "MomentReport",
    "NormalityReport",
    "PartitionCountVector",
    "PrecedesVerdict",
    "RootIsolation",
    "StirlingTriangle",
    "SturmChain",
    "UlcReport",
    "VerificationError",
    "apply_x_plus_xD",
    "bell",
    "bell_moment_sum",
    "bell_ratio_deviation",
    "bernoulli_decomposition",
    "build_cycle",
    "build_empty",
    "build_path",
    "build_random_forest",
    "build_star_forest",
    "chi",
    "chromatic_from_stirling",
    "chromatic_polynomial",
    "count_real_roots",
    "count_roots_in",
    "cycle_count_k3",
    "cycle_count_k4",
    "empty_graph",
    "enumerate_partition_counts",
    "estimate_report",
    "graph_bell",
    "harper_variance_deviation",
    "isolate_negative_roots",
    "label",
    "lambert_w",
    "moments",
    "normality_report",
    "pascal_identity_check",
    "path",
    "ratio_to_float",
    "singleton_free_count",
    "squarefree_part",
    "stirling",
    "stirling_polynomial",
    "stirling_polynomial_via_operator",
    "stirling_row",
    "stirling_vector",
    "stirling_via_chromatic",
    "sturm_chain",
    "ultra_log_concave",
    "verify_interlacing_relations",
    "verify_precedes",
]

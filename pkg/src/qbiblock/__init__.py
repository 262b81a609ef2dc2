"""Exact q-distance matrices of bi-block graphs.

Closed-form determinants, reduced cofactors, and inverses of the q-distance
matrix of graphs whose blocks are complete bipartite, all in exact arithmetic
over the rationals, together with independent brute-force oracles and a
verification harness.
"""

from .closedform import (
    ClosedFormBundle,
    ConditionCheck,
    ConditionViolation,
    balance_constant,
    balance_vector,
    block_cofactor,
    block_det,
    block_inverse,
    bundle,
    check_conditions,
    cofactor_core,
    det_core,
    diagonal_weight_vector,
    edge_weight_matrix,
    graph_cofactor,
    graph_det,
    graph_inverse,
    local_matrix,
    nonedge_weight_matrix,
)
from .exactring import (
    InexactDivisionError,
    PoleError,
    Polynomial,
    Rational,
    RationalFunction,
    eval_at,
    q_integer,
)
from .graph import (
    Attachment,
    BiBlockGraph,
    Block,
    BlockSpec,
    GraphError,
    block_degree,
    build,
    distances,
    graph_to_json,
    path_tree,
    random_biblock,
    random_tree,
    specs_from_json,
    star_tree,
)
from .matrix import (
    DimensionError,
    RingMatrix,
    SingularMatrixError,
    det_bareiss,
    inverse_gauss,
    outer,
    rf_matrix,
)
from .oracle import (
    CheckResult,
    VerificationReport,
    all_trees,
    default_corpus,
    oracle_cofactor,
    oracle_det,
    oracle_inverse,
    verify_corpus,
    verify_graph,
)
from .qdist import cofactor_matrix, q_distance_matrix, q_matrix_from_distances

__version__ = "0.1.0"

__all__ = [
    "Attachment",
    "BiBlockGraph",
    "Block",
    "BlockSpec",
    "CheckResult",
    "ClosedFormBundle",
    "ConditionCheck",
    "ConditionViolation",
    "DimensionError",
    "GraphError",
    "InexactDivisionError",
    "PoleError",
    "Polynomial",
    "Rational",
    "RationalFunction",
    "RingMatrix",
    "SingularMatrixError",
    "VerificationReport",
    "all_trees",
    "balance_constant",
    "balance_vector",
    "block_cofactor",
    "block_degree",
    "block_det",
    "block_inverse",
    "build",
    "bundle",
    "check_conditions",
    "cofactor_core",
    "cofactor_matrix",
    "default_corpus",
    "det_bareiss",
    "det_core",
    "diagonal_weight_vector",
    "distances",
    "edge_weight_matrix",
    "eval_at",
    "graph_cofactor",
    "graph_det",
    "graph_inverse",
    "graph_to_json",
    "inverse_gauss",
    "local_matrix",
    "nonedge_weight_matrix",
    "oracle_cofactor",
    "oracle_det",
    "oracle_inverse",
    "outer",
    "path_tree",
    "q_distance_matrix",
    "q_integer",
    "q_matrix_from_distances",
    "random_biblock",
    "random_tree",
    "rf_matrix",
    "specs_from_json",
    "star_tree",
    "verify_corpus",
    "verify_graph",
]

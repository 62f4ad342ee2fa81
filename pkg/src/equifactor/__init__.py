"""Exact quotient/deletion factorizations over equitably partitioned graphs.

The library factors the characteristic polynomial of any matrix compatible
with an equitable vertex partition into a quotient-graph part and a
deletion-graph part, and does the same for Laplacians and for the
reciprocal of the Ihara-Bartholdi zeta function. Generalized join graphs
get closed-form versions of both factorizations. All arithmetic is exact.
"""

from .decomposition import (
    DeletionResult,
    TriangularForm,
    deletion_graph,
    deletion_matrix,
    factor_char_poly,
    laplacian_factors,
    similarity_transform,
)
from .errors import (
    ConsistencyError,
    DegreeBoundError,
    DimensionError,
    InexactDivisionError,
    NotEquitableError,
    ParseError,
    SingularMatrixError,
)
from .fileformats import (
    format_graph,
    format_partition,
    parse_graph_file,
    parse_partition_file,
)
from .graphs import (
    SignedDigraph,
    VertexId,
    broadcast_graph,
    build_graph,
    complete_graph,
    cycle_graph,
    degree_matrix,
    degrees,
    edge_count,
    empty_graph,
    is_connected,
    is_undirected,
    is_unsigned,
    path_graph,
    petersen_graph,
    restrict,
    signed_sum,
)
from .joins import (
    JoinSpec,
    build_join,
    join_char_poly,
    join_gammas,
    join_quotient,
    join_zeta_reciprocal,
    teranishi_factor,
)
from .matrices import Matrix, bipoly_det, char_poly, det_exact, mat_inverse
from .partitions import (
    Partition,
    characteristic_matrix,
    check_equitable,
    coarsest_equitable,
    is_equitable,
    quotient_of_shifted,
    selector_matrix,
)
from .polynomials import ONE, S1, S2, T, U, BiPoly, UniPoly, poly_div_exact, ring_det
from .zeta import (
    ZetaReciprocal,
    bartholdi_reciprocal,
    dz_matrix,
    ihara_specialize,
    zeta_factor,
)

__all__ = [
    "BiPoly",
    "ConsistencyError",
    "DegreeBoundError",
    "DeletionResult",
    "DimensionError",
    "InexactDivisionError",
    "JoinSpec",
    "Matrix",
    "NotEquitableError",
    "ONE",
    "ParseError",
    "Partition",
    "S1",
    "S2",
    "SignedDigraph",
    "SingularMatrixError",
    "T",
    "TriangularForm",
    "U",
    "UniPoly",
    "VertexId",
    "ZetaReciprocal",
    "bartholdi_reciprocal",
    "bipoly_det",
    "broadcast_graph",
    "build_graph",
    "build_join",
    "char_poly",
    "characteristic_matrix",
    "check_equitable",
    "coarsest_equitable",
    "complete_graph",
    "cycle_graph",
    "degree_matrix",
    "degrees",
    "deletion_graph",
    "deletion_matrix",
    "det_exact",
    "dz_matrix",
    "edge_count",
    "empty_graph",
    "factor_char_poly",
    "format_graph",
    "format_partition",
    "ihara_specialize",
    "is_connected",
    "is_equitable",
    "is_undirected",
    "is_unsigned",
    "join_char_poly",
    "join_gammas",
    "join_quotient",
    "join_zeta_reciprocal",
    "laplacian_factors",
    "mat_inverse",
    "parse_graph_file",
    "parse_partition_file",
    "path_graph",
    "petersen_graph",
    "poly_div_exact",
    "quotient_of_shifted",
    "restrict",
    "ring_det",
    "selector_matrix",
    "signed_sum",
    "similarity_transform",
    "teranishi_factor",
    "zeta_factor",
]

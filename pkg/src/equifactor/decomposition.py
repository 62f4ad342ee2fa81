"""Deletion matrices and graphs, the block-triangularizing similarity
transformation, and the quotient x deletion factorization of characteristic
polynomials (including the Laplacian and signless-Laplacian cases).

For an equitable pair (M, pi) with representatives fixed, conjugating M by
the invertible basis (P, Q) built from the cell-indicator and selector
matrices yields an exact block upper triangular matrix whose diagonal blocks
are the quotient matrix and the deletion matrix. Every routine here verifies
its own identity with exact arithmetic and fails loudly on mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ConsistencyError
from .graphs import (
    SignedDigraph,
    VertexId,
    broadcast_graph,
    degrees,
    is_undirected,
    restrict,
    signed_sum,
)
from .matrices import Matrix, char_poly
from .partitions import (
    Partition,
    characteristic_matrix,
    check_equitable,
    quotient_of_shifted,
    selector_matrix,
)
from .polynomials import UniPoly


@dataclass(frozen=True)
class DeletionResult:
    """Deletion matrix on the non-representative vertices, cell-major order.

    When built from a graph, ``graph`` is the deletion graph itself and its
    adjacency equals ``matrix`` entry for entry.
    """

    matrix: Matrix
    representatives: tuple[VertexId, ...]
    deleted_vertices: tuple[VertexId, ...]
    graph: SignedDigraph | None = None


@dataclass(frozen=True)
class TriangularForm:
    """Blocks of the conjugated matrix: [[quotient, coupling], [0, deletion]]."""

    quotient: Matrix
    coupling: Matrix
    deletion: Matrix
    basis: Matrix


def _positions(pi: Partition, vertices: Sequence[VertexId] | None, n: int):
    order = tuple(vertices) if vertices is not None else tuple(range(1, n + 1))
    if len(order) != n or pi.vertex_set() != set(order):
        raise ValueError("partition does not cover the matrix's vertex set exactly")
    return {v: i for i, v in enumerate(order)}


def deletion_matrix(
    m: Matrix, pi: Partition, vertices: Sequence[VertexId] | None = None
) -> DeletionResult:
    """Deletion matrix: from each surviving row subtract its cell representative's row.

    Rows and columns are the non-representative vertices in cell-major order,
    and entry (v, w) is m[v, w] - m[rep(cell(v)), w].
    """
    if not m.is_square():
        raise ValueError(f"deletion needs a square matrix, got {m.shape}")
    pos = _positions(pi, vertices, m.rows)
    deleted = pi.deleted_vertices()
    rep_of_cell = pi.representatives
    rows = []
    for v in deleted:
        rep = rep_of_cell[pi.cell_of(v)]
        mv, mr = m.data[pos[v]], m.data[pos[rep]]
        rows.append([mv[pos[w]] - mr[pos[w]] for w in deleted])
    out = Matrix(rows) if rows else Matrix([])
    return DeletionResult(out, pi.representatives, deleted)


def deletion_graph(x: SignedDigraph, pi: Partition) -> DeletionResult:
    """Deletion graph built by restriction minus the broadcast sum.

    Constructs restrict(x, V') minus the sum over cell pairs (i, j) of the
    broadcast graphs V_i'(rep_i) |> V_j', then checks the adjacency equals
    the deletion matrix of A(x) entry for entry.
    """
    deleted = pi.deleted_vertices()
    base = restrict(x, deleted)
    total = SignedDigraph.empty(base.vertices)
    cells_without_reps = pi.deleted_cells()
    for i, cell_i in enumerate(cells_without_reps):
        for cell_j in cells_without_reps:
            if not cell_i or not cell_j:
                continue
            total = signed_sum(
                total, broadcast_graph(x, cell_i, pi.representatives[i], cell_j), 1
            )
    graph = signed_sum(base, total, -1).permuted(deleted)

    by_matrix = deletion_matrix(x.adjacency, pi, x.vertices)
    if graph.adjacency != by_matrix.matrix:
        raise ConsistencyError(
            "deletion graph adjacency disagrees with the deletion matrix"
        )
    return DeletionResult(by_matrix.matrix, pi.representatives, deleted, graph)


def similarity_transform(
    m: Matrix, pi: Partition, vertices: Sequence[VertexId] | None = None
) -> TriangularForm:
    """Conjugate m by the basis (P, Q) and return the verified blocks.

    The inverse is computed explicitly and the conjugation identity is
    checked exactly: the lower-left block must vanish and the diagonal
    blocks must equal the independently computed quotient and deletion
    matrices.
    """
    quotient = check_equitable(m, pi, vertices)
    n, r = m.rows, len(pi.cells)
    p = characteristic_matrix(pi, n, vertices)
    q = selector_matrix(pi, n, vertices)
    basis = Matrix.hstack(p, q)
    conj = basis.inverse() @ m @ basis

    pos = _positions(pi, vertices, n)
    deleted = pi.deleted_vertices()
    coupling = m.submatrix([pos[v] for v in pi.representatives], [pos[w] for w in deleted])
    deletion = deletion_matrix(m, pi, vertices).matrix

    blocks_ok = (
        conj.submatrix(range(r), range(r)) == quotient
        and conj.submatrix(range(r), range(r, n)) == coupling
        and conj.submatrix(range(r, n), range(r)) == Matrix.zeros(n - r, r)
        and conj.submatrix(range(r, n), range(r, n)) == deletion
    )
    if not blocks_ok:
        raise ConsistencyError("conjugated matrix is not in the expected block form")
    return TriangularForm(quotient, coupling, deletion, basis)


def factor_char_poly(
    m: Matrix, pi: Partition, vertices: Sequence[VertexId] | None = None
) -> tuple[UniPoly, UniPoly]:
    """Characteristic polynomial split into (quotient factor, deletion factor).

    The product is re-verified against an independent char_poly(m) run and a
    mismatch raises ConsistencyError rather than returning unverified factors.
    The deletion factor does not depend on the choice of representatives.
    """
    quotient = check_equitable(m, pi, vertices)
    deletion = deletion_matrix(m, pi, vertices).matrix
    quotient_factor = char_poly(quotient)
    deletion_factor = char_poly(deletion)
    if quotient_factor * deletion_factor != char_poly(m):
        raise ConsistencyError(
            "quotient and deletion factors do not multiply to the characteristic polynomial"
        )
    return quotient_factor, deletion_factor


def laplacian_factors(
    x: SignedDigraph, pi: Partition, signless: bool = False
) -> tuple[UniPoly, UniPoly]:
    """Factor the (signless) Laplacian characteristic polynomial of x.

    The quotient factor comes from the closed-form shifted quotient
    alpha*A(x/pi) + diag(cell degrees); the deletion factor uses the degree
    matrix of the whole graph restricted to the surviving vertices, which in
    general differs from the degree matrix of the restricted graph.
    """
    if not is_undirected(x):
        raise ValueError("Laplacian factorization is defined for undirected graphs")
    alpha = 1 if signless else -1
    degs = degrees(x)
    cell_deg = [degs[x.index(cell[0])] for cell in pi.cells]
    quotient = quotient_of_shifted(x, pi, alpha, cell_deg)

    deleted = pi.deleted_vertices()
    deletion_adj = deletion_matrix(x.adjacency, pi, x.vertices).matrix
    deg_restricted = Matrix.diagonal([degs[x.index(v)] for v in deleted])
    deletion = deletion_adj * alpha + deg_restricted

    quotient_factor = char_poly(quotient)
    deletion_factor = char_poly(deletion)

    full = x.adjacency * alpha + Matrix.diagonal([Fraction(d) for d in degs])
    if quotient_factor * deletion_factor != char_poly(full):
        raise ConsistencyError("Laplacian factors do not multiply to the full polynomial")
    return quotient_factor, deletion_factor

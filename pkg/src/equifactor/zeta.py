"""Ihara-Bartholdi zeta reciprocals as exact bivariate polynomials.

The reciprocal of the Bartholdi zeta function of a connected undirected
graph is s1^(m-n) * det(-t*A + Dz), where s1 = 1 - (1-u)^2 t^2,
s2 = (1-u) t^2 and Dz is the diagonal matrix with entries s1 + s2*deg(v).
Specializing u = 0 recovers the Ihara zeta reciprocal. The determinant
factorizes over any equitable partition into a quotient part and a
deletion part, mirroring the characteristic-polynomial case.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import deletion_matrix
from .errors import ConsistencyError
from .graphs import (
    SignedDigraph,
    degrees,
    edge_count,
    is_connected,
    is_undirected,
    is_unsigned,
)
from .matrices import bipoly_det
from .partitions import Partition, check_equitable
from .polynomials import S1, S2, T, BiPoly, UniPoly

BiPolyMatrix = tuple[tuple[BiPoly, ...], ...]


@dataclass(frozen=True)
class ZetaReciprocal:
    """Z(u, t)^-1 together with the vertex and non-oriented edge counts."""

    value: BiPoly
    n_vertices: int
    n_edges: int


def _require_zeta_input(x: SignedDigraph, op: str) -> None:
    if not is_undirected(x):
        raise ValueError(f"{op} requires an undirected graph")
    if not is_unsigned(x):
        raise ValueError(f"{op} requires an unsigned graph")


def dz_matrix(x: SignedDigraph) -> BiPolyMatrix:
    """Diagonal matrix with entries s1 + s2 * deg(v)."""
    _require_zeta_input(x, "dz_matrix")
    n = x.n
    diag = [S1 + S2 * d for d in degrees(x)]
    return tuple(
        tuple(diag[i] if i == j else BiPoly.zero() for j in range(n)) for i in range(n)
    )


def _zeta_determinant_matrix(adj_rows, dz_diag) -> BiPolyMatrix:
    """-t * A + Dz as a matrix of bivariate polynomials."""
    n = len(adj_rows)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = -int(adj_rows[i][j]) * T
            if i == j:
                entry = entry + dz_diag[i]
            row.append(entry)
        out.append(tuple(row))
    return tuple(out)


def bartholdi_reciprocal(x: SignedDigraph) -> ZetaReciprocal:
    """Exact Bartholdi zeta reciprocal of a connected undirected graph.

    For m >= n the result is s1^(m-n) times the determinant; for a tree
    (m - n = -1) the determinant is exactly divisible by s1 and the quotient
    is returned.
    """
    _require_zeta_input(x, "bartholdi_reciprocal")
    if not is_connected(x):
        raise ValueError("bartholdi_reciprocal requires a connected graph")
    n = x.n
    m = edge_count(x)
    diag = [S1 + S2 * d for d in degrees(x)]
    det = bipoly_det(
        _zeta_determinant_matrix(x.adjacency.data, diag), 2 * n, 2 * n
    )
    if m >= n:
        value = S1 ** (m - n) * det
    else:
        # connected implies m = n - 1 here
        value = det.div_exact(S1).as_integer()
    if value.substitute_t(0) != UniPoly.one():
        raise ConsistencyError("zeta reciprocal is not normalized to 1 at t = 0")
    return ZetaReciprocal(value, n, m)


def zeta_factor(
    x: SignedDigraph, pi: Partition
) -> tuple[BiPoly, BiPoly, BiPoly]:
    """Split the zeta reciprocal into (s1 power, quotient factor, deletion factor).

    The quotient factor is the r x r determinant of -t*A(x/pi) plus the
    diagonal of s1 + s2*d_i over the common cell degrees d_i; the deletion
    factor uses the Dz matrix of the whole graph restricted to the surviving
    vertices. The product of the three parts is re-verified against
    bartholdi_reciprocal. Trees are rejected: their s1 exponent is negative,
    so the reciprocal is not a product of the two determinants with a
    polynomial s1 power.
    """
    _require_zeta_input(x, "zeta_factor")
    if not is_connected(x):
        raise ValueError("zeta_factor requires a connected graph")
    n = x.n
    m = edge_count(x)
    if m < n:
        raise ValueError(
            "zeta_factor requires at least as many edges as vertices; "
            "for a tree the s1 exponent is negative and no polynomial "
            "three-way factorization exists"
        )

    quotient = check_equitable(x.adjacency, pi, x.vertices)
    r = len(pi.cells)
    cell_degree = [int(sum(quotient.data[i])) for i in range(r)]
    q_diag = [S1 + S2 * d for d in cell_degree]
    q_rows = [[int(v) for v in row] for row in quotient.data]
    quotient_factor = bipoly_det(
        _zeta_determinant_matrix(q_rows, q_diag), 2 * r, 2 * r
    )

    deleted = pi.deleted_vertices()
    degs = degrees(x)
    d_diag = [S1 + S2 * degs[x.index(v)] for v in deleted]
    d_adj = deletion_matrix(x.adjacency, pi, x.vertices).matrix
    k = len(deleted)
    deletion_factor = bipoly_det(
        _zeta_determinant_matrix(d_adj.data, d_diag), 2 * k, 2 * k
    )

    s1_power = S1 ** (m - n)
    if s1_power * quotient_factor * deletion_factor != bartholdi_reciprocal(x).value:
        raise ConsistencyError("zeta factors do not multiply to the zeta reciprocal")
    return s1_power, quotient_factor, deletion_factor


def ihara_specialize(z: ZetaReciprocal) -> UniPoly:
    """Ihara zeta reciprocal: the Bartholdi reciprocal at u = 0."""
    return z.value.substitute_u(0)

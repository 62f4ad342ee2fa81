"""Signed directed multigraphs and their additive algebra.

A graph is a tuple of integer vertex labels plus an integer adjacency
matrix; entry (u, v) is the signed multiplicity of edges u -> v. Negative
entries encode negative edges, loops and multi-edges are allowed, and all
values are immutable: every operation returns a new graph.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .matrices import Matrix

VertexId = int


class SignedDigraph:
    """Vertex labels plus an integer adjacency matrix, immutable."""

    __slots__ = ("vertices", "adjacency")

    def __init__(self, vertices: Sequence[VertexId], adjacency: Matrix):
        vertices = tuple(vertices)
        if len(set(vertices)) != len(vertices):
            raise ValueError("vertex labels must be distinct")
        if adjacency.shape != (len(vertices), len(vertices)):
            raise ValueError(
                f"adjacency shape {adjacency.shape} does not match {len(vertices)} vertices"
            )
        if not adjacency.is_integral():
            raise ValueError("adjacency entries must be integers")
        self.vertices = vertices
        self.adjacency = adjacency

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[int]], vertices: Sequence[VertexId] | None = None
    ) -> "SignedDigraph":
        if vertices is None:
            vertices = range(1, len(rows) + 1)
        return cls(vertices, Matrix(rows))

    @classmethod
    def empty(cls, vertices: Sequence[VertexId] = ()) -> "SignedDigraph":
        n = len(vertices)
        return cls(vertices, Matrix.zeros(n, n))

    # -- structure ----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self, v: VertexId) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise ValueError(f"unknown vertex {v}") from None

    def entry(self, u: VertexId, v: VertexId) -> int:
        return int(self.adjacency[self.index(u), self.index(v)])

    def int_rows(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self.adjacency.data]

    def permuted(self, order: Sequence[VertexId]) -> "SignedDigraph":
        """Same graph with vertices listed in the given order."""
        if sorted(order) != sorted(self.vertices):
            raise ValueError("permuted order must list exactly the same vertices")
        idx = [self.index(v) for v in order]
        return SignedDigraph(order, self.adjacency.submatrix(idx, idx))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SignedDigraph)
            and self.vertices == other.vertices
            and self.adjacency == other.adjacency
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.adjacency))

    def __repr__(self) -> str:
        return f"SignedDigraph(vertices={self.vertices}, adjacency={self.int_rows()})"


def build_graph(
    n: int,
    edges: Iterable[tuple],
    undirected: bool = False,
) -> SignedDigraph:
    """Graph on vertices 1..n from (from, to[, multiplicity]) triples.

    Multiplicities accumulate; with the undirected flag each edge is also
    inserted in the reverse direction (a loop is inserted once).
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    adj = [[0] * n for _ in range(n)]
    for edge in edges:
        if len(edge) == 2:
            u, v = edge
            mult = 1
        elif len(edge) == 3:
            u, v, mult = edge
        else:
            raise ValueError(f"edge {edge!r} must be (from, to) or (from, to, multiplicity)")
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 1..{n}")
        if mult == 0:
            raise ValueError(f"edge ({u}, {v}) has zero multiplicity")
        adj[u - 1][v - 1] += mult
        if undirected and u != v:
            adj[v - 1][u - 1] += mult
    return SignedDigraph(range(1, n + 1), Matrix(adj))


def degree_matrix(x: SignedDigraph) -> Matrix:
    """Diagonal matrix of out-degrees (row sums; loops count once)."""
    sums = [sum(row, Fraction(0)) for row in x.adjacency.data]
    return Matrix.diagonal(sums)


def degrees(x: SignedDigraph) -> list[int]:
    """Out-degree of each vertex, in vertex order."""
    return [int(sum(row, Fraction(0))) for row in x.adjacency.data]


def restrict(x: SignedDigraph, s: Iterable[VertexId]) -> SignedDigraph:
    """Induced signed subgraph on s, vertex order inherited from x."""
    wanted = set(s)
    unknown = wanted - set(x.vertices)
    if unknown:
        raise ValueError(f"unknown vertices in restriction: {sorted(unknown)}")
    keep = [v for v in x.vertices if v in wanted]
    idx = [x.index(v) for v in keep]
    return SignedDigraph(keep, x.adjacency.submatrix(idx, idx))


def signed_sum(x1: SignedDigraph, x2: SignedDigraph, sign: int = 1) -> SignedDigraph:
    """Sum (or difference, sign=-1) after extending both by zero.

    The union vertex order is x1's vertices followed by x2's new ones.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    verts = list(x1.vertices) + [v for v in x2.vertices if v not in set(x1.vertices)]
    pos = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    adj = [[0] * n for _ in range(n)]
    for g, s in ((x1, 1), (x2, sign)):
        for i, u in enumerate(g.vertices):
            row = g.adjacency.data[i]
            pu = pos[u]
            for j, v in enumerate(g.vertices):
                if row[j] != 0:
                    adj[pu][pos[v]] += s * int(row[j])
    return SignedDigraph(verts, Matrix(adj))


def broadcast_graph(
    x: SignedDigraph,
    b: Iterable[VertexId],
    vbar: VertexId,
    c: Iterable[VertexId],
) -> SignedDigraph:
    """Graph on b union c whose rows over b all copy x's vbar-row over c."""
    b, c = set(b), set(c)
    unknown = (b | c | {vbar}) - set(x.vertices)
    if unknown:
        raise ValueError(f"unknown vertices in broadcast: {sorted(unknown)}")
    verts = [v for v in x.vertices if v in (b | c)]
    pos = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    adj = [[0] * n for _ in range(n)]
    for u in b:
        for v in c:
            adj[pos[u]][pos[v]] = x.entry(vbar, v)
    return SignedDigraph(verts, Matrix(adj))


def is_undirected(x: SignedDigraph) -> bool:
    """True iff the adjacency matrix is symmetric."""
    return x.adjacency.is_symmetric()


def is_unsigned(x: SignedDigraph) -> bool:
    return all(v >= 0 for row in x.adjacency.data for v in row)


def is_connected(x: SignedDigraph) -> bool:
    """Connectivity of the underlying undirected support (empty graph: True)."""
    n = x.n
    if n == 0:
        return True
    adj = x.adjacency.data
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j not in seen and (adj[i][j] != 0 or adj[j][i] != 0):
                seen.add(j)
                stack.append(j)
    return len(seen) == n


def edge_count(x: SignedDigraph) -> int:
    """Number of non-oriented edges of an undirected graph."""
    if not is_undirected(x):
        raise ValueError("edge_count is defined for undirected graphs")
    total = sum(v for row in x.adjacency.data for v in row)
    if total % 2 != 0:
        raise ValueError("odd total multiplicity; adjacency is not a valid undirected graph")
    return int(total) // 2


# -- small named graphs used throughout tests and demos ----------------


def empty_graph(n: int) -> SignedDigraph:
    return build_graph(n, [])


def path_graph(n: int) -> SignedDigraph:
    return build_graph(n, [(i, i + 1) for i in range(1, n)], undirected=True)


def cycle_graph(n: int) -> SignedDigraph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    edges = [(i, i + 1) for i in range(1, n)] + [(n, 1)]
    return build_graph(n, edges, undirected=True)


def complete_graph(n: int) -> SignedDigraph:
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return build_graph(n, edges, undirected=True)


def petersen_graph() -> SignedDigraph:
    """Petersen graph: pentagram on 1..5, pentagon on 6..10, spokes i -- i+5."""
    pentagram = [(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)]
    pentagon = [(6, 7), (7, 8), (8, 9), (9, 10), (10, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    return build_graph(10, pentagram + pentagon + spokes, undirected=True)

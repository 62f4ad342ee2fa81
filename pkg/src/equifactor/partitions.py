"""Vertex partitions, equitability checking, and coarsest equitable refinement.

A Partition is an ordered tuple of disjoint nonempty cells of vertex labels,
with one designated representative per cell. Matrix-facing helpers assume
labels 1..n aligned with matrix rows unless an explicit vertex order is
supplied; graph-facing helpers map through the graph's own vertex order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotEquitableError
from .graphs import SignedDigraph, VertexId
from .matrices import Matrix
from .polynomials import Scalar


@dataclass(frozen=True)
class Partition:
    """Ordered cells covering a vertex set, with one representative per cell."""

    cells: tuple[tuple[VertexId, ...], ...]
    representatives: tuple[VertexId, ...]

    def __post_init__(self):
        if not self.cells:
            raise ValueError("a partition needs at least one cell")
        seen: set[VertexId] = set()
        for cell in self.cells:
            if not cell:
                raise ValueError("cells must be nonempty")
            for v in cell:
                if v in seen:
                    raise ValueError(f"vertex {v} appears in more than one cell")
                seen.add(v)
        if len(self.representatives) != len(self.cells):
            raise ValueError("need exactly one representative per cell")
        for rep, cell in zip(self.representatives, self.cells):
            if rep not in cell:
                raise ValueError(f"representative {rep} is not in its cell {cell}")

    @classmethod
    def of(
        cls,
        cells: Iterable[Iterable[VertexId]],
        representatives: Sequence[VertexId] | None = None,
    ) -> "Partition":
        """Build from cell iterables; representatives default to each cell's least vertex."""
        cells_t = tuple(tuple(c) for c in cells)
        if representatives is None:
            representatives = tuple(min(c) for c in cells_t)
        return cls(cells_t, tuple(representatives))

    @classmethod
    def trivial(cls, vertices: Iterable[VertexId]) -> "Partition":
        return cls.of([tuple(vertices)])

    @classmethod
    def singletons(cls, vertices: Iterable[VertexId]) -> "Partition":
        return cls.of([(v,) for v in vertices])

    @property
    def size(self) -> int:
        return len(self.cells)

    def vertex_set(self) -> set[VertexId]:
        return {v for cell in self.cells for v in cell}

    def cell_of(self, v: VertexId) -> int:
        for i, cell in enumerate(self.cells):
            if v in cell:
                return i
        raise ValueError(f"vertex {v} is not covered by the partition")

    def with_representatives(self, representatives: Sequence[VertexId]) -> "Partition":
        return Partition(self.cells, tuple(representatives))

    def deleted_cells(self) -> tuple[tuple[VertexId, ...], ...]:
        """Each cell with its representative removed (cells may come back empty)."""
        return tuple(
            tuple(v for v in cell if v != rep)
            for cell, rep in zip(self.cells, self.representatives)
        )

    def deleted_vertices(self) -> tuple[VertexId, ...]:
        """All non-representative vertices, cell-major order."""
        return tuple(v for cell in self.deleted_cells() for v in cell)

    def same_cells(self, other: "Partition") -> bool:
        """Equality as unordered set partitions, ignoring representatives."""
        return {frozenset(c) for c in self.cells} == {frozenset(c) for c in other.cells}

    def refines(self, coarser: "Partition") -> bool:
        """True iff every cell of self lies inside some cell of coarser."""
        return all(
            any(set(cell) <= set(big) for big in coarser.cells) for cell in self.cells
        )

    def display(self) -> str:
        body = " | ".join(" ".join(str(v) for v in cell) for cell in self.cells)
        reps = ", ".join(str(r) for r in self.representatives)
        return f"{{{body}}} reps ({reps})"


def _label_positions(
    pi: Partition, n: int, vertices: Sequence[VertexId] | None
) -> dict[VertexId, int]:
    """Map partition labels to matrix row indices, validating exact cover."""
    order = tuple(vertices) if vertices is not None else tuple(range(1, n + 1))
    if len(order) != n:
        raise ValueError(f"vertex order lists {len(order)} labels for an {n}-row matrix")
    if pi.vertex_set() != set(order):
        missing = set(order) - pi.vertex_set()
        extra = pi.vertex_set() - set(order)
        raise ValueError(
            f"partition does not cover the vertex set exactly"
            f" (missing {sorted(missing)}, extraneous {sorted(extra)})"
        )
    return {v: i for i, v in enumerate(order)}


def characteristic_matrix(
    pi: Partition, n: int, vertices: Sequence[VertexId] | None = None
) -> Matrix:
    """n x r 0/1 cell-membership indicator matrix."""
    pos = _label_positions(pi, n, vertices)
    cols = len(pi.cells)
    rows = [[0] * cols for _ in range(n)]
    for j, cell in enumerate(pi.cells):
        for v in cell:
            rows[pos[v]][j] = 1
    return Matrix(rows)


def selector_matrix(
    pi: Partition, n: int, vertices: Sequence[VertexId] | None = None
) -> Matrix:
    """n x (n-r) 0/1 indicator of the non-representative vertices, cell-major."""
    pos = _label_positions(pi, n, vertices)
    deleted = pi.deleted_vertices()
    rows = [[0] * len(deleted) for _ in range(n)]
    for j, v in enumerate(deleted):
        rows[pos[v]][j] = 1
    return Matrix(rows)


def check_equitable(
    m: Matrix, pi: Partition, vertices: Sequence[VertexId] | None = None
) -> Matrix:
    """Quotient matrix of an equitable pair, else NotEquitableError.

    Block (i, j) of m must have a constant row sum; the quotient entry is
    that constant. The error witness names the first offending block and
    vertex in scan order.
    """
    if not m.is_square():
        raise ValueError(f"equitability needs a square matrix, got {m.shape}")
    pos = _label_positions(pi, m.rows, vertices)
    r = len(pi.cells)
    out = [[Fraction(0)] * r for _ in range(r)]
    for i, cell_i in enumerate(pi.cells):
        for j, cell_j in enumerate(pi.cells):
            col_idx = [pos[w] for w in cell_j]
            expected: Fraction | None = None
            for v in cell_i:
                row = m.data[pos[v]]
                s = sum((row[c] for c in col_idx), Fraction(0))
                if expected is None:
                    expected = s
                elif s != expected:
                    raise NotEquitableError(i + 1, j + 1, v)
            out[i][j] = expected if expected is not None else Fraction(0)
    return Matrix(out)


def is_equitable(
    m: Matrix, pi: Partition, vertices: Sequence[VertexId] | None = None
) -> bool:
    try:
        check_equitable(m, pi, vertices)
        return True
    except NotEquitableError:
        return False


def quotient_of_shifted(
    x: SignedDigraph,
    pi: Partition,
    alpha: Scalar,
    cell_diag: Sequence[Scalar],
) -> Matrix:
    """Quotient of alpha*A(x) + D where D is d_i times the identity on cell i.

    Computed through the closed form alpha*A(x/pi) + diag(d_i) rather than by
    forming the shifted matrix and re-checking equitability.
    """
    if len(cell_diag) != len(pi.cells):
        raise ValueError("need one diagonal value per cell")
    b = check_equitable(x.adjacency, pi, x.vertices)
    shifted = b * Fraction(alpha) if not isinstance(alpha, int) else b * alpha
    return shifted + Matrix.diagonal(list(cell_diag))


def coarsest_equitable(x: SignedDigraph, seed: Partition | None = None) -> Partition:
    """Coarsest equitable partition refining the seed (default: one cell).

    Classic colour refinement: cells split by the vector of out-edge counts
    into each current cell. Fragments of a split cell are ordered by their
    signature vectors, ascending lexicographically; representatives default
    to the least vertex of each final cell.
    """
    if x.n == 0:
        raise ValueError("cannot partition the empty vertex set")
    if seed is None:
        seed = Partition.trivial(x.vertices)
    if seed.vertex_set() != set(x.vertices):
        raise ValueError("seed partition must cover the graph's vertex set")

    adj = x.adjacency.data
    pos = {v: i for i, v in enumerate(x.vertices)}
    cells: list[tuple[VertexId, ...]] = [tuple(c) for c in seed.cells]
    while True:
        index_of = {v: k for k, cell in enumerate(cells) for v in cell}

        def signature(v: VertexId) -> tuple:
            row = adj[pos[v]]
            counts = [Fraction(0)] * len(cells)
            for w, k in index_of.items():
                counts[k] += row[pos[w]]
            return tuple(counts)

        new_cells: list[tuple[VertexId, ...]] = []
        changed = False
        for cell in cells:
            groups: dict[tuple, list[VertexId]] = {}
            for v in cell:
                groups.setdefault(signature(v), []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for sig in sorted(groups):
                    new_cells.append(tuple(groups[sig]))
        cells = new_cells
        if not changed:
            break
    return Partition.of(cells)

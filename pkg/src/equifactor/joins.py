"""Generalized join (composition) graphs and their closed-form factorizations.

A join replaces each vertex i of a simple pattern graph H by a component
graph X_i and inserts all edges between V(X_i) and V(X_j) whenever ij is an
edge of H. The component partition is always equitable, its quotient has a
closed form, and for regular components both the characteristic polynomial
and the Bartholdi zeta reciprocal factor into per-component pieces joined
by a small r x r determinant. Every identity is verified exactly against
direct computation on the assembled join.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .decomposition import factor_char_poly
from .errors import ConsistencyError, NotEquitableError
from .graphs import (
    SignedDigraph,
    degrees,
    edge_count,
    is_connected,
    is_undirected,
)
from .matrices import Matrix, bipoly_det, char_poly
from .partitions import Partition, check_equitable
from .polynomials import ONE, S1, S2, T, U, BiPoly, Scalar, UniPoly, ring_det


def _require_simple_undirected(g: SignedDigraph, what: str) -> None:
    rows = g.adjacency.data
    for i in range(g.n):
        if rows[i][i] != 0:
            raise ValueError(f"{what} must be loop-free (loop at vertex {g.vertices[i]})")
        for j in range(g.n):
            if rows[i][j] not in (0, 1):
                raise ValueError(
                    f"{what} must be simple; entry ({g.vertices[i]}, {g.vertices[j]}) "
                    f"is {rows[i][j]}"
                )
    if not is_undirected(g):
        raise ValueError(f"{what} must be undirected")


@dataclass(frozen=True)
class JoinSpec:
    """Pattern graph H plus one simple undirected component per H-vertex.

    Regularity of the components is not enforced here; the closed-form
    char-poly and zeta routines demand it and raise when it fails, while
    the per-component-partition factorization accepts arbitrary simple
    undirected components.
    """

    h: SignedDigraph
    components: tuple[SignedDigraph, ...]

    def __post_init__(self):
        _require_simple_undirected(self.h, "the join pattern graph")
        if len(self.components) != self.h.n:
            raise ValueError(
                f"need one component per pattern vertex: got {len(self.components)} "
                f"components for {self.h.n} vertices"
            )
        if not self.components:
            raise ValueError("a join needs at least one component")
        for i, comp in enumerate(self.components):
            _require_simple_undirected(comp, f"join component {i + 1}")
            if comp.n == 0:
                raise ValueError(f"join component {i + 1} is empty")

    @classmethod
    def of(cls, h: SignedDigraph, components: Sequence[SignedDigraph]) -> "JoinSpec":
        return cls(h, tuple(components))

    @property
    def r(self) -> int:
        return self.h.n

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(c.n for c in self.components)

    def component_degrees(self) -> tuple[int, ...]:
        """Common degree of each component; error names the offending vertex."""
        out = []
        for i, comp in enumerate(self.components):
            degs = degrees(comp)
            k = degs[0]
            for v, d in zip(comp.vertices, degs):
                if d != k:
                    raise ValueError(
                        f"join component {i + 1} is not regular: vertex {v} has "
                        f"degree {d}, expected {k}"
                    )
            out.append(k)
        return tuple(out)


def _assemble(spec: JoinSpec) -> tuple[SignedDigraph, Partition]:
    """Joined graph on labels 1..sum(n_i), cells in component order."""
    sizes = spec.sizes
    offsets = [0]
    for n_i in sizes:
        offsets.append(offsets[-1] + n_i)
    total = offsets[-1]
    adj = [[0] * total for _ in range(total)]
    h_rows = spec.h.adjacency.data
    for i, comp in enumerate(spec.components):
        crows = comp.adjacency.data
        for a in range(comp.n):
            for b in range(comp.n):
                adj[offsets[i] + a][offsets[i] + b] = int(crows[a][b])
        for j in range(spec.r):
            if j == i or h_rows[i][j] == 0:
                continue
            for a in range(comp.n):
                for b in range(sizes[j]):
                    adj[offsets[i] + a][offsets[j] + b] = 1
    graph = SignedDigraph(range(1, total + 1), Matrix(adj))
    cells = [
        tuple(range(offsets[i] + 1, offsets[i + 1] + 1)) for i in range(spec.r)
    ]
    return graph, Partition.of(cells)


def join_quotient(spec: JoinSpec) -> Matrix:
    """Closed-form quotient: k_i on the diagonal, A(H)_ij * n_j off it."""
    ks = spec.component_degrees()
    sizes = spec.sizes
    h_rows = spec.h.adjacency.data
    r = spec.r
    return Matrix(
        [
            [ks[i] if i == j else int(h_rows[i][j]) * sizes[j] for j in range(r)]
            for i in range(r)
        ]
    )


def build_join(spec: JoinSpec) -> tuple[SignedDigraph, Partition]:
    """Assemble the join of regular components with its component partition.

    The component partition is checked equitable and its quotient compared
    with the closed form.
    """
    spec.component_degrees()
    graph, pi = _assemble(spec)
    quotient = check_equitable(graph.adjacency, pi, graph.vertices)
    if quotient != join_quotient(spec):
        raise ConsistencyError("assembled join quotient disagrees with the closed form")
    return graph, pi


def join_char_poly(
    spec: JoinSpec, alpha: Scalar, d: Sequence[Scalar]
) -> tuple[UniPoly, UniPoly, tuple[UniPoly, ...]]:
    """Two closed forms of the characteristic polynomial of alpha*A(join) + D.

    Returns (via_quotient, via_h_form, component_factors) where the i-th
    component factor is the exact quotient of the characteristic polynomial
    of alpha*A(X_i) + d_i*I by its guaranteed root x = alpha*k_i + d_i. Both
    forms are verified against direct computation on the assembled join, and
    the quotient-side polynomial is verified against the scaled determinant
    of -alpha*A(H) + Delta(x).
    """
    ks = spec.component_degrees()
    sizes = spec.sizes
    if len(d) != spec.r:
        raise ValueError("need one diagonal value per component")
    alpha = Fraction(alpha)
    dvals = [Fraction(v) for v in d]

    quotient_shifted = join_quotient(spec) * alpha + Matrix.diagonal(dvals)
    quotient_poly = char_poly(quotient_shifted)

    component_factors = []
    for comp, k_i, d_i in zip(spec.components, ks, dvals):
        shifted = comp.adjacency * alpha + Matrix.identity(comp.n) * d_i
        root = UniPoly((-(alpha * k_i + d_i), 1))
        component_factors.append(char_poly(shifted).div_exact(root))
    component_factors = tuple(component_factors)

    via_quotient = quotient_poly
    for f in component_factors:
        via_quotient = via_quotient * f

    # Determinant form: Delta(x) has (x - alpha*k_i - d_i)/n_i on the diagonal.
    h_rows = spec.h.adjacency.data
    delta_mat: list[list[UniPoly]] = []
    for i in range(spec.r):
        row = []
        for j in range(spec.r):
            entry = UniPoly((-alpha * h_rows[i][j],)) if i != j else UniPoly(
                (Fraction(-(alpha * ks[i] + dvals[i]), sizes[i]), Fraction(1, sizes[i]))
            )
            row.append(entry)
        delta_mat.append(row)
    h_det = ring_det(delta_mat, UniPoly.one())

    n_product = 1
    for n_i in sizes:
        n_product *= n_i
    if quotient_poly != n_product * h_det:
        raise ConsistencyError(
            "quotient characteristic polynomial disagrees with the scaled H determinant"
        )
    via_h_form = h_det
    for n_i, f in zip(sizes, component_factors):
        via_h_form = via_h_form * (n_i * f)

    graph, pi = _assemble(spec)
    diag_full = []
    for n_i, d_i in zip(sizes, dvals):
        diag_full.extend([d_i] * n_i)
    direct = char_poly(graph.adjacency * alpha + Matrix.diagonal(diag_full))
    if via_quotient != direct or via_h_form != direct:
        raise ConsistencyError("join char-poly forms disagree with direct computation")
    return via_quotient, via_h_form, component_factors


def join_gammas(spec: JoinSpec) -> tuple[BiPoly, ...]:
    """The per-component zeta divisors gamma_i = -t*k_i + s1 + s2*d_i(join).

    Each gamma is also computed through its bump-count expansion
    1 - t*k_i + (1-u)*(k_i + N_i - 1 + u)*t^2 and the two expressions are
    required to agree exactly.
    """
    ks = spec.component_degrees()
    sizes = spec.sizes
    h_rows = spec.h.adjacency.data
    gammas = []
    for i, k_i in enumerate(ks):
        n_i_sum = sum(
            int(h_rows[i][j]) * sizes[j] for j in range(spec.r) if j != i
        )
        d_join = k_i + n_i_sum
        gamma = -k_i * T + S1 + S2 * d_join
        expanded = ONE - k_i * T + (ONE - U) * ((k_i + n_i_sum - 1) * ONE + U) * T**2
        if gamma != expanded:
            raise ConsistencyError("the two gamma expressions disagree")
        gammas.append(gamma)
    return tuple(gammas)


def join_zeta_reciprocal(
    spec: JoinSpec,
) -> tuple[BiPoly, BiPoly, tuple[BiPoly, ...]]:
    """Two closed forms of the Bartholdi zeta reciprocal of the join.

    Returns (via_quotient, via_h_form, gammas). Each per-component
    determinant divides exactly by its gamma; an inexact division signals
    broken regularity. Both forms are verified against the direct
    reciprocal of the assembled join.
    """
    ks = spec.component_degrees()
    sizes = spec.sizes
    graph, pi = build_join(spec)
    if not is_connected(graph):
        raise ValueError("join zeta reciprocal requires a connected join")
    n = graph.n
    m = edge_count(graph)

    h_rows = spec.h.adjacency.data
    gammas = join_gammas(spec)
    dz = []
    for i, k_i in enumerate(ks):
        d_join = k_i + sum(
            int(h_rows[i][j]) * sizes[j] for j in range(spec.r) if j != i
        )
        dz.append(S1 + S2 * d_join)

    component_factors = []
    for comp, dz_i, gamma_i in zip(spec.components, dz, gammas):
        rows = comp.adjacency.data
        mat = tuple(
            tuple(
                -int(rows[a][b]) * T + (dz_i if a == b else BiPoly.zero())
                for b in range(comp.n)
            )
            for a in range(comp.n)
        )
        det_i = bipoly_det(mat, 2 * comp.n, 2 * comp.n)
        component_factors.append(det_i.div_exact(gamma_i).as_integer())

    quotient = join_quotient(spec)
    q_mat = tuple(
        tuple(
            -int(quotient.data[i][j]) * T + (dz[i] if i == j else BiPoly.zero())
            for j in range(spec.r)
        )
        for i in range(spec.r)
    )
    quotient_det = bipoly_det(q_mat, 2 * spec.r, 2 * spec.r)

    # Determinant form over H: Delta has gamma_i / n_i on the diagonal.
    delta_mat = [
        [
            (gammas[i] * Fraction(1, sizes[i])) if i == j else -int(h_rows[i][j]) * T
            for j in range(spec.r)
        ]
        for i in range(spec.r)
    ]
    h_det = ring_det(delta_mat, BiPoly.one())
    n_product = 1
    for n_i in sizes:
        n_product *= n_i
    if quotient_det != n_product * h_det:
        raise ConsistencyError(
            "quotient zeta determinant disagrees with the scaled H determinant"
        )

    core_q = quotient_det
    core_h = (n_product * h_det).as_integer()
    for f in component_factors:
        core_q = core_q * f
        core_h = core_h * f
    if m >= n:
        via_quotient = S1 ** (m - n) * core_q
        via_h_form = S1 ** (m - n) * core_h
    else:
        via_quotient = core_q.div_exact(S1).as_integer()
        via_h_form = core_h.div_exact(S1).as_integer()

    from .zeta import bartholdi_reciprocal

    direct = bartholdi_reciprocal(graph).value
    if via_quotient != direct or via_h_form != direct:
        raise ConsistencyError("join zeta forms disagree with the direct reciprocal")
    return via_quotient, via_h_form, gammas


def teranishi_factor(
    spec: JoinSpec, pis: Sequence[Partition]
) -> tuple[UniPoly, tuple[UniPoly, ...]]:
    """Factor the join's characteristic polynomial over per-component partitions.

    The concatenation of equitable partitions of the components is an
    equitable partition of the join; the deletion side splits into one
    factor per component, each equal to the quotient of the component's
    characteristic polynomial by that of its own quotient graph. Components
    need not be regular.
    """
    if len(pis) != spec.r:
        raise ValueError("need one partition per component")
    graph, _ = _assemble(spec)
    sizes = spec.sizes
    offsets = [0]
    for n_i in sizes:
        offsets.append(offsets[-1] + n_i)

    deletion_factors = []
    joined_cells: list[tuple[int, ...]] = []
    joined_reps: list[int] = []
    for i, (comp, pi_i) in enumerate(zip(spec.components, pis)):
        relabel = {v: offsets[i] + k + 1 for k, v in enumerate(comp.vertices)}
        try:
            q_i, d_i = factor_char_poly(comp.adjacency, pi_i, comp.vertices)
        except NotEquitableError as err:
            raise ValueError(f"component {i + 1} is not equitable: {err}") from err
        # Cross-check the remark's division form per component.
        if d_i != char_poly(comp.adjacency).div_exact(q_i):
            raise ConsistencyError(
                "component deletion factor disagrees with the division form"
            )
        deletion_factors.append(d_i)
        for cell, rep in zip(pi_i.cells, pi_i.representatives):
            joined_cells.append(tuple(relabel[v] for v in cell))
            joined_reps.append(relabel[rep])

    pi = Partition.of(joined_cells, joined_reps)
    quotient = check_equitable(graph.adjacency, pi, graph.vertices)
    quotient_factor = char_poly(quotient)

    product = quotient_factor
    for f in deletion_factors:
        product = product * f
    if product != char_poly(graph.adjacency):
        raise ConsistencyError(
            "per-component factorization disagrees with the join's characteristic polynomial"
        )
    return quotient_factor, tuple(deletion_factors)

"""Independent oracles and shared fixtures for the test suite.

The Laplace-expansion determinant here is deliberately naive: it is the
reference the Bareiss kernel is audited against and must never share code
with it. The golden graphs encode the worked examples checked throughout
the suite.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations

from equifactor import (
    JoinSpec,
    Partition,
    SignedDigraph,
    build_graph,
    coarsest_equitable,
    complete_graph,
    cycle_graph,
    edge_count,
    empty_graph,
    is_connected,
    petersen_graph,
)
from equifactor.matrices import Matrix


def laplace_det(rows) -> Fraction:
    """Cofactor expansion along the first row; exponential and exact."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (-1) ** j * Fraction(rows[0][j]) * laplace_det(minor)
    return total


def brute_isomorphic(a: SignedDigraph, b: SignedDigraph) -> bool:
    """Brute-force isomorphism test, only usable for tiny graphs."""
    if a.n != b.n:
        return False
    ra, rb = a.int_rows(), b.int_rows()
    idx = range(a.n)
    for perm in permutations(idx):
        if all(ra[i][j] == rb[perm[i]][perm[j]] for i in idx for j in idx):
            return True
    return False


# -- golden inputs ----------------------------------------------------------


def c4_two_cell() -> tuple[SignedDigraph, Partition]:
    """C4 ordered so the two-cell partition has adjacency [[A1, I], [I, A1]]."""
    graph = build_graph(4, [(1, 2), (1, 3), (2, 4), (3, 4)], undirected=True)
    return graph, Partition.of([(1, 2), (3, 4)])


def digraph5() -> tuple[SignedDigraph, Partition]:
    """The 5-vertex multi-digraph with cells {1,2,3} and {4,5}."""
    rows = [
        [1, 1, 1, 1, 0],
        [1, 1, 1, 0, 1],
        [2, 0, 1, 0, 1],
        [2, 0, 0, 0, 1],
        [0, 2, 0, 1, 0],
    ]
    return SignedDigraph.from_rows(rows), Partition.of([(1, 2, 3), (4, 5)])


def petersen_two_cell() -> tuple[SignedDigraph, Partition]:
    """Petersen graph with the pentagram/pentagon two-cell partition."""
    return petersen_graph(), Partition.of([tuple(range(1, 6)), tuple(range(6, 11))])


def petersen_distance_partition() -> Partition:
    """Distance partition from vertex 1: itself, its neighbours, the rest."""
    return Partition.of([(1,), (3, 4, 6), (2, 5, 7, 8, 9, 10)])


# -- random generators ------------------------------------------------------


def random_int_matrix(rng: random.Random, n: int, lo: int = -3, hi: int = 3) -> Matrix:
    return Matrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


def random_digraph(rng: random.Random, n: int, signed: bool = False) -> SignedDigraph:
    choices = [-2, -1, 1, 2] if signed else [1]
    rows = [
        [rng.choice(choices) if rng.random() < 0.4 else 0 for _ in range(n)]
        for _ in range(n)
    ]
    return SignedDigraph.from_rows(rows)


def random_undirected(rng: random.Random, n: int) -> SignedDigraph:
    edges = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if rng.random() < 0.5
    ]
    return build_graph(n, edges, undirected=True)


def random_circulant(rng: random.Random, n: int) -> SignedDigraph:
    offsets = [d for d in range(1, n // 2 + 1) if rng.random() < 0.6]
    edges = []
    for i in range(1, n + 1):
        for d in offsets:
            j = (i - 1 + d) % n + 1
            if i < j or (i > j and 2 * d == n):
                edges.append((i, j))
    seen = set()
    unique = []
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if key not in seen:
            seen.add(key)
            unique.append(key)
    return build_graph(n, unique, undirected=True)


REGULAR_CATALOG = [
    lambda: complete_graph(1),
    lambda: empty_graph(2),
    lambda: complete_graph(2),
    lambda: empty_graph(3),
    lambda: complete_graph(3),
    lambda: empty_graph(4),
    lambda: build_graph(4, [(1, 2), (3, 4)], undirected=True),  # perfect matching
    lambda: cycle_graph(4),
    lambda: complete_graph(4),
]


def random_pattern(rng: random.Random, r: int) -> SignedDigraph:
    edges = [
        (i, j) for i in range(1, r + 1) for j in range(i + 1, r + 1) if rng.random() < 0.7
    ]
    return build_graph(r, edges, undirected=True)


def random_join_spec(rng: random.Random, require_cycle: bool = False) -> JoinSpec:
    """Random join of regular components, r <= 3, component sizes <= 4.

    With require_cycle the assembled join is resampled until it is connected
    with at least as many edges as vertices.
    """
    from equifactor.joins import _assemble

    while True:
        r = rng.randint(1, 3)
        spec = JoinSpec.of(
            random_pattern(rng, r), [rng.choice(REGULAR_CATALOG)() for _ in range(r)]
        )
        if not require_cycle:
            return spec
        graph, _ = _assemble(spec)
        if is_connected(graph) and edge_count(graph) >= graph.n:
            return spec


def random_graph_suite(count: int = 100) -> list[tuple[SignedDigraph, Partition]]:
    """Mixed deterministic suite: digraphs, undirected, circulants, joins, signed.

    Each graph is paired with its coarsest equitable partition from the
    trivial seed.
    """
    from equifactor.joins import _assemble

    suite: list[tuple[SignedDigraph, Partition]] = []
    for seed in range(count):
        rng = random.Random(1000 + seed)
        n = rng.randint(3, 8)
        style = seed % 5
        if style == 0:
            graph = random_digraph(rng, n)
        elif style == 1:
            graph = random_undirected(rng, n)
        elif style == 2:
            graph = random_circulant(rng, n)
        elif style == 3:
            while True:
                spec = random_join_spec(rng)
                graph, _ = _assemble(spec)
                if graph.n <= 8:
                    break
        else:
            graph = random_digraph(rng, n, signed=True)
        suite.append((graph, coarsest_equitable(graph)))
    return suite


def random_connected_suite(count: int = 25) -> list[tuple[SignedDigraph, Partition]]:
    """Connected simple undirected graphs (n <= 8) with at least one cycle."""
    suite = []
    seed = 0
    while len(suite) < count:
        rng = random.Random(5000 + seed)
        seed += 1
        n = rng.randint(4, 8)
        graph = random_undirected(rng, n)
        if not is_connected(graph) or edge_count(graph) < graph.n:
            continue
        suite.append((graph, coarsest_equitable(graph)))
    return suite

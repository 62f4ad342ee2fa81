#!/usr/bin/env python3
"""Walkthrough: factoring characteristic polynomials over equitable partitions.

An equitable partition groups vertices so that the number of edges from a
vertex of cell i into cell j depends only on (i, j). The quotient matrix of
those counts is well known to carry a factor of the characteristic
polynomial; the other factor belongs to the deletion graph, a signed graph
obtained by subtracting each cell representative's row from the rows of its
cellmates. This script walks the construction on three graphs.
"""

import itertools

from equifactor import (
    Matrix,
    Partition,
    SignedDigraph,
    build_graph,
    char_poly,
    check_equitable,
    coarsest_equitable,
    deletion_graph,
    deletion_matrix,
    factor_char_poly,
    petersen_graph,
    similarity_transform,
)


def banner(title: str) -> None:
    print(f"\n{'=' * 72}\n  {title}\n{'=' * 72}")


banner("C4 with the two-cell pairing partition")
c4 = build_graph(4, [(1, 2), (1, 3), (2, 4), (3, 4)], undirected=True)
pi = Partition.of([(1, 2), (3, 4)], representatives=(2, 4))
print("adjacency:")
print(c4.adjacency.display("  "))
print("partition:", pi.display())

quotient = check_equitable(c4.adjacency, pi)
print("\nquotient matrix (edge counts between cells):")
print(quotient.display("  "))

deletion = deletion_graph(c4, pi)
print("\ndeletion graph on the surviving vertices", deletion.deleted_vertices, ":")
print(deletion.matrix.display("  "))
print("negative loops appear because each survivor loses its representative's row")

qf, df = factor_char_poly(c4.adjacency, pi)
print(f"\nchar poly factors:  ({qf}) * ({df})  =  {qf * df}")
print(f"direct char poly:   {char_poly(c4.adjacency)}")

banner("The similarity transformation behind the factorization")
form = similarity_transform(c4.adjacency, pi)
print("basis (P, Q) columns: cell indicators then survivor selectors")
print(form.basis.display("  "))
conj = form.basis.inverse() @ c4.adjacency @ form.basis
print("\nconjugated matrix is exactly block upper triangular:")
print(conj.display("  "))

banner("A directed multigraph with multiplicity-2 edges")
rows = [
    [1, 1, 1, 1, 0],
    [1, 1, 1, 0, 1],
    [2, 0, 1, 0, 1],
    [2, 0, 0, 0, 1],
    [0, 2, 0, 1, 0],
]
d5 = SignedDigraph.from_rows(rows)
pid5 = Partition.of([(1, 2, 3), (4, 5)])
print("adjacency:")
print(d5.adjacency.display("  "))
qf, df = factor_char_poly(d5.adjacency, pid5)
print(f"\nquotient factor:  {qf}")
print(f"deletion factor:  {df}")
print(f"product:          {qf * df}")
print(f"trace check: root sum {-(qf * df).coefficient(4)} == trace {d5.adjacency.trace()}")

banner("Deletion factor does not depend on the representatives")
for reps in itertools.product(*pid5.cells):
    chosen = pid5.with_representatives(reps)
    dm = deletion_matrix(d5.adjacency, chosen).matrix
    print(f"  reps {reps}: deletion char poly = {char_poly(dm)}")

banner("Petersen graph: refine from one distinguished vertex")
pet = petersen_graph()
seed = Partition.of([(1,), tuple(range(2, 11))])
pi2 = coarsest_equitable(pet, seed)
print("coarsest equitable refinement of {1 | rest}:", pi2.display())
print("(the cells are the distance classes around vertex 1)")
qf, df = factor_char_poly(pet.adjacency, pi2)
print(f"quotient factor:  {qf}")
print(f"deletion factor:  {df}")
print(f"full char poly:   {char_poly(pet.adjacency)}")

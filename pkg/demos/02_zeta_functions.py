#!/usr/bin/env python3
"""Walkthrough: exact Bartholdi and Ihara zeta reciprocals.

The reciprocal of the Bartholdi zeta function of a connected undirected
graph is the bivariate polynomial s1^(m-n) * det(-t*A + s1*I + s2*D) with
s1 = 1 - (1-u)^2 t^2 and s2 = (1-u) t^2. Setting u = 0 gives the Ihara
reciprocal. Over an equitable partition the determinant splits into a small
quotient determinant and a deletion determinant, with one catch: the
deletion side keeps the degrees of the ORIGINAL graph.
"""

from equifactor import (
    Matrix,
    Partition,
    UniPoly,
    bartholdi_reciprocal,
    build_graph,
    char_poly,
    complete_graph,
    deletion_matrix,
    ihara_specialize,
    laplacian_factors,
    path_graph,
    petersen_graph,
    zeta_factor,
)


def banner(title: str) -> None:
    print(f"\n{'=' * 72}\n  {title}\n{'=' * 72}")


banner("C4: reciprocal, Ihara specialization, factorization")
c4 = build_graph(4, [(1, 2), (1, 3), (2, 4), (3, 4)], undirected=True)
pi = Partition.of([(1, 2), (3, 4)])
z = bartholdi_reciprocal(c4)
print(f"n = {z.n_vertices}, m = {z.n_edges}")
print(f"Z^-1(u, t) = {z.value}")
print(f"Ihara reciprocal Z^-1(0, t) = {ihara_specialize(z).display('t')}")
print("  (equals (1 - t^4)^2, the eigenvalue product over {2, 0, 0, -2})")

s1_power, qf, df = zeta_factor(c4, pi)
print(f"\nquotient factor:  {qf}")
print(f"deletion factor:  {df}")
print(f"product == Z^-1:  {s1_power * qf * df == z.value}")

banner("Petersen: 10x10 determinant vs 2x2 times 8x8")
pet = petersen_graph()
pi1 = Partition.of([tuple(range(1, 6)), tuple(range(6, 11))])
s1_power, qf, df = zeta_factor(pet, pi1)
z_pet = bartholdi_reciprocal(pet)
print(f"s1 exponent m - n = {z_pet.n_edges - z_pet.n_vertices}")
print(f"quotient factor has {len(qf.terms)} terms; deletion factor {len(df.terms)}")
print(f"product == Z^-1:  {s1_power * qf * df == z_pet.value}")

banner("Trees: the s1 power is negative but the division is exact")
k2 = complete_graph(2)
zk2 = bartholdi_reciprocal(k2)
print(f"Z^-1 of a single edge = {zk2.value}")
p4 = path_graph(4)
print(f"Z^-1 of the 4-path   = {bartholdi_reciprocal(p4).value}")
print("(trees keep only bump-weighted cycles, so u divides every nonconstant term)")

banner("The ambient-degree pitfall on the Laplacian side")
pi24 = pi.with_representatives((2, 4))
qf, df = laplacian_factors(c4, pi24)
laplacian = UniPoly.from_roots([0, 2, 2, 4])
print(f"Laplacian char poly (circulant eigenvalues 0, 2, 2, 4): {laplacian}")
print(f"quotient factor: {qf}")
print(f"deletion factor: {df}")

deletion_adj = deletion_matrix(c4.adjacency, pi24).matrix
wrong = char_poly(-1 * deletion_adj + Matrix.diagonal([1, 1]))
print(f"\nwith ambient degrees 2I the product matches: {qf * df == laplacian}")
print(f"with the restricted subgraph's degrees I it breaks: {qf * wrong == laplacian}")

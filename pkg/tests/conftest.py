"""Shared test helpers: brute-force oracles kept independent of the library paths."""

from __future__ import annotations

from itertools import combinations, permutations

from penergy.graphs import Graph, pair_index


def isomorphic_brute_force(g1: Graph, g2: Graph) -> bool:
    """Try every vertex bijection; the oracle the canonical form is held to."""
    if g1.n != g2.n or g1.m != g2.m:
        return False
    edges1 = set(g1.edges())
    for perm in permutations(range(g2.n)):
        mapped = {tuple(sorted((perm[i], perm[j]))) for i, j in g2.edges()}
        if mapped == edges1:
            return True
    return False


def all_labeled_graphs(n: int):
    """Every labeled simple graph on n vertices."""
    for bits in range(1 << (n * (n - 1) // 2)):
        yield Graph(n, bits)


def pair_product_direct(eigenvalues) -> float:
    """sum over i < j of lambda_i^2 lambda_j^2, by the literal double sum."""
    total = 0.0
    for i, j in combinations(range(len(eigenvalues)), 2):
        total += eigenvalues[i] ** 2 * eigenvalues[j] ** 2
    return total

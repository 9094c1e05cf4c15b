"""Test graph collections: exhaustive small graphs and seeded random ones."""

from __future__ import annotations

import itertools

import numpy as np

from .graph import Graph

__all__ = ["all_labeled_graphs", "canonical_form", "isomorphism_classes", "random_graphs", "standard_corpus"]


def all_labeled_graphs(m: int):
    """Every simple graph on vertices ``1..m`` (``2**(m(m-1)/2)`` of them)."""
    pairs = list(itertools.combinations(range(1, m + 1), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(m, frozenset(p for t, p in enumerate(pairs) if bits >> t & 1))


def canonical_form(G: Graph) -> tuple:
    """Lexicographically least sorted edge list over all vertex permutations."""
    best = None
    for perm in itertools.permutations(range(1, G.m + 1)):
        key = tuple(sorted((min(perm[a - 1], perm[b - 1]), max(perm[a - 1], perm[b - 1])) for a, b in G.edges))
        if best is None or key < best:
            best = key
    return best


def isomorphism_classes(m: int) -> list[Graph]:
    """One representative per isomorphism class of graphs on ``m`` vertices."""
    seen = {}
    for G in all_labeled_graphs(m):
        seen.setdefault(canonical_form(G), G)
    return list(seen.values())


def random_graphs(count: int, m_min: int = 6, m_max: int = 8, p: float = 0.5, seed: int = 0) -> list[Graph]:
    """Erdos-Renyi graphs with ``m`` drawn uniformly from ``m_min..m_max``."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        m = int(rng.integers(m_min, m_max + 1))
        edges = frozenset(
            (i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1) if rng.random() < p
        )
        out.append(Graph(m, edges))
    return out


def standard_corpus(seed: int = 2024, random_count: int = 50) -> list[Graph]:
    """All labeled graphs on at most 5 vertices followed by seeded random graphs on 6 to 8."""
    small = [G for m in range(1, 6) for G in all_labeled_graphs(m)]
    return small + random_graphs(random_count, seed=seed)

from fractions import Fraction

import pytest

from zeonlap import NotUniqueLabel, TooLarge, ZeonMatrix, adjoint, zeta
from zeonlap.corpus import random_graphs
from zeonlap.graph import Graph, Labeling
from zeonlap.oracle import oracle_all_cycles, oracle_paths
from zeonlap.spectra import (
    cycle_census_from_exp,
    kappa_factor,
    laplacian,
    nilpotent_adjacency,
    q_expectation,
    q_laplacian,
    row_sum,
    symmetric_eigenpair,
    symmetric_laplacian,
    symmetric_walk_census,
    vertex_eigenvalue,
    vertex_eigenvector,
    walk_census_from_powers,
)

K3 = Graph.complete(3)
P3 = Graph.path(3)
TREE5 = Graph(5, frozenset({(1, 2), (1, 5), (3, 5), (4, 5)}))


def test_adjacency_structure():
    psi = nilpotent_adjacency(P3)
    assert psi == ZeonMatrix([[0, zeta(2), 0], [zeta(1), 0, zeta(3)], [0, zeta(2), 0]])
    assert (psi @ adjoint(psi)).is_zero()
    with pytest.raises(TooLarge):
        nilpotent_adjacency(Graph(65, frozenset()))


def test_walk_census_examples():
    assert walk_census_from_powers(K3, 2, 1, 1).table == {frozenset({1, 2}): 1, frozenset({1, 3}): 1}
    assert walk_census_from_powers(K3, 3, 1, 1).table == {frozenset({1, 2, 3}): 2}
    assert walk_census_from_powers(K3, 2, 1, 3).table == {frozenset({1, 2, 3}): 1}
    assert cycle_census_from_exp(K3, 1).total() == 4
    assert cycle_census_from_exp(P3, 2).table == {frozenset({1, 2}): 1, frozenset({2, 3}): 1}


def test_power_census_matches_oracle_on_random_graphs():
    for G in random_graphs(3, m_min=6, m_max=7, seed=4):
        for k in range(1, G.m + 1):
            got = walk_census_from_powers(G, k, 1, 2).table
            assert got == oracle_paths(G, 1, 2, k).shifted(1).table


def test_laplacians():
    assert laplacian(P3) == ZeonMatrix([[1, -zeta(2), 0], [-zeta(1), 2, -zeta(3)], [0, -zeta(2), 1]])
    S = symmetric_laplacian(P3)
    assert adjoint(S) == S
    Lq = q_laplacian(P3, (1, 2, 3))
    assert adjoint(Lq) == Lq and Lq[2, 2] == 3


def test_row_sums():
    r, checks = row_sum(laplacian(P3), 2)
    assert r == 2 - zeta(1) - zeta(3)
    assert checks.ok and checks.kappa == 3
    r, checks = row_sum(laplacian(P3), 1)
    assert r == 1 - zeta(2) and checks.ok
    G = Graph(3, frozenset({(1, 2)}))  # vertex 3 is isolated
    r, checks = row_sum(laplacian(G), 3)
    assert r == 0 and checks.ok and checks.kappa == 1
    for G in random_graphs(3, seed=1):
        L = laplacian(G)
        assert all(row_sum(L, i)[1].ok for i in range(1, G.m + 1))


def test_vertex_eigenvalue_examples():
    lam, census = vertex_eigenvalue(P3, None, 2)
    assert lam.allclose(2 + zeta(1, 2) + zeta(2, 3))
    assert census.table == {frozenset({1, 2}): 1, frozenset({2, 3}): 1}
    lam, census = vertex_eigenvalue(K3, Labeling.f(3), 1)
    assert lam.allclose(1 - zeta(1, 2) - 0.5 * zeta(1, 3) - zeta(1, 2, 3))
    assert census.table == oracle_all_cycles(K3, 1).table
    with pytest.raises(NotUniqueLabel):
        vertex_eigenvalue(P3, None, 1)


def test_vertex_eigenvector_example():
    mu, censuses = vertex_eigenvector(TREE5, None, 5)
    assert mu[4] == 1
    assert mu[0].allclose(-zeta(5) - 0.5 * zeta(1, 2, 5))
    assert mu[1].allclose(0.5 * zeta(1, 5))
    assert censuses[0].table == {frozenset({5}): 1, frozenset({1, 2, 5}): 1}
    mu, censuses = vertex_eigenvector(Graph.path(2), Labeling.f(2), 1)
    assert mu[1] == zeta(1) and censuses[0].table == {frozenset({1}): 1}


def test_symmetric_eigenpair_doubles_the_dual_part():
    lam_star, xi = symmetric_eigenpair(TREE5, None, 5)
    assert lam_star.allclose(3 + 2 * zeta(1, 5) + zeta(3, 5) + zeta(4, 5))
    assert xi[4] == 1


def test_symmetric_walk_census():
    assert symmetric_walk_census(K3, 3, 1, 1).table == {frozenset({1, 2, 3}): 4}
    assert symmetric_walk_census(K3, 2, 1, 3).table == {frozenset({1, 2, 3}): 1}
    with pytest.raises(ValueError):
        symmetric_walk_census(K3, 4, 1, 1)


def test_q_expectation_examples():
    assert q_expectation(P3, (1, 2, 3), 2).allclose(2 + 2 * zeta(1, 2) - 2 * zeta(2, 3))
    assert q_expectation(Graph.path(2), (1, 2), 1).allclose(1 - 2 * zeta(1, 2))


def test_kappa_factor_is_exact():
    lab = Labeling.f(4)
    assert kappa_factor(Graph.complete(4), lab, 1, {1, 2, 4}) == Fraction(3)
    assert kappa_factor(Graph.complete(4), Labeling.q([Fraction(1, 2), 1, 2, 3]), 1, {1, 3}) == Fraction(-3, 2)


def test_symmetric_annihilator_claim():
    """``(zeta_v - zeta_j) <xi|j> = 0`` for the symmetric eigenvector pinned at ``v``."""
    for G in random_graphs(4, m_min=5, m_max=7, seed=12):
        lab = Labeling.f(G.m)
        for v in range(1, G.m + 1):
            _, xi = symmetric_eigenpair(G, lab, v)
            for j in range(1, G.m + 1):
                assert ((zeta(v) - zeta(j)) * xi[j - 1]).is_zero(1e-9)


def test_eigenvalues_sit_above_labels():
    G = random_graphs(1, m_min=7, m_max=7, seed=3)[0]
    lab = Labeling.q([Fraction(k, 3) for k in range(1, 8)])
    for v in range(1, 8):
        lam, _ = vertex_eigenvalue(G, lab, v)
        assert abs(lam.scalar - float(lab[v])) < 1e-12

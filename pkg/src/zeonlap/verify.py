"""Whole-graph verification: every algebraic census against brute force.

Each check raises :class:`TheoremViolation` on failure.  ``verify_graph``
runs them all and collects one :class:`CheckResult` per identity.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .core import zeta
from .errors import TheoremViolation, TooLarge, ZeonError
from .graph import Graph, Labeling
from .matrix import ZeonMatrix, spectral_decomposition, vec_inner
from .oracle import oracle_all_cycles, oracle_all_paths, oracle_paths_and_pwics
from .spectra import (
    cycle_census_from_exp,
    laplacian,
    nilpotent_adjacency,
    q_laplacian,
    row_sum,
    symmetric_eigenpair,
    vertex_eigenvalue,
    vertex_eigenvector,
    walk_census_from_powers,
)

VERIFY_MAX_VERTICES = 12
RECONSTRUCTION_TOL = 1e-7
ORTHOGONALITY_TOL = 1e-8

__all__ = [
    "CheckResult",
    "CHECKS",
    "corrupted_psi",
    "check_nil_structure",
    "check_exp_census",
    "check_eigenvalue_census",
    "check_eigenvector_census",
    "check_symmetric",
    "check_spectral_reconstruction",
    "check_row_sums",
    "verify_graph",
]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float
    identity: str = ""  # name of the identity that failed, empty on success

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "detail": self.detail, "seconds": round(self.seconds, 4)}
        if self.identity:
            out["identity"] = self.identity
        return out


def corrupted_psi(G: Graph) -> ZeonMatrix:
    """Adjacency matrix with one deliberate error, for testing the failure path."""
    psi = nilpotent_adjacency(G)
    rows = [list(r) for r in psi.rows]
    if G.edges:
        a, b = min(G.edges)
        rows[a - 1][b - 1] = rows[a - 1][b - 1] * 2
    elif G.m:
        rows[0][0] = zeta(1)
    return ZeonMatrix(rows)


def check_nil_structure(G: Graph, *, psi: ZeonMatrix | None = None) -> str:
    """Coefficients of ``<zeta_i|Psi**k|j>`` and ``<i|Psi**k|i>`` equal DFS counts for all ``k``, ``i``, ``j``."""
    compared = 0
    for i in range(1, G.m + 1):
        for j in range(1, G.m + 1):
            table: dict = {}
            for k in range(1, G.m + 1):
                c = walk_census_from_powers(G, k, i, j, psi=psi)
                width = k if i == j else k + 1
                if any(len(key) != width for key in c.table):
                    raise TheoremViolation("nil-structure", f"({i},{j}) k={k}: blade of the wrong size")
                table.update(c.table)
            if i == j:
                expected = oracle_all_cycles(G, i).table
            else:
                expected = oracle_all_paths(G, i, j).shifted(i).table
            if table != expected:
                raise TheoremViolation("nil-structure", f"entry ({i},{j}) " + _diff(table, expected))
            compared += 1
    return f"{compared} matrix entries"


def check_exp_census(G: Graph, *, psi: ZeonMatrix | None = None) -> str:
    for v in range(1, G.m + 1):
        got = cycle_census_from_exp(G, v, psi=psi).table
        expected = oracle_all_cycles(G, v).table
        if got != expected:
            raise TheoremViolation("exp-census", f"vertex {v} " + _diff(got, expected))
    return f"{G.m} diagonal entries"


def _diff(got: dict, expected: dict) -> str:
    keys = sorted(set(got) | set(expected), key=lambda k: (len(k), sorted(k)))
    bad = [k for k in keys if got.get(k, 0) != expected.get(k, 0)]
    k = bad[0]
    more = f" (+{len(bad) - 1} more)" if len(bad) > 1 else ""
    return "on {" + ",".join(map(str, sorted(k))) + f"}}: algebra {got.get(k, 0)}, oracle {expected.get(k, 0)}{more}"


def _eligible(G: Graph, labeling: Labeling) -> list[int]:
    # degree labelings only determine eigenpairs at vertices of unique degree
    return [v for v in range(1, G.m + 1) if labeling.is_unique(v)]


def check_eigenvalue_census(G: Graph, labeling: Labeling) -> str:
    for v in _eligible(G, labeling):
        lam, census = vertex_eigenvalue(G, labeling, v)
        expected = oracle_all_cycles(G, v).table
        if census.table != expected:
            raise TheoremViolation("eigenvalue-census", f"vertex {v} " + _diff(census.table, expected))
    return f"{len(_eligible(G, labeling))} eigenvalues"


def check_eigenvector_census(G: Graph, labeling: Labeling) -> str:
    n = 0
    for v in _eligible(G, labeling):
        _, censuses = vertex_eigenvector(G, labeling, v)
        for c in censuses:
            l = c.endpoints[0]
            expected = oracle_paths_and_pwics(G, l, v).table
            if c.table != expected:
                raise TheoremViolation("eigenvector-census", f"component {l} of vertex {v} " + _diff(c.table, expected))
            n += 1
    return f"{n} eigenvector components"


def check_symmetric(G: Graph, labeling: Labeling) -> str:
    """Doubling rule and the ``zeta_v xi = Gamma nu`` relation at every vertex."""
    vs = _eligible(G, labeling)
    for v in vs:
        symmetric_eigenpair(G, labeling, v)
    return f"{len(vs)} vertices"


def check_spectral_reconstruction(G: Graph, q=None, *, seed: int = 0) -> str:
    L = q_laplacian(G, q)
    pairs = spectral_decomposition(L, seed=seed)
    total = ZeonMatrix.zeros(G.m)
    for p in pairs:
        if not p.eigenvalue.is_real(1e-9):
            raise TheoremViolation("spectral-reconstruction", f"eigenvalue {p.eigenvalue} is not real")
        total = total + p.projector * p.eigenvalue
    if not total.allclose(L, RECONSTRUCTION_TOL):
        raise TheoremViolation("spectral-reconstruction", "sum of eigenvalue-weighted projectors differs from Lambda_q")
    for a in range(len(pairs)):
        for b in range(a + 1, len(pairs)):
            ip = vec_inner(pairs[a].vector, pairs[b].vector)
            if not ip.is_zero(ORTHOGONALITY_TOL):
                raise TheoremViolation("spectral-reconstruction", f"eigenvectors {a + 1} and {b + 1} not orthogonal: {ip}")
    return f"{len(pairs)} projectors"


def check_row_sums(G: Graph) -> str:
    L = laplacian(G)
    for i in range(1, G.m + 1):
        _, checks = row_sum(L, i)
        if not checks.ok:
            raise TheoremViolation("row-sums", f"vertex {i}: {checks}")
    return f"{G.m} rows"


CHECKS = (
    "nil-structure",
    "exp-census",
    "eigenvalue-census",
    "eigenvector-census",
    "symmetric",
    "spectral-reconstruction",
    "row-sums",
)


def verify_graph(
    G: Graph,
    labeling: Labeling | None = None,
    q=None,
    *,
    psi: ZeonMatrix | None = None,
    seed: int = 0,
) -> list[CheckResult]:
    """Run every check on ``G`` and return the results in a fixed order.

    ``labeling`` (default ``f_i = i``) drives the eigen-censuses; ``q``
    (default ``q_i = i``) the spectral reconstruction.  ``psi`` replaces the
    adjacency matrix in the walk-census checks only.
    """
    if G.m > VERIFY_MAX_VERTICES:
        raise TooLarge(f"verification enumerates all walks; limit is {VERIFY_MAX_VERTICES} vertices, got {G.m}")
    labeling = Labeling.f(G.m) if labeling is None else labeling
    runs = [
        ("nil-structure", lambda: check_nil_structure(G, psi=psi)),
        ("exp-census", lambda: check_exp_census(G, psi=psi)),
        ("eigenvalue-census", lambda: check_eigenvalue_census(G, labeling)),
        ("eigenvector-census", lambda: check_eigenvector_census(G, labeling)),
        ("symmetric", lambda: check_symmetric(G, labeling)),
        ("spectral-reconstruction", lambda: check_spectral_reconstruction(G, q, seed=seed)),
        ("row-sums", lambda: check_row_sums(G)),
    ]
    results = []
    for name, fn in runs:
        t0 = time.perf_counter()
        identity = ""
        try:
            detail = fn()
            passed = True
        except TheoremViolation as exc:
            passed, detail, identity = False, exc.detail, exc.identity
        except ZeonError as exc:
            # a numerical failure inside a check is charged to that check
            passed, detail, identity = False, f"{type(exc).__name__}: {exc}", name
        results.append(CheckResult(name, passed, detail, time.perf_counter() - t0, identity))
    return results

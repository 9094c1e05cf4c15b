"""Zeon Laplacians of graphs and the walk censuses hidden in their spectra.

The nilpotent adjacency matrix ``Psi`` has ``Psi[i, j] = zeta_j`` for every
edge ``{i, j}``.  Because generators square to zero, products of ``Psi``
only keep self-avoiding walks, and the blade of each surviving term records
the vertices the walk entered.  Every function below reads such a census
off an algebraic object and, where a theorem predicts the same numbers by
a second route, checks that the two agree.  A disagreement raises
:class:`TheoremViolation` naming the identity.

Vertex numbers are 1-based here; matrix indices are 0-based.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import ZeonElement, blade, blade_indices, exp_elem, grade, inverse, nilpotency_index, zeta
from .errors import DuplicateLabels, NonIntegerCount, NotUniqueLabel, TheoremViolation, TooLarge
from .graph import Graph, Labeling, WalkCensus
from .matrix import (
    ZeonMatrix,
    ZeonVector,
    adjoint,
    char_poly,
    eigenpair,
    mat_exp,
    mat_vec,
    normalize,
    vec_inner,
)
from .oracle import oracle_all_cycles

COUNT_TOL = 1e-6
IDENTITY_TOL = 1e-8
ROW_SUM_TOL = 1e-9
LARGE_GRAPH_WARN = 20

__all__ = [
    "nilpotent_adjacency",
    "psi_power",
    "walk_census_from_powers",
    "cycle_census_from_exp",
    "laplacian",
    "symmetric_laplacian",
    "q_laplacian",
    "RowSumChecks",
    "row_sum",
    "vertex_eigenvalue",
    "vertex_eigenvector",
    "symmetric_eigenpair",
    "symmetric_walk_census",
    "q_expectation",
    "kappa_factor",
    "decode_eigenvalue",
    "decode_eigenvector_component",
]


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------


def nilpotent_adjacency(G: Graph) -> ZeonMatrix:
    """``Psi`` with ``Psi[i, j] = zeta_{j}`` when ``{i, j}`` is an edge (1-based names)."""
    if G.m > 64:
        raise TooLarge(f"{G.m} vertices exceed the 64 available generators")
    if G.m > LARGE_GRAPH_WARN:
        warnings.warn(
            f"graph has {G.m} vertices; dense zeon arithmetic may need up to 2**{G.m} terms",
            RuntimeWarning,
            stacklevel=2,
        )
    return _psi(G)


@lru_cache(maxsize=256)
def _psi(G: Graph) -> ZeonMatrix:
    m = G.m
    rows = [[ZeonElement() for _ in range(m)] for _ in range(m)]
    for a, b in G.edges:
        rows[a - 1][b - 1] = zeta(b)
        rows[b - 1][a - 1] = zeta(a)
    return ZeonMatrix(rows)


@lru_cache(maxsize=256)
def _psi_powers(G: Graph) -> tuple:
    psi = nilpotent_adjacency(G)
    out = [ZeonMatrix.identity(G.m)]
    for _ in range(G.m):
        out.append(out[-1] @ psi)
    return tuple(out)


def psi_power(G: Graph, k: int, psi: ZeonMatrix | None = None) -> ZeonMatrix:
    """``Psi**k``; pass ``psi`` to use a substitute matrix instead of the graph's."""
    if psi is None:
        if 0 <= k <= G.m:
            return _psi_powers(G)[k]
        return ZeonMatrix.zeros(G.m)
    return psi ** k


@lru_cache(maxsize=256)
def _exp_psi(G: Graph) -> ZeonMatrix:
    return mat_exp(nilpotent_adjacency(G))


def _diag_labels(labeling: Labeling) -> list[float]:
    return labeling.floats()


def laplacian(G: Graph, labeling: Labeling | None = None) -> ZeonMatrix:
    """``diag(labels) - Psi``; the degree labeling by default."""
    labeling = Labeling.degree(G) if labeling is None else labeling
    _check_length(G, labeling)
    return _laplacian(G, labeling)


@lru_cache(maxsize=512)
def _laplacian(G: Graph, labeling: Labeling) -> ZeonMatrix:
    psi = _psi(G)
    lab = _diag_labels(labeling)
    return ZeonMatrix(
        [[lab[i] - x if i == j else -x for j, x in enumerate(r)] for i, r in enumerate(psi.rows)]
    )


def symmetric_laplacian(G: Graph, labeling: Labeling | None = None) -> ZeonMatrix:
    """``diag(labels) - (Psi + Psi†)``, a self-adjoint matrix."""
    labeling = Labeling.degree(G) if labeling is None else labeling
    _check_length(G, labeling)
    return _symmetric_laplacian(G, labeling)


@lru_cache(maxsize=512)
def _symmetric_laplacian(G: Graph, labeling: Labeling) -> ZeonMatrix:
    psi = _psi(G)
    s = psi + adjoint(psi)
    lab = _diag_labels(labeling)
    return ZeonMatrix(
        [[lab[i] - x if i == j else -x for j, x in enumerate(r)] for i, r in enumerate(s.rows)]
    )


def q_laplacian(G: Graph, q=None) -> ZeonMatrix:
    """Symmetric Laplacian with pairwise distinct positive labels ``q`` (default ``1..m``)."""
    return symmetric_laplacian(G, _as_q(G, q))


def _as_q(G: Graph, q) -> Labeling:
    if q is None:
        return Labeling.q(G.m)
    if isinstance(q, Labeling):
        if len(set(q.values)) != len(q.values):
            raise DuplicateLabels("q-labels must be pairwise distinct")
        return q
    return Labeling.q(tuple(q))


def _check_length(G: Graph, labeling: Labeling):
    if len(labeling) != G.m:
        raise ValueError(f"labeling has {len(labeling)} values for {G.m} vertices")


@lru_cache(maxsize=512)
def _chi(G: Graph, labeling: Labeling, symmetric: bool):
    L = _symmetric_laplacian(G, labeling) if symmetric else _laplacian(G, labeling)
    return char_poly(L)


# ---------------------------------------------------------------------------
# census helpers
# ---------------------------------------------------------------------------


def _to_count(x: complex, what: str) -> int:
    n = round(x.real)
    if abs(x.real - n) > COUNT_TOL or abs(x.imag) > COUNT_TOL:
        raise NonIntegerCount(f"{what}: coefficient decodes to {x}, not an integer")
    return int(n)


def _census(kind: str, endpoints: tuple, element: ZeonElement, weight) -> WalkCensus:
    """Census whose count on ``I`` is ``weight(I) * <element, zeta_I>``."""
    table = {}
    for mask, c in element.items():
        if mask == 0:
            continue
        key = frozenset(blade_indices(mask))
        n = _to_count(c * weight(key), f"{kind} {endpoints} on {sorted(key)}")
        if n:
            table[key] = n
    return WalkCensus(kind, endpoints, table)


def walk_census_from_powers(G: Graph, k: int, i: int, j: int, *, psi: ZeonMatrix | None = None) -> WalkCensus:
    """Walk counts read from ``Psi**k``.

    For ``i != j`` the coefficients of ``<zeta_i| Psi**k |j>`` count k-paths
    ``i -> j`` keyed by all ``k + 1`` vertices.  For ``i == j`` the
    coefficients of ``<i| Psi**k |i>`` count k-cycles at ``i`` keyed by their
    ``k`` vertices.

    Parameters
    ----------
    psi : ZeonMatrix, optional
        Replacement for the graph's adjacency matrix (used to exercise the
        verification path with a deliberately wrong matrix).
    """
    if not 1 <= k <= max(G.m, 1):
        raise ValueError(f"walk length {k} outside 1..{G.m}")
    entry = psi_power(G, k, psi)[i - 1, j - 1]
    if i == j:
        return _census("cycles", (i,), entry, lambda key: 1)
    return _census("paths", (i, j), zeta(i) * entry, lambda key: 1)


def cycle_census_from_exp(G: Graph, v: int, *, psi: ZeonMatrix | None = None) -> WalkCensus:
    """Cycles at ``v`` of every length: ``|I|!`` times the ``zeta_I`` coefficient of ``exp(Psi)[v, v]``."""
    E = _exp_psi(G) if psi is None else mat_exp(psi)
    return _census("cycles", (v,), E[v - 1, v - 1], lambda key: math.factorial(len(key)))


# ---------------------------------------------------------------------------
# row sums
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RowSumChecks:
    """Outcome of the row-sum identities for one row of a degree-labeled Laplacian."""

    degree: int
    neighbors: tuple
    power_ok: bool
    kappa: int
    kappa_ok: bool
    inverse_ok: bool
    exp_ok: bool

    @property
    def ok(self) -> bool:
        return self.power_ok and self.kappa_ok and self.inverse_ok and self.exp_ok

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "neighbors": list(self.neighbors),
            "power_ok": self.power_ok,
            "kappa": self.kappa,
            "kappa_ok": self.kappa_ok,
            "inverse_ok": self.inverse_ok,
            "exp_ok": self.exp_ok,
        }


def row_sum(L: ZeonMatrix, i: int) -> tuple[ZeonElement, RowSumChecks]:
    """Row sum ``r`` of row ``i`` (1-based) with checks of its closed forms.

    For a degree-labeled Laplacian ``r = deg - sum_{j ~ i} zeta_j``.  With
    ``N`` the neighbor set and ``d = |N|``:

    * ``(𝔡r)**d = (-1)**d * d! * zeta_N`` (each of the ``d!`` orderings
      contributes the same blade, and every factor carries a minus sign),
    * ``kappa(𝔡r) = d + 1``,
    * ``1/r = (1/d) * sum_k (-𝔡r / d)**k`` and ``exp(r) = e**d * sum_k (𝔡r)**k / k!``.
    """
    acc = ZeonElement()
    for x in L.rows[i - 1]:
        acc = acc + x
    r = acc
    d_r = r.dual()
    nbrs = tuple(sorted(blade_indices(d_r.support)))
    deg = len(nbrs)
    power_ok = (d_r ** deg).allclose(zeta(*nbrs, coeff=(-1) ** deg * math.factorial(deg)), ROW_SUM_TOL)
    power_ok = power_ok and abs(r.scalar - deg) <= ROW_SUM_TOL
    kappa = nilpotency_index(d_r)
    kappa_ok = kappa == deg + 1
    if deg == 0:
        inverse_ok = True  # r = 0 has no inverse; the formula does not apply
    else:
        series = ZeonElement()
        x = d_r * (-1.0 / deg)
        p = ZeonElement(1)
        for _ in range(deg + 1):
            series = series + p
            p = p * x
        inverse_ok = inverse(r).allclose(series * (1.0 / deg), ROW_SUM_TOL)
    series = ZeonElement()
    p = ZeonElement(1)
    for k in range(deg + 1):
        series = series + p * (1.0 / math.factorial(k))
        p = p * d_r
    exp_ok = exp_elem(r).allclose(series * math.exp(deg), ROW_SUM_TOL * max(1.0, math.exp(deg)))
    return r, RowSumChecks(deg, nbrs, power_ok, kappa, kappa_ok, inverse_ok, exp_ok)


# ---------------------------------------------------------------------------
# eigenvalues and eigenvectors
# ---------------------------------------------------------------------------


def kappa_factor(G: Graph, labeling: Labeling, v: int, I) -> Fraction:
    """``prod_{j in I, j != v} (label(v) - label(j))`` as an exact rational."""
    lv = labeling[v]
    out = Fraction(1)
    for j in I:
        if j != v:
            out *= lv - labeling[j]
    return out


def decode_eigenvalue(lam: ZeonElement, labeling: Labeling, v: int) -> WalkCensus:
    """Cycle census at ``v`` from the eigenvalue above ``label(v)``.

    ``count(I) = (-1)**|I| * <lam, zeta_I> * prod_{j in I - {v}} (label(v) - label(j))``.
    """
    lv = float(labeling[v])
    lab = labeling.floats()

    def weight(key):
        w = (-1.0) ** len(key)
        for j in key:
            if j != v:
                w *= lv - lab[j - 1]
        return w

    return _census("cycles", (v,), lam.dual(), weight)


def decode_eigenvector_component(mu_l: ZeonElement, labeling: Labeling, v: int, l: int) -> WalkCensus:
    """Paths and PWICs ``l -> v`` from component ``l`` of the eigenvector pinned at ``v``.

    ``count(I) = (-1)**|I| * <mu_l, zeta_I> * (label(v) - label(l)) * prod_{j in I - {v}} (label(v) - label(j))``,
    with ``I`` the set of entered vertices.  The extra factor for ``l``
    comes from dividing by ``lam - label(l)`` when ``mu_l`` is solved for.
    """
    lv = float(labeling[v])
    lab = labeling.floats()
    base = lv - lab[l - 1]

    def weight(key):
        w = (-1.0) ** len(key) * base
        for j in key:
            if j != v:
                w *= lv - lab[j - 1]
        return w

    return _census("paths+pwics", (l, v), mu_l, weight)


def _require_unique(labeling: Labeling, v: int):
    if not labeling.is_unique(v):
        raise NotUniqueLabel(
            f"vertex {v} shares its label {labeling[v]} with another vertex; use an f- or q-labeling"
        )


@lru_cache(maxsize=2048)
def _laplacian_eigenpair(G: Graph, labeling: Labeling, v: int, symmetric: bool):
    L = _symmetric_laplacian(G, labeling) if symmetric else _laplacian(G, labeling)
    chi = _chi(G, labeling, symmetric)
    return eigenpair(L, float(labeling[v]), v - 1, chi=chi)


def vertex_eigenvalue(G: Graph, labeling: Labeling | None, v: int, *, check: bool = True):
    """Eigenvalue of ``Lambda`` above ``label(v)`` and the cycle census it encodes.

    Returns
    -------
    (ZeonElement, WalkCensus)

    Raises
    ------
    NotUniqueLabel
        If another vertex carries the same label as ``v``.
    TheoremViolation
        ``"eigenvalue-census"`` when the decoded census differs from the one
        read off ``exp(Psi)``; ``"eigenvalue-structure"`` when ``zeta_v``
        fails to annihilate the dual part or its square is nonzero.
    """
    labeling = Labeling.degree(G) if labeling is None else labeling
    _check_length(G, labeling)
    _require_unique(labeling, v)
    lam, _ = _laplacian_eigenpair(G, labeling, v, False)
    census = decode_eigenvalue(lam, labeling, v)
    if check:
        expected = cycle_census_from_exp(G, v)
        if not census.same_counts(expected):
            raise TheoremViolation("eigenvalue-census", f"vertex {v}: {census} != {expected}")
        d = lam.dual()
        if not (zeta(v) * d).is_zero(IDENTITY_TOL) or not (d * d).is_zero(IDENTITY_TOL):
            raise TheoremViolation("eigenvalue-structure", f"vertex {v}: dual part {d}")
    return lam, census


def vertex_eigenvector(G: Graph, labeling: Labeling | None, v: int, *, check: bool = True):
    """Eigenvector of ``Lambda`` pinned to 1 at ``v`` and its per-component censuses.

    The census list has one entry per vertex ``l != v`` (in vertex order),
    counting paths and PWICs ``l -> v``.  With ``check`` the row-``v``
    identity ``lam = label(v) - sum_{j ~ v} zeta_j mu_j`` is asserted as
    ``"eigenvector-identity"``.
    """
    labeling = Labeling.degree(G) if labeling is None else labeling
    _check_length(G, labeling)
    _require_unique(labeling, v)
    lam, mu = _laplacian_eigenpair(G, labeling, v, False)
    censuses = [
        decode_eigenvector_component(mu[l - 1], labeling, v, l) for l in range(1, G.m + 1) if l != v
    ]
    if check:
        rhs = ZeonElement(float(labeling[v]))
        for j in G.neighbors(v):
            rhs = rhs - zeta(j) * mu[j - 1]
        if not lam.allclose(rhs, IDENTITY_TOL):
            raise TheoremViolation("eigenvector-identity", f"vertex {v}: {lam} != {rhs}")
    return mu, censuses


def symmetric_eigenpair(G: Graph, labeling: Labeling | None, v: int, *, check: bool = True):
    """Eigenpair of the symmetric Laplacian above ``label(v)``, ``xi`` pinned at ``v``.

    With ``check``, asserts the doubling rule ``lam* = 𝔠lam + 2 𝔡lam``
    (``"symmetric-doubling"``) and ``zeta_v xi = Gamma nu`` with
    ``Gamma = diag(zeta_1, ..., zeta_m)`` and ``nu`` the eigenvector of the
    plain Laplacian (``"gamma-nu"``).
    """
    labeling = Labeling.degree(G) if labeling is None else labeling
    _check_length(G, labeling)
    _require_unique(labeling, v)
    lam_star, xi = _laplacian_eigenpair(G, labeling, v, True)
    if check:
        lam, nu = _laplacian_eigenpair(G, labeling, v, False)
        doubled = lam.scalar + lam.dual() * 2
        if not lam_star.allclose(doubled, IDENTITY_TOL):
            raise TheoremViolation("symmetric-doubling", f"vertex {v}: {lam_star} != {doubled}")
        zv = zeta(v)
        for j in range(1, G.m + 1):
            left = zv * xi[j - 1]
            right = zeta(j) * nu[j - 1]
            if not left.allclose(right, IDENTITY_TOL):
                raise TheoremViolation("gamma-nu", f"vertex {v}, component {j}: {left} != {right}")
    return lam_star, xi


def symmetric_walk_census(G: Graph, k: int, i: int, j: int) -> WalkCensus:
    """Walk counts read from ``(Psi + Psi†)**k``.

    Off the diagonal this gives the same path census as ``Psi`` alone; on
    the diagonal every cycle is counted twice.  Because ``Psi Psi† = 0``
    the power expands as ``sum_j (Psi†)**j Psi**(k - j)``; that expansion
    is asserted as ``"symmetric-expansion"``.
    """
    if not 1 <= k <= max(G.m, 1):
        raise ValueError(f"walk length {k} outside 1..{G.m}")
    Sk = _sym_power(G, k)
    entry = Sk[i - 1, j - 1]
    if i == j:
        return _census("cycles", (i,), entry, lambda key: 1)
    return _census("paths", (i, j), zeta(i) * entry, lambda key: 1)


@lru_cache(maxsize=512)
def _sym_power(G: Graph, k: int) -> ZeonMatrix:
    psi = _psi(G)
    psid = adjoint(psi)
    Sk = (psi + psid) ** k
    expansion = ZeonMatrix.zeros(G.m)
    for j in range(k + 1):
        expansion = expansion + (psid ** j) @ psi_power(G, k - j)
    if not Sk.allclose(expansion, IDENTITY_TOL):
        raise TheoremViolation("symmetric-expansion", f"k = {k}")
    return Sk


def q_expectation(G: Graph, q, v: int, *, check: bool = True) -> ZeonElement:
    """``<xi|Lambda_q|xi>`` for the normalized eigenvector ``xi`` pinned at ``v``.

    With ``check`` the value is compared (``"q-expectation"``) against
    ``q_v + 2 sum_I omega_I zeta_I prod_{l in I - {v}} (q_v - q_l)**-1``,
    where ``(-1)**|I| omega_I`` are brute-force cycle counts at ``v``.
    """
    q = _as_q(G, q)
    _check_length(G, q)
    L = _symmetric_laplacian(G, q)
    _, xi = _laplacian_eigenpair(G, q, v, True)
    xi = normalize(xi)
    value = vec_inner(mat_vec(L, xi), xi)
    if check:
        qv = q[v]
        expected = ZeonElement(float(qv))
        for key, count in oracle_all_cycles(G, v).table.items():
            omega = (-1) ** len(key) * count
            coeff = Fraction(2 * omega) / kappa_factor(G, q, v, key)
            expected = expected + zeta(*key, coeff=float(coeff))
        if not value.allclose(expected, IDENTITY_TOL):
            raise TheoremViolation("q-expectation", f"vertex {v}: {value} != {expected}")
    return value

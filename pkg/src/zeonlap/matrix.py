"""Matrices and vectors over the complex zeon algebra.

Indices in this module are 0-based, as in numpy.  The graph layer converts
its 1-based vertex numbers before calling in.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Number
from typing import NamedTuple

import numpy as np

from .core import (
    SCALAR_TOL,
    ZeonElement,
    _coerce,
    conjugate,
    dot,
    grade,
    inv_sqrt,
    inverse,
)
from .errors import (
    DeficientSpan,
    DegenerateSpectrum,
    DimMismatch,
    InconsistentSystem,
    NotNilpotent,
    NotSelfAdjoint,
    NullVector,
    Singular,
)
from .poly import ZeonPolynomial, complex_simple_roots, zeon_root

RESIDUAL_TOL = 1e-8
COND_LIMIT = 1e12

__all__ = [
    "ZeonMatrix",
    "ZeonVector",
    "RREF",
    "SpectralPair",
    "mat_mul",
    "mat_vec",
    "determinant",
    "mat_inverse",
    "rref",
    "char_poly",
    "eigenpair",
    "adjoint",
    "vec_inner",
    "seminorm",
    "normalize",
    "orthogonalize",
    "spectral_decomposition",
    "mat_exp",
]

_ZERO = ZeonElement()
_ONE = ZeonElement(1)


def _elem(x) -> ZeonElement:
    y = _coerce(x)
    if y is NotImplemented:
        raise TypeError(f"cannot use {type(x).__name__} as a zeon matrix entry")
    return y


class ZeonVector:
    """Immutable column vector of zeon elements."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        object.__setattr__(self, "entries", tuple(_elem(x) for x in entries))

    def __setattr__(self, name, value):
        raise AttributeError("ZeonVector is immutable")

    @classmethod
    def basis(cls, m: int, j: int) -> "ZeonVector":
        """Dirac ket ``|j>`` (0-based ``j``)."""
        return cls(_ONE if i == j else _ZERO for i in range(m))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i) -> ZeonElement:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def scalar_part(self) -> np.ndarray:
        return np.array([e.scalar for e in self.entries], dtype=complex)

    def _check(self, other):
        if not isinstance(other, ZeonVector):
            return NotImplemented
        if other.dim != self.dim:
            raise DimMismatch(f"vector lengths {self.dim} and {other.dim}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return ZeonVector(a + b for a, b in zip(self.entries, other.entries))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return ZeonVector(a - b for a, b in zip(self.entries, other.entries))

    def __neg__(self):
        return ZeonVector(-a for a in self.entries)

    def __mul__(self, alpha):
        if isinstance(alpha, (Number, ZeonElement)):
            return ZeonVector(a * alpha for a in self.entries)
        return NotImplemented

    __rmul__ = __mul__

    def max_abs(self) -> float:
        return max((e.max_abs() for e in self.entries), default=0.0)

    def allclose(self, other, tol: float = 1e-9) -> bool:
        return all(e.is_zero(tol) for e in (self - other).entries)

    def conj(self) -> "ZeonVector":
        return ZeonVector(conjugate(e) for e in self.entries)

    def __eq__(self, other):
        if not isinstance(other, ZeonVector):
            return NotImplemented
        return self.entries == other.entries

    __hash__ = None

    def __repr__(self):
        return "ZeonVector([" + ", ".join(str(e) for e in self.entries) + "])"

    def to_json(self) -> dict:
        return {"dim": self.dim, "entries": [e.to_json() for e in self.entries]}

    @classmethod
    def from_json(cls, data: dict) -> "ZeonVector":
        return cls(ZeonElement.from_json(e) for e in data["entries"])


class ZeonMatrix:
    """Immutable rectangular matrix of zeon elements, stored as row tuples.

    Parameters
    ----------
    rows : iterable of iterables
        Entries may be ``ZeonElement`` or plain numbers.
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(_elem(x) for x in r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise DimMismatch("ragged rows")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("ZeonMatrix is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def identity(cls, m: int) -> "ZeonMatrix":
        return cls([[_ONE if i == j else _ZERO for j in range(m)] for i in range(m)])

    @classmethod
    def zeros(cls, m: int, n: int | None = None) -> "ZeonMatrix":
        n = m if n is None else n
        return cls([[_ZERO] * n for _ in range(m)])

    @classmethod
    def diag(cls, values) -> "ZeonMatrix":
        vals = [_elem(v) for v in values]
        m = len(vals)
        return cls([[vals[i] if i == j else _ZERO for j in range(m)] for i in range(m)])

    @classmethod
    def from_complex(cls, array) -> "ZeonMatrix":
        a = np.asarray(array, dtype=complex)
        return cls([[complex(x) for x in row] for row in a])

    @classmethod
    def from_columns(cls, columns) -> "ZeonMatrix":
        cols = [list(c) for c in columns]
        return cls(zip(*cols))

    # -- inspection -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    @property
    def dim(self) -> int:
        m, n = self.shape
        if m != n:
            raise DimMismatch(f"matrix of shape {m}x{n} is not square")
        return m

    def __getitem__(self, idx) -> ZeonElement:
        i, j = idx
        return self.rows[i][j]

    def row(self, i: int) -> ZeonVector:
        return ZeonVector(self.rows[i])

    def column(self, j: int) -> ZeonVector:
        return ZeonVector(r[j] for r in self.rows)

    def scalar_part(self) -> np.ndarray:
        return np.array([[e.scalar for e in r] for r in self.rows], dtype=complex).reshape(self.shape)

    def dual_part(self) -> "ZeonMatrix":
        return ZeonMatrix([[e.dual() for e in r] for r in self.rows])

    def trace(self) -> ZeonElement:
        acc = _ZERO
        for i in range(self.dim):
            acc = acc + self.rows[i][i]
        return acc

    def max_abs(self) -> float:
        return max((e.max_abs() for r in self.rows for e in r), default=0.0)

    def support(self) -> int:
        s = 0
        for r in self.rows:
            for e in r:
                s |= e.support
        return s

    def is_zero(self, tol: float = 0.0) -> bool:
        return all(e.is_zero(tol) for r in self.rows for e in r)

    def allclose(self, other: "ZeonMatrix", tol: float = 1e-9) -> bool:
        return (self - other).is_zero(tol)

    # -- arithmetic -----------------------------------------------------------

    def _same_shape(self, other):
        if not isinstance(other, ZeonMatrix):
            return NotImplemented
        if other.shape != self.shape:
            raise DimMismatch(f"shapes {self.shape} and {other.shape}")
        return other

    def __add__(self, other):
        other = self._same_shape(other)
        if other is NotImplemented:
            return other
        return ZeonMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        other = self._same_shape(other)
        if other is NotImplemented:
            return other
        return ZeonMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return ZeonMatrix([[-a for a in r] for r in self.rows])

    def __mul__(self, alpha):
        if isinstance(alpha, (Number, ZeonElement)):
            return ZeonMatrix([[a * alpha for a in r] for r in self.rows])
        return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, ZeonMatrix):
            return mat_mul(self, other)
        if isinstance(other, ZeonVector):
            return mat_vec(self, other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are defined")
        out = ZeonMatrix.identity(self.dim)
        base = self
        while k:
            if k & 1:
                out = out @ base
            k >>= 1
            if k:
                base = base @ base
        return out

    @property
    def T(self) -> "ZeonMatrix":
        return ZeonMatrix(zip(*self.rows)) if self.rows else self

    def adjoint(self) -> "ZeonMatrix":
        return adjoint(self)

    def __eq__(self, other):
        if not isinstance(other, ZeonMatrix):
            return NotImplemented
        return self.rows == other.rows

    __hash__ = None

    def __repr__(self):
        body = ",\n ".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.rows)
        return f"ZeonMatrix([{body}])"

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        m, n = self.shape
        out = {"dim": m, "entries": [e.to_json() for r in self.rows for e in r]}
        if m != n:
            out["cols"] = n
        return out

    @classmethod
    def from_json(cls, data: dict) -> "ZeonMatrix":
        m = data["dim"]
        n = data.get("cols", m)
        flat = [ZeonElement.from_json(e) for e in data["entries"]]
        if len(flat) != m * n:
            raise DimMismatch("entry count does not match the stated shape")
        return cls([flat[i * n:(i + 1) * n] for i in range(m)])


# ---------------------------------------------------------------------------
# products
# ---------------------------------------------------------------------------


def mat_mul(A: ZeonMatrix, B: ZeonMatrix) -> ZeonMatrix:
    (m, k), (k2, n) = A.shape, B.shape
    if k != k2:
        raise DimMismatch(f"cannot multiply {m}x{k} by {k2}x{n}")
    cols = list(zip(*B.rows)) if B.rows else [()] * n
    out = []
    for r in A.rows:
        nz = [(l, a) for l, a in enumerate(r) if a._terms]
        out.append([dot([a for _, a in nz], [c[l] for l, _ in nz]) for c in cols])
    return ZeonMatrix(out)


def mat_vec(A: ZeonMatrix, x: ZeonVector) -> ZeonVector:
    m, n = A.shape
    if n != x.dim:
        raise DimMismatch(f"cannot apply {m}x{n} matrix to a vector of length {x.dim}")
    return ZeonVector(dot(r, x.entries) for r in A.rows)


def adjoint(A: ZeonMatrix) -> ZeonMatrix:
    """Conjugate transpose ``A†``."""
    return ZeonMatrix([[conjugate(e) for e in col] for col in zip(*A.rows)])


# ---------------------------------------------------------------------------
# determinant, elimination, inverse
# ---------------------------------------------------------------------------


def determinant(A: ZeonMatrix) -> ZeonElement:
    """Determinant by elimination on invertible pivots.

    A column whose remaining entries are all nilpotent cannot be eliminated;
    the remaining block is then expanded by cofactors along that column.
    """
    A.dim  # squareness check
    return _det([list(r) for r in A.rows])


def _det(rows: list) -> ZeonElement:
    m = len(rows)
    if m == 0:
        return _ONE
    if m == 1:
        return rows[0][0]
    rows = [list(r) for r in rows]
    acc = _ONE
    sign = 1
    for col in range(m):
        best = max(range(col, m), key=lambda i: abs(rows[i][col].scalar))
        if abs(rows[best][col].scalar) <= SCALAR_TOL:
            sub = [r[col:] for r in rows[col:]]
            return acc * _cofactor_first_column(sub) * sign
        if best != col:
            rows[col], rows[best] = rows[best], rows[col]
            sign = -sign
        piv = rows[col][col]
        inv = inverse(piv)
        acc = acc * piv
        prow = rows[col]
        for i in range(col + 1, m):
            if not rows[i][col]._terms:
                continue
            f = rows[i][col] * inv
            rows[i] = rows[i][:col + 1] + [rows[i][k] - f * prow[k] for k in range(col + 1, m)]
    return acc * sign


def _cofactor_first_column(sub: list) -> ZeonElement:
    total = _ZERO
    for i, row in enumerate(sub):
        if not row[0]._terms:
            continue
        minor = [r[1:] for k, r in enumerate(sub) if k != i]
        term = row[0] * _det(minor)
        total = total + term if i % 2 == 0 else total - term
    return total


class RREF(NamedTuple):
    """Result of :func:`rref`.

    ``pivots[k]`` is the column whose pivot sits in row ``k``; ``free`` lists
    the columns that had no invertible entry when they were processed.  The
    determinant relation is ``|A| = det_factor * |R|`` for square input.
    """

    R: ZeonMatrix
    pivots: list
    det_factor: ZeonElement
    free: list


def rref(A: ZeonMatrix, column_order=None, tol: float = SCALAR_TOL) -> RREF:
    """Reduced row echelon form using only invertible pivots.

    Parameters
    ----------
    column_order : sequence of int, optional
        Order in which columns are eliminated.  Putting a column last makes it
        the natural free column of a rank-deficient system.
    """
    m, n = A.shape
    rows = [list(r) for r in A.rows]
    order = list(range(n)) if column_order is None else list(column_order)
    if sorted(order) != list(range(n)):
        raise DimMismatch("column_order must be a permutation of the columns")
    det_factor = _ONE
    pivots: list = []
    free: list = []
    r = 0
    for c in order:
        if r >= m:
            free.append(c)
            continue
        best = max(range(r, m), key=lambda i: abs(rows[i][c].scalar))
        if abs(rows[best][c].scalar) <= tol:
            free.append(c)
            continue
        if best != r:
            rows[r], rows[best] = rows[best], rows[r]
            det_factor = -det_factor
        piv = rows[r][c]
        det_factor = det_factor * piv
        inv = inverse(piv)
        rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        for i in range(m):
            if i == r or not rows[i][c]._terms:
                continue
            f = rows[i][c]
            rows[i] = [x - f * y if y._terms else x for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return RREF(ZeonMatrix(rows), pivots, det_factor, free)


def mat_inverse(A: ZeonMatrix) -> ZeonMatrix:
    """Inverse via ``C^{-1} sum_l (-D C^{-1})^l`` with ``C = 𝔠A`` and ``D = 𝔡A``."""
    m = A.dim
    C = A.scalar_part()
    if m and np.linalg.cond(C) >= COND_LIMIT:
        raise Singular("scalar part of the matrix is singular")
    Cinv = ZeonMatrix.from_complex(np.linalg.inv(C)) if m else ZeonMatrix([])
    N = -(A.dual_part() @ Cinv)
    acc = ZeonMatrix.identity(m)
    term = acc
    bound = m * (grade(A.support()) + 1) + 1
    for _ in range(bound):
        term = term @ N
        if term.is_zero():
            break
        acc = acc + term
    return Cinv @ acc


# ---------------------------------------------------------------------------
# characteristic polynomial and eigenpairs
# ---------------------------------------------------------------------------


def char_poly(A: ZeonMatrix) -> ZeonPolynomial:
    """``|tI - A|`` by the Faddeev-LeVerrier trace recursion.

    The recursion divides only by the integers ``1..m``, which is fine in a
    ring containing the rationals.
    """
    m = A.dim
    c = [_ZERO] * (m + 1)
    c[m] = _ONE
    AM = ZeonMatrix.zeros(m)  # A @ M_0
    for k in range(1, m + 1):
        ck = c[m - k + 1]
        M = ZeonMatrix([[x + ck if i == j else x for j, x in enumerate(r)] for i, r in enumerate(AM.rows)])
        AM = A @ M
        c[m - k] = AM.trace() * (-1.0 / k)
    return ZeonPolynomial(c)


def eigenpair(
    A: ZeonMatrix,
    lam0: complex,
    pivot: int | None = None,
    *,
    chi: ZeonPolynomial | None = None,
) -> tuple[ZeonElement, ZeonVector]:
    """Spectrally simple eigenvalue above ``lam0`` and its eigenvector.

    Parameters
    ----------
    A : ZeonMatrix
        Square matrix.
    lam0 : complex
        Simple eigenvalue of the scalar part of ``A``.
    pivot : int, optional
        0-based component pinned to 1 in the returned eigenvector.  It is
        eliminated last, so it becomes the free column.  Without it the
        free column is whichever one elimination leaves over.
    chi : ZeonPolynomial, optional
        Precomputed characteristic polynomial of ``A``.

    Returns
    -------
    (ZeonElement, ZeonVector)
    """
    m = A.dim
    chi = char_poly(A) if chi is None else chi
    lam = zeon_root(chi, lam0)
    B = ZeonMatrix([[x - lam if i == j else x for j, x in enumerate(r)] for i, r in enumerate(A.rows)])
    order = None
    if pivot is not None:
        if not 0 <= pivot < m:
            raise DimMismatch(f"pivot {pivot} outside 0..{m - 1}")
        order = [c for c in range(m) if c != pivot] + [pivot]
    res = rref(B, order)
    if len(res.free) > 1:
        raise DegenerateSpectrum(f"{len(res.free)} free columns; eigenvalue is not spectrally simple")
    if not res.free:
        raise InconsistentSystem("A - λI has full rank at the computed eigenvalue")
    f = res.free[0]
    if pivot is not None and f != pivot:
        raise InconsistentSystem(f"component {pivot} of the eigenvector is nilpotent and cannot be pinned")
    v = [_ZERO] * m
    v[f] = _ONE
    for k, c in enumerate(res.pivots):
        v[c] = -res.R[k, f]
    vec = ZeonVector(v)
    resid = mat_vec(A, vec) - vec * lam
    if not all(e.is_zero(RESIDUAL_TOL) for e in resid):
        worst = max(e.max_abs() for e in resid)
        raise InconsistentSystem(f"eigen-residual {worst:.3g} exceeds {RESIDUAL_TOL}")
    return lam, vec


# ---------------------------------------------------------------------------
# inner product geometry
# ---------------------------------------------------------------------------


def vec_inner(x: ZeonVector, y: ZeonVector) -> ZeonElement:
    """``<x|y> = y† x``."""
    if x.dim != y.dim:
        raise DimMismatch(f"vector lengths {x.dim} and {y.dim}")
    return dot(x.entries, [conjugate(e) for e in y.entries])


def seminorm(x: ZeonVector) -> float:
    """Spectral seminorm ``sqrt(𝔠<x|x>)``, the Euclidean norm of ``𝔠x``."""
    return float(np.linalg.norm(x.scalar_part()))


def normalize(x: ZeonVector) -> ZeonVector:
    s = vec_inner(x, x)
    if s.scalar.real <= SCALAR_TOL:
        raise NullVector("vector has zero spectral seminorm")
    # <x|x> is real in exact arithmetic; drop rounding noise in the imaginary parts
    s = ZeonElement({k: c.real for k, c in s.terms.items()})
    return x * inv_sqrt(s)


def orthogonalize(basis) -> list[ZeonVector]:
    """Gram-Schmidt over the zeon ring; every step divides by an invertible norm."""
    out: list[ZeonVector] = []
    for v in basis:
        w = v
        for u in out:
            w = w - u * vec_inner(w, u)
        try:
            out.append(normalize(w))
        except NullVector:
            raise DeficientSpan("scalar parts of the vectors are linearly dependent") from None
    return out


class SpectralPair(NamedTuple):
    eigenvalue: ZeonElement
    projector: ZeonMatrix
    vector: ZeonVector


def _outer(v: ZeonVector) -> ZeonMatrix:
    vbar = [conjugate(e) for e in v]
    return ZeonMatrix([[a * b for b in vbar] for a in v])


def spectral_decomposition(A: ZeonMatrix, tol: float = 1e-9, *, seed=0) -> list[SpectralPair]:
    """Eigenvalues and rank-one orthogonal projectors of a self-adjoint matrix.

    Returns one :class:`SpectralPair` per eigenvalue, sorted by scalar part,
    so that ``sum(p.eigenvalue * p.projector) == A``.
    """
    m = A.dim
    if not A.allclose(adjoint(A), tol):
        raise NotSelfAdjoint("matrix differs from its adjoint")
    chi = char_poly(A)
    roots = complex_simple_roots(chi.induced(), seed=seed)
    if len(roots) < m or not all(s for _, s in roots):
        raise DegenerateSpectrum("scalar part has a repeated eigenvalue")
    C = A.scalar_part()
    pairs = []
    for lam0, _ in roots:
        lam0 = lam0.real
        # pin the component where the complex eigenvector is largest
        w, V = np.linalg.eigh(C)
        pin = int(np.argmax(np.abs(V[:, int(np.argmin(np.abs(w - lam0)))])))
        lam, v = eigenpair(A, lam0, pin, chi=chi)
        lam = ZeonElement({k: c.real for k, c in lam.terms.items()})
        v = normalize(v)
        pairs.append(SpectralPair(lam, _outer(v), v))
    return pairs


# ---------------------------------------------------------------------------
# exponential
# ---------------------------------------------------------------------------


def mat_exp(A: ZeonMatrix) -> ZeonMatrix:
    """``exp(A)`` for a matrix with nilpotent scalar part (a finite sum).

    If ``𝔠A`` is nilpotent, every product of ``m`` factors has nilpotent
    entries, so ``A**(m * (g + 1))`` vanishes when ``g`` generators occur.
    """
    m = A.dim
    g = grade(A.support())
    bound = m * (g + 1)
    acc = ZeonMatrix.identity(m)
    term = acc
    for n in range(1, bound + 1):
        term = (term @ A) * (1.0 / n)
        if term.is_zero():
            return acc
        acc = acc + term
    if (term @ A).is_zero():
        return acc
    raise NotNilpotent(f"power sequence did not vanish by n = {bound}")

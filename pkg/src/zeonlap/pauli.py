"""Faithful matrix representation of the zeon algebra on n generators.

Generator ``zeta_i`` maps to ``I2 x ... x eta x ... x I2`` (``eta`` in tensor
slot ``i``), where ``eta = [[0, 1], [0, 0]]``.  The image of a blade
``zeta_I`` is therefore a 0/1 matrix with ones at ``(r, r | B)`` for every row
``r`` disjoint from the blade's bit pattern ``B = sum_{i in I} 2**(n - i)``.
This backend is only for cross-checking the sparse arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import ZeonElement, _coerce, blade_indices
from .errors import GeneratorOutOfRange, NotInImage, TooLarge

MAX_REP_GENERATORS = 10

ETA = np.array([[0, 1], [0, 0]], dtype=complex)
SIGMA0 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

__all__ = [
    "RepMatrix",
    "represent",
    "unrepresent",
    "generator_matrix",
    "pauli_identities",
    "ETA",
    "SIGMA0",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
]


@dataclass(frozen=True, eq=False)
class RepMatrix:
    """Dense ``2**n x 2**n`` complex matrix standing for a zeon element."""

    n: int
    data: np.ndarray

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        if self.n != other.n:
            raise ValueError("representations on different generator counts")
        return RepMatrix(self.n, self.data @ other.data)

    def __add__(self, other: "RepMatrix") -> "RepMatrix":
        return RepMatrix(self.n, self.data + other.data)

    def allclose(self, other, tol: float = 1e-10) -> bool:
        other = other.data if isinstance(other, RepMatrix) else np.asarray(other)
        return bool(np.max(np.abs(self.data - other), initial=0.0) <= tol)


def _check_n(n: int):
    if n < 0:
        raise ValueError("generator count must be non-negative")
    if n > MAX_REP_GENERATORS:
        raise TooLarge(f"representation needs 2**{n} x 2**{n} matrices; limit is n = {MAX_REP_GENERATORS}")


def _column_mask(mask: int, n: int) -> int:
    # generator i (bit i-1 of the blade mask) lives in tensor slot i, i.e. bit n - i
    out = 0
    for i in blade_indices(mask):
        out |= 1 << (n - i)
    return out


def represent(u, n: int) -> RepMatrix:
    """Matrix image of ``u`` using ``n`` tensor factors.

    Raises
    ------
    GeneratorOutOfRange
        If ``u`` involves a generator above ``n``.
    TooLarge
        If ``n`` exceeds 10.
    """
    _check_n(n)
    u = _coerce(u)
    if u.support >> n:
        raise GeneratorOutOfRange(f"element uses generator {max(blade_indices(u.support))} > n = {n}")
    size = 1 << n
    rows = np.arange(size)
    M = np.zeros((size, size), dtype=complex)
    for mask, c in u.terms.items():
        B = _column_mask(mask, n)
        r = rows[(rows & B) == 0]
        M[r, r | B] += c
    return RepMatrix(n, M)


def generator_matrix(i: int, n: int) -> np.ndarray:
    """``zeta_i``'s image built literally as a Kronecker product (for cross-checks)."""
    _check_n(n)
    if not 1 <= i <= n:
        raise GeneratorOutOfRange(f"generator {i} outside 1..{n}")
    out = np.ones((1, 1), dtype=complex)
    for slot in range(1, n + 1):
        out = np.kron(out, ETA if slot == i else SIGMA0)
    return out


def unrepresent(M, tol: float = 1e-12) -> ZeonElement:
    """Zeon element whose image is ``M``, read from the first row."""
    data = M.data if isinstance(M, RepMatrix) else np.asarray(M, dtype=complex)
    if data.ndim != 2 or data.shape[0] != data.shape[1]:
        raise NotInImage("matrix is not square")
    size = data.shape[0]
    n = size.bit_length() - 1
    if size != 1 << n:
        raise NotInImage(f"order {size} is not a power of two")
    _check_n(n)
    terms = {}
    for col in range(size):
        c = data[0, col]
        if c != 0:
            mask = 0
            for i in range(1, n + 1):
                if col >> (n - i) & 1:
                    mask |= 1 << (i - 1)
            terms[mask] = complex(c)
    u = ZeonElement(terms)
    scale = max(1.0, float(np.max(np.abs(data), initial=0.0)))
    if not represent(u, n).allclose(data, tol * scale):
        raise NotInImage("matrix is not the image of any zeon element")
    return u


def pauli_identities(tol: float = 1e-15) -> dict:
    """How ``eta`` sits among the Pauli matrices.

    ``eta = (sigma_x + c sigma_y) / 2`` holds with ``c = i``, so
    ``eta - eta† = c sigma_y = i sigma_y``.  Returns the value of ``c``
    together with a truth value for each identity.
    """
    c = 1j
    eta_d = ETA.conj().T

    def close(a, b):
        return bool(np.max(np.abs(a - b)) <= tol)

    return {
        "c": c,
        "eta = (sx + c sy)/2": close(ETA, (SIGMA_X + c * SIGMA_Y) / 2),
        "eta + eta† = sx": close(ETA + eta_d, SIGMA_X),
        "eta - eta† = c sy": close(ETA - eta_d, c * SIGMA_Y),
        "eta eta† - eta† eta = sz": close(ETA @ eta_d - eta_d @ ETA, SIGMA_Z),
        "eta eta† + eta† eta = s0": close(ETA @ eta_d + eta_d @ ETA, SIGMA0),
    }

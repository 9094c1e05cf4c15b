"""Sparse arithmetic in the complex zeon algebra.

A zeon element is stored as a map from blade bitmasks to complex
coefficients.  Generator ``i`` (1-indexed) occupies bit ``i - 1``, so a
blade ``zeta_I`` is the integer ``sum(1 << (i - 1) for i in I)`` and the
blade product reduces to a disjointness test plus a bitwise or.
"""

from __future__ import annotations

import cmath
import math
from numbers import Number

import numpy as np

from .errors import NotInvertible, NotNilpotent

MAX_GENERATORS = 64
PRUNE_REL = 1e-12
SCALAR_TOL = 1e-9

# products with more term pairs than this go through numpy
_VECTORIZE_PAIRS = 512

__all__ = [
    "MAX_GENERATORS",
    "SCALAR_TOL",
    "ZeonElement",
    "blade",
    "blade_indices",
    "blade_mul",
    "grade",
    "zeta",
    "mul",
    "linear_combine",
    "dot",
    "decompose",
    "grade_part",
    "conjugate",
    "elem_inner",
    "nilpotency_index",
    "inverse",
    "exp_elem",
    "inv_sqrt",
    "random_element",
]


def blade(indices) -> int:
    """Bitmask of the blade indexed by an iterable of generator numbers."""
    mask = 0
    for i in indices:
        i = int(i)
        if not 1 <= i <= MAX_GENERATORS:
            raise ValueError(f"generator index {i} outside 1..{MAX_GENERATORS}")
        mask |= 1 << (i - 1)
    return mask


def blade_indices(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def grade(mask: int) -> int:
    return bin(mask).count("1")


def blade_mul(a: int, b: int) -> int | None:
    """Product of two basis blades; ``None`` when they share a generator."""
    if a & b:
        return None
    return a | b


def _canonical_key(mask: int):
    return (grade(mask), blade_indices(mask))


def _prune(terms: dict, scale: float) -> dict:
    if not terms:
        return terms
    thr = PRUNE_REL * scale
    return {k: v for k, v in terms.items() if v != 0 and abs(v) > thr}


def _max_abs(terms: dict) -> float:
    return max((abs(v) for v in terms.values()), default=0.0)


def _mul_terms(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    if len(a) * len(b) <= _VECTORIZE_PAIRS:
        out: dict = {}
        for ka, va in a.items():
            for kb, vb in b.items():
                if ka & kb:
                    continue
                k = ka | kb
                out[k] = out.get(k, 0) + va * vb
        return out
    ka = np.fromiter(a.keys(), dtype=np.uint64, count=len(a))
    va = np.fromiter(a.values(), dtype=np.complex128, count=len(a))
    kb = np.fromiter(b.keys(), dtype=np.uint64, count=len(b))
    vb = np.fromiter(b.values(), dtype=np.complex128, count=len(b))
    ok = (ka[:, None] & kb[None, :]) == 0
    keys = (ka[:, None] | kb[None, :])[ok]
    if keys.size == 0:
        return {}
    vals = (va[:, None] * vb[None, :])[ok]
    uniq, inv = np.unique(keys, return_inverse=True)
    re = np.bincount(inv, weights=vals.real, minlength=uniq.size)
    im = np.bincount(inv, weights=vals.imag, minlength=uniq.size)
    return dict(zip(uniq.tolist(), (re + 1j * im).tolist()))


class ZeonElement:
    """Immutable element ``sum_I u_I zeta_I`` of the complex zeon algebra.

    Build elements with :func:`zeta`, ``ZeonElement(3)``, or from a mapping
    ``{indices_or_mask: coefficient}``.  Arithmetic operators accept plain
    numbers on either side.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        if terms is None:
            t = {}
        elif isinstance(terms, ZeonElement):
            t = dict(terms._terms)
        elif isinstance(terms, Number):
            t = {0: complex(terms)} if terms != 0 else {}
        else:
            t = {}
            for key, c in dict(terms).items():
                mask = key if isinstance(key, int) else blade(key)
                t[mask] = t.get(mask, 0) + complex(c)
            t = _prune(t, _max_abs(t))
        object.__setattr__(self, "_terms", t)

    @classmethod
    def _wrap(cls, terms: dict) -> "ZeonElement":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "_terms", terms)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("ZeonElement is immutable")

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms as ``(mask, coefficient)`` pairs in canonical order."""
        return sorted(self._terms.items(), key=lambda kv: _canonical_key(kv[0]))

    def coeff(self, key) -> complex:
        mask = key if isinstance(key, int) else blade(key)
        return self._terms.get(mask, 0j)

    @property
    def scalar(self) -> complex:
        return self._terms.get(0, 0j)

    def dual(self) -> "ZeonElement":
        return ZeonElement._wrap({k: v for k, v in self._terms.items() if k})

    @property
    def support(self) -> int:
        """Bitmask of all generators that occur in some term."""
        s = 0
        for k in self._terms:
            s |= k
        return s

    def max_abs(self) -> float:
        return _max_abs(self._terms)

    def is_zero(self, tol: float = 0.0) -> bool:
        return all(abs(v) <= tol for v in self._terms.values())

    def is_invertible(self, tol: float = SCALAR_TOL) -> bool:
        return abs(self.scalar) > tol

    def is_real(self, tol: float = 0.0) -> bool:
        return all(abs(v.imag) <= tol for v in self._terms.values())

    def min_grade(self) -> int | None:
        return min((grade(k) for k in self._terms), default=None)

    def __len__(self):
        return len(self._terms)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for k, v in b.items():
            out[k] = out.get(k, 0) + v
        return ZeonElement._wrap(_prune(out, max(_max_abs(a), _max_abs(b))))

    __radd__ = __add__

    def __neg__(self):
        return ZeonElement._wrap({k: -v for k, v in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, Number):
            c = complex(other)
            if c == 0:
                return ZeonElement._wrap({})
            return ZeonElement._wrap({k: c * v for k, v in self._terms.items()})
        if not isinstance(other, ZeonElement):
            return NotImplemented
        out = _mul_terms(self._terms, other._terms)
        return ZeonElement._wrap(_prune(out, self.max_abs() * other.max_abs()))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Number):
            return self * (1 / complex(other))
        if isinstance(other, ZeonElement):
            return self * inverse(other)
        return NotImplemented

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * inverse(self)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are defined")
        result = ZeonElement(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    __hash__ = None

    def allclose(self, other, tol: float = 1e-9) -> bool:
        """Coefficientwise comparison with absolute tolerance."""
        diff = self - _coerce(other)
        return diff.is_zero(tol)

    # -- display / serialization -------------------------------------------

    def __repr__(self):
        return f"ZeonElement({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mask, c in self.items():
            cs = _fmt_complex(c)
            if mask == 0:
                parts.append(cs)
                continue
            name = "ζ{" + ",".join(map(str, blade_indices(mask))) + "}"
            if cs == "1":
                parts.append(name)
            elif cs == "-1":
                parts.append("-" + name)
            else:
                parts.append(cs + name)
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    def to_json(self) -> dict:
        return {
            "terms": [
                {"indices": list(blade_indices(k)), "re": float(c.real), "im": float(c.imag)}
                for k, c in self.items()
            ]
        }

    @classmethod
    def from_json(cls, data: dict) -> "ZeonElement":
        return cls({tuple(t["indices"]): complex(t["re"], t.get("im", 0.0)) for t in data["terms"]})


def _fmt_complex(c: complex) -> str:
    def f(x):
        r = round(x)
        if abs(x - r) < 1e-12:
            return str(int(r))
        return f"{x:.10g}"

    if abs(c.imag) < 1e-15:
        return f(c.real)
    if abs(c.real) < 1e-15:
        return f"{f(c.imag)}i"
    return f"({f(c.real)}{'+' if c.imag >= 0 else '-'}{f(abs(c.imag))}i)"


def _coerce(x):
    if isinstance(x, ZeonElement):
        return x
    if isinstance(x, Number):
        return ZeonElement(x)
    return NotImplemented


def zeta(*indices, coeff=1) -> ZeonElement:
    """Basis blade ``coeff * zeta_{indices}``; ``zeta()`` is the unit."""
    return ZeonElement._wrap({blade(indices): complex(coeff)} if coeff != 0 else {})


# ---------------------------------------------------------------------------
# functional API
# ---------------------------------------------------------------------------


def mul(u: ZeonElement, v: ZeonElement) -> ZeonElement:
    return _coerce(u) * _coerce(v)


def linear_combine(pairs) -> ZeonElement:
    """``sum(alpha * u for alpha, u in pairs)`` with a single prune at the end."""
    out: dict = {}
    scale = 0.0
    for alpha, u in pairs:
        alpha = complex(alpha)
        u = _coerce(u)
        scale = max(scale, abs(alpha) * u.max_abs())
        for k, v in u._terms.items():
            out[k] = out.get(k, 0) + alpha * v
    return ZeonElement._wrap(_prune(out, scale))


def dot(us, vs) -> ZeonElement:
    """``sum(u * v for u, v in zip(us, vs))`` with a single prune at the end."""
    out: dict = {}
    scale = 0.0
    for u, v in zip(us, vs):
        if not u._terms or not v._terms:
            continue
        scale = max(scale, u.max_abs() * v.max_abs())
        for k, c in _mul_terms(u._terms, v._terms).items():
            out[k] = out.get(k, 0) + c
    return ZeonElement._wrap(_prune(out, scale))


def decompose(u: ZeonElement) -> tuple[complex, ZeonElement]:
    """Split ``u`` into its scalar part and its nilpotent dual part."""
    u = _coerce(u)
    return u.scalar, u.dual()


def grade_part(u: ZeonElement, k: int) -> ZeonElement:
    u = _coerce(u)
    return ZeonElement._wrap({m: c for m, c in u._terms.items() if grade(m) == k})


def conjugate(u: ZeonElement) -> ZeonElement:
    u = _coerce(u)
    return ZeonElement._wrap({m: c.conjugate() for m, c in u._terms.items()})


def elem_inner(u: ZeonElement, v: ZeonElement) -> complex:
    """Coefficient pairing ``<u, v> = sum_I u_I * conj(v_I)``."""
    u, v = _coerce(u), _coerce(v)
    a, b = u._terms, v._terms
    if len(a) > len(b):
        return sum((a[k] * c.conjugate() for k, c in b.items() if k in a), 0j)
    return sum((c * b[k].conjugate() for k, c in a.items() if k in b), 0j)


def nilpotency_index(u: ZeonElement, tol: float = SCALAR_TOL) -> int:
    """Least ``k >= 1`` with ``u**k == 0``; the zero element has index 1."""
    u = _coerce(u)
    if abs(u.scalar) > tol:
        raise NotNilpotent(f"scalar part {u.scalar} is nonzero")
    d = u.dual()
    if d.is_zero():
        return 1
    bound = grade(d.support) + 1
    p = d
    k = 1
    while not p.is_zero():
        p = p * d
        k += 1
        if k > bound:  # pragma: no cover - impossible in exact arithmetic
            raise NotNilpotent("power sequence did not vanish")
    return k


def _dual_series(d: ZeonElement, coefficients) -> ZeonElement:
    """``sum_k coefficients(k) * d**k`` for nilpotent ``d`` (finite)."""
    acc = {0: complex(coefficients(0))}
    acc = ZeonElement._wrap(_prune(acc, abs(acc[0])))
    p = ZeonElement(1)
    k = 0
    while True:
        p = p * d
        k += 1
        if p.is_zero():
            return acc
        acc = acc + coefficients(k) * p


def inverse(u: ZeonElement, tol: float = SCALAR_TOL) -> ZeonElement:
    u = _coerce(u)
    c, d = decompose(u)
    if abs(c) <= tol:
        raise NotInvertible("element has zero scalar part (nilpotent)")
    ratio = d * (-1 / c)
    return _dual_series(ratio, lambda k: 1.0) * (1 / c)


def exp_elem(u: ZeonElement) -> ZeonElement:
    u = _coerce(u)
    c, d = decompose(u)
    return _dual_series(d, lambda k: 1.0 / math.factorial(k)) * cmath.exp(c)


def inv_sqrt(u: ZeonElement, tol: float = SCALAR_TOL) -> ZeonElement:
    """Principal inverse square root for elements with positive real scalar part."""
    u = _coerce(u)
    c, d = decompose(u)
    if abs(c.imag) > tol or c.real <= tol:
        raise NotInvertible(f"inverse square root needs a positive real scalar part, got {c}")
    c = c.real
    # binomial series of (1 + x)^(-1/2)
    ratio = d * (1 / c)
    return _dual_series(ratio, lambda k: _binom_neg_half(k)) * (c ** -0.5)


def _binom_neg_half(k: int) -> float:
    # C(-1/2, k) = (-1)^k (2k)! / (4^k (k!)^2)
    return (-1) ** k * math.comb(2 * k, k) / 4 ** k


def random_element(rng, n: int, *, density: float = 0.5, scalar=None, complex_coeffs: bool = False) -> ZeonElement:
    """Random element on generators ``1..n`` for property tests.

    Each of the ``2**n`` blades is present with probability ``density``
    and gets a coefficient uniform in ``[-1, 1]`` (plus an imaginary part
    when ``complex_coeffs``).  ``scalar`` overrides the scalar part.
    """
    terms = {}
    for mask in range(1 << n):
        if rng.random() < density:
            c = complex(rng.uniform(-1, 1))
            if complex_coeffs:
                c += 1j * rng.uniform(-1, 1)
            terms[mask] = c
    if scalar is not None:
        terms[0] = complex(scalar)
    return ZeonElement(terms)

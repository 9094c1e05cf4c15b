"""Zeon polynomials and their spectrally simple zeros."""

from __future__ import annotations

import math
import warnings

import numpy as np

from .core import ZeonElement, _coerce, grade, inverse
from .errors import DegreeZero, NoConvergence, NotInvertible, NotSimpleRoot

ABERTH_MAX_ITER = 200
ABERTH_TOL = 1e-10
CLUSTER_RADIUS = 1e-7
SIMPLE_ROOT_REL = 1e-8
NEWTON_REL_TOL = 1e-10

__all__ = [
    "ZeonPolynomial",
    "NearMultipleRootWarning",
    "aberth_roots",
    "complex_simple_roots",
    "induced_complex",
    "zeon_root",
    "spectral_split",
]


class NearMultipleRootWarning(UserWarning):
    """Two reported simple roots sit close to the clustering radius."""


class ZeonPolynomial:
    """Polynomial ``sum_l coeffs[l] * u**l`` with zeon coefficients.

    Trailing zero coefficients are dropped, so ``coeffs[-1]`` is the
    leading coefficient.  The zero polynomial has ``coeffs == ()`` and
    degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("ZeonPolynomial is immutable")

    @classmethod
    def from_roots(cls, roots, leading=1) -> "ZeonPolynomial":
        p = cls([leading])
        for r in roots:
            p = p * cls([-_coerce(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> ZeonElement:
        return self.coeffs[-1] if self.coeffs else ZeonElement()

    def __call__(self, u):
        return self.eval(u)

    def eval(self, u) -> ZeonElement:
        u = _coerce(u)
        acc = ZeonElement()
        for c in reversed(self.coeffs):
            acc = acc * u + c
        return acc

    def derivative(self) -> "ZeonPolynomial":
        return ZeonPolynomial([c * k for k, c in enumerate(self.coeffs)][1:])

    def induced(self) -> list[complex]:
        return [c.scalar for c in self.coeffs]

    def __add__(self, other):
        other = other if isinstance(other, ZeonPolynomial) else ZeonPolynomial([other])
        n = max(len(self.coeffs), len(other.coeffs))
        zero = ZeonElement()
        a = self.coeffs + (zero,) * (n - len(self.coeffs))
        b = other.coeffs + (zero,) * (n - len(other.coeffs))
        return ZeonPolynomial([x + y for x, y in zip(a, b)])

    def __neg__(self):
        return ZeonPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        other = other if isinstance(other, ZeonPolynomial) else ZeonPolynomial([other])
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, ZeonPolynomial):
            other = ZeonPolynomial([other])
        if not self.coeffs or not other.coeffs:
            return ZeonPolynomial([])
        out = [ZeonElement() for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return ZeonPolynomial(out)

    __rmul__ = __mul__

    def allclose(self, other, tol=1e-9) -> bool:
        diff = self - other
        return all(c.is_zero(tol) for c in diff.coeffs)

    def __repr__(self):
        return f"ZeonPolynomial({[str(c) for c in self.coeffs]})"


def induced_complex(phi: ZeonPolynomial) -> list[complex]:
    """Complex polynomial whose coefficients are the scalar parts of ``phi``'s."""
    return phi.induced()


# ---------------------------------------------------------------------------
# complex roots
# ---------------------------------------------------------------------------


def _horner2(a: np.ndarray, z: complex):
    """Value and derivative of the polynomial with coefficients ``a`` (highest first)."""
    p = a[0]
    dp = 0j
    for c in a[1:]:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def aberth_roots(coeffs, *, seed=0, max_iter=ABERTH_MAX_ITER, tol=ABERTH_TOL) -> np.ndarray:
    """All complex roots of a polynomial by Aberth-Ehrlich iteration.

    Parameters
    ----------
    coeffs : sequence of complex
        Coefficients, lowest degree first.
    seed : int
        Seed for the random angular perturbation of the starting circle.

    Returns
    -------
    numpy.ndarray
        ``degree`` root approximations (with multiplicity).
    """
    a = np.trim_zeros(np.asarray(coeffs, dtype=complex), "b")
    n = a.size - 1
    if n < 1:
        raise DegreeZero("polynomial has no roots")
    a = a[::-1] / a[-1]  # monic, highest first
    absa = np.abs(a)
    # Fujiwara bound on the root moduli
    radius = 2 * max(absa[k] ** (1.0 / k) for k in range(1, n + 1))
    if radius == 0:
        return np.zeros(n, dtype=complex)
    rng = np.random.default_rng(seed)
    angles = 2 * np.pi * (np.arange(n) + 0.25 + 0.5 * rng.random(n)) / n
    z = 0.5 * radius * np.exp(1j * angles)
    done = np.zeros(n, dtype=bool)
    eps = np.finfo(float).eps
    for _ in range(max_iter):
        for k in range(n):
            if done[k]:
                continue
            p, dp = _horner2(a, z[k])
            scale = np.polyval(absa, abs(z[k]))
            # iterate to roundoff; ``tol`` is only the acceptance threshold
            if abs(p) <= 4 * eps * scale:
                done[k] = True
                continue
            ratio = p / dp if dp != 0 else p / (eps * scale)
            diff = z[k] - np.delete(z, k)
            s = np.sum(1.0 / diff) if np.all(diff != 0) else 0.0
            w = ratio / (1 - ratio * s)
            z[k] -= w
            if abs(w) <= 4 * eps * max(1.0, abs(z[k])):
                done[k] = True
        if done.all():
            break
    # Newton polish; harmless for simple roots, skipped when it makes things worse
    for k in range(n):
        p, dp = _horner2(a, z[k])
        for _ in range(3):
            if dp == 0:
                break
            cand = z[k] - p / dp
            pc, dpc = _horner2(a, cand)
            if abs(pc) >= abs(p):
                break
            z[k], p, dp = cand, pc, dpc
    backward = max(_backward_error(a, absa, zk) for zk in z)
    if backward > tol:
        raise NoConvergence(f"Aberth iteration left backward error {backward:.3g}")
    return z


def _backward_error(a, absa, z) -> float:
    p = abs(_horner2(a, z)[0])
    return 0.0 if p == 0 else p / np.polyval(absa, abs(z))


def complex_simple_roots(p, *, seed=0, radius=CLUSTER_RADIUS) -> list[tuple[complex, bool]]:
    """Distinct roots of a complex polynomial with a simplicity flag.

    Approximations closer than ``radius`` (relative to ``max(1, |z|)``) are
    merged, as are approximations whose Newton inclusion disks overlap.  A
    root of multiplicity k is only resolvable to about ``eps**(1/k)``, and
    the inclusion disks grow accordingly around such clusters.
    """
    a = np.trim_zeros(np.asarray(p, dtype=complex), "b")
    if a.size < 2:
        raise DegreeZero("polynomial must have degree at least 1")
    z = aberth_roots(a, seed=seed)
    n = z.size
    hi = a[::-1]
    dcoef = np.polyder(hi)
    # Newton inclusion radius: a disk of radius n|p/p'| around z holds a root
    incl = np.empty(n)
    for k, zk in enumerate(z):
        dp = np.polyval(dcoef, zk)
        pk = np.polyval(hi, zk)
        incl[k] = np.inf if dp == 0 else n * abs(pk / dp)

    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            d = abs(z[i] - z[j])
            if d <= max(radius * max(1.0, abs(z[i])), incl[i] + incl[j]):
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)

    out = []
    for members in groups.values():
        root = complex(np.mean(z[members]))
        simple = len(members) == 1
        if abs(root.imag) < 1e-12 * max(1.0, abs(root)):
            root = complex(root.real, 0.0)
        out.append((root, simple))
    out.sort(key=lambda t: (round(t[0].real, 9), round(t[0].imag, 9)))

    simple_roots = [r for r, s in out if s]
    for i in range(len(simple_roots)):
        for j in range(i + 1, len(simple_roots)):
            if abs(simple_roots[i] - simple_roots[j]) <= 10 * radius * max(1.0, abs(simple_roots[i])):
                warnings.warn(
                    f"roots {simple_roots[i]} and {simple_roots[j]} are within 10x the clustering radius",
                    NearMultipleRootWarning,
                    stacklevel=2,
                )
    return out


# ---------------------------------------------------------------------------
# zeon roots
# ---------------------------------------------------------------------------


def zeon_root(phi: ZeonPolynomial, lam0: complex, *, seed=None, trace=None) -> ZeonElement:
    """Unique zeon zero of ``phi`` whose scalar part is the simple root ``lam0``.

    Newton's iteration ``lam <- lam - phi(lam) / phi'(lam)`` is exact here:
    once the scalar part is right the residual is nilpotent and its lowest
    grade at least doubles with every step, so the loop terminates after
    about ``log2(g)`` corrections for ``g`` active generators.

    Parameters
    ----------
    seed : ZeonElement, optional
        Starting point; only its dual part is used (the scalar part is
        always ``lam0``).  The result does not depend on it.
    trace : list, optional
        Receives the residual ``phi(lam)`` of every iterate.
    """
    if phi.degree < 1:
        raise DegreeZero("polynomial must have degree at least 1")
    lam0 = complex(lam0)
    lead = phi.leading
    if not lead.is_invertible():
        raise NotInvertible("leading coefficient of the polynomial is nilpotent")
    f = np.array(phi.induced()[::-1], dtype=complex)
    coef_scale = max(c.max_abs() for c in phi.coeffs)
    if abs(np.polyval(np.polyder(f), lam0)) <= SIMPLE_ROOT_REL * max(
        float(np.max(np.abs(f))), 1e-300
    ):
        raise NotSimpleRoot(f"{lam0} is not a simple root of the induced polynomial")

    dphi = phi.derivative()
    lam = ZeonElement(lam0)
    if seed is not None:
        lam = lam + _coerce(seed).dual()

    support = 0
    for c in phi.coeffs:
        support |= c.support
    if seed is not None:
        support |= _coerce(seed).support
    g = grade(support)
    max_steps = 2 * (math.ceil(math.log2(g + 1)) + 1) + 8

    # backward-error scale for evaluating phi near lam0
    r0 = max(1.0, abs(lam0))
    scale = sum(c.max_abs() * r0 ** k for k, c in enumerate(phi.coeffs)) or coef_scale
    tol = NEWTON_REL_TOL * scale
    best = math.inf
    stalls = 0
    for _ in range(max_steps):
        res = phi.eval(lam)
        if trace is not None:
            trace.append(res)
        size = res.max_abs()
        if size <= tol:
            return lam
        if size >= best:
            stalls += 1
            if stalls >= 3:
                break
        else:
            best = size
            stalls = 0
        lam = lam - res * inverse(dphi.eval(lam))
    raise NoConvergence(f"Newton residual stalled at {best:.3g} (tolerance {tol:.3g})")


def spectral_split(phi: ZeonPolynomial, *, seed=0) -> list[ZeonElement]:
    """All ``degree`` zeon zeros of ``phi`` when its induced polynomial has simple roots."""
    roots = complex_simple_roots(phi.induced(), seed=seed)
    if any(not s for _, s in roots):
        raise NotSimpleRoot("induced polynomial has a multiple root")
    return [zeon_root(phi, r) for r, _ in roots]

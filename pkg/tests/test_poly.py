import warnings

import numpy as np
import pytest

from zeonlap import DegreeZero, NotInvertible, NotSimpleRoot, ZeonElement, ZeonPolynomial, zeta
from zeonlap.core import random_element
from zeonlap.poly import NearMultipleRootWarning, complex_simple_roots, induced_complex, spectral_split, zeon_root


def P(*coeffs):
    return ZeonPolynomial(coeffs)


def test_eval_examples():
    assert P(-1, 0, 1).eval(1 + zeta(1)) == 2 * zeta(1)
    assert P(0, 1)(zeta(1, 2)) == zeta(1, 2)
    assert P(3)(zeta(5)) == 3


def test_eval_commutes_with_scalar_part():
    rng = np.random.default_rng(0)
    for _ in range(20):
        phi = ZeonPolynomial([random_element(rng, 4) for _ in range(4)])
        u = random_element(rng, 4)
        f = np.array(induced_complex(phi)[::-1] or [0])
        assert abs(phi(u).scalar - np.polyval(f, u.scalar)) < 1e-9


def test_induced_examples():
    assert induced_complex(P(0, -(1 + zeta(1)), 1)) == [0, -1, 1]
    assert induced_complex(P(2, zeta(1))) == [2, 0]
    assert induced_complex(P(0, 0, 0, 1)) == [0, 0, 0, 1]


def test_complex_simple_roots_examples():
    assert complex_simple_roots([2, -3, 1]) == [(1, True), (2, True)]
    [(r, simple)] = complex_simple_roots([1, -2, 1])
    assert not simple and abs(r - 1) < 1e-6
    roots = complex_simple_roots([1, 0, 1])
    assert sorted(r.imag for r, _ in roots) == pytest.approx([-1, 1])
    assert all(s for _, s in roots)
    with pytest.raises(DegreeZero):
        complex_simple_roots([5])


def test_multiplicity_classification_mixed():
    p = np.polynomial.polynomial.polyfromroots([1, 1, 1, 1, 2, 3])
    roots = complex_simple_roots(p)
    assert len(roots) == 3
    assert [s for _, s in roots] == [False, True, True]


def test_close_simple_roots_are_kept_apart_with_warning():
    p = np.polynomial.polynomial.polyfromroots([1, 1 + 5e-7])
    with warnings.catch_warnings(record=True) as w:
        warnings.simplefilter("always")
        roots = complex_simple_roots(p)
    assert [s for _, s in roots] == [True, True]
    assert any(issubclass(x.category, NearMultipleRootWarning) for x in w)


def test_zeon_root_examples():
    assert zeon_root(P(-(1 + 2 * zeta(1)), 0, 1), 1).allclose(1 + zeta(1))
    assert zeon_root(P(-(3 + zeta(1, 2)), 1), 3).allclose(3 + zeta(1, 2))
    with pytest.raises(NotSimpleRoot):
        zeon_root(P(0, 0, 1), 0)


def test_zeon_root_preconditions():
    with pytest.raises(DegreeZero):
        zeon_root(P(1), 0)
    with pytest.raises(NotInvertible):
        zeon_root(P(1, 1, zeta(1) + 0), 1)


def test_newton_residual_grade_increases():
    rng = np.random.default_rng(5)
    roots = [ZeonElement(r) + random_element(rng, 5, scalar=0) for r in (1.0, -2.0, 3.5)]
    phi = ZeonPolynomial.from_roots(roots)
    trace = []
    lam = zeon_root(phi, -2.0, trace=trace)
    assert lam.allclose(roots[1], 1e-9)
    grades = [r.min_grade() for r in trace[:-1] if not r.is_zero(1e-9)]
    assert all(b > a for a, b in zip(grades, grades[1:]))
    assert len(trace) <= int(np.ceil(np.log2(6))) + 2


def test_root_is_independent_of_seed():
    rng = np.random.default_rng(9)
    phi = ZeonPolynomial([random_element(rng, 4, scalar=s) for s in (2.0, -3.0, 1.0)])
    a = zeon_root(phi, 1.0)
    b = zeon_root(phi, 1.0, seed=zeta(1) - 0.3 * zeta(2, 3))
    assert a.allclose(b, 1e-9)


def test_spectral_split_reconstructs():
    rng = np.random.default_rng(11)
    for _ in range(10):
        deg = int(rng.integers(1, 6))
        scal = rng.choice(np.arange(-5, 6), size=deg, replace=False).astype(float)
        roots = [ZeonElement(float(s)) + random_element(rng, 5, density=0.3, scalar=0) for s in scal]
        lead = random_element(rng, 3, density=0.3, scalar=2.0)
        phi = ZeonPolynomial.from_roots(roots, leading=lead)
        found = spectral_split(phi)
        assert len(found) == deg
        assert ZeonPolynomial.from_roots(found, leading=lead).allclose(phi, 1e-7)

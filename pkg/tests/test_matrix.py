import itertools
import json

import numpy as np
import pytest

from zeonlap import (
    DeficientSpan,
    DegenerateSpectrum,
    DimMismatch,
    NotSelfAdjoint,
    NotSimpleRoot,
    NullVector,
    Singular,
    ZeonElement,
    ZeonMatrix,
    ZeonPolynomial,
    ZeonVector,
    adjoint,
    char_poly,
    determinant,
    eigenpair,
    mat_exp,
    mat_inverse,
    mat_mul,
    mat_vec,
    normalize,
    orthogonalize,
    rref,
    seminorm,
    spectral_decomposition,
    vec_inner,
    zeta,
)
from zeonlap.core import random_element

I2 = ZeonMatrix.identity(2)


def leibniz(A: ZeonMatrix) -> ZeonElement:
    """Permutation-sum determinant; the reference definition."""
    m = A.dim
    total = ZeonElement()
    for perm in itertools.permutations(range(m)):
        sign = 1
        for i in range(m):
            for j in range(i + 1, m):
                if perm[i] > perm[j]:
                    sign = -sign
        term = ZeonElement(sign)
        for i, j in enumerate(perm):
            term = term * A[i, j]
        total = total + term
    return total


def random_matrix(rng, m, n_gen=5, density=0.3, scalar_scale=1.0):
    return ZeonMatrix(
        [
            [random_element(rng, n_gen, density=density, scalar=scalar_scale * rng.normal()) for _ in range(m)]
            for _ in range(m)
        ]
    )


# -- products ---------------------------------------------------------------------


def test_mat_mul_examples():
    A = ZeonMatrix([[1, zeta(1)], [zeta(2), 3]])
    assert mat_mul(I2, A) == A
    N = ZeonMatrix([[0, zeta(1)], [0, 0]])
    assert (N @ N).is_zero()
    D = ZeonMatrix([[zeta(1), 0], [0, zeta(2)]])
    assert mat_vec(D, ZeonVector([1, 1])) == ZeonVector([zeta(1), zeta(2)])


def test_dim_mismatch():
    with pytest.raises(DimMismatch):
        mat_mul(I2, ZeonMatrix.identity(3))
    with pytest.raises(DimMismatch):
        mat_vec(I2, ZeonVector([1, 2, 3]))
    with pytest.raises(DimMismatch):
        ZeonMatrix([[1, 2], [3]])


# -- determinant ------------------------------------------------------------------


def test_determinant_examples():
    assert determinant(ZeonMatrix([[zeta(1), 1], [1, zeta(2)]])).allclose(zeta(1, 2) - 1)
    assert determinant(ZeonMatrix.diag([2, 1 + zeta(1), zeta(3)])).allclose(2 * zeta(3) + 2 * zeta(1, 3))
    assert determinant(ZeonMatrix([[1, zeta(1)], [zeta(2), 1]])).allclose(1 - zeta(1, 2))


def test_determinant_cofactor_fallback_matches_leibniz():
    # first column has no invertible entry
    A = ZeonMatrix([[zeta(1), zeta(2), 0], [zeta(2), zeta(1), 1], [zeta(3), 1, zeta(3)]])
    assert determinant(A).allclose(leibniz(A), 1e-12)


def test_determinant_matches_leibniz_random():
    rng = np.random.default_rng(1)
    for _ in range(30):
        m = int(rng.integers(1, 5))
        A = random_matrix(rng, m, scalar_scale=float(rng.choice([0.0, 1.0])))
        assert determinant(A).allclose(leibniz(A), 1e-9)


def test_determinant_laws():
    rng = np.random.default_rng(2)
    for _ in range(40):
        m = int(rng.integers(1, 5))
        A, B = random_matrix(rng, m), random_matrix(rng, m)
        alpha = random_element(rng, 5, density=0.3, scalar=rng.normal())
        assert determinant(A @ B).allclose(determinant(A) * determinant(B), 1e-8)
        assert determinant(A * alpha).allclose(alpha ** m * determinant(A), 1e-8)
        assert abs(determinant(A).scalar - np.linalg.det(A.scalar_part())) < 1e-9


# -- inverse and elimination --------------------------------------------------------


def test_mat_inverse_examples():
    N = ZeonMatrix([[0, zeta(1)], [0, 0]])
    assert mat_inverse(I2 + N).allclose(I2 - N)
    assert mat_inverse(ZeonMatrix.diag([2, 1 + zeta(1)])).allclose(ZeonMatrix.diag([0.5, 1 - zeta(1)]))
    with pytest.raises(Singular):
        mat_inverse(ZeonMatrix([[zeta(1), 0], [0, 1]]))


def test_mat_inverse_random():
    rng = np.random.default_rng(3)
    for _ in range(20):
        m = int(rng.integers(1, 5))
        A = random_matrix(rng, m) + ZeonMatrix.identity(m) * 3
        assert (A @ mat_inverse(A)).allclose(ZeonMatrix.identity(m), 1e-8)


def test_rref_examples():
    R, piv, det, free = rref(ZeonMatrix.identity(3))
    assert R == ZeonMatrix.identity(3) and piv == [0, 1, 2] and det == 1 and free == []
    R, piv, det, free = rref(ZeonMatrix([[2, 0], [0, 0]]))
    assert piv == [0] and free == [1]


def test_rref_p3_shape():
    lam = 2 + zeta(1, 2) + zeta(2, 3)
    L = ZeonMatrix([[1, -zeta(2), 0], [-zeta(1), 2, -zeta(3)], [0, -zeta(2), 1]])
    B = ZeonMatrix.identity(3) * lam - L
    R, piv, _, free = rref(B, column_order=[0, 2, 1])
    assert free == [1] and sorted(piv) == [0, 2]
    # rows of the identity block carry -mu_i in the free column, mu = (-zeta_2, 1, -zeta_2)
    assert R[0, 1].allclose(zeta(2)) and R[1, 1].allclose(zeta(2))
    assert R.row(2).allclose(ZeonVector([0, 0, 0]))


def test_rref_det_factor_relation():
    rng = np.random.default_rng(4)
    for _ in range(20):
        m = int(rng.integers(1, 5))
        A = random_matrix(rng, m)
        R, _, det_factor, _ = rref(A)
        assert determinant(A).allclose(det_factor * determinant(R), 1e-8)


def test_rref_rectangular():
    A = ZeonMatrix([[1, 2, zeta(1)], [2, 4 + zeta(2), 0]])
    R, piv, _, free = rref(A)
    assert piv == [0] and 1 in free


# -- characteristic polynomial and eigenpairs --------------------------------------


def test_char_poly_examples():
    assert char_poly(ZeonMatrix.diag([1, 2])).allclose(ZeonPolynomial([2, -3, 1]))
    assert char_poly(ZeonMatrix([[0, zeta(2)], [zeta(1), 0]])).allclose(ZeonPolynomial([-zeta(1, 2), 0, 1]))
    u = 2 + zeta(4)
    assert char_poly(ZeonMatrix([[u]])).allclose(ZeonPolynomial([-u, 1]))


def test_char_poly_matches_determinant_oracle():
    rng = np.random.default_rng(5)
    for _ in range(15):
        m = int(rng.integers(1, 5))
        A = random_matrix(rng, m)
        chi = char_poly(A)
        # a degree-m polynomial is fixed by m + 1 values
        for t in np.linspace(-2, 2, m + 1):
            tI = ZeonMatrix.identity(m) * float(t)
            assert chi(float(t)).allclose(leibniz(tI - A), 1e-8)


def test_eigenpair_examples():
    lam, v = eigenpair(ZeonMatrix.diag([1, 2]), 1)
    assert lam == 1 and v == ZeonVector([1, 0])
    L = ZeonMatrix([[1, -zeta(2), 0], [-zeta(1), 2, -zeta(3)], [0, -zeta(2), 1]])
    lam, v = eigenpair(L, 2, 1)
    assert lam.allclose(2 + zeta(1, 2) + zeta(2, 3))
    assert v.allclose(ZeonVector([-zeta(2), 1, -zeta(2)]))
    with pytest.raises(NotSimpleRoot):
        eigenpair(ZeonMatrix.diag([1, 1 + zeta(1)]), 1)


def test_eigenpair_random_consistency():
    rng = np.random.default_rng(6)
    for _ in range(15):
        m = int(rng.integers(2, 5))
        C = np.diag(rng.permutation(np.arange(1, m + 1)).astype(float)) + 0.1 * rng.normal(size=(m, m))
        A = ZeonMatrix([[random_element(rng, 4, density=0.3, scalar=C[i, j]) for j in range(m)] for i in range(m)])
        w, V = np.linalg.eig(C)
        vecs = []
        for k in range(m):
            pin = int(np.argmax(np.abs(V[:, k])))
            lam, v = eigenpair(A, w[k], pin)
            assert (A @ v - v * lam).max_abs() < 1e-8
            assert abs(lam.scalar - w[k]) < 1e-9
            vecs.append(v.scalar_part())
        # eigenvectors over distinct scalar eigenvalues stay independent
        assert np.linalg.matrix_rank(np.array(vecs)) == m


# -- inner products ---------------------------------------------------------------


def test_adjoint_examples():
    assert adjoint(ZeonMatrix([[0, zeta(2)], [0, 0]])) == ZeonMatrix([[0, 0], [zeta(2), 0]])
    S = ZeonMatrix([[1, zeta(1)], [zeta(1), 2]])
    assert adjoint(S) == S
    assert adjoint(ZeonMatrix([[zeta(1, coeff=1j)]])) == ZeonMatrix([[zeta(1, coeff=-1j)]])


def test_inner_product_examples():
    x, y = ZeonVector([zeta(1), 1]), ZeonVector([1, zeta(2)])
    assert vec_inner(x, y) == zeta(1) + zeta(2)
    e1 = ZeonVector([1, 0])
    assert seminorm(e1) == 1 and normalize(e1) == e1
    with pytest.raises(NullVector):
        normalize(ZeonVector([zeta(1), zeta(2)]))


def test_normalize_gives_unit_vector():
    rng = np.random.default_rng(7)
    for _ in range(20):
        x = ZeonVector([random_element(rng, 4, complex_coeffs=True, scalar=rng.normal() + 2) for _ in range(3)])
        xh = normalize(x)
        assert vec_inner(xh, xh).allclose(1, 1e-9)


def test_orthogonalize_examples():
    std = [ZeonVector([1, 0]), ZeonVector([0, 1])]
    assert orthogonalize(std) == std
    out = orthogonalize([ZeonVector([1, 0]), ZeonVector([1, 1])])
    assert out[1].allclose(ZeonVector([0, 1]))
    with pytest.raises(DeficientSpan):
        orthogonalize([ZeonVector([1, 0]), ZeonVector([zeta(1), zeta(2)])])


def test_orthogonalize_random():
    rng = np.random.default_rng(8)
    vs = [ZeonVector([random_element(rng, 3, scalar=rng.normal()) for _ in range(3)]) for _ in range(3)]
    out = orthogonalize(vs)
    for a in range(3):
        for b in range(3):
            assert vec_inner(out[a], out[b]).allclose(1 if a == b else 0, 1e-9)


# -- spectral decomposition and exponential -----------------------------------------


def test_spectral_decomposition_examples():
    pairs = spectral_decomposition(ZeonMatrix.diag([1, 2]))
    assert [p.eigenvalue for p in pairs] == [1, 2]
    assert pairs[0].projector == ZeonMatrix([[1, 0], [0, 0]])
    L = ZeonMatrix([[1, -zeta(1) - zeta(2)], [-zeta(1) - zeta(2), 2]])
    total = ZeonMatrix.zeros(2)
    for p in spectral_decomposition(L):
        total = total + p.projector * p.eigenvalue
    assert total.allclose(L, 1e-8)
    with pytest.raises(DegenerateSpectrum):
        spectral_decomposition(ZeonMatrix([[1, zeta(1)], [zeta(1), 1]]))
    with pytest.raises(NotSelfAdjoint):
        spectral_decomposition(ZeonMatrix([[1, zeta(1)], [0, 2]]))


def test_mat_exp_examples():
    assert mat_exp(ZeonMatrix.zeros(3)) == ZeonMatrix.identity(3)
    N = ZeonMatrix([[0, zeta(2)], [0, 0]])
    assert mat_exp(N).allclose(I2 + N)
    psi = ZeonMatrix([[0, zeta(2), zeta(3)], [zeta(1), 0, zeta(3)], [zeta(1), zeta(2), 0]])
    assert mat_exp(psi)[0, 0].allclose(1 + 0.5 * (zeta(1, 2) + zeta(1, 3)) + zeta(1, 2, 3) / 3)


def test_mat_exp_complex_nilpotent_part():
    # scalar part nilpotent but nonzero: the power sequence outlives m*g + 1
    N = ZeonMatrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    A = N + ZeonMatrix.diag([zeta(1), 0, 0])
    E = mat_exp(A)
    ref = np.eye(3)
    term = np.eye(3)
    for k in range(1, 4):
        term = term @ N.scalar_part() / k
        ref = ref + term
    assert np.allclose(E.scalar_part(), ref)


def test_power_series_truncation():
    rng = np.random.default_rng(9)
    m = 3
    D = ZeonMatrix([[random_element(rng, 3, density=0.4, scalar=0) for _ in range(m)] for _ in range(m)])
    from zeonlap.core import grade

    g = grade(D.support())
    assert (D ** (m * g + 1)).is_zero()


def test_json_roundtrip():
    A = ZeonMatrix([[1, zeta(1, coeff=0.5j)], [zeta(2), 3]])
    data = json.loads(json.dumps(A.to_json()))
    assert data["dim"] == 2 and len(data["entries"]) == 4
    assert ZeonMatrix.from_json(data) == A
    v = ZeonVector([1, zeta(3)])
    assert ZeonVector.from_json(json.loads(json.dumps(v.to_json()))) == v

import math

import numpy as np
import pytest

from gyrobloch.schema import (
    Complex2x2, Hermitian2, NonPositiveSpectrumError, SingularFactorError
)
from gyrobloch.geometry import (
    MatrixFunction, compose_h2, congruence, eig_h2, eigenvalues_h2, frobenius_norm,
    inverse_h2, log_h2, matfun_h2, power_h2, product_trace, sqrt_h2
)


def _random_hermitian(rng:np.random.Generator) -> Hermitian2:
    a11, a22, re12, im12 = rng.uniform(-2.0, 2.0, 4)
    return Hermitian2.of(a11, a22, re12, im12)


def _random_pd(rng:np.random.Generator) -> Hermitian2:
    a11, a22 = rng.uniform(0.5, 2.0, 2)
    re12, im12 = rng.uniform(-0.3, 0.3, 2)
    return Hermitian2.of(a11, a22, re12, im12)


@pytest.mark.parametrize('matrix, expected', [
    (Hermitian2.diag(0.75, 0.25), (0.75, 0.25)),
    (Hermitian2.diag(0.25, 0.75), (0.75, 0.25)),
    (Hermitian2.of(0.5, 0.5, 0.3, 0.0), (0.8, 0.2)),
    (Hermitian2.of(0.5, 0.5, 0.0, -0.5), (1.0, 0.0)),
    (Hermitian2.identity(2.0), (2.0, 2.0)),
])
def test_eigenvalues(matrix:Hermitian2, expected:tuple[float, float]):
    spectrum = eig_h2(matrix)

    assert spectrum.eigenvalues == pytest.approx(expected, abs=1e-15)
    assert eigenvalues_h2(matrix) == pytest.approx(expected, abs=1e-15)
    assert spectrum.lambda1 >= spectrum.lambda2


def test_eig_of_diagonal_has_identity_frame():
    spectrum = eig_h2(Hermitian2.diag(0.75, 0.25))

    assert np.allclose(spectrum.frame.entries, np.eye(2), atol=0.0)


def test_eig_frame_is_unitary_and_reconstructs():
    rng = np.random.default_rng(7)

    for _ in range(100):
        m = _random_hermitian(rng)
        spectrum = eig_h2(m)
        frame = spectrum.frame.entries

        assert np.allclose(frame.conj().T @ frame, np.eye(2), atol=1e-14)
        assert compose_h2(spectrum, spectrum.lambda1, spectrum.lambda2).max_entry_difference(m) \
            <= 1e-13

        eigenvalues = np.linalg.eigvalsh(m.to_array())[::-1]
        assert spectrum.eigenvalues == pytest.approx(tuple(eigenvalues), abs=1e-13)


def test_spectrum_condition_number():
    assert eig_h2(Hermitian2.diag(0.8, 0.2)).condition_number == pytest.approx(4.0)
    assert eig_h2(Hermitian2.diag(1.0, 0.0)).condition_number == math.inf


def test_log_and_sqrt_of_diagonal():
    log = log_h2(Hermitian2.diag(1.6, 0.4))

    assert log.a11 == pytest.approx(math.log(1.6), abs=1e-15)
    assert log.a22 == pytest.approx(math.log(0.4), abs=1e-15)
    assert log.off_diagonal == 0

    root = sqrt_h2(Hermitian2.diag(0.8, 0.2))

    assert root.a11 == pytest.approx(0.8944271909999159, abs=1e-15)
    assert root.a22 == pytest.approx(0.4472135954999579, abs=1e-15)


def test_sqrt_squares_back():
    rng = np.random.default_rng(11)

    for _ in range(100):
        m = _random_pd(rng)
        root = sqrt_h2(m)

        assert power_h2(root, 2.0).max_entry_difference(m) <= 1e-13
        assert np.allclose(root.to_array() @ root.to_array(), m.to_array(), atol=1e-13)


def test_inverse():
    rng = np.random.default_rng(13)

    for _ in range(50):
        m = _random_pd(rng)
        product = m.to_array() @ inverse_h2(m).to_array()

        assert np.allclose(product, np.eye(2), atol=1e-13)


def test_power_one_is_identity_map():
    m = Hermitian2.of(1.0, -3.0, 0.5, 0.25)

    assert power_h2(m, 1.0) is m
    assert matfun_h2(m, 'power', 1.0) is m


def test_integer_power_of_indefinite_matrix():
    m = Hermitian2.diag(2.0, -1.0)
    square = power_h2(m, 2.0)

    assert square.a11 == pytest.approx(4.0)
    assert square.a22 == pytest.approx(1.0)


def test_negative_integer_power():
    inverse_square = power_h2(Hermitian2.diag(2.0, 0.5), -2.0)

    assert inverse_square.a11 == pytest.approx(0.25)
    assert inverse_square.a22 == pytest.approx(4.0)


@pytest.mark.parametrize('matrix, f, power', [
    (Hermitian2.diag(1.0, 0.0), MatrixFunction.LOG, 1.0),
    (Hermitian2.diag(1.0, -1.0), MatrixFunction.LOG, 1.0),
    (Hermitian2.diag(1.0, 0.0), MatrixFunction.INVERSE, 1.0),
    (Hermitian2.diag(-1.0, -2.0), MatrixFunction.SQRT, 1.0),
    (Hermitian2.diag(1.0, -0.5), MatrixFunction.POWER, 0.5),
    (Hermitian2.diag(1.0, 0.0), MatrixFunction.POWER, -1.0),
    (Hermitian2.diag(2.0, -1.0), MatrixFunction.POWER, -2.0),
])
def test_matrix_function_rejects_spectrum(matrix:Hermitian2, f:MatrixFunction, power:float):
    with pytest.raises(NonPositiveSpectrumError):
        matfun_h2(matrix, f, power)


def test_sqrt_of_singular_semidefinite():
    root = sqrt_h2(Hermitian2.diag(1.0, 0.0))

    assert root.a11 == 1.0
    assert root.a22 == 0.0


def test_congruence():
    a = Hermitian2.of(1.0, 0.5, 0.2, -0.1)

    assert congruence(Complex2x2.identity(), a).max_entry_difference(a) == 0.0

    x = Complex2x2.of(np.array([[1.0 + 0.5j, 0.3], [-0.2j, 2.0]]))
    moved = congruence(x, a)
    expected = x.entries @ a.to_array() @ x.adjoint

    assert np.allclose(moved.to_array(), expected, atol=1e-14)
    assert congruence(x.inverse(), moved).max_entry_difference(a) <= 1e-13

    with pytest.raises(SingularFactorError):
        congruence(Complex2x2.of(np.array([[1.0, 2.0], [0.5, 1.0]])), a)

    with pytest.raises(SingularFactorError):
        Complex2x2.of(np.zeros((2, 2))).inverse()


def test_congruence_by_hermitian_factor():
    a = Hermitian2.diag(0.8, 0.2)
    half = sqrt_h2(Hermitian2.diag(4.0, 9.0))

    assert congruence(half, a).max_entry_difference(Hermitian2.diag(3.2, 1.8)) <= 1e-15


def test_frobenius_norm():
    assert frobenius_norm(Hermitian2.identity()) == pytest.approx(math.sqrt(2.0))
    assert frobenius_norm(Hermitian2.diag(3.0, 4.0)) == pytest.approx(5.0)

    rng = np.random.default_rng(17)
    m = _random_hermitian(rng)

    assert frobenius_norm(m) == pytest.approx(np.linalg.norm(m.to_array()), rel=1e-14)


def test_product_trace():
    rng = np.random.default_rng(19)

    for _ in range(20):
        a, b = _random_hermitian(rng), _random_hermitian(rng)
        expected = np.trace(a.to_array() @ b.to_array())

        assert product_trace(a, b) == pytest.approx(expected.real, abs=1e-13)

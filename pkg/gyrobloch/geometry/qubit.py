''' qubit density matrices and the gyrogroup operation on the invertible ones.

rho_u (.) rho_v = rho_u^{1/2} rho_v rho_u^{1/2} / tr(rho_u^{1/2} rho_v rho_u^{1/2})

is computed in matrix form. that it equals rho_{u + v} is checked, not used.
'''
import math

from ..schema import (
    BlochVector, DensityMatrix, DensitySpectrum, Hermitian2, PauliVector, PAULI,
    NormExceedsOneError, NotTraceOneError, NotPositiveError
)
from ..util import get_logger, L
from .gyrovector import check_interior
from .hermitian2 import congruence, eigenvalues_h2, inverse_h2, product_trace


_logger = get_logger(__name__)

# representation tolerance of the closed ball and of trace 1
NORM_TOLERANCE = 1e-12
TRACE_TOLERANCE = 1e-12
NEGATIVE_EIGENVALUE_TOLERANCE = 1e-12


def pauli() -> PauliVector:
    return PAULI


def from_bloch(v:BlochVector) -> DensityMatrix:
    ''' 1/2 (I + v . sigma). mixed (invertible) if and only if |v| < 1. '''
    if v.norm > 1.0 + NORM_TOLERANCE:
        _logger.fatal(f'bloch vector should be in the closed unit ball. {v=} {v.norm=}')
        raise NormExceedsOneError(L('bloch vector {0} has norm {1!r} > 1', v.to_list(), v.norm))

    return DensityMatrix.of(v)


def matrix_view(rho:DensityMatrix) -> Hermitian2:
    return rho.matrix


def to_bloch(rho:Hermitian2) -> BlochVector:
    ''' v_k = tr(rho sigma_k) '''
    if abs(rho.trace - 1.0) > TRACE_TOLERANCE:
        _logger.fatal(f'density matrix should have trace 1. {rho=} {rho.trace=}')
        raise NotTraceOneError(L('trace of density matrix is {0!r}, not 1', rho.trace))

    _, smallest = eigenvalues_h2(rho)

    if smallest < -NEGATIVE_EIGENVALUE_TOLERANCE:
        _logger.fatal(f'density matrix should be positive semidefinite. {rho=} {smallest=}')
        raise NotPositiveError(L('density matrix has negative eigenvalue {0!r}', smallest))

    return BlochVector.of(2.0 * rho.re12, -2.0 * rho.im12, rho.a11 - rho.a22)


def to_density(rho:Hermitian2) -> DensityMatrix:
    return DensityMatrix.of(to_bloch(rho))


def spectrum(rho:DensityMatrix) -> DensitySpectrum:
    norm = rho.bloch.norm

    return DensitySpectrum.trusted(
        lambda_plus=0.5 * (1.0 + norm),
        lambda_minus=0.5 * (1.0 - norm),
        det=0.25 * (1.0 - rho.bloch.norm_squared))


def _sqrt_coefficients(v:BlochVector) -> tuple[float, float]:
    gamma = 1.0 / math.sqrt(1.0 - v.norm_squared)
    return math.sqrt(gamma / (1.0 + gamma)), 0.5 / gamma


def sqrt_density(rho:DensityMatrix) -> Hermitian2:
    ''' sqrt(g/(1+g)) (rho + I/(2g)) with g the lorentz factor of the bloch vector. '''
    check_interior(rho.bloch)

    scale, shift = _sqrt_coefficients(rho.bloch)

    return (rho.matrix + Hermitian2.identity(shift)).scale(scale)


def star(rho_u:DensityMatrix, rho_v:DensityMatrix) -> Hermitian2:
    ''' rho_u^{1/2} rho_v rho_u^{1/2} without normalization. '''
    check_interior(rho_u.bloch, rho_v.bloch)
    return congruence(sqrt_density(rho_u), rho_v.matrix)


def odot(rho_u:DensityMatrix, rho_v:DensityMatrix) -> DensityMatrix:
    product = star(rho_u, rho_v)

    return DensityMatrix.of(to_bloch(product.scale(1.0 / product.trace)))


def trace_product(rho_u:DensityMatrix, rho_v:DensityMatrix) -> float:
    ''' tr(rho_u rho_v) = (1 + u.v)/2 '''
    return 0.5 * (1.0 + rho_u.bloch.dot(rho_v.bloch))


def explicit_trace_product(rho_u:DensityMatrix, rho_v:DensityMatrix) -> float:
    return product_trace(rho_u.matrix, rho_v.matrix)


def inverse_state(rho_u:DensityMatrix) -> DensityMatrix:
    ''' rho_{-u} = det(rho_u) rho_u^{-1} '''
    check_interior(rho_u.bloch)
    return DensityMatrix.of(-rho_u.bloch)


def inverse_formula(rho_u:DensityMatrix, printed:bool = False) -> Hermitian2:
    ''' c rho_u^{-1} with c = 1/(4 g^2) = det(rho_u).
        printed=True uses c = 1/(4 g), whose trace is g instead of 1.
    '''
    check_interior(rho_u.bloch)

    gamma_squared = 1.0 / (1.0 - rho_u.bloch.norm_squared)
    coefficient = 0.25 / math.sqrt(gamma_squared) if printed else 0.25 / gamma_squared

    return inverse_h2(rho_u.matrix).scale(coefficient)

''' closed form kernel for 2x2 complex hermitian matrices.

every function is pure and works on immutable Hermitian2 values.
'''
from enum import Enum
from typing import Callable
import math

import numpy as np

from ..schema import (
    Hermitian2, Complex2x2, Spectrum2, NonPositiveSpectrumError, SingularFactorError
)
from ..schema.hermitian import SINGULAR_TOLERANCE
from ..util import get_logger, L


_logger = get_logger(__name__)

# eigenvalues closer than this (relative to trace) are degenerate.
DEGENERATE_TOLERANCE = 1e-14
# smallest eigenvalue accepted as positive. an underflow guard only.
PD_FLOOR = 1e-300

_SQRT2 = math.sqrt(2.0)


class MatrixFunction(str, Enum):
    SQRT = 'sqrt'
    LOG = 'log'
    INVERSE = 'inverse'
    POWER = 'power'


def eig_h2(m:Hermitian2) -> Spectrum2:
    lambda1, lambda2, v1 = eig_parts_h2(m)
    v2 = (-v1[1].conjugate(), v1[0].conjugate())

    frame = np.array([[v1[0], v2[0]], [v1[1], v2[1]]], dtype=complex)

    return Spectrum2.trusted(lambda1=lambda1, lambda2=lambda2, frame=Complex2x2.of(frame))


def eigenvalues_h2(m:Hermitian2) -> tuple[float, float]:
    half_sum = 0.5 * (m.a11 + m.a22)
    radius = math.hypot(0.5 * (m.a11 - m.a22), m.re12, m.im12)

    return (half_sum + radius, half_sum - radius)


def eig_parts_h2(m:Hermitian2) -> tuple[float, float, tuple[complex, complex]]:
    ''' eigenvalues (descending) and unit eigenvector of the larger one. '''
    half_sum = 0.5 * (m.a11 + m.a22)
    half_diff = 0.5 * (m.a11 - m.a22)
    a12 = m.off_diagonal
    radius = math.hypot(half_diff, m.re12, m.im12)

    lambda1, lambda2 = half_sum + radius, half_sum - radius

    if radius == 0.0 or radius <= DEGENERATE_TOLERANCE * abs(m.a11 + m.a22):
        return lambda1, lambda2, (1 + 0j, 0j)

    # pick the form which avoids cancellation in r -/+ z
    if half_diff >= 0.0:
        first, second = complex(radius + half_diff), a12.conjugate()
    else:
        first, second = a12, complex(radius - half_diff)

    scale = math.hypot(abs(first), abs(second))

    return lambda1, lambda2, (first / scale, second / scale)


def compose_h2(spectrum:Spectrum2, f1:float, f2:float) -> Hermitian2:
    ''' frame @ diag(f1, f2) @ frame* '''
    v1_0 = complex(spectrum.frame.entries[0, 0])
    v1_1 = complex(spectrum.frame.entries[1, 0])

    return compose_parts_h2(v1_0, v1_1, f1, f2)


def compose_parts_h2(v1_0:complex, v1_1:complex, f1:float, f2:float) -> Hermitian2:
    ''' f1 P1 + f2 (I - P1) with P1 the projector on the unit vector (v1_0, v1_1). '''
    gap = f1 - f2
    a12 = gap * v1_0 * v1_1.conjugate()

    return Hermitian2.of(
        f2 + gap * (v1_0.real ** 2 + v1_0.imag ** 2),
        f2 + gap * (v1_1.real ** 2 + v1_1.imag ** 2),
        a12.real, a12.imag)


def _scalar_function(f:MatrixFunction, power:float) -> Callable[[float], float]:
    match f:
        case MatrixFunction.SQRT:
            return lambda x: math.sqrt(max(x, 0.0))
        case MatrixFunction.LOG:
            return math.log
        case MatrixFunction.INVERSE:
            return lambda x: 1.0 / x
        case MatrixFunction.POWER:
            if power == 1.0:
                return lambda x: x
            return lambda x: x ** power

    raise ValueError(L('unknown matrix function {0}', f))


def _requires_positive(f:MatrixFunction, power:float) -> bool:
    # negative integer powers divide by the eigenvalues
    if f is MatrixFunction.POWER:
        return power < 0.0 or not float(power).is_integer()

    return f in (MatrixFunction.LOG, MatrixFunction.INVERSE)


def matfun_h2(m:Hermitian2, f:MatrixFunction | str, power:float = 1.0) -> Hermitian2:
    ''' apply the scalar function f to the eigenvalues of m.
        power is the exponent of MatrixFunction.POWER.
    '''
    f = MatrixFunction(f)
    lambda1, lambda2, v1 = eig_parts_h2(m)

    if _requires_positive(f, power) and lambda2 <= PD_FLOOR:
        _logger.fatal(f'{f=} {power=} requires positive definite matrix. {lambda2=} of {m=}')
        raise NonPositiveSpectrumError(
            L('{0} requires positive eigenvalues, but the smallest is {1}', f.value, lambda2))

    if f is MatrixFunction.SQRT and lambda2 < -DEGENERATE_TOLERANCE * max(1.0, abs(lambda1)):
        _logger.fatal(f'square root requires positive semidefinite matrix. {lambda2=} of {m=}')
        raise NonPositiveSpectrumError(
            L('sqrt requires non negative eigenvalues, but the smallest is {0}', lambda2))

    if f is MatrixFunction.POWER and power == 1.0:
        return m

    func = _scalar_function(f, power)

    return compose_parts_h2(v1[0], v1[1], func(lambda1), func(lambda2))


def sqrt_h2(m:Hermitian2) -> Hermitian2:
    return matfun_h2(m, MatrixFunction.SQRT)


def log_h2(m:Hermitian2) -> Hermitian2:
    return matfun_h2(m, MatrixFunction.LOG)


def inverse_h2(m:Hermitian2) -> Hermitian2:
    return matfun_h2(m, MatrixFunction.INVERSE)


def power_h2(m:Hermitian2, power:float) -> Hermitian2:
    return matfun_h2(m, MatrixFunction.POWER, power)


def congruence(x:Complex2x2 | Hermitian2, a:Hermitian2) -> Hermitian2:
    ''' X A X* '''
    if isinstance(x, Hermitian2):
        factor = x.to_array()
        det = x.det
    else:
        factor = x.entries
        det = x.det

    if abs(det) <= SINGULAR_TOLERANCE:
        _logger.fatal(f'congruence factor is singular. {det=} {factor=}')
        raise SingularFactorError(L('singular congruence factor. |det| = {0}', abs(det)))

    return Hermitian2.from_array(factor @ a.to_array() @ factor.conj().T)


def frobenius_norm(m:Hermitian2) -> float:
    return math.hypot(m.a11, m.a22, _SQRT2 * m.re12, _SQRT2 * m.im12)


def product_trace(a:Hermitian2, b:Hermitian2) -> float:
    ''' tr(A B), real for hermitian A and B. '''
    return (a.a11 * b.a11 + a.a22 * b.a22
            + 2.0 * (a.re12 * b.re12 + a.im12 * b.im12))

''' Einstein gyrogroup on the open unit ball of R3. '''
import math

import numpy as np

from ..schema import (
    BlochVector, Rapidity, Rotation3, Boost4, BoundaryVectorError, OutOfRangeError,
    INTERIOR_MARGIN
)
from ..util import get_logger, L


_logger = get_logger(__name__)

# probe length of the basis vectors for gyration_from_relation
GYRATION_PROBE_SCALE = 1e-3


def check_interior(*vectors:BlochVector):
    for v in vectors:
        if not v.is_interior:
            _logger.fatal(f'{v=} is not in the interior of the ball. {v.norm=}')
            raise BoundaryVectorError(
                L('vector {0} with norm {1!r} is not interior (norm <= 1 - {2})',
                  v.to_list(), v.norm, INTERIOR_MARGIN))


def is_interior(u:BlochVector) -> bool:
    return u.is_interior


def negate(u:BlochVector) -> BlochVector:
    ''' gyrogroup inverse. '''
    return -u


def _gamma(u:BlochVector) -> float:
    return 1.0 / math.sqrt(1.0 - u.norm_squared)


def gamma(u:BlochVector) -> float:
    ''' lorentz factor 1/sqrt(1 - |u|^2) '''
    check_interior(u)
    return _gamma(u)


def _add(u:BlochVector, v:BlochVector, gamma_u:float) -> BlochVector:
    uv = u.dot(v)
    coefficient = gamma_u / (1.0 + gamma_u) * uv
    denominator = 1.0 + uv
    inverse_gamma = 1.0 / gamma_u

    return BlochVector.of(
        (u.x + inverse_gamma * v.x + coefficient * u.x) / denominator,
        (u.y + inverse_gamma * v.y + coefficient * u.y) / denominator,
        (u.z + inverse_gamma * v.z + coefficient * u.z) / denominator)


def einstein_add(u:BlochVector, v:BlochVector) -> BlochVector:
    check_interior(u, v)
    return _add(u, v, _gamma(u))


def einstein_add_closed(u:BlochVector, v:BlochVector) -> BlochVector:
    ''' extended addition on the closed ball. u + v = u whenever |u| = 1. '''
    if u.norm >= 1.0 - INTERIOR_MARGIN:
        return u

    # alpha = 1/gamma keeps the formula finite for |v| = 1
    alpha = math.sqrt(max(1.0 - u.norm_squared, 0.0))
    uv = u.dot(v)
    coefficient = uv / (1.0 + alpha)
    denominator = 1.0 + uv

    return BlochVector.of(
        (u.x + alpha * v.x + coefficient * u.x) / denominator,
        (u.y + alpha * v.y + coefficient * u.y) / denominator,
        (u.z + alpha * v.z + coefficient * u.z) / denominator)


def gyration(u:BlochVector, v:BlochVector) -> Rotation3:
    ''' gyr[u, v] as a 3x3 matrix, by the closed form

        gyr[u,v]w = w + (A u + B v) / D
        A = -gu^2/(gu+1) (gv-1) (u.w) + gu gv (v.w) + 2 gu^2 gv^2/((gu+1)(gv+1)) (u.v)(v.w)
        B = -gu gv (u.w) - gv^2 (gu-1)/(gv+1) (v.w)
        D = 1 + gu gv (1 + u.v)
    '''
    check_interior(u, v)

    gu, gv = _gamma(u), _gamma(v)
    uv = u.dot(v)
    uu, vv = u.to_array(), v.to_array()

    a_u = -gu * gu / (gu + 1.0) * (gv - 1.0)
    a_v = gu * gv + 2.0 * (gu * gu * gv * gv) / ((gu + 1.0) * (gv + 1.0)) * uv
    b_u = -gu * gv
    b_v = -gv * gv * (gu - 1.0) / (gv + 1.0)
    d = 1.0 + gu * gv * (1.0 + uv)

    matrix = np.eye(3) + (
        np.outer(uu, a_u * uu + a_v * vv) + np.outer(vv, b_u * uu + b_v * vv)
    ) / d

    return Rotation3.of(matrix)


def gyration_from_relation(u:BlochVector, v:BlochVector,
                           probe_scale:float = GYRATION_PROBE_SCALE) -> Rotation3:
    ''' gyr[u, v] from gyroassociativity, gyr[u,v]w = -(u+v) + (u + (v + w)),
        applied to the basis vectors scaled by probe_scale.
        the rounding error grows like gamma(u+v)^2 / probe_scale.
    '''
    check_interior(u, v)

    if not 0.0 < probe_scale < 1.0:
        raise OutOfRangeError(L('probe scale should be in (0, 1). {0}', probe_scale))

    gu, gv = _gamma(u), _gamma(v)
    minus_sum = -_add(u, v, gu)
    gamma_minus_sum = _gamma(minus_sum)

    columns = []

    for axis in np.eye(3):
        w = BlochVector.from_iterable(axis * probe_scale)
        image = _add(minus_sum, _add(u, _add(v, w, gv), gu), gamma_minus_sum)
        columns.append(image.to_array() / probe_scale)

    return Rotation3.of(np.column_stack(columns))


def apply_rotation(r:Rotation3, w:BlochVector) -> BlochVector:
    return r.apply(w)


def scalar_mul(t:float, u:BlochVector) -> BlochVector:
    ''' tanh(t atanh|u|) u/|u|, and 0 for t = 0 or u = 0. '''
    check_interior(u)

    norm = u.norm

    if t == 0.0 or norm == 0.0:
        return BlochVector.zero()

    return u.scaled(math.tanh(t * math.atanh(norm)) / norm)


def lorentz_boost(u:BlochVector) -> Boost4:
    check_interior(u)

    g = _gamma(u)
    uu = u.to_array()

    matrix = np.empty((4, 4))
    matrix[0, 0] = g
    matrix[0, 1:] = g * uu
    matrix[1:, 0] = g * uu
    matrix[1:, 1:] = np.eye(3) + (g * g / (1.0 + g)) * np.outer(uu, uu)

    return Boost4.of(matrix)


def boost_add(u:BlochVector, v:BlochVector) -> tuple[float, BlochVector]:
    ''' apply B(u) to (1; v) and split the image (t; t (u + v)) into t and u + v. '''
    check_interior(v)

    image = lorentz_boost(u).apply((1.0, v.x, v.y, v.z))
    t = float(image[0])

    return t, BlochVector.from_iterable(image[1:] / t)


def restricted_add(s:float, t:float) -> float:
    ''' (s + t)/(1 + st) for real s, t in (-1, 1) '''
    if abs(s) >= 1.0 or abs(t) >= 1.0:
        _logger.fatal(f'restricted addition requires |s|, |t| < 1. {s=} {t=}')
        raise OutOfRangeError(L('restricted addition requires |s| < 1 and |t| < 1. {0}, {1}', s, t))

    return (s + t) / (1.0 + s * t)


def rapidity_of(u:BlochVector) -> Rapidity:
    check_interior(u)
    return Rapidity.trusted(phi=math.atanh(u.norm))

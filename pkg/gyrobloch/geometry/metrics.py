''' gyrometric and rapidity metric on the ball, trace metric on positive definite matrices. '''
from typing import Any, Callable, Dict, Iterable, Literal
import math

import numpy as np
from scipy.linalg import eigvalsh
from pydantic import conint, root_validator

from ..schema import (
    BlochVector, Hermitian2, SchemaBaseModel, NotPositiveDefiniteError, OutOfRangeError
)
from ..util import get_logger, L
from .gyrovector import check_interior, einstein_add
from .hermitian2 import (
    PD_FLOOR, MatrixFunction, compose_parts_h2, eig_parts_h2, congruence, frobenius_norm,
    matfun_h2
)
from .qubit import from_bloch


_logger = get_logger(__name__)

# distances below this are reported as 0
COINCIDENCE_TOLERANCE = 1e-12
ENDPOINT_TOLERANCE = 1e-12
DERIVATIVE_STEP = 1e-5
DEFAULT_SEGMENTS = 1024
EIGENVALUE_FLOOR = 1e-6

METRIC_NAMES = ('gyrometric', 'rapidity', 'trace', 'prop52')
MetricName = Literal['gyrometric', 'rapidity', 'trace', 'prop52']


def gyrometric(u:BlochVector, v:BlochVector) -> float:
    ''' |(-u) + v| '''
    return einstein_add(-u, v).norm


def _lorentz_factor(u:BlochVector) -> float:
    # 1 - |u| is exact for |u| near 1, 1 - |u|^2 is not
    check_interior(u)
    norm = u.norm
    return 1.0 / math.sqrt((1.0 - norm) * (1.0 + norm))


def rapidity_metric(u:BlochVector, v:BlochVector) -> float:
    ''' atanh |(-u) + v|.

        gamma((-u) + v) = gamma_u gamma_v (1 - u.v) gives
        4 sinh^2(d/2) = gamma_u gamma_v |u - v|^2 + (gamma_u - gamma_v)^2 / (gamma_u gamma_v),
        a sum of non negative terms. the gyrometric itself rounds to 1 for far apart pairs.
    '''
    gamma_u, gamma_v = _lorentz_factor(u), _lorentz_factor(v)
    product = gamma_u * gamma_v

    # gamma_u^2 - gamma_v^2 = (gamma_u gamma_v)^2 (|u|^2 - |v|^2)
    squares_gap = ((u.x - v.x) * (u.x + v.x) + (u.y - v.y) * (u.y + v.y)
                   + (u.z - v.z) * (u.z + v.z))
    gamma_gap = product * product * squares_gap / (gamma_u + gamma_v)

    separation = u.distance_to(v)
    q = product * separation * separation + gamma_gap * gamma_gap / product

    return 2.0 * math.asinh(0.5 * math.sqrt(q))


def _checked_eig(m:Hermitian2) -> tuple[float, float, tuple[complex, complex]]:
    lambda1, lambda2, v1 = eig_parts_h2(m)

    if lambda2 <= PD_FLOOR:
        _logger.fatal(f'matrix should be positive definite. {m=} {lambda2=}')
        raise NotPositiveDefiniteError(
            L('matrix is not positive definite. smallest eigenvalue {0!r}', lambda2))

    return lambda1, lambda2, v1


def _power_pd(m:Hermitian2, power:float) -> Hermitian2:
    lambda1, lambda2, v1 = _checked_eig(m)
    return compose_parts_h2(v1[0], v1[1], lambda1 ** power, lambda2 ** power)


def _relative_spectrum(a:Hermitian2,
                       b:Hermitian2) -> tuple[float, float, tuple[complex, complex]]:
    _checked_eig(b)
    lambda1, lambda2, v1 = eig_parts_h2(congruence(_power_pd(a, -0.5), b))

    # the smaller eigenvalue loses digits to cancellation. use the determinant instead.
    if lambda2 < 0.25 * lambda1:
        lambda2 = b.det / (a.det * lambda1)

    if lambda2 <= PD_FLOOR:
        _logger.fatal(f'{lambda2=} is not positive for {a=} {b=}')
        raise NotPositiveDefiniteError(L('relative eigenvalue {0!r} is not positive', lambda2))

    return lambda1, lambda2, v1


def relative_eigenvalues(a:Hermitian2, b:Hermitian2) -> tuple[float, float]:
    ''' eigenvalues of A^{-1/2} B A^{-1/2}, the same as those of A^{-1} B. '''
    lambda1, lambda2, _ = _relative_spectrum(a, b)
    return lambda1, lambda2


def trace_metric(a:Hermitian2, b:Hermitian2) -> float:
    ''' |log(A^{-1/2} B A^{-1/2})|_F '''
    lambda1, lambda2 = relative_eigenvalues(a, b)
    distance = math.hypot(math.log(lambda1), math.log(lambda2))

    return 0.0 if distance < COINCIDENCE_TOLERANCE else distance


def trace_metric_by_product(a:Hermitian2, b:Hermitian2) -> float:
    ''' sqrt(sum log^2 lambda) over the eigenvalues of A^{-1} B,
        solved by lapack as the generalized hermitian problem B x = lambda A x.
    '''
    _checked_eig(a)
    _checked_eig(b)

    eigenvalues = eigvalsh(b.to_array(), a.to_array())

    return float(np.sqrt(np.sum(np.log(eigenvalues) ** 2)))


def prop_bound(u:BlochVector, v:BlochVector) -> float:
    ''' sqrt(ln^2(x/a) + ln^2(x/b)) with x = (1 - u.v)/2, a = det rho_u, b = det rho_v '''
    check_interior(u, v)

    x = 0.5 * (1.0 - u.dot(v))
    a = 0.25 * (1.0 - u.norm_squared)
    b = 0.25 * (1.0 - v.norm_squared)

    return math.hypot(math.log(x / a), math.log(x / b))


def geodesic_point(a:Hermitian2, b:Hermitian2, t:float) -> Hermitian2:
    ''' A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2} for t in [0, 1] '''
    return _geodesic_rule(a, b)(t)


def _geodesic_rule(a:Hermitian2, b:Hermitian2) -> Callable[[float], Hermitian2]:
    ''' X diag(lambda1^t, lambda2^t) X* with X = A^{1/2} U, U the eigenframe of
        A^{-1/2} B A^{-1/2}. the relative spectrum of (A, rule(t)) stays lambda^t even when
        the power of the middle matrix is too ill conditioned to be written out.
    '''
    lambda1, lambda2, v1 = _relative_spectrum(a, b)
    frame = _power_pd(a, 0.5).to_array() @ np.array(
        [[v1[0], -v1[1].conjugate()], [v1[1], v1[0].conjugate()]], dtype=complex)

    def rule(t:float) -> Hermitian2:
        if not 0.0 <= t <= 1.0:
            _logger.fatal(f'geodesic parameter {t=} should be in [0, 1]')
            raise OutOfRangeError(L('geodesic parameter should be in [0, 1]. {0}', t))

        if t == 0.0:
            return a
        if t == 1.0:
            return b

        weights = np.array([lambda1 ** t, lambda2 ** t])
        return Hermitian2.from_array((frame * weights) @ frame.conj().T)

    return rule


class PathSampler(SchemaBaseModel):
    ''' differentiable path rule(t), t in [0, 1], from endpoint_a to endpoint_b. '''
    endpoint_a: Hermitian2
    endpoint_b: Hermitian2
    rule: Callable[[float], Hermitian2]
    segments: conint(gt=0) = DEFAULT_SEGMENTS # type: ignore

    class Config:
        title = 'path of positive definite matrices'

    @root_validator(skip_on_failure=True)
    def _check_endpoints(cls, values:Dict[str, Any]) -> Dict[str, Any]:
        rule = values['rule']

        for t, endpoint in ((0.0, values['endpoint_a']), (1.0, values['endpoint_b'])):
            gap = rule(t).max_entry_difference(endpoint)

            if gap > ENDPOINT_TOLERANCE * max(1.0, frobenius_norm(endpoint)):
                _logger.fatal(f'path does not reach its endpoint at {t=}. {gap=}')
                raise ValueError(L('path rule at {0} misses the endpoint by {1}', t, gap))

        return values


def geodesic_sampler(a:Hermitian2, b:Hermitian2, segments:int = DEFAULT_SEGMENTS) -> PathSampler:
    return PathSampler(endpoint_a=a, endpoint_b=b, rule=_geodesic_rule(a, b), segments=segments)


def floor_eigenvalues(m:Hermitian2, floor:float = EIGENVALUE_FLOOR) -> Hermitian2:
    lambda1, lambda2, v1 = eig_parts_h2(m)

    if lambda2 >= floor:
        return m

    return compose_parts_h2(v1[0], v1[1], max(lambda1, floor), floor)


def perturbed_sampler(a:Hermitian2, b:Hermitian2, segments:int = DEFAULT_SEGMENTS,
                      amplitude:float = 0.05,
                      entry:Literal['a11', 'a22', 're12', 'im12'] = 're12') -> PathSampler:
    ''' geodesic with a bump amplitude sin^2(pi t) added to one entry.
        it is projected back to the cone by flooring eigenvalues. '''
    geodesic = _geodesic_rule(a, b)
    direction = Hermitian2(**({'a11': 0.0, 'a22': 0.0, 're12': 0.0, 'im12': 0.0} | {entry: 1.0}))

    def rule(t:float) -> Hermitian2:
        bump = amplitude * math.sin(math.pi * t) ** 2

        if bump == 0.0:
            return geodesic(t)

        return floor_eigenvalues(geodesic(t) + direction.scale(bump))

    return PathSampler(endpoint_a=a, endpoint_b=b, rule=rule, segments=segments)


def path_length(p:PathSampler) -> float:
    ''' midpoint rule of |g^{-1/2} g' g^{-1/2}|_F with central difference g' '''
    n = p.segments
    step = min(DERIVATIVE_STEP, 0.25 / n)
    total = 0.0

    for i in range(n):
        t = (i + 0.5) / n

        inverse_half = _power_pd(p.rule(t), -0.5)
        derivative = (p.rule(t + step) - p.rule(t - step)).scale(0.5 / step)
        total += frobenius_norm(congruence(inverse_half, derivative))

    return total / n


def sqrt_pd(m:Hermitian2) -> Hermitian2:
    _checked_eig(m)
    return matfun_h2(m, MatrixFunction.SQRT)


def distance_report(u:BlochVector, v:BlochVector,
                    metrics:Iterable[MetricName] = METRIC_NAMES) -> Dict[str, Any]:
    metrics = tuple(metrics)
    record : Dict[str, Any] = {'u': u.to_list(), 'v': v.to_list()}

    if 'gyrometric' in metrics:
        record['gyrometric'] = gyrometric(u, v)

    if 'rapidity' in metrics:
        record['rapidity'] = rapidity_metric(u, v)

    if 'trace' in metrics:
        record['trace'] = trace_metric(from_bloch(u).matrix, from_bloch(v).matrix)

    if 'prop52' in metrics:
        record['prop52_bound'] = prop_bound(u, v)

    if 'rapidity' in metrics or 'trace' in metrics:
        record['thm53_lhs'] = math.sqrt(2.0) * rapidity_metric(u, v)

    return record

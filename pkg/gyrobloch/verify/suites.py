''' randomized verification suites. each suite maps a TrialConfig to a CheckRecorder. '''
from typing import Callable, Dict, List
import math

import numpy as np

from ..schema import BlochVector, Hermitian2, TrialConfig, UnknownSuiteError
from ..geometry import (
    apply_rotation, boost_add, congruence, eig_h2, einstein_add, einstein_add_closed,
    explicit_trace_product, from_bloch, gamma, geodesic_point, geodesic_sampler, gyration,
    gyrometric, inverse_formula, inverse_state, lorentz_boost, negate, odot, path_length,
    perturbed_sampler, prop_bound, rapidity_metric, rapidity_of, restricted_add, scalar_mul,
    spectrum, sqrt_density, sqrt_h2, sqrt_pd, star, to_bloch, trace_metric,
    trace_metric_by_product, trace_product
)
from ..util import get_logger, L
from .checks import CheckRecorder, EPSILON, condition_number, conditioning_allowance
from .sampling import (
    sample_ball, sample_congruence_factor, sample_density_matrix, sample_nearby,
    sample_scalar, sample_sphere, trial_generator
)


_logger = get_logger(__name__)

SuiteFunction = Callable[[TrialConfig], CheckRecorder]

_suites: Dict[str, SuiteFunction] = {}

SQRT2 = math.sqrt(2.0)
BOOST_CAP = 0.9
PATH_PAIRS = 100
PATH_TOLERANCE = 1e-6
INFIMUM_SLACK = 1e-9
HOMOGENEITY_RANGE = 3.0
# cone points are congruence images of density matrices by factors of this condition
CONE_CONDITION = 30.0
ERRATUM_VECTOR = BlochVector.of(0.0, 0.0, 0.6)


def register_suite(suite_id:str) -> Callable[[SuiteFunction], SuiteFunction]:
    def decorator(func:SuiteFunction) -> SuiteFunction:
        _suites[suite_id] = func
        return func

    return decorator


def get_suite(suite_id:str) -> SuiteFunction:
    if suite_id not in _suites:
        _logger.fatal(f'{suite_id=} is not registered. {list(_suites)=}')
        raise UnknownSuiteError(
            L('unknown suite {0!r}. one of {1} or all', suite_id, ', '.join(_suites)))

    return _suites[suite_id]


def suite_ids() -> List[str]:
    return list(_suites)


def _trials(suite_id:str, cfg:TrialConfig, count:int | None = None):
    for index in range(cfg.trials if count is None else count):
        yield index, trial_generator(cfg.seed, suite_id, index)


def _ball(rng:np.random.Generator, cfg:TrialConfig, cap:float | None = None) -> BlochVector:
    return sample_ball(rng, cfg.radius_cap if cap is None else cap, cfg.boundary_fraction)


def _identity_residual(matrix:np.ndarray) -> float:
    return float(np.max(np.abs(matrix - np.eye(matrix.shape[0]))))


@register_suite('axioms')
def axioms_suite(cfg:TrialConfig) -> CheckRecorder:
    ''' gyrogroup axioms, gyrocommutativity, unique 2-divisibility and the closed ball. '''
    recorder = CheckRecorder('axioms', cfg.tol_rel)
    zero = BlochVector.zero()

    for _, rng in _trials('axioms', cfg):
        a, b, c = _ball(rng, cfg), _ball(rng, cfg), _ball(rng, cfg)
        boundary = sample_sphere(rng)

        recorder.equal_vectors('G1 left identity', einstein_add(zero, a), a, witness=(a,))
        recorder.equal_vectors('G1 right identity', einstein_add(a, zero), a, witness=(a,))
        recorder.equal_vectors('G2 left inverse', einstein_add(negate(a), a), zero, witness=(a,))

        gyr_ab = gyration(a, b)
        a_b = einstein_add(a, b)

        recorder.equal_vectors(
            'G3 gyroassociativity',
            einstein_add(a, einstein_add(b, c)),
            einstein_add(a_b, apply_rotation(gyr_ab, c)),
            witness=(a, b, c))
        recorder.check('G4 trivial gyration', _identity_residual(gyration(zero, a).matrix),
                       witness=(a,))
        recorder.check('G5 loop property',
                       float(np.max(np.abs(gyration(a_b, b).matrix - gyr_ab.matrix))),
                       witness=(a, b))
        recorder.equal_vectors('gyrocommutativity', a_b,
                               apply_rotation(gyr_ab, einstein_add(b, a)), witness=(a, b))

        recorder.check('gyration orthogonality', gyr_ab.orthogonality_defect(), witness=(a, b))
        recorder.equal('gyration determinant', gyr_ab.det, 1.0, witness=(a, b))
        recorder.equal('gyration inner product',
                       apply_rotation(gyr_ab, c).dot(apply_rotation(gyr_ab, a)), c.dot(a),
                       witness=(a, b, c))

        half = scalar_mul(0.5, b)
        recorder.equal_vectors('unique 2-divisibility', einstein_add(half, half), b, witness=(b,))

        recorder.equal_vectors('closed and open addition agree', einstein_add_closed(a, b), a_b,
                               witness=(a, b))
        recorder.equal_vectors('closed ball absorption', einstein_add_closed(boundary, c), boundary,
                               witness=(boundary, c))
        recorder.equal_vectors('closed ball antipodal absorption',
                               einstein_add_closed(boundary, -boundary), boundary,
                               witness=(boundary,))
        # u + w keeps norm 1 for every w, so no w maps a boundary vector to 0.
        recorder.equal('boundary vector has no inverse',
                       einstein_add_closed(boundary, a).norm, 1.0, witness=(boundary, a))

        recorder.trial_done()

    return recorder


@register_suite('isomorphism')
def isomorphism_suite(cfg:TrialConfig) -> CheckRecorder:
    ''' the bloch map is an isomorphism onto invertible density matrices with the odot product. '''
    recorder = CheckRecorder('isomorphism', cfg.tol_abs)
    half_identity = from_bloch(BlochVector.zero())

    for _, rng in _trials('isomorphism', cfg):
        u, v, w = _ball(rng, cfg), _ball(rng, cfg), _ball(rng, cfg)
        rho_u, rho_v, rho_w = from_bloch(u), from_bloch(v), from_bloch(w)

        recorder.equal_matrices('odot matches einstein addition',
                                odot(rho_u, rho_v).matrix, from_bloch(einstein_add(u, v)).matrix,
                                witness=(u, v))

        inverse = inverse_state(rho_u)
        recorder.equal_vectors('inverse state is the negated vector', inverse.bloch, -u,
                               witness=(u,))
        recorder.equal_matrices('odot with inverse state', odot(rho_u, inverse).matrix,
                                half_identity.matrix, witness=(u,))

        root = sqrt_density(rho_u)
        recorder.equal_matrices('square root squares back',
                                congruence(root, Hermitian2.identity()), rho_u.matrix,
                                tolerance=0.1 * cfg.tol_abs, witness=(u,))
        recorder.equal_matrices('square root matches spectral square root',
                                sqrt_h2(rho_u.matrix), root, witness=(u,))

        closed_form = spectrum(rho_u)
        solved = eig_h2(rho_u.matrix)
        recorder.check('spectrum matches eigensolver',
                       max(abs(closed_form.lambda_plus - solved.lambda1),
                           abs(closed_form.lambda_minus - solved.lambda2),
                           abs(closed_form.det - rho_u.matrix.det)),
                       tolerance=0.1 * cfg.tol_abs, witness=(u,))
        recorder.check('trace product matches matrix product',
                       abs(trace_product(rho_u, rho_v) - explicit_trace_product(rho_u, rho_v)),
                       tolerance=0.01 * cfg.tol_abs, witness=(u, v))

        # axioms transported to the density matrices through bloch storage
        gyr_uv = gyration(u, v)
        recorder.equal_vectors('odot G1 identity', odot(half_identity, rho_u).bloch, u,
                               tolerance=cfg.tol_rel, witness=(u,))
        recorder.equal_vectors(
            'odot G3 gyroassociativity',
            odot(rho_u, odot(rho_v, rho_w)).bloch,
            odot(odot(rho_u, rho_v), from_bloch(apply_rotation(gyr_uv, w))).bloch,
            tolerance=cfg.tol_rel, witness=(u, v, w))
        recorder.equal_vectors(
            'odot gyrocommutativity',
            odot(rho_u, rho_v).bloch,
            apply_rotation(gyr_uv, odot(rho_v, rho_u).bloch),
            tolerance=cfg.tol_rel, witness=(u, v))

        recorder.trial_done()

    return recorder


@register_suite('metric_lemma')
def metric_lemma_suite(cfg:TrialConfig) -> CheckRecorder:
    ''' metric properties of the gyrometric and the rapidity metric. '''
    recorder = CheckRecorder('metric_lemma', cfg.tol_rel)
    zero = BlochVector.zero()
    homogeneity_cap = math.tanh(math.atanh(cfg.radius_cap) / HOMOGENEITY_RANGE)

    for _, rng in _trials('metric_lemma', cfg):
        u, v, w = _ball(rng, cfg), _ball(rng, cfg), _ball(rng, cfg)
        small = _ball(rng, cfg, homogeneity_cap)
        r = sample_scalar(rng, -HOMOGENEITY_RANGE, HOMOGENEITY_RANGE)

        gyro_uv, gyro_vu = gyrometric(u, v), gyrometric(v, u)
        d_uv, d_vu = rapidity_metric(u, v), rapidity_metric(v, u)
        d_uw, d_vw = rapidity_metric(u, w), rapidity_metric(v, w)

        recorder.check('nonnegativity', max(0.0, -gyro_uv, -d_uv), witness=(u, v))
        recorder.check('indiscernibles at coincidence', rapidity_metric(u, u), witness=(u,))

        # |u - v| <= d <= max(gamma_u, gamma_v)^2 |u - v| along the chord from u to v
        near = sample_nearby(rng, u)
        separation = u.distance_to(near)
        d_near = rapidity_metric(u, near)

        recorder.check('indiscernibles at distinct points',
                       0.0 if d_near > 0.0 and (d_uv > 0.0 or u == v) else math.inf,
                       witness=(u, v, near))
        recorder.at_most('near points are apart', 1.0, d_near / separation, witness=(u, near))
        recorder.at_most('near points are close', d_near / separation,
                         max(gamma(u), gamma(near)) ** 2, witness=(u, near))

        recorder.equal('gyrometric symmetry', gyro_uv, gyro_vu, witness=(u, v))
        recorder.equal('rapidity metric symmetry', d_uv, d_vu, witness=(u, v))

        recorder.at_most('gyrotriangle', einstein_add(u, v).norm, restricted_add(u.norm, v.norm),
                         witness=(u, v))
        recorder.at_most('triangle inequality', d_uw, d_uv + d_vw, witness=(u, v, w))
        recorder.at_most('gyrometric gyrotriangle', gyrometric(u, w),
                         restricted_add(gyro_uv, gyrometric(v, w)), witness=(u, v, w))

        u_v, u_w = einstein_add(u, v), einstein_add(u, w)
        recorder.equal('gyrometric left invariance', gyrometric(u_v, u_w), gyrometric(v, w),
                       witness=(u, v, w))
        recorder.equal('rapidity metric left invariance', rapidity_metric(u_v, u_w), d_vw,
                       witness=(u, v, w))

        scaled = scalar_mul(r, small)
        recorder.equal('homogeneity', rapidity_metric(zero, scaled),
                       abs(r) * rapidity_metric(zero, small), witness=(small, r))
        recorder.equal('rapidity of scalar multiple', rapidity_of(scalar_mul(abs(r), small)).phi,
                       abs(r) * rapidity_of(small).phi, witness=(small, r))
        recorder.equal_vectors('scalar double is self sum', scalar_mul(2.0, small),
                               einstein_add(small, small), witness=(small,))

        recorder.trial_done()

    return recorder


def _cone_pair(index:int, rng:np.random.Generator,
               cfg:TrialConfig) -> tuple[Hermitian2, Hermitian2]:
    a = sample_density_matrix(rng, cfg.radius_cap, cfg.boundary_fraction)
    b = sample_density_matrix(rng, cfg.radius_cap, cfg.boundary_fraction)

    if index % 2 == 0:
        return a, b

    return (congruence(sample_congruence_factor(rng, CONE_CONDITION), a),
            congruence(sample_congruence_factor(rng, CONE_CONDITION), b))


@register_suite('trace_lemma')
def trace_lemma_suite(cfg:TrialConfig) -> CheckRecorder:
    ''' congruence invariance, the two closed forms and square root contraction of the
        trace metric. even trials use density matrices, odd trials scaled cone points.
    '''
    recorder = CheckRecorder('trace_lemma', cfg.tol_rel)
    equality_tolerance = 0.1 * cfg.tol_rel

    for index, rng in _trials('trace_lemma', cfg):
        a, b = _cone_pair(index, rng, cfg)
        factor = sample_congruence_factor(rng)
        t = sample_scalar(rng, 0.0, 1.0)

        delta = trace_metric(a, b)
        moved_a, moved_b = congruence(factor, a), congruence(factor, b)
        kappa = condition_number(a, b, moved_a, moved_b)
        allowance = conditioning_allowance(kappa)

        recorder.equal('congruence invariance', trace_metric(moved_a, moved_b), delta,
                       equality_tolerance + allowance, witness=(a, b, factor))
        recorder.equal('closed forms agree', trace_metric_by_product(a, b), delta,
                       equality_tolerance + allowance, witness=(a, b))
        recorder.equal('symmetry', trace_metric(b, a), delta,
                       equality_tolerance + allowance, witness=(a, b))
        recorder.at_most('square root contraction', trace_metric(sqrt_pd(a), sqrt_pd(b)),
                         0.5 * delta, cfg.tol_abs + allowance, witness=(a, b))

        point = geodesic_point(a, b, t)
        point_allowance = conditioning_allowance(max(kappa, condition_number(point)))

        recorder.equal('geodesic is metric speed', trace_metric(a, point), t * delta,
                       equality_tolerance + point_allowance, witness=(a, b, t))

        recorder.trial_done()

    return recorder


@register_suite('bounds')
def bounds_suite(cfg:TrialConfig) -> CheckRecorder:
    ''' upper bound of the trace metric by determinants and the sqrt(2) lower bound
        by the rapidity metric, checked directly and through the base case at 1/2 I.
    '''
    recorder = CheckRecorder('bounds', cfg.tol_abs)
    half_identity = from_bloch(BlochVector.zero()).matrix
    coincidence_bound = SQRT2 * math.log(2.0)

    min_ratio_direct = math.inf
    min_ratio_base = math.inf
    odot_deviation = 0.0

    for _, rng in _trials('bounds', cfg):
        u, v, c = _ball(rng, cfg), _ball(rng, cfg), _ball(rng, cfg)
        rho_u, rho_v, rho_c = from_bloch(u), from_bloch(v), from_bloch(c)

        delta = trace_metric(rho_u.matrix, rho_v.matrix)
        allowance = conditioning_allowance(condition_number(rho_u.matrix, rho_v.matrix))

        recorder.at_most('determinant upper bound', delta, prop_bound(u, v),
                         cfg.tol_abs + allowance, witness=(u, v))
        recorder.equal('bound at coincidence', prop_bound(u, u), coincidence_bound,
                       witness=(u,))
        recorder.check('distance at coincidence', trace_metric(rho_u.matrix, rho_u.matrix),
                       witness=(u,))

        d = rapidity_metric(u, v)
        recorder.at_most('sqrt2 lower bound', SQRT2 * d, delta, cfg.tol_abs + allowance,
                         witness=(u, v))

        if d > 0.0:
            min_ratio_direct = min(min_ratio_direct, delta / d)

        # base case. left translation by -u carries the pair to (0, w).
        w = einstein_add(-u, v)
        rho_w = from_bloch(w).matrix
        base_delta = trace_metric(half_identity, rho_w)
        base_allowance = conditioning_allowance(condition_number(rho_w))
        norm = w.norm
        phi = math.atanh(norm)

        recorder.equal('base case closed form', base_delta,
                       math.hypot(math.log1p(norm), math.log1p(-norm)),
                       cfg.tol_rel + base_allowance, witness=(u, v))
        recorder.at_most('base case lower bound', SQRT2 * phi, base_delta,
                         cfg.tol_abs + base_allowance, witness=(u, v))

        if phi > 0.0:
            min_ratio_base = min(min_ratio_base, base_delta / phi)

        translated = trace_metric(star(rho_c, rho_u), star(rho_c, rho_v))
        translated_allowance = conditioning_allowance(
            condition_number(rho_u.matrix, rho_v.matrix, rho_c.matrix) ** 2)
        recorder.equal('star translation invariance', translated, delta,
                       cfg.tol_rel + translated_allowance, witness=(c, u, v))

        odot_deviation = max(odot_deviation, abs(
            trace_metric(odot(rho_c, rho_u).matrix, odot(rho_c, rho_v).matrix) - delta))

        recorder.trial_done()

    recorder.details.update({
        'min_ratio_direct': _finite_or_none(min_ratio_direct),
        'min_ratio_base': _finite_or_none(min_ratio_base),
        'sqrt2': SQRT2,
        'odot_translation_max_deviation': odot_deviation,
    })

    return recorder


def _finite_or_none(value:float) -> float | None:
    return value if math.isfinite(value) else None


@register_suite('gamma_identity')
def gamma_identity_suite(cfg:TrialConfig) -> CheckRecorder:
    ''' gamma(u + v) = gamma(u) gamma(v) (1 + u.v) '''
    recorder = CheckRecorder('gamma_identity', cfg.tol_rel)

    for _, rng in _trials('gamma_identity', cfg):
        u, v = _ball(rng, cfg), _ball(rng, cfg)
        expected = gamma(u) * gamma(v) * (1.0 + u.dot(v))
        # rounding of the coordinates of u + v moves gamma by about 4 eps gamma^2
        allowance = 4.0 * EPSILON * expected * expected

        recorder.equal('gamma identity', gamma(einstein_add(u, v)), expected,
                       cfg.tol_rel + allowance, witness=(u, v))

        recorder.trial_done()

    return recorder


@register_suite('boost')
def boost_suite(cfg:TrialConfig) -> CheckRecorder:
    ''' einstein addition read off from the lorentz boost of (1; v). '''
    recorder = CheckRecorder('boost', cfg.tol_abs)
    cap = min(cfg.radius_cap, BOOST_CAP)

    recorder.check('boost of zero is identity',
                   _identity_residual(lorentz_boost(BlochVector.zero()).matrix))

    for _, rng in _trials('boost', cfg):
        u, v = _ball(rng, cfg, cap), _ball(rng, cfg, cap)
        boost = lorentz_boost(u)
        t, added = boost_add(u, v)

        recorder.equal_vectors('boost addition', added, einstein_add(u, v), witness=(u, v))
        recorder.equal('boost time component', t, gamma(u) * (1.0 + u.dot(v)), witness=(u, v))
        recorder.check('boost symmetry', float(np.max(np.abs(boost.matrix - boost.matrix.T))),
                       witness=(u,))
        recorder.check('boost preserves minkowski form', boost.minkowski_defect(), witness=(u,))

        recorder.trial_done()

    return recorder


@register_suite('pathlength')
def pathlength_suite(cfg:TrialConfig) -> CheckRecorder:
    ''' the geodesic has length delta and a perturbed path is not shorter. '''
    recorder = CheckRecorder('pathlength', PATH_TOLERANCE)

    for _, rng in _trials('pathlength', cfg, min(cfg.trials, PATH_PAIRS)):
        a = sample_density_matrix(rng, cfg.radius_cap, cfg.boundary_fraction)
        b = sample_density_matrix(rng, cfg.radius_cap, cfg.boundary_fraction)
        delta = trace_metric(a, b)

        recorder.equal('geodesic length', path_length(geodesic_sampler(a, b)), delta,
                       witness=(a, b))
        recorder.check('perturbed path is not shorter',
                       max(0.0, delta - path_length(perturbed_sampler(a, b))),
                       INFIMUM_SLACK, witness=(a, b))

        recorder.trial_done()

    return recorder


@register_suite('erratum')
def erratum_suite(cfg:TrialConfig) -> CheckRecorder:
    ''' the inverse of rho_u is det(rho_u) rho_u^{-1}. the coefficient 1/(4 gamma) gives trace gamma. '''
    recorder = CheckRecorder('erratum', cfg.tol_abs)

    rho = from_bloch(ERRATUM_VECTOR)
    printed = inverse_formula(rho, printed=True)
    corrected = inverse_formula(rho)

    recorder.equal('printed coefficient trace is gamma', printed.trace, gamma(ERRATUM_VECTOR),
                   witness=(ERRATUM_VECTOR,))
    recorder.equal('corrected coefficient trace is one', corrected.trace, 1.0,
                   witness=(ERRATUM_VECTOR,))
    recorder.equal_vectors('corrected inverse is the negated vector', to_bloch(corrected),
                           -ERRATUM_VECTOR, witness=(ERRATUM_VECTOR,))

    for _, rng in _trials('erratum', cfg):
        u = _ball(rng, cfg)
        rho_u = from_bloch(u)
        allowance = conditioning_allowance(condition_number(rho_u.matrix))

        recorder.equal_matrices('corrected formula is the inverse state', inverse_formula(rho_u),
                                inverse_state(rho_u).matrix, cfg.tol_abs + allowance, witness=(u,))
        recorder.equal('printed formula trace is gamma', inverse_formula(rho_u, printed=True).trace,
                       gamma(u), cfg.tol_abs + allowance, witness=(u,))

        recorder.trial_done()

    recorder.details.update({
        'vector': ERRATUM_VECTOR.to_list(),
        'gamma': gamma(ERRATUM_VECTOR),
        'printed_trace': printed.trace,
        'corrected_trace': corrected.trace,
        'corrected_bloch': to_bloch(corrected).to_list(),
    })

    return recorder

from .hermitian2 import (
    MatrixFunction, eig_h2, eig_parts_h2, eigenvalues_h2, compose_h2, compose_parts_h2,
    matfun_h2, sqrt_h2, log_h2, inverse_h2, power_h2, congruence, frobenius_norm, product_trace
)
from .gyrovector import (
    check_interior, is_interior, negate, gamma, einstein_add, einstein_add_closed,
    gyration, gyration_from_relation, apply_rotation, scalar_mul, lorentz_boost,
    boost_add, restricted_add, rapidity_of
)
from .qubit import (
    pauli, from_bloch, matrix_view, to_bloch, to_density, spectrum, sqrt_density,
    star, odot, trace_product, explicit_trace_product, inverse_state, inverse_formula
)
from .metrics import (
    METRIC_NAMES, PathSampler, gyrometric, rapidity_metric, relative_eigenvalues,
    trace_metric, trace_metric_by_product, prop_bound, geodesic_point,
    geodesic_sampler, perturbed_sampler, floor_eigenvalues, path_length, sqrt_pd,
    distance_report
)

__all__ = [
    'MatrixFunction',
    'eig_h2',
    'eig_parts_h2',
    'eigenvalues_h2',
    'compose_h2',
    'compose_parts_h2',
    'matfun_h2',
    'sqrt_h2',
    'log_h2',
    'inverse_h2',
    'power_h2',
    'congruence',
    'frobenius_norm',
    'product_trace',
    'check_interior',
    'is_interior',
    'negate',
    'gamma',
    'einstein_add',
    'einstein_add_closed',
    'gyration',
    'gyration_from_relation',
    'apply_rotation',
    'scalar_mul',
    'lorentz_boost',
    'boost_add',
    'restricted_add',
    'rapidity_of',
    'pauli',
    'from_bloch',
    'matrix_view',
    'to_bloch',
    'to_density',
    'spectrum',
    'sqrt_density',
    'star',
    'odot',
    'trace_product',
    'explicit_trace_product',
    'inverse_state',
    'inverse_formula',
    'METRIC_NAMES',
    'PathSampler',
    'gyrometric',
    'rapidity_metric',
    'relative_eigenvalues',
    'trace_metric',
    'trace_metric_by_product',
    'prop_bound',
    'geodesic_point',
    'geodesic_sampler',
    'perturbed_sampler',
    'floor_eigenvalues',
    'path_length',
    'sqrt_pd',
    'distance_report',
]

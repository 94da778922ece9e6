from .sampling import (
    suite_key, trial_generator, sample_ball, sample_sphere, sample_scalar, sample_unitary,
    sample_congruence_factor, sample_density_matrix, sample_nearby, sample_stream
)
from .checks import CheckRecorder, condition_number, conditioning_allowance
from .suites import register_suite, get_suite, suite_ids
from .harness import ALL_SUITES, run_suite, run_all, summarize

__all__ = [
    'suite_key',
    'trial_generator',
    'sample_ball',
    'sample_sphere',
    'sample_scalar',
    'sample_unitary',
    'sample_congruence_factor',
    'sample_density_matrix',
    'sample_nearby',
    'sample_stream',
    'CheckRecorder',
    'condition_number',
    'conditioning_allowance',
    'register_suite',
    'get_suite',
    'suite_ids',
    'ALL_SUITES',
    'run_suite',
    'run_all',
    'summarize',
]

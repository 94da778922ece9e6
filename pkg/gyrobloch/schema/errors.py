from typing import ClassVar


class GyroError(RuntimeError):
    ''' domain error. code is written in the error json of the command line tool. '''
    code: ClassVar[str] = 'domain_error'


class BoundaryVectorError(GyroError):
    ''' vector is not in the interior of the unit ball. '''
    code = 'boundary_vector'


class NormExceedsOneError(GyroError):
    code = 'norm_exceeds_one'


class NotTraceOneError(GyroError):
    code = 'not_trace_one'


class NotPositiveError(GyroError):
    ''' matrix has a negative eigenvalue. '''
    code = 'not_positive'


class NotPositiveDefiniteError(GyroError):
    code = 'not_positive_definite'


class NonPositiveSpectrumError(GyroError):
    ''' the matrix function requires positive eigenvalues. '''
    code = 'non_positive_spectrum'


class SingularFactorError(GyroError):
    code = 'singular_factor'


class OutOfRangeError(GyroError):
    code = 'out_of_range'


class UnknownSuiteError(GyroError):
    code = 'unknown_suite'

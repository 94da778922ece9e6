from .schema import (
    SchemaBaseModel,
    GyroError, BoundaryVectorError, NormExceedsOneError, NotTraceOneError, NotPositiveError,
    NotPositiveDefiniteError, NonPositiveSpectrumError, SingularFactorError, OutOfRangeError,
    UnknownSuiteError,
    Hermitian2, Complex2x2, Spectrum2, BlochVector, Rapidity, Rotation3, Boost4,
    DensityMatrix, DensitySpectrum, PauliVector, TrialConfig, SuiteReport
)

from .geometry import (
    MatrixFunction, eig_h2, matfun_h2, congruence, frobenius_norm,
    gamma, einstein_add, einstein_add_closed, gyration, scalar_mul, lorentz_boost,
    restricted_add, rapidity_of,
    from_bloch, to_bloch, spectrum, sqrt_density, odot, trace_product, inverse_state,
    PathSampler, gyrometric, rapidity_metric, trace_metric, prop_bound, geodesic_point,
    path_length
)

from .verify import run_suite, sample_ball


__all__ = [
    "SchemaBaseModel",
    "GyroError",
    "BoundaryVectorError",
    "NormExceedsOneError",
    "NotTraceOneError",
    "NotPositiveError",
    "NotPositiveDefiniteError",
    "NonPositiveSpectrumError",
    "SingularFactorError",
    "OutOfRangeError",
    "UnknownSuiteError",
    "Hermitian2",
    "Complex2x2",
    "Spectrum2",
    "BlochVector",
    "Rapidity",
    "Rotation3",
    "Boost4",
    "DensityMatrix",
    "DensitySpectrum",
    "PauliVector",
    "TrialConfig",
    "SuiteReport",
    "MatrixFunction",
    "eig_h2",
    "matfun_h2",
    "congruence",
    "frobenius_norm",
    "gamma",
    "einstein_add",
    "einstein_add_closed",
    "gyration",
    "scalar_mul",
    "lorentz_boost",
    "restricted_add",
    "rapidity_of",
    "from_bloch",
    "to_bloch",
    "spectrum",
    "sqrt_density",
    "odot",
    "trace_product",
    "inverse_state",
    "PathSampler",
    "gyrometric",
    "rapidity_metric",
    "trace_metric",
    "prop_bound",
    "geodesic_point",
    "path_length",
    "run_suite",
    "sample_ball",
]

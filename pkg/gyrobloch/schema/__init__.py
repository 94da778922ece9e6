from .base import SchemaBaseModel, MatrixModel, as_record
from .errors import (
    GyroError, BoundaryVectorError, NormExceedsOneError, NotTraceOneError,
    NotPositiveError, NotPositiveDefiniteError, NonPositiveSpectrumError,
    SingularFactorError, OutOfRangeError, UnknownSuiteError
)
from .hermitian import Hermitian2, Complex2x2, Spectrum2
from .vectors import BlochVector, Rapidity, Rotation3, Boost4, INTERIOR_MARGIN
from .density import DensityMatrix, DensitySpectrum, PauliVector, PAULI
from .trials import TrialConfig, SuiteReport

__all__ = [
    "SchemaBaseModel",
    "MatrixModel",
    "as_record",
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
    "INTERIOR_MARGIN",
    "DensityMatrix",
    "DensitySpectrum",
    "PauliVector",
    "PAULI",
    "TrialConfig",
    "SuiteReport",
]

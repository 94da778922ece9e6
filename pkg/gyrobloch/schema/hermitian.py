from typing import Any, Dict

import numpy as np
from pydantic import validator

from .base import SchemaBaseModel, MatrixModel
from .errors import SingularFactorError
from ..util import get_logger, L


_logger = get_logger(__name__)

# congruence factor with |det| at or below this is singular.
SINGULAR_TOLERANCE = 1e-300


class Hermitian2(SchemaBaseModel):
    ''' 2x2 complex hermitian matrix [[a11, a12], [conj(a12), a22]]
        with a12 = re12 + i im12. hermiticity holds by construction. 
    '''
    a11: float
    a22: float
    re12: float = 0.0
    im12: float = 0.0

    class Config:
        title = '2x2 hermitian matrix stored as 4 reals'

    @staticmethod
    def of(a11:float, a22:float, re12:float = 0.0, im12:float = 0.0) -> 'Hermitian2':
        return Hermitian2.trusted(a11=a11, a22=a22, re12=re12, im12=im12)

    @staticmethod
    def identity(scale:float = 1.0) -> 'Hermitian2':
        return Hermitian2.of(scale, scale)

    @staticmethod
    def diag(a11:float, a22:float) -> 'Hermitian2':
        return Hermitian2.of(a11, a22)

    @staticmethod
    def from_array(matrix:np.ndarray) -> 'Hermitian2':
        ''' the hermitian part of matrix. a21 is taken as conjugate of a12. '''
        a12 = 0.5 * (complex(matrix[0, 1]) + complex(matrix[1, 0]).conjugate())

        return Hermitian2.of(
            float(np.real(matrix[0, 0])), float(np.real(matrix[1, 1])),
            a12.real, a12.imag)

    @property
    def trace(self) -> float:
        return self.a11 + self.a22

    @property
    def det(self) -> float:
        return self.a11 * self.a22 - (self.re12 * self.re12 + self.im12 * self.im12)

    @property
    def off_diagonal(self) -> complex:
        return complex(self.re12, self.im12)

    def to_array(self) -> np.ndarray:
        a12 = self.off_diagonal

        return np.array([[self.a11, a12], [a12.conjugate(), self.a22]], dtype=complex)

    def to_record(self) -> Dict[str, float]:
        return {'a11': self.a11, 'a22': self.a22, 're12': self.re12, 'im12': self.im12}

    def __add__(self, other:'Hermitian2') -> 'Hermitian2':
        return Hermitian2.of(self.a11 + other.a11, self.a22 + other.a22,
                             self.re12 + other.re12, self.im12 + other.im12)

    def __sub__(self, other:'Hermitian2') -> 'Hermitian2':
        return Hermitian2.of(self.a11 - other.a11, self.a22 - other.a22,
                             self.re12 - other.re12, self.im12 - other.im12)

    def scale(self, factor:float) -> 'Hermitian2':
        return Hermitian2.of(self.a11 * factor, self.a22 * factor,
                             self.re12 * factor, self.im12 * factor)

    def max_entry_difference(self, other:'Hermitian2') -> float:
        return max(abs(self.a11 - other.a11), abs(self.a22 - other.a22),
                   abs(self.off_diagonal - other.off_diagonal))


def _complex_rows(matrix:np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in matrix]


class Complex2x2(MatrixModel):
    ''' general complex 2x2 matrix. used for congruence factors and eigenvector frames. '''
    entries: np.ndarray

    class Config:
        title = 'complex 2x2 matrix'
        json_encoders = {np.ndarray: _complex_rows}

    @validator('entries', pre=True)
    def _check_shape(cls, value:Any) -> np.ndarray:
        array = np.asarray(value, dtype=complex)

        if array.shape != (2, 2):
            raise ValueError(L('complex 2x2 matrix requires shape (2, 2), not {0}', array.shape))

        return array

    @staticmethod
    def of(entries:np.ndarray) -> 'Complex2x2':
        return Complex2x2.trusted(entries=np.asarray(entries, dtype=complex))

    @staticmethod
    def identity() -> 'Complex2x2':
        return Complex2x2.of(np.eye(2, dtype=complex))

    @property
    def det(self) -> complex:
        e = self.entries
        return complex(e[0, 0] * e[1, 1] - e[0, 1] * e[1, 0])

    @property
    def adjoint(self) -> np.ndarray:
        return self.entries.conj().T

    def inverse(self) -> 'Complex2x2':
        det = self.det

        if abs(det) <= SINGULAR_TOLERANCE:
            _logger.fatal(f'{det=} of {self.entries=} is too small to invert')
            raise SingularFactorError(L('singular congruence factor. |det| = {0}', abs(det)))

        e = self.entries

        return Complex2x2.of(np.array([[e[1, 1], -e[0, 1]], [-e[1, 0], e[0, 0]]]) / det)

    def condition_number(self) -> float:
        return float(np.linalg.cond(self.entries))

    def to_rows(self) -> list:
        ''' [[re, im], ...] rows. '''
        return _complex_rows(self.entries)


class Spectrum2(SchemaBaseModel):
    ''' eigen decomposition frame @ diag(lambda1, lambda2) @ frame* with lambda1 >= lambda2. '''
    lambda1: float
    lambda2: float
    frame: Complex2x2

    class Config:
        title = 'spectral decomposition of 2x2 hermitian matrix'

    @property
    def eigenvalues(self) -> tuple[float, float]:
        return (self.lambda1, self.lambda2)

    @property
    def condition_number(self) -> float:
        ''' ratio of eigenvalue magnitudes. infinite when lambda2 is zero. '''
        if self.lambda2 == 0.0:
            return float('inf')

        return abs(self.lambda1 / self.lambda2)

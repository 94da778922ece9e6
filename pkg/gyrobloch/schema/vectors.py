from typing import Any, Iterable, List
import math

import numpy as np
from pydantic import Field, validator

from .base import SchemaBaseModel, MatrixModel, float_list, matrix_rows
from ..util import L

# vectors closer than this to the unit sphere are not interior.
INTERIOR_MARGIN = 1e-12


class BlochVector(SchemaBaseModel):
    ''' 3 vector of the closed unit ball. velocity in units of the speed of light,
        or Bloch vector of a qubit state. '''
    x: float
    y: float
    z: float

    class Config:
        title = 'vector of the closed unit ball of R3'

    @staticmethod
    def of(x:float, y:float, z:float) -> 'BlochVector':
        return BlochVector.trusted(x=x, y=y, z=z)

    @staticmethod
    def zero() -> 'BlochVector':
        return BlochVector.of(0.0, 0.0, 0.0)

    @staticmethod
    def from_iterable(values:Iterable[float]) -> 'BlochVector':
        x, y, z = (float(v) for v in values)
        return BlochVector.of(x, y, z)

    @staticmethod
    def parse(text:str) -> 'BlochVector':
        ''' parse "x,y,z" '''
        parts = text.split(',')

        if len(parts) != 3:
            raise ValueError(L('vector requires 3 comma separated components, not {0!r}', text))

        return BlochVector(x=float(parts[0]), y=float(parts[1]), z=float(parts[2]))

    @property
    def norm(self) -> float:
        return math.hypot(self.x, self.y, self.z)

    @property
    def norm_squared(self) -> float:
        return self.x * self.x + self.y * self.y + self.z * self.z

    @property
    def is_interior(self) -> bool:
        return self.norm <= 1.0 - INTERIOR_MARGIN

    def dot(self, other:'BlochVector') -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def scaled(self, factor:float) -> 'BlochVector':
        return BlochVector.of(self.x * factor, self.y * factor, self.z * factor)

    def __neg__(self) -> 'BlochVector':
        return BlochVector.of(-self.x, -self.y, -self.z)

    def to_list(self) -> List[float]:
        return [self.x, self.y, self.z]

    def to_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def distance_to(self, other:'BlochVector') -> float:
        return math.hypot(self.x - other.x, self.y - other.y, self.z - other.z)


class Rapidity(SchemaBaseModel):
    ''' hyperbolic angle atanh(|u|). '''
    phi: float = Field(ge=0.0)

    class Config:
        title = 'rapidity of interior vector'


def _square_matrix(value:Any, size:int) -> np.ndarray:
    array = np.asarray(value, dtype=float)

    if array.shape != (size, size):
        raise ValueError(L('matrix requires shape ({0}, {0}), not {1}', size, array.shape))

    return array


class Rotation3(MatrixModel):
    ''' orthogonal 3x3 matrix of a gyration. '''
    matrix: np.ndarray

    class Config:
        title = 'gyration matrix'

    @validator('matrix', pre=True)
    def _check_shape(cls, value:Any) -> np.ndarray:
        return _square_matrix(value, 3)

    @staticmethod
    def of(matrix:np.ndarray) -> 'Rotation3':
        return Rotation3.trusted(matrix=matrix)

    @staticmethod
    def identity() -> 'Rotation3':
        return Rotation3.of(np.eye(3))

    def apply(self, w:BlochVector) -> BlochVector:
        return BlochVector.from_iterable(self.matrix @ w.to_array())

    def orthogonality_defect(self) -> float:
        ''' max entry of |R^T R - I| '''
        return float(np.max(np.abs(self.matrix.T @ self.matrix - np.eye(3))))

    @property
    def det(self) -> float:
        return float(np.linalg.det(self.matrix))

    def to_rows(self) -> list:
        return matrix_rows(self.matrix)


MINKOWSKI = np.diag([1.0, -1.0, -1.0, -1.0])


class Boost4(MatrixModel):
    ''' symmetric 4x4 lorentz boost. time row and column first. '''
    matrix: np.ndarray

    class Config:
        title = 'lorentz boost'

    @validator('matrix', pre=True)
    def _check_shape(cls, value:Any) -> np.ndarray:
        return _square_matrix(value, 4)

    @staticmethod
    def of(matrix:np.ndarray) -> 'Boost4':
        return Boost4.trusted(matrix=matrix)

    def apply(self, event:Iterable[float]) -> np.ndarray:
        return self.matrix @ np.asarray(float_list(event))

    def minkowski_defect(self) -> float:
        ''' max entry of |B^T eta B - eta| '''
        return float(np.max(np.abs(self.matrix.T @ MINKOWSKI @ self.matrix - MINKOWSKI)))

    def to_rows(self) -> list:
        return matrix_rows(self.matrix)

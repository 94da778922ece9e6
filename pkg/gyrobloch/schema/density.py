from typing import Any, Dict

from .base import SchemaBaseModel
from .hermitian import Hermitian2
from .vectors import BlochVector


class DensityMatrix(SchemaBaseModel):
    ''' qubit density matrix 1/2 (I + v . sigma) stored as its bloch vector v.
        the matrix view is derived on demand, so trace 1 and hermiticity are exact.
    '''
    bloch: BlochVector

    class Config:
        title = 'qubit density matrix'

    @staticmethod
    def of(bloch:BlochVector) -> 'DensityMatrix':
        return DensityMatrix.trusted(bloch=bloch)

    @property
    def matrix(self) -> Hermitian2:
        v = self.bloch
        return Hermitian2.of(0.5 * (1.0 + v.z), 0.5 * (1.0 - v.z), 0.5 * v.x, -0.5 * v.y)

    @property
    def is_mixed(self) -> bool:
        return self.bloch.norm < 1.0

    def to_record(self, expanded:bool = False) -> Dict[str, Any]:
        record : Dict[str, Any] = {'bloch': self.bloch.to_list()}

        if expanded:
            record['matrix'] = self.matrix.to_record()

        return record


class DensitySpectrum(SchemaBaseModel):
    lambda_plus: float
    lambda_minus: float
    det: float

    class Config:
        title = 'eigenvalues and determinant of qubit density matrix'


class PauliVector(SchemaBaseModel):
    sigma_x: Hermitian2
    sigma_y: Hermitian2
    sigma_z: Hermitian2

    class Config:
        title = 'pauli matrices'

    def components(self) -> tuple[Hermitian2, Hermitian2, Hermitian2]:
        return (self.sigma_x, self.sigma_y, self.sigma_z)


PAULI = PauliVector(
    sigma_x=Hermitian2(a11=0.0, a22=0.0, re12=1.0, im12=0.0),
    sigma_y=Hermitian2(a11=0.0, a22=0.0, re12=0.0, im12=-1.0),
    sigma_z=Hermitian2(a11=1.0, a22=-1.0, re12=0.0, im12=0.0),
)

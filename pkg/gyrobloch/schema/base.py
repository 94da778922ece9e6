from typing import Any, Dict, Type, TypeVar

import numpy as np
import orjson
from pydantic import BaseModel

from ..util import orjson_dumps


ModelT = TypeVar('ModelT', bound='SchemaBaseModel')


class SchemaBaseModel(BaseModel):
    class Config:
        title = 'immutable value which can be written as json.'

        allow_mutation = False
        json_dumps = orjson_dumps
        json_loads = orjson.loads

    @classmethod
    def trusted(cls:Type[ModelT], **values:Any) -> ModelT:
        ''' build without validation. only for values computed by this package. '''
        return cls.construct(**values)


class MatrixModel(SchemaBaseModel):
    ''' value holding a numpy matrix. it is written as row-major nested list. '''
    class Config:
        title = 'immutable matrix value.'

        arbitrary_types_allowed = True
        json_encoders = {np.ndarray: lambda a: a.tolist()}


def float_list(values:Any) -> list:
    return [float(v) for v in values]


def matrix_rows(matrix:np.ndarray) -> list:
    return [float_list(row) for row in matrix]


def as_record(model:SchemaBaseModel) -> Dict[str, Any]:
    return orjson.loads(model.json())

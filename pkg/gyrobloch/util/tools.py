from typing import Any, Sequence
import hashlib

import numpy as np
import orjson

_ORJSON_OPTIONS = orjson.OPT_SERIALIZE_NUMPY


def orjson_dumps(v:Any, *, default=None, pretty:bool = False) -> str:
    # orjson.dumps returns bytes, to match standard json.dumps we need to decode
    option = _ORJSON_OPTIONS | (orjson.OPT_INDENT_2 if pretty else 0)
    return orjson.dumps(v, default=default, option=option).decode()


def digest(item:str, algorithm:str = 'sha1') -> str:
    h = hashlib.new(algorithm)

    h.update(item.encode('utf-8'))

    return h.hexdigest()


def residual(value:float, target:float) -> float:
    ''' absolute error when |target| <= 1, relative error otherwise. '''
    error = abs(value - target)
    scale = abs(target)

    return error / scale if scale > 1.0 else error


def vector_residual(value:Sequence[float] | np.ndarray, 
                    target:Sequence[float] | np.ndarray) -> float:
    value_array = np.asarray(value, dtype=float)
    target_array = np.asarray(target, dtype=float)

    error = float(np.max(np.abs(value_array - target_array)))
    scale = float(np.max(np.abs(target_array)))

    return error / scale if scale > 1.0 else error


def excess(value:float, bound:float) -> float:
    ''' how far value lies above bound, with the residual scaling. '''
    if value <= bound:
        return 0.0

    return residual(value, bound)
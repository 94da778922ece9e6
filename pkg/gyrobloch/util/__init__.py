from .log import get_logger, set_verbose
from .tools import (
    digest, orjson_dumps, residual, vector_residual, excess
)
from .localized import L

__all__ = [
    'get_logger',
    'set_verbose',
    'digest',
    'orjson_dumps',
    'residual',
    'vector_residual',
    'excess',
    "L",
]

''' seeded samplers of the verification suites.

every trial owns a PCG64 generator seeded by
SeedSequence(entropy=seed, spawn_key=(suite_key, trial_index)), so trial i does not
depend on the trial count or on the order of execution.
'''
from typing import Iterator
import math

import numpy as np
from scipy.stats import unitary_group

from ..schema import BlochVector, Complex2x2, DensityMatrix, Hermitian2, OutOfRangeError
from ..util import digest, get_logger, L


_logger = get_logger(__name__)

# near boundary stratum is [BOUNDARY_STRATUM * cap, cap]
BOUNDARY_STRATUM = 0.99
MAX_CONDITION = 1e3
# euclidean distance range of near coincident pairs
NEARBY_LOW = 1e-12
NEARBY_HIGH = 1e-8


def suite_key(suite_id:str) -> int:
    return int(digest(suite_id)[:8], 16)


def trial_generator(seed:int, suite_id:str, trial_index:int) -> np.random.Generator:
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(suite_key(suite_id), trial_index))
    return np.random.Generator(np.random.PCG64(sequence))


def _check_cap(radius_cap:float, boundary_fraction:float):
    if not 0.0 < radius_cap <= 1.0:
        _logger.fatal(f'{radius_cap=} should be in (0, 1]')
        raise OutOfRangeError(L('radius cap should be in (0, 1]. {0}', radius_cap))

    if not 0.0 <= boundary_fraction <= 1.0:
        _logger.fatal(f'{boundary_fraction=} should be in [0, 1]')
        raise OutOfRangeError(L('boundary fraction should be in [0, 1]. {0}', boundary_fraction))


def _direction(normals:np.ndarray) -> tuple[float, float, float]:
    x, y, z = (float(n) for n in normals)
    length = math.hypot(x, y, z)

    if length == 0.0:
        return 0.0, 0.0, 1.0

    return x / length, y / length, z / length


def sample_ball(rng:np.random.Generator, radius_cap:float,
                boundary_fraction:float = 0.0) -> BlochVector:
    ''' uniform on the ball of radius radius_cap, except the boundary_fraction of samples
        whose radius is uniform on the near boundary stratum.
        consumes 3 normals and 2 uniforms for every sample.
    '''
    _check_cap(radius_cap, boundary_fraction)

    normals = rng.standard_normal(3)
    stratum, u = rng.random(2)

    if stratum < boundary_fraction:
        radius = radius_cap * (BOUNDARY_STRATUM + (1.0 - BOUNDARY_STRATUM) * u)
    else:
        radius = radius_cap * u ** (1.0 / 3.0)

    x, y, z = _direction(normals)

    return BlochVector.of(radius * x, radius * y, radius * z)


def sample_sphere(rng:np.random.Generator) -> BlochVector:
    ''' uniform on the unit sphere. '''
    return BlochVector.of(*_direction(rng.standard_normal(3)))


def sample_nearby(rng:np.random.Generator, u:BlochVector, low:float = NEARBY_LOW,
                  high:float = NEARBY_HIGH) -> BlochVector:
    ''' u moved in a uniform direction by a log-uniform distance in [low, high].
        consumes 3 normals and 1 uniform. '''
    if not 0.0 < low <= high:
        _logger.fatal(f'{low=} {high=} should satisfy 0 < low <= high')
        raise OutOfRangeError(L('nearby distance range should satisfy 0 < low <= high. {0} {1}',
                                low, high))

    x, y, z = _direction(rng.standard_normal(3))
    distance = low * (high / low) ** rng.random()

    return BlochVector.of(u.x + distance * x, u.y + distance * y, u.z + distance * z)


def sample_scalar(rng:np.random.Generator, low:float, high:float) -> float:
    return float(rng.uniform(low, high))


def sample_unitary(rng:np.random.Generator) -> Complex2x2:
    return Complex2x2.of(np.asarray(unitary_group.rvs(2, random_state=rng)).reshape(2, 2))


def sample_congruence_factor(rng:np.random.Generator,
                             max_condition:float = MAX_CONDITION) -> Complex2x2:
    ''' U diag(s, s/k) V with haar unitaries U, V, log-uniform k in [1, max_condition]
        and log-uniform s in [0.1, 10]. '''
    left = sample_unitary(rng).entries
    right = sample_unitary(rng).entries
    scale = 10.0 ** rng.uniform(-1.0, 1.0)
    condition = max_condition ** rng.random()

    return Complex2x2.of(left @ np.diag([scale, scale / condition]) @ right)


def sample_density_matrix(rng:np.random.Generator, radius_cap:float,
                          boundary_fraction:float = 0.0) -> Hermitian2:
    return DensityMatrix.of(sample_ball(rng, radius_cap, boundary_fraction)).matrix


def sample_stream(seed:int, count:int, radius_cap:float,
                  boundary_fraction:float = 0.0, stream_id:str = 'sample') -> Iterator[BlochVector]:
    ''' the vectors written by the sample command. sample i comes from trial i of stream_id. '''
    for index in range(count):
        yield sample_ball(trial_generator(seed, stream_id, index), radius_cap, boundary_fraction)

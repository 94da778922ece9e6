''' command line tool. every result is a JSON line on standard output.

exit codes: 0 success, 1 domain error, 2 usage error or unknown suite, 3 suite violation.
'''
from typing import Any, Callable, Dict, Iterator, List, TextIO
import argparse
import re
import sys

import orjson
from pydantic import ValidationError

from .schema import BlochVector, GyroError, Hermitian2, TrialConfig, UnknownSuiteError
from .geometry import (
    METRIC_NAMES, apply_rotation, boost_add, distance_report, einstein_add,
    einstein_add_closed, from_bloch, gyration, inverse_formula, inverse_state,
    lorentz_boost, odot, scalar_mul, sqrt_density, to_bloch
)
from .verify import ALL_SUITES, run_all, run_suite, sample_stream
from .util import get_logger, orjson_dumps, set_verbose, L


_logger = get_logger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE = 2
EXIT_VIOLATION = 3

Record = Dict[str, Any]


class UsageError(Exception):
    pass


class JsonArgumentParser(argparse.ArgumentParser):
    ''' raises UsageError instead of printing usage and exiting.
        comma separated vectors like -0.5,0,0 are positionals, not options. '''
    def __init__(self, *args:Any, **kwds:Any):
        super().__init__(*args, **kwds)
        self._negative_number_matcher = re.compile(r'^-\.?\d[\d.eE+\-,]*$')

    def error(self, message:str):
        raise UsageError(message)


def _vector(text:str) -> BlochVector:
    return BlochVector.parse(text)

_vector.__name__ = 'vector'


def _add(args:argparse.Namespace) -> Iterator[Record]:
    add = einstein_add_closed if args.closed else einstein_add
    yield {'result': add(args.u, args.v).to_list()}


def _gyr(args:argparse.Namespace) -> Iterator[Record]:
    rotation = gyration(args.u, args.v)

    if args.w is None:
        yield {'matrix': rotation.to_rows()}
    else:
        yield {'result': apply_rotation(rotation, args.w).to_list()}


def _mul(args:argparse.Namespace) -> Iterator[Record]:
    yield {'result': scalar_mul(args.t, args.u).to_list()}


def _boost(args:argparse.Namespace) -> Iterator[Record]:
    boost = lorentz_boost(args.u)

    if args.v is None:
        yield {'matrix': boost.to_rows()}
        return

    t, result = boost_add(args.u, args.v)
    image = boost.apply((1.0, args.v.x, args.v.y, args.v.z))

    yield {'t': t, 'image': image.tolist(), 'result': result.to_list()}


def _density(args:argparse.Namespace) -> Iterator[Record]:
    yield from_bloch(args.v).to_record(expanded=True)


def _read_matrix(text:str, stdin:TextIO) -> Hermitian2:
    try:
        item = orjson.loads(stdin.read() if text == '-' else text)
    except orjson.JSONDecodeError as e:
        raise UsageError(L('matrix is not valid json. {0}', e)) from e

    if isinstance(item, dict) and 'matrix' in item:
        item = item['matrix']

    try:
        return Hermitian2.parse_obj(item)
    except ValidationError as e:
        raise UsageError(L('matrix is not a hermitian matrix record. {0}', e)) from e


def _bloch(args:argparse.Namespace) -> Iterator[Record]:
    yield {'bloch': to_bloch(_read_matrix(args.matrix, args.stdin)).to_list()}


def _sqrt(args:argparse.Namespace) -> Iterator[Record]:
    yield {'matrix': sqrt_density(from_bloch(args.v)).to_record()}


def _odot(args:argparse.Namespace) -> Iterator[Record]:
    yield odot(from_bloch(args.u), from_bloch(args.v)).to_record(expanded=True)


def _inv(args:argparse.Namespace) -> Iterator[Record]:
    rho = from_bloch(args.u)
    matrix = inverse_formula(rho, printed=args.printed_eqn)
    record : Record = {'matrix': matrix.to_record(), 'trace': matrix.trace}

    if args.printed_eqn:
        record['printed'] = True
    else:
        record['bloch'] = inverse_state(rho).bloch.to_list()

    yield record


def _dist(args:argparse.Namespace) -> Iterator[Record]:
    yield distance_report(args.u, args.v, args.metric or METRIC_NAMES)


def _verify(args:argparse.Namespace) -> Iterator[Record]:
    values = {
        'seed': args.seed, 'trials': args.trials, 'tol_rel': args.tol, 'tol_abs': args.tol_abs,
        'radius_cap': args.cap, 'boundary_fraction': args.boundary_fraction
    }
    try:
        cfg = TrialConfig(**{k: v for k, v in values.items() if v is not None})
    except ValidationError as e:
        raise UsageError(L('invalid trial config. {0}', e)) from e

    reports = run_all(cfg) if args.suite == ALL_SUITES else [run_suite(args.suite, cfg)]

    for report in reports:
        yield report.to_record(timing=args.timing)

    if not reports[-1].passed:
        args.exit_code = EXIT_VIOLATION


def _sample(args:argparse.Namespace) -> Iterator[Record]:
    for index, v in enumerate(sample_stream(args.seed, args.n, args.cap, args.boundary_fraction)):
        yield {'index': index, 'vector': v.to_list()}


def _build_parser() -> JsonArgumentParser:
    parser = JsonArgumentParser(
        prog='gyrobloch',
        description='einstein gyrogroup, qubit density matrices and their metrics.')
    parser.add_argument('--pretty', action='store_true', help='indented json')
    parser.add_argument('-v', '--verbose', action='store_true', help='debug logging on stderr')

    commands = parser.add_subparsers(dest='command', required=True)

    def command(name:str, func:Callable[[argparse.Namespace], Iterator[Record]],
                help:str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help)
        sub.set_defaults(func=func)
        return sub

    sub = command('add', _add, 'einstein addition u + v')
    sub.add_argument('u', type=_vector)
    sub.add_argument('v', type=_vector)
    sub.add_argument('--closed', action='store_true', help='extended addition on the closed ball')

    sub = command('gyr', _gyr, 'gyration gyr[u, v] or its image of w')
    sub.add_argument('u', type=_vector)
    sub.add_argument('v', type=_vector)
    sub.add_argument('w', type=_vector, nargs='?')

    sub = command('mul', _mul, 'scalar multiplication t . u')
    sub.add_argument('t', type=float)
    sub.add_argument('u', type=_vector)

    sub = command('boost', _boost, 'lorentz boost B(u) or B(u) applied to (1; v)')
    sub.add_argument('u', type=_vector)
    sub.add_argument('v', type=_vector, nargs='?')

    sub = command('density', _density, 'density matrix of bloch vector')
    sub.add_argument('v', type=_vector)

    sub = command('bloch', _bloch, 'bloch vector of density matrix json, - for stdin')
    sub.add_argument('matrix')

    sub = command('sqrt', _sqrt, 'square root of density matrix')
    sub.add_argument('v', type=_vector)

    sub = command('odot', _odot, 'gyrogroup product of density matrices')
    sub.add_argument('u', type=_vector)
    sub.add_argument('v', type=_vector)

    sub = command('inv', _inv, 'inverse of density matrix')
    sub.add_argument('u', type=_vector)
    sub.add_argument('--printed-eqn', action='store_true',
                     help='use the coefficient 1/(4 gamma), whose trace is gamma')

    sub = command('dist', _dist, 'distances between u and v')
    sub.add_argument('u', type=_vector)
    sub.add_argument('v', type=_vector)
    sub.add_argument('--metric', action='append', choices=METRIC_NAMES)

    sub = command('verify', _verify, 'run verification suite')
    sub.add_argument('--suite', required=True)
    sub.add_argument('--trials', type=int)
    sub.add_argument('--seed', type=int)
    sub.add_argument('--tol', type=float, help='relative tolerance')
    sub.add_argument('--tol-abs', type=float)
    sub.add_argument('--cap', type=float, help='radius cap of samples')
    sub.add_argument('--boundary-fraction', type=float)
    sub.add_argument('--timing', action='store_true', help='write elapsed_ms')

    sub = command('sample', _sample, 'seeded samples of the ball')
    sub.add_argument('--n', type=int, default=10)
    sub.add_argument('--seed', type=int, default=42)
    sub.add_argument('--cap', type=float, default=TrialConfig.__fields__['radius_cap'].default)
    sub.add_argument('--boundary-fraction', type=float, default=0.0)

    return parser


def _write(stdout:TextIO, record:Record, pretty:bool):
    stdout.write(orjson_dumps(record, pretty=pretty))
    stdout.write('\n')


def run(argv:List[str], stdout:TextIO | None = None, stdin:TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    parser = _build_parser()

    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        _write(stdout, {'error': 'usage', 'detail': str(e)}, False)
        return EXIT_USAGE

    if args.verbose:
        set_verbose()

    args.stdin = stdin or sys.stdin
    args.exit_code = EXIT_OK

    try:
        for record in args.func(args):
            _write(stdout, record, args.pretty)
    except UnknownSuiteError as e:
        _write(stdout, {'error': e.code, 'detail': str(e)}, args.pretty)
        return EXIT_USAGE
    except GyroError as e:
        _write(stdout, {'error': e.code, 'detail': str(e)}, args.pretty)
        return EXIT_DOMAIN_ERROR
    except UsageError as e:
        _logger.debug(f'usage error of {argv=}. {e=}')
        _write(stdout, {'error': 'usage', 'detail': str(e)}, args.pretty)
        return EXIT_USAGE

    return args.exit_code


def main() -> int:
    return run(sys.argv[1:])

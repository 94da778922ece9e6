''' residual bookkeeping of a suite. '''
from typing import Any, Dict, List, Sequence
import math

import numpy as np

from ..schema import BlochVector, Complex2x2, Hermitian2, Rotation3, SuiteReport
from ..geometry import eigenvalues_h2
from ..util import get_logger, residual, vector_residual, excess


_logger = get_logger(__name__)

EPSILON = float(np.finfo(float).eps)
# rounding of the inputs alone moves the trace metric by about this many ulps times kappa.
CONDITIONING_ULPS = 16.0


def condition_number(*matrices:Hermitian2) -> float:
    ''' largest lambda1 / lambda2 of positive definite matrices. '''
    kappa = 1.0

    for m in matrices:
        lambda1, lambda2 = eigenvalues_h2(m)
        kappa = max(kappa, lambda1 / lambda2 if lambda2 > 0.0 else math.inf)

    return kappa


def conditioning_allowance(kappa:float) -> float:
    ''' 16 eps kappa max(1, delta) in residual units, where residuals are relative above 1. '''
    return CONDITIONING_ULPS * EPSILON * kappa


def witness_value(item:Any) -> Any:
    match item:
        case BlochVector():
            return item.to_list()
        case Hermitian2():
            return item.to_record()
        case Rotation3() | Complex2x2():
            return item.to_rows()
        case np.ndarray():
            return item.tolist()
        case np.floating():
            return float(item)

    return item


class CheckRecorder():
    ''' collects residuals of the named checks of a suite.

        every residual is rescaled into units of the suite tolerance before it is
        compared with max_residual. the first trial reaching the maximum keeps the witness.
    '''
    def __init__(self, suite_id:str, tolerance:float):
        self.suite_id = suite_id
        self.tolerance = tolerance
        self.trials_run = 0
        self.violations = 0
        self.max_residual = 0.0
        self.worst_witness : List[Any] = []
        self.details : Dict[str, Any] = {}
        self.failed_checks : Dict[str, int] = {}

    def check(self, name:str, value_residual:float, tolerance:float | None = None,
              witness:Sequence[Any] = ()) -> bool:
        tolerance = self.tolerance if tolerance is None else tolerance

        if not math.isfinite(value_residual):
            value_residual = math.inf

        scaled = value_residual * (self.tolerance / tolerance)

        if scaled > self.max_residual:
            self.max_residual = scaled
            self.worst_witness = [name, *(witness_value(w) for w in witness)]

        if value_residual > tolerance:
            self.violations += 1
            self.failed_checks[name] = self.failed_checks.get(name, 0) + 1
            _logger.warning(f'{self.suite_id=} {name=} violated. {value_residual=} {tolerance=} {witness=}')
            return False

        return True

    def equal(self, name:str, value:float, target:float, tolerance:float | None = None,
              witness:Sequence[Any] = ()) -> bool:
        return self.check(name, residual(value, target), tolerance, witness)

    def equal_vectors(self, name:str, value:BlochVector | np.ndarray, target:BlochVector | np.ndarray,
                      tolerance:float | None = None, witness:Sequence[Any] = ()) -> bool:
        return self.check(name, vector_residual(_as_array(value), _as_array(target)),
                          tolerance, witness)

    def equal_matrices(self, name:str, value:Hermitian2, target:Hermitian2,
                       tolerance:float | None = None, witness:Sequence[Any] = ()) -> bool:
        return self.check(name, value.max_entry_difference(target), tolerance, witness)

    def at_most(self, name:str, value:float, bound:float, tolerance:float | None = None,
                witness:Sequence[Any] = ()) -> bool:
        return self.check(name, excess(value, bound), tolerance, witness)

    def trial_done(self):
        self.trials_run += 1

    def report(self) -> SuiteReport:
        if self.failed_checks:
            self.details['failed_checks'] = dict(sorted(self.failed_checks.items()))

        return SuiteReport(
            suite_id=self.suite_id,
            trials_run=self.trials_run,
            violations=self.violations,
            max_residual=self.max_residual,
            tolerance=self.tolerance,
            worst_witness=self.worst_witness,
            details=self.details)


def _as_array(value:BlochVector | np.ndarray) -> np.ndarray:
    return value.to_array() if isinstance(value, BlochVector) else np.asarray(value, dtype=float)

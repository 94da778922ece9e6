from typing import List
import time

from ..schema import SuiteReport, TrialConfig
from ..util import get_logger
from .suites import get_suite, suite_ids


_logger = get_logger(__name__)

ALL_SUITES = 'all'


def _elapsed_ms(start:float) -> float:
    return (time.perf_counter() - start) * 1000.0


def run_suite(suite_id:str, cfg:TrialConfig) -> SuiteReport:
    ''' run the named suite. "all" runs every suite and returns the summary report. '''
    if suite_id == ALL_SUITES:
        return run_all(cfg)[-1]

    suite = get_suite(suite_id)
    start = time.perf_counter()

    _logger.info(f'start suite {suite_id=} {cfg=}')

    recorder = suite(cfg)
    report = recorder.report().copy(update={'elapsed_ms': _elapsed_ms(start)})

    if report.passed:
        _logger.info(f'{suite_id=} passed. {report.trials_run=} {report.max_residual=}')
    else:
        _logger.warning(f'{suite_id=} failed. {report.violations=} {report.worst_witness=}')

    return report


def run_all(cfg:TrialConfig) -> List[SuiteReport]:
    ''' every registered suite in order, then the summary with suite_id "all". '''
    start = time.perf_counter()
    reports = [run_suite(suite_id, cfg) for suite_id in suite_ids()]

    return reports + [summarize(reports, _elapsed_ms(start))]


def _severity(report:SuiteReport) -> float:
    return report.max_residual / report.tolerance


def summarize(reports:List[SuiteReport], elapsed_ms:float | None = None) -> SuiteReport:
    ''' the worst suite by max_residual / tolerance, the first one on ties. '''
    worst = reports[0]

    for report in reports[1:]:
        if _severity(report) > _severity(worst):
            worst = report

    return SuiteReport(
        suite_id=ALL_SUITES,
        trials_run=sum(r.trials_run for r in reports),
        violations=sum(r.violations for r in reports),
        max_residual=worst.max_residual,
        tolerance=worst.tolerance,
        worst_witness=worst.worst_witness,
        details={'worst_suite': worst.suite_id},
        elapsed_ms=elapsed_ms)

import math

import orjson
import pytest

from gyrobloch.schema import SuiteReport, TrialConfig, UnknownSuiteError
from gyrobloch.geometry import gamma, rapidity_metric
from gyrobloch.verify import (
    ALL_SUITES, run_all, run_suite, sample_ball, sample_nearby, suite_ids, summarize,
    trial_generator
)


SUITES = [
    'axioms', 'isomorphism', 'metric_lemma', 'trace_lemma', 'bounds', 'gamma_identity',
    'boost', 'pathlength', 'erratum'
]


def _config(trials:int, **kwds) -> TrialConfig:
    return TrialConfig(trials=trials, **kwds)


def test_suite_ids():
    assert suite_ids() == SUITES


@pytest.mark.parametrize('suite_id', SUITES)
def test_suite_passes(suite_id:str):
    trials = 4 if suite_id == 'pathlength' else 100
    report = run_suite(suite_id, _config(trials))

    assert report.suite_id == suite_id
    assert report.trials_run == trials
    assert report.violations == 0, report.details
    assert report.max_residual <= report.tolerance
    assert report.elapsed_ms is not None and report.elapsed_ms >= 0.0


# runtime limits in ms at the default config
_RUNTIME_LIMITS = {'axioms': 10_000.0, 'pathlength': 30_000.0}
_SUITE_RUNTIME_LIMIT = 60_000.0


@pytest.mark.slow
@pytest.mark.parametrize('suite_id', SUITES)
def test_suite_passes_at_default_config(suite_id:str):
    cfg = TrialConfig()
    report = run_suite(suite_id, cfg)

    assert (cfg.trials, cfg.radius_cap, cfg.boundary_fraction) == (10_000, 0.999, 0.2)
    assert report.violations == 0, report.details
    assert report.trials_run == (100 if suite_id == 'pathlength' else cfg.trials)
    assert report.elapsed_ms < _RUNTIME_LIMITS.get(suite_id, _SUITE_RUNTIME_LIMIT)


@pytest.mark.parametrize('suite_id', ['axioms', 'bounds', 'trace_lemma'])
def test_suite_passes_without_boundary_stratum(suite_id:str):
    report = run_suite(suite_id, _config(100, boundary_fraction=0.0, radius_cap=0.9))

    assert report.passed


def test_report_is_reproducible():
    cfg = _config(50)

    first = run_suite('isomorphism', cfg).to_record()
    second = run_suite('isomorphism', cfg).to_record()

    assert orjson.dumps(first) == orjson.dumps(second)
    assert 'elapsed_ms' not in first
    assert run_suite('isomorphism', cfg).to_record(timing=True)['elapsed_ms'] >= 0.0


def test_violations_grow_with_trials():
    # the residual of a trial does not depend on the trial count
    strict = dict(tol_abs=1e-300)

    small = run_suite('boost', _config(20, **strict))
    large = run_suite('boost', _config(40, **strict))

    assert small.violations <= large.violations
    assert small.max_residual <= large.max_residual


def test_violation_report():
    report = run_suite('boost', _config(20, tol_abs=1e-300))

    assert not report.passed
    assert report.max_residual > report.tolerance
    assert report.worst_witness[0] in report.details['failed_checks']
    assert sum(report.details['failed_checks'].values()) == report.violations


def test_rapidity_metric_separates_near_pairs():
    for index in range(500):
        rng = trial_generator(42, 'metric_lemma', index)
        u = sample_ball(rng, 0.999, 0.2)
        near = sample_nearby(rng, u)

        separation, d = u.distance_to(near), rapidity_metric(u, near)
        stretch = max(gamma(u), gamma(near)) ** 2

        assert d > 0.0
        assert separation * (1.0 - 1e-9) <= d <= stretch * separation * (1.0 + 1e-9)

        if d < 1e-9:
            assert separation < 1e-9
        if separation < 1e-10 / stretch:
            assert d < 1e-10


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError):
        run_suite('nonsense', _config(1))


def test_erratum_details():
    report = run_suite('erratum', _config(10))

    assert report.details['vector'] == [0.0, 0.0, 0.6]
    assert report.details['gamma'] == pytest.approx(1.25, abs=1e-15)
    assert report.details['printed_trace'] == pytest.approx(1.25, abs=1e-15)
    assert report.details['corrected_trace'] == pytest.approx(1.0, abs=1e-15)
    assert report.details['corrected_bloch'] == pytest.approx([0.0, 0.0, -0.6], abs=1e-15)


def test_bounds_details():
    report = run_suite('bounds', _config(100))

    assert report.details['sqrt2'] == pytest.approx(math.sqrt(2.0))
    assert report.details['min_ratio_direct'] >= math.sqrt(2.0) - 1e-9


def test_run_all():
    reports = run_all(_config(3))
    summary = reports[-1]

    assert [r.suite_id for r in reports] == SUITES + [ALL_SUITES]
    assert summary.trials_run == sum(r.trials_run for r in reports[:-1])
    assert summary.violations == 0
    assert summary.details['worst_suite'] in SUITES
    assert run_suite(ALL_SUITES, _config(3)).suite_id == ALL_SUITES


def _report(suite_id:str, max_residual:float, tolerance:float, violations:int = 0) -> SuiteReport:
    return SuiteReport(suite_id=suite_id, trials_run=10, violations=violations,
                       max_residual=max_residual, tolerance=tolerance,
                       worst_witness=[suite_id])


def test_summarize():
    summary = summarize([
        _report('a', 0.125, 1.0),
        _report('b', 0.375, 0.5),
        _report('c', 0.5, 1.0),
    ], 12.5)

    assert summary.suite_id == ALL_SUITES
    assert summary.trials_run == 30
    assert summary.details == {'worst_suite': 'b'}
    assert summary.max_residual == 0.375
    assert summary.tolerance == 0.5
    assert summary.elapsed_ms == 12.5

    tie = summarize([_report('a', 0.5, 1.0), _report('b', 0.25, 0.5)])

    assert tie.details == {'worst_suite': 'a'}

    failed = summarize([_report('a', 0.125, 1.0), _report('b', 2.0, 1.0, violations=2)])

    assert failed.violations == 2
    assert not failed.passed

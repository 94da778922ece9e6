import math

import numpy as np
import pytest

from gyrobloch.schema import (
    BlochVector, Complex2x2, Hermitian2, NotPositiveDefiniteError, OutOfRangeError
)
from gyrobloch.geometry import (
    METRIC_NAMES, PathSampler, congruence, distance_report, floor_eigenvalues, from_bloch,
    geodesic_point, geodesic_sampler, gyrometric, path_length, perturbed_sampler, prop_bound,
    rapidity_metric, relative_eigenvalues, sqrt_pd, trace_metric, trace_metric_by_product
)


V = BlochVector.of
HALF = Hermitian2.identity(0.5)


def _rho(x:float, y:float, z:float) -> Hermitian2:
    return from_bloch(V(x, y, z)).matrix


def _pd_matrices(seed:int, count:int) -> list[Hermitian2]:
    rng = np.random.default_rng(seed)
    result = []

    for _ in range(count):
        a11, a22 = rng.uniform(0.2, 3.0, 2)
        bound = 0.9 * math.sqrt(a11 * a22)
        re12, im12 = rng.uniform(-bound, bound, 2) / math.sqrt(2.0)
        result.append(Hermitian2.of(a11, a22, re12, im12))

    return result


def test_gyrometric():
    u = V(0.3, -0.1, 0.2)

    assert gyrometric(u, u) == pytest.approx(0.0, abs=1e-15)
    assert gyrometric(BlochVector.zero(), u) == pytest.approx(u.norm, abs=1e-15)
    assert gyrometric(V(0.5, 0.0, 0.0), V(0.0, 0.5, 0.0)) == \
        pytest.approx(math.sqrt(0.4375), abs=1e-15)
    assert gyrometric(V(0.5, 0.0, 0.0), V(0.0, 0.5, 0.0)) == \
        pytest.approx(gyrometric(V(0.0, 0.5, 0.0), V(0.5, 0.0, 0.0)), abs=1e-15)


def test_rapidity_metric():
    assert rapidity_metric(BlochVector.zero(), V(0.6, 0.0, 0.0)) == \
        pytest.approx(math.log(2.0), abs=1e-14)
    assert rapidity_metric(V(-0.5, 0.0, 0.0), V(0.5, 0.0, 0.0)) == \
        pytest.approx(2.0 * math.atanh(0.5), abs=1e-14)


@pytest.mark.parametrize('norm', [1.0 - 1e-6, 1.0 - 1e-7, 1.0 - 1e-9, 0.9999999999])
def test_rapidity_metric_of_antipodal_pair_near_sphere(norm:float):
    u, v = V(norm, 0.0, 0.0), V(-norm, 0.0, 0.0)
    expected = math.log((1.0 + norm) / (1.0 - norm))

    assert rapidity_metric(u, v) == pytest.approx(expected, rel=1e-12)
    assert rapidity_metric(v, u) == rapidity_metric(u, v)


def test_rapidity_metric_of_near_points():
    u = V(0.6, 0.0, 0.0)

    for step in (1e-12, 1e-10, 1e-8):
        radial, tangential = V(0.6 + step, 0.0, 0.0), V(0.6, step, 0.0)
        radial_step = radial.x - u.x

        # ds = gamma^2 |du| along the radius, gamma |du| across it
        assert rapidity_metric(u, radial) == pytest.approx(1.5625 * radial_step, rel=1e-6)
        assert rapidity_metric(u, tangential) == pytest.approx(1.25 * step, rel=1e-6)


def test_trace_metric():
    assert trace_metric(HALF, HALF) == 0.0
    assert trace_metric(HALF, _rho(0.0, 0.0, 0.6)) == \
        pytest.approx(math.hypot(math.log(1.6), math.log(0.4)), abs=1e-14)
    assert trace_metric(HALF, _rho(0.0, 0.0, 0.6)) == pytest.approx(1.0298020, abs=1e-7)

    a, b = Hermitian2.diag(1.0, 2.0), Hermitian2.diag(3.0, 0.5)
    assert trace_metric(a, b) == pytest.approx(math.hypot(math.log(3.0), math.log(0.25)), rel=1e-14)


def test_trace_metric_is_symmetric_and_invariant():
    matrices = _pd_matrices(1, 40)
    factor = Complex2x2.of(np.array([[1.0 + 0.5j, -0.3], [0.2j, 1.5 - 0.1j]]))

    for a, b in zip(matrices[::2], matrices[1::2]):
        distance = trace_metric(a, b)

        assert trace_metric(b, a) == pytest.approx(distance, rel=1e-11, abs=1e-12)
        assert trace_metric(congruence(factor, a), congruence(factor, b)) == \
            pytest.approx(distance, rel=1e-10, abs=1e-11)
        assert trace_metric_by_product(a, b) == pytest.approx(distance, rel=1e-10, abs=1e-11)


def test_relative_eigenvalues():
    lambda1, lambda2 = relative_eigenvalues(Hermitian2.diag(2.0, 1.0), Hermitian2.diag(1.0, 4.0))

    assert (lambda1, lambda2) == pytest.approx((4.0, 0.5), rel=1e-15)


@pytest.mark.parametrize('a, b', [
    (Hermitian2.diag(1.0, 0.0), HALF),
    (HALF, Hermitian2.diag(1.0, -1.0)),
    (Hermitian2.diag(-1.0, -1.0), HALF),
])
def test_trace_metric_requires_positive_definite(a:Hermitian2, b:Hermitian2):
    with pytest.raises(NotPositiveDefiniteError):
        trace_metric(a, b)

    with pytest.raises(NotPositiveDefiniteError):
        trace_metric_by_product(a, b)


def test_prop_bound():
    u, v = BlochVector.zero(), V(0.0, 0.0, 0.6)

    assert prop_bound(u, v) == pytest.approx(math.hypot(math.log(2.0), math.log(3.125)), rel=1e-14)
    assert prop_bound(u, v) == pytest.approx(1.3337, abs=1e-4)
    assert prop_bound(u, v) >= trace_metric(from_bloch(u).matrix, from_bloch(v).matrix)
    assert prop_bound(u, u) == pytest.approx(math.sqrt(2.0) * math.log(2.0), abs=1e-15)
    assert prop_bound(V(0.1, 0.2, 0.3), V(-0.4, 0.0, 0.2)) == \
        pytest.approx(prop_bound(V(-0.4, 0.0, 0.2), V(0.1, 0.2, 0.3)), rel=1e-15)


def test_trace_metric_dominates_rapidity():
    rng = np.random.default_rng(3)

    for _ in range(100):
        u = BlochVector.from_iterable(rng.uniform(-0.55, 0.55, 3))
        v = BlochVector.from_iterable(rng.uniform(-0.55, 0.55, 3))
        delta = trace_metric(from_bloch(u).matrix, from_bloch(v).matrix)

        assert delta >= math.sqrt(2.0) * rapidity_metric(u, v) - 1e-12


def test_geodesic_point():
    a, b = Hermitian2.diag(0.8, 0.2), HALF

    assert geodesic_point(a, b, 0.0) is a
    assert geodesic_point(a, b, 1.0) is b

    middle = geodesic_point(a, b, 0.5)

    assert middle.max_entry_difference(Hermitian2.diag(math.sqrt(0.4), math.sqrt(0.1))) <= 1e-15

    point = geodesic_point(HALF, _rho(0.0, 0.0, 0.6), 0.5)

    assert point.a11 == pytest.approx(0.6324555320336759, abs=1e-15)
    assert point.a22 == pytest.approx(0.31622776601683794, abs=1e-15)


def test_geodesic_point_of_ill_conditioned_pair():
    c, s = math.cos(0.3), math.sin(0.3)
    a = Hermitian2.diag(1.0, 1e-5)
    b = congruence(Complex2x2.of(np.array([[c, -s], [s, c]])), Hermitian2.diag(1e-5, 1.0))
    distance = trace_metric(a, b)

    # relative eigenvalues near 9e4 and 1e-5
    assert distance > 16.0

    for t in (0.1, 0.5616, 0.9):
        assert trace_metric(a, geodesic_point(a, b, t)) == pytest.approx(t * distance, rel=1e-9)


@pytest.mark.parametrize('t', [-0.1, 1.5, math.nan])
def test_geodesic_point_rejects_parameter(t:float):
    with pytest.raises(OutOfRangeError):
        geodesic_point(HALF, _rho(0.0, 0.0, 0.6), t)


def test_geodesic_has_constant_speed():
    matrices = _pd_matrices(5, 10)

    for a, b in zip(matrices[::2], matrices[1::2]):
        distance = trace_metric(a, b)

        for s, t in ((0.0, 0.3), (0.25, 0.75), (0.6, 1.0)):
            piece = trace_metric(geodesic_point(a, b, s), geodesic_point(a, b, t))
            assert piece == pytest.approx((t - s) * distance, abs=1e-10)


def test_path_length_of_constant_path_is_zero():
    a = Hermitian2.diag(0.8, 0.2)
    path = PathSampler(endpoint_a=a, endpoint_b=a, rule=lambda t: a, segments=16)

    assert path_length(path) == 0.0


def test_path_length_of_geodesic():
    a, b = HALF, _rho(0.3, -0.2, 0.5)
    distance = trace_metric(a, b)

    assert path_length(geodesic_sampler(a, b, segments=256)) == pytest.approx(distance, abs=1e-6)
    assert path_length(perturbed_sampler(a, b, segments=256)) >= distance - 1e-9


def test_path_sampler_checks_endpoints():
    a, b = HALF, _rho(0.0, 0.0, 0.6)

    with pytest.raises(ValueError):
        PathSampler(endpoint_a=a, endpoint_b=b, rule=lambda t: a)

    with pytest.raises(ValueError):
        PathSampler(endpoint_a=a, endpoint_b=b, rule=geodesic_sampler(a, b).rule, segments=0)


def test_perturbed_path_stays_positive_definite():
    path = perturbed_sampler(HALF, _rho(0.0, 0.0, 0.95), amplitude=0.6, entry='a22')

    for t in np.linspace(0.0, 1.0, 21):
        m = path.rule(float(t))
        assert m.det > 0.0 and m.trace > 0.0


def test_floor_eigenvalues():
    m = Hermitian2.diag(1.0, -0.5)
    floored = floor_eigenvalues(m, 1e-3)

    assert floored.a11 == pytest.approx(1.0)
    assert floored.a22 == pytest.approx(1e-3)
    assert floor_eigenvalues(HALF) is HALF


def test_sqrt_pd():
    assert sqrt_pd(Hermitian2.diag(4.0, 9.0)).max_entry_difference(Hermitian2.diag(2.0, 3.0)) == 0.0

    with pytest.raises(NotPositiveDefiniteError):
        sqrt_pd(Hermitian2.diag(1.0, 0.0))


def test_distance_report():
    u, v = BlochVector.zero(), V(0.0, 0.0, 0.6)
    report = distance_report(u, v)

    assert set(report) == {'u', 'v', 'gyrometric', 'rapidity', 'trace', 'prop52_bound', 'thm53_lhs'}
    assert report['u'] == [0.0, 0.0, 0.0]
    assert report['gyrometric'] == pytest.approx(0.6, abs=1e-15)
    assert report['trace'] == pytest.approx(1.0298020, abs=1e-7)
    assert report['thm53_lhs'] == pytest.approx(math.sqrt(2.0) * math.log(2.0), abs=1e-15)
    assert report['thm53_lhs'] <= report['trace'] <= report['prop52_bound']

    assert set(distance_report(u, v, ['gyrometric'])) == {'u', 'v', 'gyrometric'}
    assert set(distance_report(u, v, ['trace'])) == {'u', 'v', 'trace', 'thm53_lhs'}
    assert set(METRIC_NAMES) == {'gyrometric', 'rapidity', 'trace', 'prop52'}

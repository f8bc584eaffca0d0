# Copyright 2026 The anomalab Authors.

from fractions import Fraction

import numpy as np
import pytest

from anomalab.errors import EmptyMeasurement, ValidationError
from anomalab.netlab import EpsNet
from anomalab.singpred import (
    CharacteristicFan, Domain, build_forecast, hausdorff, anomaly_score, measured_support,
    slice_times, trace)


def _triples(lines):
    return {(line.x0, line.t0, line.speed) for line in lines}


class TestCharacteristicFan:

    def test_exact_inputs(self):
        fan = CharacteristicFan([1, "-1", Fraction(1, 2)], ["0"], depth=2)
        assert fan.exact
        assert fan.speeds == [-1, Fraction(1, 2), 1]
        assert fan.number("1/3") == Fraction(1, 3)

    def test_float_inputs(self):
        fan = CharacteristicFan([1.0, -1], [0])
        assert not fan.exact
        assert fan.number("1/2") == 0.5
        assert isinstance(fan.speeds[0], float)

    @pytest.mark.parametrize("speeds", [[1, 1], [0.5, 0.5 + 1e-14]])
    def test_repeated_speeds(self, speeds):
        with pytest.raises(ValidationError):
            CharacteristicFan(speeds, [0])

    def test_negative_depth(self):
        with pytest.raises(ValidationError):
            CharacteristicFan([1, -1], [0], depth=-1)


def test_domain_of_determinacy():
    fan = CharacteristicFan([-1, 1], [0, 1])
    domain = Domain.around(fan)
    assert (domain.a, domain.b, domain.t_max) == (-3, 4, 2)
    assert domain.contains(fan, Fraction(1, 2), 2)
    assert not domain.contains(fan, 3, 2)
    assert domain.exit_time(fan, 0, 0, 1) == 2


def test_two_speed_cone():
    forecast = build_forecast(CharacteristicFan([1, -1], [0], depth=3))
    assert list(trace(forecast, 1)) == [-1.0, 1.0]
    assert all(len(g) == 0 for g in forecast.generations[1:])


def test_crossings_spawn_new_lines():
    forecast = build_forecast(CharacteristicFan([-1, 0, 1], [0, 1], depth=1))
    first, second = forecast.generations
    assert len(first) == 6
    born = _triples(second)
    assert (Fraction(1, 2), Fraction(1, 2), 0) in born
    assert (1, 1, -1) in born
    assert (0, 1, 1) in born
    # continuations of generation-0 lines are not repeated
    assert (Fraction(1, 2), Fraction(1, 2), 1) not in born
    assert (Fraction(1, 2), Fraction(1, 2), -1) not in born


def test_float_fan_matches_exact_fan():
    exact = build_forecast(CharacteristicFan([-1, 0, 1], [0, 1], depth=2))
    approx = build_forecast(CharacteristicFan([-1.0, 0.0, 1.0], [0.0, 1.0], depth=2))
    assert [len(g) for g in exact.generations] == [len(g) for g in approx.generations]
    assert np.allclose(trace(exact, 1.5), trace(approx, 1.5))


def test_forecast_as_dict():
    data = build_forecast(CharacteristicFan([-1, 1], [0], depth=1)).as_dict()
    assert data["principal_part_only"] is True
    assert len(data["generations"]) == 2
    assert data["generations"][0][0]["exact"]["speed"] == "-1"


@pytest.mark.parametrize("points, intervals, expected", [
    ([0.0], [(-0.1, 0.1)], 0.1),
    ([0.0, 1.0], [(0.0, 1.0)], 0.5),
    ([0.0], [(0.3, 0.4)], 0.4),
])
def test_hausdorff(points, intervals, expected):
    assert hausdorff(points, intervals) == pytest.approx(expected)


def test_hausdorff_without_points():
    assert hausdorff([], [(0.0, 1.0)]) == np.inf


def test_slice_times():
    assert slice_times(1.0, 4) == [0.25, 0.5, 0.75, 1.0]


class TestAnomalyScore:
    h = 0.05

    @pytest.fixture
    def forecast(self):
        return build_forecast(CharacteristicFan([1.0], [0.0]))

    def test_stationary_support_is_anomalous(self, forecast):
        measured = [(t, [(-0.025, 0.025)]) for t in slice_times(1.0, 10)]
        report = anomaly_score(forecast, measured, self.h)
        assert report.verdict == "anomalous"
        assert report.anomalous_fraction == pytest.approx(0.9)
        assert report.threshold == pytest.approx(0.15)

    def test_support_on_the_characteristic_is_classical(self, forecast):
        measured = [(t, [(t - 0.025, t + 0.025)]) for t in slice_times(1.0, 10)]
        report = anomaly_score(forecast, measured, self.h)
        assert report.verdict == "classical"
        assert report.max_distance == pytest.approx(0.025)

    def test_empty_slice(self, forecast):
        with pytest.raises(EmptyMeasurement):
            anomaly_score(forecast, [(0.5, [])], self.h)


@pytest.mark.slow
def test_advected_net_follows_the_forecast():
    forecast = build_forecast(CharacteristicFan([1.0], [0.0]))
    net = EpsNet.scaled_bump().advect(1.0)
    measured = measured_support(net, slice_times(1.0, 5), -0.5, 1.5, 0.05)
    assert anomaly_score(forecast, measured, 0.05).verdict == "classical"


def test_speed_zero_line_from_a_crossing():
    forecast = build_forecast(CharacteristicFan([0, 1, -1], [-1, 1], depth=2))
    assert (0, 1, 0) in _triples(forecast.generations[1])
    assert 0.0 in trace(forecast, Fraction(3, 2))

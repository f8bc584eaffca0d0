# Copyright 2026 The anomalab Authors.

"""
Comparison of a forecast with measured G-infinity singular supports.
"""

import logging
from dataclasses import dataclass

import numpy as np

from anomalab.errors import EmptyMeasurement
from anomalab.messages import get_message
from anomalab.netlab.growth import singular_support
from anomalab.singpred.forecast import trace

logger = logging.getLogger(__name__)

CELLS = 3
SLICE_FRACTION = 0.8


def slice_times(T, n):
    """t_j = T j / n for j = 1..n."""
    return [T * j / n for j in range(1, n + 1)]


def measured_support(net, times, lo, hi, h, K_max=4, eps_list=None):
    """
    Estimated G-infinity singular support of the net at each time slice.

    Returns
        list of (t, intervals)
    """
    slices = []
    for t in times:
        intervals = singular_support(net, lo, hi, h, K_max, eps_list, t)
        logger.debug("t=%.4g: measured support %s", t, intervals)
        slices.append((t, intervals))
    return slices


def _distance_to_intervals(x, intervals):
    best = np.inf
    for lo, hi in intervals:
        best = min(best, 0.0 if lo <= x <= hi else min(abs(x - lo), abs(x - hi)))
    return best


def hausdorff(points, intervals):
    """
    Hausdorff distance between a finite point set and a union of intervals.
    The far side is sampled at interval endpoints and at midpoints between
    neighbouring points inside each interval, where the distance to the
    point set peaks.
    """
    points = np.sort(np.asarray(points, dtype=float))
    if len(points) == 0:
        return np.inf
    forward = max(_distance_to_intervals(p, intervals) for p in points)
    samples = []
    mids = 0.5 * (points[1:] + points[:-1])
    for lo, hi in intervals:
        samples.extend([lo, hi])
        samples.extend(m for m in mids if lo < m < hi)
    backward = max(float(np.min(np.abs(points - q))) for q in samples)
    return max(forward, backward)


@dataclass(frozen=True)
class AnomalyReport:
    times: tuple
    distances: tuple
    max_distance: float
    mean_distance: float
    threshold: float
    anomalous_fraction: float
    verdict: str
    note: str = "forecast uses the principal part of the equation only"

    def rows(self):
        return list(zip(self.times, self.distances))


def anomaly_score(forecast, measured, h):
    """
    Score measured supports against the forecast trace at every slice.

    Parameters
        forecast: SingularityForecast
        measured: list of (t, intervals)
        h: grid cell size of the measurement.

    Returns
        AnomalyReport - "anomalous" when the distance exceeds three cells on
        at least 80% of the slices, "classical" otherwise.

    Raises
        EmptyMeasurement - if a slice has no measured singular support.
    """
    times, distances = [], []
    for t, intervals in measured:
        if not intervals:
            raise EmptyMeasurement(get_message('MeasurementEmpty', t))
        times.append(float(t))
        distances.append(float(hausdorff(trace(forecast, t), intervals)))
    distances = np.array(distances)
    threshold = CELLS * h
    fraction = float(np.mean(distances > threshold))
    verdict = "anomalous" if fraction >= SLICE_FRACTION else "classical"
    logger.info("anomaly score: %s (max distance %.4g)", verdict, distances.max())
    return AnomalyReport(tuple(times), tuple(distances), float(distances.max()),
                         float(distances.mean()), threshold, fraction, verdict)

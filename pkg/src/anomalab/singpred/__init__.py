# Copyright 2026 The anomalab Authors.

"""
Classical propagation forecast for hyperbolic systems with constant
characteristic speeds, and its comparison with measured singular supports.

>>> from anomalab.singpred import CharacteristicFan, build_forecast, trace
>>> forecast = build_forecast(CharacteristicFan([1, -1], [0], depth=3))
>>> [float(x) for x in trace(forecast, 1)]
[-1.0, 1.0]
"""

from anomalab.singpred.fan import CharacteristicFan, Domain, Line
from anomalab.singpred.forecast import SingularityForecast, build_forecast, trace
from anomalab.singpred.anomaly import (
    AnomalyReport, anomaly_score, hausdorff, measured_support, slice_times)

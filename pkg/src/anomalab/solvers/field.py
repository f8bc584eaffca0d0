# Copyright 2026 The anomalab Authors.

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class BlowupRecord:
    time: float
    location: float
    refined: bool


@dataclass(frozen=True)
class EnergyReport:
    """
    Discrete energy E_d(t_j) and its largest drift max |E_d(t_j) - E_d(0)|
    relative to ``scale``, the energy of the initial state with every density
    term taken in absolute value.  E_d itself may vanish when the potential
    is indefinite.
    """
    times: np.ndarray
    series: np.ndarray
    scale: float
    drift: float

    @classmethod
    def from_series(cls, times, series, scale=None):
        times = np.asarray(times, dtype=float)
        series = np.asarray(series, dtype=float)
        e0 = series[0] if len(series) else 0.0
        scale = abs(e0) if scale is None else float(scale)
        drift = float(np.max(np.abs(series - e0)) / scale) if scale > 0 else 0.0
        return cls(times, series, scale, drift)


@dataclass(frozen=True)
class Field1D:
    """
    Samples u[j, i] at time t[j] and position x[i] + speed*t[j].  For the
    characteristic solver x holds the foot points and speed is c; for the
    wave solver the grid is fixed and speed is 0.
    """
    x: np.ndarray
    t: np.ndarray
    u: np.ndarray
    speed: float = 0.0
    blowup: BlowupRecord = None
    energy: EnergyReport = None

    def positions(self, j):
        return self.x + self.speed * self.t[j]

    def final(self):
        return self.u[-1]

    def slices(self):
        """(t_j, positions, samples) for every stored level."""
        for j, t in enumerate(self.t):
            yield t, self.positions(j), self.u[j]

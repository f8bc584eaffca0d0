# Copyright 2026 The anomalab Authors.

"""
The classical singularity forecast: S_0 holds the forward characteristic
lines from every seed with every speed; S_(j+1) adds the forward lines with
every speed from each crossing of two earlier lines with distinct speeds.
A new line that continues an existing one (same speed, same intercept,
starting at or after it) is not added.  The union is the truncated closure.
"""

import logging
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from anomalab.singpred.fan import FLOAT_TOL, Domain, Line

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SingularityForecast:
    fan: object
    domain: Domain
    generations: tuple

    @property
    def closure(self):
        return tuple(line for generation in self.generations for line in generation)

    def as_dict(self):
        return {
            "speeds": [float(s) for s in self.fan.speeds],
            "seeds": [float(s) for s in self.fan.seeds],
            "depth": self.fan.depth,
            "exact": self.fan.exact,
            "domain": {"a": float(self.domain.a), "b": float(self.domain.b),
                       "t_max": float(self.domain.t_max)},
            "generations": [[line.as_dict() for line in g] for g in self.generations],
            "principal_part_only": True,
        }


def _crossing(fan, first, second):
    if fan.same(first.speed, second.speed):
        return None
    t = (second.base - first.base) / (first.speed - second.speed)
    tol = 0 if fan.exact else FLOAT_TOL * max(1.0, abs(t))
    if t < max(first.t0, second.t0) - tol or t > min(first.t_end, second.t_end) + tol:
        return None
    return first.at(t), t


def _continues(fan, existing, speed, x, t):
    base = x - speed * t
    for line in existing:
        if fan.same(line.speed, speed) and fan.same(line.base, base):
            tol = 0 if fan.exact else FLOAT_TOL * max(1.0, abs(t))
            if t >= line.t0 - tol:
                return True
    return False


def _spawn(fan, domain, existing, x, t, generation):
    born = []
    for speed in fan.speeds:
        if _continues(fan, existing + born, speed, x, t):
            continue
        end = domain.exit_time(fan, x, t, speed)
        if end > t:
            born.append(Line(x, t, speed, end, generation))
    return born


def build_forecast(fan, domain=None):
    """
    Build S_0 .. S_depth inside the domain of determinacy.

    Parameters
        fan: CharacteristicFan
        domain: Domain; by default the seed interval widened by 3 on each
            side, up to t = 2.

    Returns
        SingularityForecast
    """
    if domain is None:
        domain = Domain.around(fan)
    first = []
    for seed in fan.seeds:
        first.extend(_spawn(fan, domain, first, seed, fan.number(0), 0))
    generations = [first]
    for depth in range(1, fan.depth + 1):
        existing = [line for g in generations for line in g]
        newest = generations[-1]
        born = []
        for a, b in combinations(existing, 2):
            if a not in newest and b not in newest:
                continue
            hit = _crossing(fan, a, b)
            if hit is None:
                continue
            x, t = hit
            if not domain.contains(fan, x, t):
                continue
            born.extend(_spawn(fan, domain, existing + born, x, t, depth))
        generations.append(born)
        logger.debug("generation %d: %d new lines", depth, len(born))
    return SingularityForecast(fan, domain, tuple(tuple(g) for g in generations))


def trace(forecast, t):
    """Sorted positions of the forecast lines alive at time t."""
    tol = 0.0 if forecast.fan.exact else FLOAT_TOL
    points = [float(line.at(forecast.fan.number(t) if forecast.fan.exact else t))
              for line in forecast.closure if line.alive(t, tol)]
    return np.unique(np.array(points, dtype=float))

# Copyright 2026 The anomalab Authors.

"""
Characteristic fans of a diagonal hyperbolic system with constant speeds,
the forward lines they generate, and the domain of determinacy those lines
are clipped to.

Rational inputs (int, Fraction, "p/q" strings) are kept exact; any float
input switches the whole fan to floating point with a 1e-12 tolerance.
"""

from dataclasses import dataclass
from fractions import Fraction

from anomalab import settings
from anomalab.errors import ValidationError
from anomalab.messages import get_message

FLOAT_TOL = 1e-12


def _is_exact(value):
    return isinstance(value, (int, Fraction, str)) and not isinstance(value, bool)


def _convert(values, exact):
    if exact:
        return [Fraction(v) if not isinstance(v, str) else Fraction(v.strip()) for v in values]
    return [float(v) for v in values]


class CharacteristicFan:
    """
    Attributes
        speeds: list - distinct characteristic speeds, sorted.
        seeds: list - initial singular points on t = 0, sorted.
        depth: int - number of intersection generations to build.
        exact: bool - True when all inputs are rational.
    """

    def __init__(self, speeds, seeds, depth=None):
        if depth is None:
            depth = settings.FORECAST_DEPTH
        if not isinstance(depth, int) or depth < 0:
            raise ValidationError(get_message('DepthNegative'))
        speeds, seeds = list(speeds), list(seeds)
        self.exact = all(_is_exact(v) for v in speeds + seeds)
        speeds = sorted(_convert(speeds, self.exact))
        if any(self.same(a, b) for a, b in zip(speeds, speeds[1:])):
            raise ValidationError(get_message('SpeedsDistinct'))
        self.speeds = speeds
        self.seeds = sorted(_convert(seeds, self.exact))
        self.depth = depth

    def same(self, a, b):
        if self.exact:
            return a == b
        return abs(a - b) <= FLOAT_TOL * max(1.0, abs(a), abs(b))

    def number(self, value):
        if isinstance(value, str):
            value = Fraction(value.strip())
        return Fraction(value) if self.exact else float(value)

    def __repr__(self):
        return "CharacteristicFan(speeds=%s, seeds=%s, depth=%d)" % (
            [str(s) for s in self.speeds], [str(s) for s in self.seeds], self.depth)


@dataclass(frozen=True)
class Domain:
    """
    Domain of determinacy of the seed interval [a, b] up to t_max:
    a + lambda_max t <= x <= b + lambda_min t.
    """
    a: object
    b: object
    t_max: object

    @classmethod
    def around(cls, fan, margin=3, t_max=2):
        return cls(fan.seeds[0] - fan.number(margin), fan.seeds[-1] + fan.number(margin),
                   fan.number(t_max))

    def exit_time(self, fan, x0, t0, speed):
        """Last time the line through (x0, t0) with this speed stays inside."""
        end = self.t_max
        lo_speed, hi_speed = fan.speeds[0], fan.speeds[-1]
        base = x0 - speed * t0
        if speed < hi_speed:
            end = min(end, (base - self.a) / (hi_speed - speed))
        if speed > lo_speed:
            end = min(end, (self.b - base) / (speed - lo_speed))
        return end

    def contains(self, fan, x, t):
        tol = 0 if fan.exact else FLOAT_TOL * max(1.0, abs(x))
        return (0 <= t <= self.t_max
                and self.a + fan.speeds[-1] * t - tol <= x <= self.b + fan.speeds[0] * t + tol)


@dataclass(frozen=True)
class Line:
    """x = x0 + speed (t - t0) for t0 <= t <= t_end."""
    x0: object
    t0: object
    speed: object
    t_end: object
    generation: int = 0

    @property
    def base(self):
        """Intercept x0 - speed t0 of the full line at t = 0."""
        return self.x0 - self.speed * self.t0

    def at(self, t):
        return self.x0 + self.speed * (t - self.t0)

    def alive(self, t, tol=0.0):
        return self.t0 - tol <= t <= self.t_end + tol

    def as_dict(self):
        return {"x0": float(self.x0), "t0": float(self.t0), "speed": float(self.speed),
                "t_end": float(self.t_end), "generation": self.generation,
                "exact": {"x0": str(self.x0), "t0": str(self.t0), "speed": str(self.speed)}}

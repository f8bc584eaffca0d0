# Copyright 2026 The anomalab Authors.

"""
EpsNet: a net of smooth functions u_eps(x, t) with closed-form derivatives,
and Region, the compact sets where nets are measured.
"""

from dataclasses import dataclass

import numpy as np

from anomalab.errors import ValidationError
from anomalab.messages import get_message
from anomalab.netlab.pktable import shared_table
from anomalab.regularize.regfamily import RegFamily
from anomalab.testfn import BUMP


class EpsNet:
    """
    u_eps(x, t) and its x-derivatives: ``net(x, eps, order, t)``.

    Attributes
        name: str
        speed: float - the net is u_eps(x - speed*t) for a static profile.
    """

    def __init__(self, name, evaluator, speed=0.0, **meta):
        self.name = name
        self.meta = meta
        self.speed = float(speed)
        self._evaluator = evaluator

    @classmethod
    def chi(cls, p):
        """(x^2 + eps^2)^(-1/p); p = 2 uses the PkTable derivatives."""
        if p == 2:
            table = shared_table()
            return cls("chi_2", lambda x, eps, order: table.net_derivative(x, eps, order), p=2)
        family = RegFamily.chi(p)
        return cls("chi_%s" % p, lambda x, eps, order: family(x, eps, order), p=p)

    @classmethod
    def scaled_bump(cls, height=1.0):
        """eps^(-1) bump(x/eps), a delta-like net."""
        return cls("scaled_bump",
                   lambda x, eps, order: height * eps ** (-1.0 - order) * BUMP(np.asarray(x) / eps, order))

    @classmethod
    def power(cls, a):
        """The constant net eps^a."""
        def evaluator(x, eps, order):
            x = np.asarray(x, dtype=float)
            return np.full(x.shape, eps ** a if order == 0 else 0.0)
        return cls("power_%s" % a, evaluator, a=a)

    @classmethod
    def zero(cls):
        return cls("zero", lambda x, eps, order: np.zeros(np.shape(x)))

    @classmethod
    def from_family(cls, family):
        return cls("family_%s" % family.kind, lambda x, eps, order: family(x, eps, order),
                   **family.meta)

    @classmethod
    def from_name(cls, name):
        if name.startswith("chi_") and name[4:].isdigit():
            return cls.chi(int(name[4:]))
        if name == "scaled_bump":
            return cls.scaled_bump()
        if name == "zero":
            return cls.zero()
        raise ValidationError(get_message('UnknownNet', name))

    def advect(self, c):
        """u_eps(x - c t): the net carried along x = x0 + c t."""
        return EpsNet("%s@c=%g" % (self.name, c), self._evaluator, self.speed + c, **self.meta)

    def focus(self, t):
        """Location of the eps-scale structure at time t."""
        return self.speed * t

    def __call__(self, x, eps, order=0, t=0.0):
        x = np.asarray(x, dtype=float) - self.speed * t
        return self._evaluator(x, eps, order)

    def __repr__(self):
        return "EpsNet(%s)" % self.name


@dataclass(frozen=True)
class Region:
    """The closed interval [lo, hi]; a point when lo == hi."""
    lo: float
    hi: float

    def __post_init__(self):
        if self.hi < self.lo:
            raise ValidationError(get_message('RegionInvalid', self.lo, self.hi))

    @classmethod
    def point(cls, x):
        return cls(float(x), float(x))

    @classmethod
    def cell(cls, center, h):
        return cls(center - 0.5 * h, center + 0.5 * h)

    @property
    def is_point(self):
        return self.lo == self.hi

    def samples(self, eps, min_points=65, max_points=20001):
        """Sample points resolving the eps scale, odd count so the midpoint is included."""
        if self.is_point:
            return np.array([self.lo])
        n = int(np.ceil((self.hi - self.lo) / (eps / 8.0)))
        n = min(max(n, min_points), max_points)
        n += 1 - n % 2
        return np.linspace(self.lo, self.hi, n)

    def __str__(self):
        if self.is_point:
            return "{%g}" % self.lo
        return "[%g, %g]" % (self.lo, self.hi)

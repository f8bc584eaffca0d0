# Copyright 2026 The anomalab Authors.

"""
Sweeps of regularized products paired with a test function.

model_product_sweep forms (u * phi_eps)(v * phi_eps) with a Friedrichs
mollifier, tillmann_product_sweep forms the product of Poisson-kernel
regularizations. Both return a SweepTable whose pairings netlab inspects for
convergence.
"""

import logging
from dataclasses import dataclass

import numpy as np

from anomalab import engine, settings
from anomalab.errors import GridUnderResolved, ValidationError
from anomalab.messages import get_message
from anomalab.quadrature import panel_integrate
from anomalab.regularize.kernels import friedrichs_reg, poisson_reg
from anomalab.regularize.mollifier import get_mollifier

logger = logging.getLogger(__name__)

POINTS_PER_EPS = 16


@dataclass(frozen=True)
class SweepTable:
    """Complex pairings <u_eps v_eps, phi> keyed by eps, largest eps first."""
    eps: tuple
    values: tuple
    label: str = ""

    header = ("eps", "re_pairing", "im_pairing")

    def rows(self):
        return [(e, v.real, v.imag) for e, v in zip(self.eps, self.values)]

    def as_arrays(self):
        return np.asarray(self.eps, dtype=float), np.asarray(self.values, dtype=complex)

    def __len__(self):
        return len(self.eps)


def check_eps_list(eps_list):
    eps_list = [float(e) for e in eps_list]
    if not eps_list or any(e <= 0 for e in eps_list):
        raise ValidationError(get_message('EpsPositive', min(eps_list, default=0.0)))
    if any(b >= a for a, b in zip(eps_list, eps_list[1:])):
        raise ValidationError(get_message('EpsDecreasing'))
    return eps_list


def _panel_edges(lo, hi, eps, h):
    if h is None:
        h = eps / POINTS_PER_EPS
    if h > eps / 8:
        raise GridUnderResolved(get_message('GridCoarse', h, eps / 8))
    count = int(np.ceil((hi - lo) / h))
    return np.linspace(lo, hi, count + 1)


def _sweep(product, phi, eps_list, widen, h, label):
    eps_list = check_eps_list(eps_list)
    a, b = phi.support

    def one(eps):
        edges = _panel_edges(a - widen * eps, b + widen * eps, eps, h)
        value = complex(panel_integrate(lambda x: product(x, eps) * phi(x), edges))
        logger.debug("%s eps=%.6g pairing=%r (%d panels)", label, eps, value, len(edges) - 1)
        return value

    values = engine.map_keys(one, eps_list)
    return SweepTable(tuple(eps_list), tuple(values), label)


def model_product_sweep(usym, vsym, m, phi, eps_list=None, part="full", h=None):
    """
    Pair the product of Friedrichs regularizations with phi for every eps.

    Parameters
        usym, vsym: DistExpr - t-independent boundary-value expressions.
        m: Mollifier or name.
        phi: TestFn.
        eps_list: decreasing eps values; defaults to 0.1024 halving down to 1e-4.
        part: "full", "vp" or "delta" - which part of each regularization
            enters the product.
        h: grid spacing; eps/16 by default.

    Returns
        SweepTable

    Raises
        GridUnderResolved - if h > eps/8.
        UnsupportedArg - if an argument depends on t.
    """
    m = get_mollifier(m)
    if eps_list is None:
        eps_list = settings.default_sweep_eps()

    def product(x, eps):
        if usym.is_zero or vsym.is_zero:
            return np.zeros(np.shape(x), dtype=complex)
        return friedrichs_reg(usym, m, eps, x, part=part) * friedrichs_reg(vsym, m, eps, x, part=part)

    return _sweep(product, phi, eps_list, 1.0, h, "model[%s,%s]" % (m.name, part))


def tillmann_product_sweep(usym, vsym, phi, eps_list=None, h=None):
    """
    Pair the product of Poisson-kernel regularizations with phi for every eps.
    """
    if eps_list is None:
        eps_list = settings.default_sweep_eps()

    def product(x, eps):
        return poisson_reg(usym, eps, x) * poisson_reg(vsym, eps, x)

    return _sweep(product, phi, eps_list, 0.0, h, "tillmann")

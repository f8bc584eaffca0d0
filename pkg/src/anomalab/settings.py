# Copyright 2026 The anomalab Authors.

"""
Package-wide defaults. The absolute quadrature tolerance can be overridden
with the ANOMALAB_QUAD_TOL environment variable.
"""

import os

import numpy as np

from anomalab.errors import ConfigError
from anomalab.messages import get_message

QUAD_TOL_ENV = "ANOMALAB_QUAD_TOL"
DEFAULT_QUAD_TOL = 1e-10
DEFAULT_REL_TOL = 1e-12

BLOWUP_THRESHOLD = 1e6
INSTABILITY_BOUND = 1e12
CFL_MAX = 0.9
FORECAST_DEPTH = 4

SLOPE_TOL = 0.05
GINF_SPREAD = 0.25
A_MAX = 6
FIT_RESIDUAL_MAX = 0.1


def quad_tol():
    """Absolute quadrature tolerance, honouring ANOMALAB_QUAD_TOL."""
    raw = os.environ.get(QUAD_TOL_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_QUAD_TOL
    try:
        value = float(raw)
    except ValueError:
        raise ConfigError(get_message('BadQuadTol', raw))
    if not np.isfinite(value) or value <= 0:
        raise ConfigError(get_message('BadQuadTol', raw))
    return value


def geometric_eps(start, stop, ratio=0.5):
    """
    Decreasing geometric list start, start*ratio, ... down to stop (inclusive
    within rounding).
    """
    out = []
    eps = float(start)
    while eps >= stop * (1 - 1e-9):
        out.append(eps)
        eps *= ratio
    return out


def default_sweep_eps():
    return geometric_eps(0.1024, 1e-4)


def default_growth_eps():
    return geometric_eps(1e-3, 1.25e-4)


def default_weakasym_eps():
    return geometric_eps(1.024e-2, 1e-5)


def default_model_eps():
    return geometric_eps(1.6e-2, 1e-3)


def default_lp_eps():
    """Two values per decade from 1e-1 to 1e-4."""
    return [float(v) for v in np.logspace(-1, -4, 7)]

# Copyright 2026 The anomalab Authors.

"""
Growth orders of nets: sup_K |d^alpha u_eps| = O(eps^(-b)) fitted on a
log-log scale, the moderate / negligible / G-infinity classification built on
those fits, and the G-infinity singular support.

A finite sweep can only certify the classification up to the highest
derivative order K_max and decay order a_max that were tried; reports carry
that label.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from anomalab import engine, settings
from anomalab.errors import FitDegenerate, ValidationError
from anomalab.messages import get_message
from anomalab.netlab.net import Region

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GrowthFit:
    """log sup = b log(1/eps) + const, with the slope standard error and RMS residual."""
    b: float
    stderr: float
    residual: float
    eps: tuple
    sups: tuple


def _sup(net, region, eps, alpha, t):
    return float(np.max(np.abs(net(region.samples(eps), eps, alpha, t))))


def fit_power_law(eps, values):
    """
    Fit |values| ~ eps^(-b) by least squares on log-log scale.

    Raises
        FitDegenerate - if the smallest-eps value is zero or fewer than four
        nonzero values remain.
    """
    eps = np.asarray(eps, dtype=float)
    values = np.abs(np.asarray(values))
    if values[-1] == 0:
        raise FitDegenerate(get_message('FitZero'))
    keep = values > 0
    if keep.sum() < 4:
        raise FitDegenerate(get_message('FitPoints', int(keep.sum())))
    if not keep.all():
        logger.warning("dropping %d zero values from the growth fit", int((~keep).sum()))
    X = np.log(1.0 / eps[keep])
    Y = np.log(values[keep])
    coeffs, cov = np.polyfit(X, Y, 1, cov=True)
    fitted = np.polyval(coeffs, X)
    residual = float(np.sqrt(np.mean((Y - fitted) ** 2)))
    return float(coeffs[0]), float(np.sqrt(max(cov[0, 0], 0.0))), residual


def growth_fit(net, region, alpha, eps_list=None, t=0.0):
    """
    Fit the growth exponent b of sup over region of |d^alpha u_eps|.

    Parameters
        net: EpsNet
        region: Region
        alpha: int - derivative order.
        eps_list: at least four decreasing eps values; 1e-3 down to 1.25e-4
            by default.

    Returns
        GrowthFit

    Raises
        ValidationError - if fewer than four eps values are given.
        FitDegenerate - if the sup values vanish at the smallest eps.
    """
    if eps_list is None:
        eps_list = settings.default_growth_eps()
    eps_list = [float(e) for e in eps_list]
    if len(eps_list) < 4:
        raise ValidationError(get_message('FitPoints', len(eps_list)))
    sups = [_sup(net, region, eps, alpha, t) for eps in eps_list]
    b, stderr, residual = fit_power_law(eps_list, sups)
    logger.debug("%r on %s, alpha=%d: b=%.4f +/- %.2g", net, region, alpha, b, stderr)
    return GrowthFit(b, stderr, residual, tuple(eps_list), tuple(sups))


@dataclass(frozen=True)
class RegionGrowth:
    """
    Fits for alpha = 0..K_max on one region. ``b`` holds -inf where the
    derivative vanishes identically for small eps.
    """
    region: Region
    b: tuple
    residuals: tuple
    moderate: bool
    negligible: bool
    g_infinity: bool


@dataclass(frozen=True)
class GrowthReport:
    net: str
    regions: tuple
    K_max: int
    a_max: int
    classification: str
    certified: str = field(default="")

    def region(self, region):
        for entry in self.regions:
            if entry.region == region:
                return entry
        raise KeyError(region)


def _region_growth(net, region, K_max, a_max, eps_list, t):
    bs, residuals = [], []
    for alpha in range(K_max + 1):
        try:
            fit = growth_fit(net, region, alpha, eps_list, t)
            bs.append(fit.b)
            residuals.append(fit.residual)
        except FitDegenerate:
            bs.append(-np.inf)
            residuals.append(0.0)
    b = np.array(bs)
    moderate = bool(np.all(np.array(residuals) < settings.FIT_RESIDUAL_MAX))
    negligible = bool(np.all(b <= -a_max))
    if np.isfinite(b[0]):
        g_infinity = bool(np.max(b) - b[0] <= settings.GINF_SPREAD)
    else:
        g_infinity = bool(np.all(b <= settings.GINF_SPREAD))
    return RegionGrowth(region, tuple(float(v) for v in b), tuple(residuals),
                        moderate, negligible, g_infinity)


def classify(net, regions, K_max=6, eps_list=None, a_max=None, t=0.0):
    """
    Classify a net on every region as moderate, negligible and G-infinity.

    The net is negligible when every order decays at least like eps^a_max
    (or vanishes), moderate when every fit is a clean power law (RMS
    residual below 0.1), and G-infinity on a region when the exponents of
    all orders up to K_max exceed b(0) by at most 0.25.

    Returns
        GrowthReport
    """
    if a_max is None:
        a_max = settings.A_MAX
    regions = [r if isinstance(r, Region) else Region(*r) for r in regions]
    entries = engine.map_keys(lambda r: _region_growth(net, r, K_max, a_max, eps_list, t), regions)
    if all(e.negligible for e in entries):
        verdict = "negligible"
    elif all(e.moderate for e in entries):
        verdict = "moderate"
    else:
        verdict = "non-moderate"
    label = "certified up to (K_max=%d, a_max=%d)" % (K_max, a_max)
    logger.info("%r: %s, %s", net, verdict, label)
    return GrowthReport(net.name, tuple(entries), K_max, a_max, verdict, label)


def _merge_cells(cells):
    intervals = []
    for cell in cells:
        if intervals and abs(intervals[-1][1] - cell.lo) <= 1e-12 * max(1.0, abs(cell.lo)):
            intervals[-1] = (intervals[-1][0], cell.hi)
        else:
            intervals.append((cell.lo, cell.hi))
    return intervals


def singular_support(net, lo, hi, h, K_max=4, eps_list=None, t=0.0):
    """
    Estimate the G-infinity singular support on [lo, hi]: the union of the
    cells [i h - h/2, i h + h/2] where the G-infinity test fails, merged
    into intervals.
    """
    first = int(np.ceil(lo / h - 0.5))
    last = int(np.floor(hi / h + 0.5))
    cells = [Region.cell(i * h, h) for i in range(first, last + 1)]
    entries = engine.map_keys(
        lambda cell: _region_growth(net, cell, K_max, settings.A_MAX, eps_list, t), cells)
    singular = [e.region for e in entries if not e.g_infinity]
    return _merge_cells(singular)

# Copyright 2026 The anomalab Authors.

"""
Analysis of eps-nets: growth orders and the moderate / negligible /
G-infinity classification, G-infinity singular supports, weak convergence of
pairings, and weak asymptotic residuals.

>>> from anomalab.netlab import PkTable
>>> PkTable(4).at_zero(2)
-1
"""

from anomalab.netlab.pktable import PkTable, shared_table
from anomalab.netlab.net import EpsNet, Region
from anomalab.netlab.growth import (
    GrowthFit, GrowthReport, RegionGrowth, classify, fit_power_law, growth_fit, singular_support)
from anomalab.netlab.sweeps import (
    PairingReport, SplitReport, classify_sequence, pairing_sweep, singular_power_pairing,
    split_real_imag_limits, sweep_report)
from anomalab.netlab.weakasym import (
    LpReport, LpRow, ResidualReport, TermReport, WEAK_EXAMPLES, WeakExample, get_weak_example,
    lp_convergence, term_consistency, weak_asymptotic_residual)

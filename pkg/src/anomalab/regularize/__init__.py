# Copyright 2026 The anomalab Authors.

"""
Regularization engines for boundary values (x + i0)^(-k): analytic
continuation off the real axis, Friedrichs mollification and Poisson-kernel
smoothing, with the blow-up constant C_phi and product sweeps.

>>> from anomalab.regularize import blowup_constant
>>> blowup_constant("poly4").C_phi
1.25
"""

from anomalab.regularize.mollifier import (
    BlowupPrediction, Mollifier, blowup_constant, get_mollifier, mollifier_names)
from anomalab.regularize.kernels import (
    analytic_reg, friedrichs_reg, poisson_kernel, poisson_reg, vp_convolve)
from anomalab.regularize.regfamily import RegFamily, family_names
from anomalab.regularize.products import (
    SweepTable, check_eps_list, model_product_sweep, tillmann_product_sweep)

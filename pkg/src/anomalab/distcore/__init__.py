# Copyright 2026 The anomalab Authors.

"""
Exact arithmetic with boundary values (w + i0)^(-k) on affine arguments.

>>> from anomalab.distcore import DistExpr, mul, diff
>>> e1 = DistExpr.basis(1)
>>> 2 * mul(e1, mul(e1, e1)) == diff(diff(e1, 'x'), 'x')
True
"""

from anomalab.distcore.affinearg import AffineArg, as_rational
from anomalab.distcore.distexpr import DistExpr, mul, diff, hormander_compatible
from anomalab.distcore.classicalpart import ClassicalPart, decompose, pair_classical
from anomalab.distcore.fouriermonomial import FourierMonomial, fourier, conv_fourier, collect
from anomalab.distcore.pairing import pair, pair_e1
from anomalab.distcore.pdespec import PdeSpec, DerivTerm, PowerTerm, pde_residual
from anomalab.distcore.serialize import to_json, from_json

# Copyright 2026 The anomalab Authors.

"""
anomalab: computations with anomalous solutions of semilinear hyperbolic
equations.

The package verifies exact identities of boundary values (x + i0)^(-k),
regularizes them, evolves the regularized data and classifies the resulting
nets of smooth functions.  Each experiment can be run from Python through a
Workbench or from the ``anomalab`` command.

>>> from anomalab.distcore import DistExpr, mul, diff
>>> u0 = DistExpr.basis(1)
>>> mul(u0, u0) == -diff(u0, 'x')
True
"""

__version__ = "1.0.0"

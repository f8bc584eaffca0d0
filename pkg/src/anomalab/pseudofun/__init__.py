# Copyright 2026 The anomalab Authors.

"""
Radial pseudofunctions R_lambda = |x|^lambda on R^n.

>>> from anomalab.pseudofun import laplacian_coeff
>>> laplacian_coeff("-1/2", 3)
-1/4
"""

from anomalab.pseudofun.pseudofn import (
    NemytskiiReport, PseudoFn, laplacian_coeff, nemytskii_power, self_similarity_defect)
from anomalab.pseudofun.radial import (
    RadialResidual, radial_pair, regularized_laplacian_identity, sphere_area,
    weak_laplacian_residual)
from anomalab.pseudofun.examples import (
    EXAMPLES, StationaryExample, example_names, get_example, stationary_wave_residual)

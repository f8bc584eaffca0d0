# Copyright 2026 The anomalab Authors.

"""
Numerical evolution: characteristics with blow-up detection for
advection-reaction equations and leapfrog for semilinear wave equations,
with closed-form oracles.
"""

from anomalab.solvers.reaction import ReactionSpec
from anomalab.solvers.field import BlowupRecord, EnergyReport, Field1D
from anomalab.solvers.characteristics import foot_grid, solve_characteristics
from anomalab.solvers.closedform import (
    closed_form_cubic, closed_form_riccati, closed_form_riccati_friedrichs)
from anomalab.solvers.wave import (
    WaveConfig, WaveNonlinearity, discrete_energy, solve_wave_leapfrog, verify_energy_identity)

# Copyright 2026 The anomalab Authors.

"""
Message catalog. All user-visible error text is looked up here by key so the
wording stays consistent between the library and the command line.
"""

_CATALOG = {
    # engine
    'TimeoutMustBeNumeric': "timeout must be a number, not {0}",
    'TimeoutCannotBeNegative': "timeout cannot be negative",
    'BackgroundMustBeBool': "background must be bool",
    'InvalidKwargs': "invalid keyword argument {0}",
    'UnknownExperiment': "unknown experiment {0!r}",
    'WorkbenchClosed': "the workbench has been closed",
    'SweepTimeout': "sweep did not finish within the timeout",
    'AttrCannotBeAdded': "attributes cannot be added to a {0}",
    'UnsupportedParam': "{0} does not take parameter {1!r}",
    'BadEpsSweep': "cannot read eps sweep {0!r}; expected start:stop:geometric or a comma-separated list",
    'UnknownCheck': "unknown check {0!r}; choose from {1} or all",
    'UnknownProfile': "unknown radial profile {0!r}; choose from {1}",
    # settings and config
    'BadQuadTol': "ANOMALAB_QUAD_TOL must be a positive number, got {0!r}",
    'ConfigInvalid': "invalid configuration: {0}",
    'ConfigUnreadable': "cannot read configuration {0}: {1}",
    'PlotUnavailable': "--plot needs matplotlib; install anomalab[plot]",
    # distcore
    'ArgDegenerate': "affine argument needs (alpha, beta) != (0, 0)",
    'ArgMismatch': "affine arguments differ: {0} vs {1}",
    'BadPower': "basis power must be a positive integer, got {0}",
    'BadVariable': "variable must be 'x' or 't', got {0!r}",
    'FourierArg': "Fourier transform needs the argument w = x, got {0}",
    'PairArg': "pairing needs a t-independent argument, got {0}",
    'TestFnOrder': "test function provides derivatives up to {0}, {1} needed",
    'PdeTerm': "unknown PDE term {0!r}",
    'BadRational': "cannot read {0!r} as a rational number",
    # quadrature
    'QuadNotConverged': "quadrature on [{0:g}, {1:g}] reached error {2:.3g} > {3:.3g}",
    # regularize
    'EpsPositive': "eps must be positive, got {0}",
    'UnknownMollifier': "unknown mollifier {0!r}; choose from {1}",
    'GridCoarse': "grid spacing {0:.3g} exceeds eps/8 = {1:.3g}",
    'EpsDecreasing': "eps list must be strictly decreasing",
    'PoissonArg': "Poisson regularization needs a t-independent argument, got {0}",
    'UnknownFamily': "unknown regularization family {0!r}",
    # pseudofun
    'LambdaRange': "lambda = {0} must exceed -n = {1}",
    'LambdaIntegrable': "lambda = {0} must exceed 2 - n = {1} for R_(lambda-2) to be locally integrable",
    'UnknownExample': "unknown example {0!r}; choose from {1}",
    # solvers
    'SpeedNonzero': "speed c must be nonzero",
    'UnknownReaction': "unknown reaction {0!r}",
    'CflViolated': "CFL number c*tau/h = {0:.4g} exceeds {1}",
    'WaveUnstable': "leapfrog sample exceeded {0:g} at t = {1:.6g}",
    'StepStalled': "step size underflow at t = {0:.6g}",
    'BisectStalled': "blow-up bisection stalled at t = {0:.6g}",
    'Radicand': "radicand {0:.6g} <= 0 at x = {1:.6g}, t = {2:.6g}",
    'DataUnbounded': "initial data is not finite on the grid",
    # netlab
    'FitPoints': "growth fit needs at least 4 eps values, got {0}",
    'FitZero': "sup values vanish for the smallest eps; the net is negligible here",
    'UnknownNet': "unknown net {0!r}",
    'RegionInvalid': "region [{0}, {1}] is empty",
    # singpred
    'SpeedsDistinct': "characteristic speeds must be distinct",
    'DepthNegative': "depth must be >= 0",
    'MeasurementEmpty': "measured singular support is empty at t = {0:.6g}",
    # checks
    'CheckFailed': "check failed: {0}",
    'GoldenMismatch': "output differs from the golden files: {0}",
}


def get_message(key, *args):
    """
    Look up a message template and fill it in.

    Parameters
        key: str - catalog key.
        args - positional values substituted into the template.

    Returns
        str - the formatted message.

    Raises
        KeyError - if the key is not in the catalog.
    """
    return _CATALOG[key].format(*args)

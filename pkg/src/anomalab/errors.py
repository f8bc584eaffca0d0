# Copyright 2026 The anomalab Authors.

"""
Exceptions raised by anomalab.

Every exception carries a human-readable ``message`` and the process exit code
the command-line front end reports for it.
"""


class AnomalabError(Exception):
    """Base class of all errors raised from anomalab"""

    exit_code = 1

    def __init__(self, message):
        super().__init__(message)
        self.message = message

    def __repr__(self):
        return self.message


class ValidationError(AnomalabError):
    """Invalid input: configuration, arguments or preconditions"""
    exit_code = 2


class ConfigError(ValidationError):
    pass


class ArgMismatch(ValidationError):
    """Two distributions live on different affine arguments"""
    pass


class UnsupportedArg(ValidationError):
    pass


class IntegrabilityViolation(ValidationError):
    pass


class DomainError(ValidationError):
    pass


class NumericalError(AnomalabError):
    """A numerical procedure could not deliver the requested accuracy"""
    exit_code = 3


class QuadratureFailure(NumericalError):
    pass


class GridUnderResolved(NumericalError):
    pass


class StepUnderflow(NumericalError):
    pass


class Instability(NumericalError):
    pass


class FitDegenerate(NumericalError):
    pass


class EmptyMeasurement(NumericalError):
    pass


class CheckFailure(AnomalabError):
    """An assertion-mode check did not hold"""
    exit_code = 4


class RejectedExecutionError(AnomalabError):
    """Work was submitted to a closed workbench"""
    pass

# -*- coding: utf-8 -*-
"""
Error hierarchy shared by every maglap module.

The command line maps the three branches to exit codes:
``InvalidParam``/``IndexOutOfRange`` -> 2, ``NumericalFailure`` -> 3,
``ScanSafetyError`` -> 4.
"""


class MaglapError(Exception):
    """Base class of all errors raised by maglap."""


class InvalidParam(MaglapError, ValueError):
    """An argument is outside the domain of the operation."""


class NonMagneticUnsupported(InvalidParam):
    """B = 0 was requested; the Kummer reduction needs a non-zero field."""


class DomainTooSmall(InvalidParam):
    """z = B R^2 / 2 is too close to zero for a meaningful a-root."""


class AsymptoticRegimeError(InvalidParam):
    """The strong-field remainder is undefined for the requested z."""


class IndexOutOfRange(MaglapError, IndexError):
    """A root index exceeds the number of roots that exist."""


class NumericalFailure(MaglapError, ArithmeticError):
    """A numerical procedure could not deliver a certified result."""


class PrecisionExceeded(NumericalFailure):
    """Cancellation demands more digits than ``PrecisionPolicy.max_digits``."""


class BracketNotFound(NumericalFailure):
    """No sign change was found inside the scan range."""


class ConvergenceFailure(NumericalFailure):
    """An iterative or extrapolated quantity did not settle."""


class ScanSafetyError(MaglapError):
    """A scan could not establish that its answer is not a window artefact."""


class TailUnsafe(ScanSafetyError):
    """The tail of a Polya scan comes too close to its minimum."""


class BadBracket(ScanSafetyError):
    """The field bracket of a critical-field search does not straddle 1."""

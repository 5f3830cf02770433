# -*- coding: utf-8 -*-
"""
Working-precision schedule for the Kummer series and per-thread
arbitrary-precision contexts.
"""

import math
import os
import threading
from dataclasses import dataclass, replace

import mpmath
from mpmath.ctx_mp import MPContext

from maglap.core.exceptions import InvalidParam, PrecisionExceeded


MAX_DIGITS_ENV = 'MAGLAP_MAX_DIGITS'

# below this many digits the series runs in plain double precision
DOUBLE_DIGITS = 15

_local = threading.local()


@dataclass(frozen=True)
class PrecisionPolicy:
    """Working-precision schedule for cancellation-safe series evaluation.

    Summing M(a, b, z) for a < 0 and large z cancels roughly
    ``z * log10(e) ~ 0.434 z`` decimal digits, so the working precision
    grows linearly with z.

    Parameters
    ----------
    base_digits: int, optional (default=30)
        Decimal digits used for small z.

    slope: float, optional (default=0.45)
        Additional digits per unit of z.

    max_digits: int, optional (default=220)
        Hard ceiling; evaluations that need more raise ``PrecisionExceeded``.
    """
    base_digits: int = 30
    slope: float = 0.45
    max_digits: int = 220

    def __post_init__(self):
        if int(self.base_digits) != self.base_digits or self.base_digits < 1:
            raise InvalidParam(f'base_digits must be a positive integer, got {self.base_digits}')
        if int(self.max_digits) != self.max_digits or self.max_digits < 1:
            raise InvalidParam(f'max_digits must be a positive integer, got {self.max_digits}')
        if not self.slope >= 0:
            raise InvalidParam(f'slope must be non-negative, got {self.slope}')

    def working_digits(self, z):
        """Digits required at argument ``z``, before any escalation."""
        digits = max(self.base_digits,
                     int(math.ceil(self.slope * abs(z))) + int(math.ceil(self.base_digits / 2)))
        if digits > self.max_digits:
            raise PrecisionExceeded(
                f'z={z:g} needs {digits} working digits but max_digits={self.max_digits}; '
                f'raise {MAX_DIGITS_ENV} or PrecisionPolicy.max_digits'
            )
        return digits

    def admits(self, z):
        try:
            self.working_digits(z)
        except PrecisionExceeded:
            return False
        return True

    def escalate(self, digits):
        """Next rung of the precision ladder, or None once max_digits is spent."""
        if digits >= self.max_digits:
            return None
        return min(2 * digits, self.max_digits)

    @classmethod
    def from_env(cls, **kwargs):
        policy = cls(**kwargs)
        value = os.environ.get(MAX_DIGITS_ENV)
        if value:
            try:
                max_digits = int(value)
            except ValueError:
                raise InvalidParam(f'{MAX_DIGITS_ENV} must be an integer, got {value!r}')
            policy = replace(policy, max_digits=max_digits)
        return policy


def default_policy():
    return PrecisionPolicy.from_env()


def get_context(digits):
    """Arithmetic context for ``digits`` decimal digits.

    Returns ``mpmath.fp`` (plain doubles) when ``digits <= 15``; otherwise a
    per-thread ``MPContext`` whose precision the caller sets through
    ``workdps``. The mpmath module-level context is never touched, so
    concurrent evaluations do not interfere.
    """
    if digits <= DOUBLE_DIGITS:
        return mpmath.fp
    ctx = getattr(_local, 'ctx', None)
    if ctx is None:
        ctx = MPContext()
        _local.ctx = ctx
    return ctx

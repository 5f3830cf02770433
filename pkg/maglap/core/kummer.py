# -*- coding: utf-8 -*-
"""
Kummer's confluent hypergeometric function M(a, b, z) and the generalized
hypergeometric 2F2 for real arguments, summed from their Maclaurin series
with a rigorous bound on rounding and truncation error.
"""

import math
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from numbers import Real

import mpmath

from maglap.core.exceptions import InvalidParam, PrecisionExceeded, ConvergenceFailure
from maglap.core.precision import default_policy, get_context


MAX_TERMS = 200000

# terms past the peak that must all fall below one ulp of the running sum
SMALL_TERM_RUN = 3
PEAK_OFFSET = 10


class Sign(IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


@dataclass(frozen=True)
class KummerArgs:
    """Arguments of M(a, b, z).

    ``a`` may be an ``int``, ``float`` or ``fractions.Fraction``; non-positive
    integers are detected exactly and select the terminating polynomial.
    """
    a: Real
    b: Real
    z: float

    def __post_init__(self):
        if not _finite(self.a):
            raise InvalidParam(f'a must be finite, got {self.a}')
        if not _finite(self.b) or self.b <= 0:
            raise InvalidParam(f'b must be finite and positive, got {self.b}')
        if not _finite(self.z) or self.z < 0:
            raise InvalidParam(f'z must be finite and non-negative, got {self.z}')

    @property
    def degree(self):
        """Degree of the polynomial M(-k, b, z), or None when a is not a non-positive integer."""
        return nonpositive_integer_degree(self.a)


@dataclass(frozen=True)
class CertifiedSign:
    """Sign of a series value together with the evidence for it.

    ``sign`` is ZERO only when the zero was established in exact rational
    arithmetic; otherwise ``abs(value_estimate) > error_bound``.
    """
    sign: Sign
    value_estimate: float
    error_bound: float


def _finite(x):
    try:
        return math.isfinite(x)
    except (TypeError, OverflowError):
        return False


def nonpositive_integer_degree(a):
    """k when a == -k for an integer k >= 0, else None. No tolerance is applied."""
    if isinstance(a, bool):
        return None
    if isinstance(a, int):
        return -a if a <= 0 else None
    if isinstance(a, Fraction):
        return -a.numerator if a.denominator == 1 and a <= 0 else None
    if isinstance(a, float):
        return -int(a) if a.is_integer() and a <= 0 else None
    return None


def _guard_digits(x):
    """Digits needed to hold ``x`` exactly when it is a dyadic rational."""
    q = Fraction(x)
    if q.denominator & (q.denominator - 1):
        return 17
    return int(math.ceil(abs(q.numerator).bit_length() * math.log10(2))) + 2


def _to_ctx(ctx, x):
    q = Fraction(x)
    if q.denominator == 1:
        return ctx.mpf(q.numerator)
    return ctx.mpf(q.numerator) / ctx.mpf(q.denominator)


def _unit_roundoff(ctx):
    if ctx is mpmath.fp:
        return 2.0 ** -52
    return ctx.ldexp(ctx.mpf(1), 1 - ctx.prec)


def _tail_ratio(a_params, b_params, z_abs, k):
    """Upper bound on |t_{j+1} / t_j| for every j >= k, or None if k is too small.

    Each (a_i + j)/(b_i + j) is monotone in j, so it is bounded by
    max(1, (a_i + k)/(b_i + k)) once a_i + k >= 0 and b_i + k > 0.
    """
    rho = z_abs / (k + 1)
    for ai, bi in zip(a_params, b_params):
        if ai + k < 0 or bi + k <= 0:
            return None
        rho *= max(1.0, (ai + k) / (bi + k))
    return rho


def _pfq_series(ctx, a_params, b_params, z):
    """Sum pFq(a; b; z) for p == q in ``ctx`` at its current precision.

    Returns ``(value, error_bound, n_terms)`` as context numbers. The bound
    covers the rounding error of every term recurrence and partial sum plus a
    geometric bound on the truncated tail.
    """
    a_ctx = [_to_ctx(ctx, ai) for ai in a_params]
    b_ctx = [_to_ctx(ctx, bi) for bi in b_params]
    a_flt = [float(ai) for ai in a_params]
    b_flt = [float(bi) for bi in b_params]
    z_ctx = _to_ctx(ctx, z)
    z_abs = abs(float(z))
    u = _unit_roundoff(ctx)

    term = ctx.mpf(1)
    total = ctx.mpf(1)
    abs_total = ctx.mpf(1)
    tail = ctx.mpf(0)
    peak = int(math.ceil(z_abs)) + PEAK_OFFSET
    small_run = 0
    k = 0
    while True:
        for ai in a_ctx:
            term *= ai + k
        for bi in b_ctx:
            term /= bi + k
        term = term * z_ctx / (k + 1)
        k += 1
        if not term:
            # terminating (polynomial) series
            break
        total += term
        abs_term = abs(term)
        abs_total += abs_term
        ulp = (abs(total) if total else abs_total) * u
        small_run = small_run + 1 if abs_term < ulp else 0
        if small_run >= SMALL_TERM_RUN and k > peak:
            rho = _tail_ratio(a_flt, b_flt, z_abs, k)
            if rho is not None and rho < 0.5:
                tail = abs_term * ctx.mpf(rho) / (1 - ctx.mpf(rho))
                break
        if k > MAX_TERMS:
            raise ConvergenceFailure(f'series did not settle after {MAX_TERMS} terms at z={z}')

    n_ops = len(a_ctx) + len(b_ctx) + 3
    error = (n_ops * k + k + 2) * u * abs_total + tail
    return total, error, k


def _start_digits(policy, z, params):
    digits = policy.working_digits(z)
    guard = max(_guard_digits(p) for p in params)
    return min(max(digits, guard + 10), policy.max_digits)


def _evaluate(a_params, b_params, z, digits):
    """(value, error) as floats plus whether |value| > error held in working precision."""
    ctx = get_context(digits)
    if ctx is mpmath.fp:
        value, error, _ = _pfq_series(ctx, a_params, b_params, z)
        return float(value), float(error), abs(value) > error
    with ctx.workdps(digits):
        value, error, _ = _pfq_series(ctx, a_params, b_params, z)
        resolved = abs(value) > error
        return float(value), float(error) * (1 + 2.0 ** -40), resolved


def _exact_polynomial(args):
    """M(-k, b, z) in exact rational arithmetic."""
    a, b, z = Fraction(args.a), Fraction(args.b), Fraction(args.z)
    term = Fraction(1)
    total = Fraction(1)
    for k in range(args.degree):
        term = term * (a + k) * z / ((b + k) * (k + 1))
        total += term
    return total


def kummer_m(args, policy=None, digits=14):
    """Kummer's function M(a, b, z) to ``digits`` significant digits.

    Non-positive integer ``a`` selects the terminating polynomial, summed in
    exact rational arithmetic and rounded once.

    Parameters
    ----------
    args: KummerArgs
        Arguments (a, b, z) with b > 0 and z >= 0.

    policy: PrecisionPolicy, optional (default=None)
        Working-precision schedule; ``default_policy()`` when None.

    digits: int, optional (default=14)
        Requested relative accuracy 10**(-digits) of the result.

    Returns
    -------
    value: float
    """
    policy = policy or default_policy()
    if args.z == 0:
        return 1.0

    if args.degree is not None:
        return float(_exact_polynomial(args))

    target = 10.0 ** (-digits)
    work = _start_digits(policy, args.z, (args.a, args.b))
    while work is not None:
        value, error, _ = _evaluate((args.a,), (args.b,), args.z, work)
        if error <= target * abs(value):
            return value
        work = policy.escalate(work)

    raise PrecisionExceeded(
        f'M({args.a}, {args.b}, {args.z}) not resolved to {digits} digits '
        f'within max_digits={policy.max_digits}'
    )


def kummer_m_sign(args, policy=None):
    """Certified sign of M(a, b, z).

    Precision is escalated until the error bound separates the estimate from
    zero. For non-positive integer ``a`` an unresolved value is settled in
    exact rational arithmetic, which is the only way a ZERO sign is returned.

    Returns
    -------
    sign: CertifiedSign
    """
    policy = policy or default_policy()
    if args.z == 0:
        return CertifiedSign(Sign.POSITIVE, 1.0, 0.0)

    work = _start_digits(policy, args.z, (args.a, args.b))
    while work is not None:
        value, error, resolved = _evaluate((args.a,), (args.b,), args.z, work)
        if resolved and abs(value) > error:
            return CertifiedSign(Sign(int(math.copysign(1, value))), value, error)
        if args.degree is not None:
            exact = _exact_polynomial(args)
            if exact == 0:
                return CertifiedSign(Sign.ZERO, 0.0, 0.0)
            return CertifiedSign(Sign(1 if exact > 0 else -1), float(exact), 0.0)
        work = policy.escalate(work)

    raise PrecisionExceeded(
        f'sign of M({args.a}, {args.b}, {args.z}) unresolved at max_digits={policy.max_digits}'
    )


def hyp2f2(a1, a2, b1, b2, z, policy=None, digits=12):
    """Generalized hypergeometric function 2F2(a1, a2; b1, b2; z).

    Returns
    -------
    value: float
        Relative error at most 10**(-digits).
    """
    policy = policy or default_policy()
    for name, bi in (('b1', b1), ('b2', b2)):
        if not _finite(bi) or nonpositive_integer_degree(bi) is not None:
            raise InvalidParam(f'{name} must not be a non-positive integer, got {bi}')
    for name, x in (('a1', a1), ('a2', a2), ('z', z)):
        if not _finite(x):
            raise InvalidParam(f'{name} must be finite, got {x}')
    if z == 0:
        return 1.0

    target = 10.0 ** (-digits)
    work = _start_digits(policy, z, (a1, a2, b1, b2))
    while work is not None:
        value, error, _ = _evaluate((a1, a2), (b1, b2), z, work)
        if error <= target * abs(value):
            return value
        work = policy.escalate(work)
    raise PrecisionExceeded(
        f'2F2({a1}, {a2}; {b1}, {b2}; {z}) not resolved within max_digits={policy.max_digits}'
    )

# -*- coding: utf-8 -*-
"""
Certified roots of Kummer's function.

``a_m(b, z)``: the m-th negative root of a -> M(a, b, z), sorted decreasing.
``z_m(a, b)``: the m-th positive root of z -> M(a, b, z), sorted increasing.

a-roots are bracketed between consecutive integers. At most one root lies in
each unit interval, and the number of roots in (-k, 0) equals the number of
sign changes of the sequence M(0, b, z), M(-1, b, z), ..., M(-k, b, z). The
sequence obeys the Laguerre three-term recurrence, whose ratio form is
scanned in double precision; the signs that delimit every reported bracket
are then certified with ``kummer_m_sign``.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.optimize import brentq
from scipy.linalg import eigvalsh_tridiagonal

from maglap.core.exceptions import (
    InvalidParam, DomainTooSmall, BracketNotFound, IndexOutOfRange
)
from maglap.core.kummer import KummerArgs, Sign, kummer_m_sign, nonpositive_integer_degree
from maglap.core.precision import default_policy


DEFAULT_TOL = 1e-12
MAX_TOL = 1e-6
MIN_Z = 1e-8
BISECTION_STEPS = 10
MAX_SCAN_DEPTH = 2000000
MAX_BISECTION_STEPS = 400
TINY = 1e-300


@dataclass(frozen=True)
class RootRequest:
    """Validated parameters of a root solve.

    fixed_arg is z (>= 0) for a-roots and a (< 0) for z-roots.
    """
    m: int
    b: float
    fixed_arg: float
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        if int(self.m) != self.m or self.m < 1:
            raise InvalidParam(f'root index m must be a positive integer, got {self.m}')
        if not self.b > 0 or not math.isfinite(self.b):
            raise InvalidParam(f'b must be finite and positive, got {self.b}')
        if not math.isfinite(self.fixed_arg):
            raise InvalidParam(f'fixed argument must be finite, got {self.fixed_arg}')
        if not 0 < self.tol <= MAX_TOL:
            raise InvalidParam(f'tol must lie in (0, {MAX_TOL}], got {self.tol}')


@dataclass(frozen=True)
class ARoot:
    """a-root stored as an integer anchor plus an offset in [-1, 0].

    Keeping the offset separate preserves its relative accuracy when the
    root sits just below an integer, which is where strong-field remainders
    live.
    """
    index: int
    anchor: int
    offset: float

    @property
    def exact(self):
        return Fraction(self.anchor) + Fraction(self.offset)

    @property
    def value(self):
        return float(self.exact)

    def excess(self):
        """-(m-1) - a_m, the distance of the root below its integer bound."""
        return float(Fraction(-(self.index - 1) - self.anchor) - Fraction(self.offset))


@dataclass(frozen=True)
class _Bracket:
    # the root lies in [-j, -(j - 1)]; exactly at -j when ``exact``
    j: int
    exact: bool
    s_hi: Sign
    s_lo: Sign


def count_roots_z(a):
    """Number of positive roots of z -> M(a, b, z): ceil(-a) for a < 0, else 0."""
    if a >= 0:
        return 0
    return int(math.ceil(-a))


def scan_limit(m, b, z):
    """Depth of the integer-checkpoint scan for the m-th a-root.

    m + ceil(z) + 10 covers moderate and large z; the last term follows the
    small-z Bessel regime, where a_m ~ b/2 - j_{b-1,m}^2 / (4z).
    """
    j = math.pi * (m + (b - 1) / 2 + 1)
    depth = m + int(math.ceil(z)) + 10 + int(math.ceil(j * j / (4 * z)))
    return min(depth, MAX_SCAN_DEPTH)


def _float_sign_changes(b, z, limit):
    """Yield (j, on_checkpoint) for each sign change along M(-j, b, z), j = 1..limit.

    Uses the ratio l_j = L_j / L_{j-1} of generalized Laguerre polynomials,
    which share their signs with M(-j, b, z). A zero at -j is reported with
    ``on_checkpoint=True``; the following checkpoint then carries no change.
    """
    inv = 0.0
    skip = False
    for j in range(1, limit + 1):
        if skip:
            skip = False
            inv = 0.0
            continue
        ell = ((2 * j + b - 2 - z) - (j + b - 2) * inv) / j
        if ell < 0:
            yield j, False
        elif ell == 0:
            yield j, True
            skip = True
            continue
        inv = 1.0 / ell


def _checkpoint_sign(j, b, z, policy):
    return kummer_m_sign(KummerArgs(-j, b, z), policy).sign


def _certified_brackets(count, b, z, limit, policy):
    """Point-by-point certified scan; the slow path used on any inconsistency."""
    brackets = []
    prev = Sign.POSITIVE
    for j in range(1, limit + 1):
        s = _checkpoint_sign(j, b, z, policy)
        if s == Sign.ZERO:
            brackets.append(_Bracket(j, True, prev, s))
        elif prev != Sign.ZERO and s != prev:
            brackets.append(_Bracket(j, False, prev, s))
        prev = s
        if len(brackets) == count:
            break
    return brackets


def _brackets(count, b, z, limit, policy):
    """Certified brackets of the first ``count`` a-roots (fewer if the scan runs out)."""
    changes = []
    for change in _float_sign_changes(b, z, limit):
        changes.append(change)
        if len(changes) == count:
            break

    brackets = []
    signs = {0: Sign.POSITIVE}
    for index, (j, on_checkpoint) in enumerate(changes, start=1):
        expected = Sign.POSITIVE if index % 2 == 1 else Sign.NEGATIVE
        for k in (j - 1, j):
            if k not in signs:
                signs[k] = _checkpoint_sign(k, b, z, policy)
        s_hi, s_lo = signs[j - 1], signs[j]
        if s_hi != expected or s_lo not in (Sign(-expected), Sign.ZERO):
            return _certified_brackets(count, b, z, limit, policy)
        if on_checkpoint and s_lo != Sign.ZERO:
            # float zero that exact arithmetic refutes
            return _certified_brackets(count, b, z, limit, policy)
        brackets.append(_Bracket(j, s_lo == Sign.ZERO, s_hi, s_lo))

    if len(brackets) < count:
        # the sign at the end of the scan must match the number of changes seen
        expected = Sign.POSITIVE if len(brackets) % 2 == 0 else Sign.NEGATIVE
        s_end = signs.get(limit)
        if s_end is None:
            s_end = _checkpoint_sign(limit, b, z, policy)
        last_exact = bool(brackets) and brackets[-1].exact and brackets[-1].j == limit
        if s_end != expected and not last_exact:
            return _certified_brackets(count, b, z, limit, policy)
    return brackets


def _offset_sign(anchor, delta, b, z, policy):
    a = Fraction(anchor) + Fraction(delta)
    if a.denominator == 1:
        a = int(a)
    return kummer_m_sign(KummerArgs(a, b, z), policy)


def _refine_a(bracket, b, z, tol, policy):
    """Refine a certified bracket to an ``ARoot``.

    Certified bisection to 10 bits, Brent's method on the value estimates,
    and a final sign check on both sides of the Brent iterate.
    """
    anchor = -(bracket.j - 1)
    if bracket.exact:
        return anchor - 1, 0.0
    s_hi = bracket.s_hi
    lo, hi = -1.0, 0.0

    for _ in range(BISECTION_STEPS):
        mid = 0.5 * (lo + hi)
        s = _offset_sign(anchor, mid, b, z, policy).sign
        if s == Sign.ZERO:
            return anchor, mid
        if s == s_hi:
            hi = mid
        else:
            lo = mid

    def f(delta):
        return _offset_sign(anchor, delta, b, z, policy).value_estimate

    delta = brentq(f, lo, hi, xtol=TINY, rtol=max(tol, 4 * np.finfo(float).eps))
    width = max(tol * abs(delta), TINY)
    left = max(delta - width, lo)
    right = min(delta + width, hi)
    s_right = _offset_sign(anchor, right, b, z, policy).sign
    s_left = _offset_sign(anchor, left, b, z, policy).sign
    if (s_right in (s_hi, Sign.ZERO)) and (s_left in (Sign(-s_hi), Sign.ZERO)):
        return anchor, delta

    for _ in range(MAX_BISECTION_STEPS):
        mid = 0.5 * (lo + hi)
        if hi - lo <= tol * abs(mid):
            break
        s = _offset_sign(anchor, mid, b, z, policy).sign
        if s == Sign.ZERO:
            return anchor, mid
        if s == s_hi:
            hi = mid
        else:
            lo = mid
    return anchor, 0.5 * (lo + hi)


def a_roots(count, b, z, tol=DEFAULT_TOL, policy=None, indices=None):
    """The first ``count`` a-roots of M(a, b, z) as ``ARoot`` objects.

    Parameters
    ----------
    count: int
        Number of roots to bracket, counting from the largest.

    indices: iterable of int, optional (default=None)
        Subset of 1..count to refine; all when None.

    Returns
    -------
    roots: list of ARoot
    """
    request = RootRequest(count, b, z, tol)
    policy = policy or default_policy()
    if z < MIN_Z:
        raise DomainTooSmall(
            f'z={z:g} is below {MIN_Z:g}; a-roots diverge as z -> 0, use the non-magnetic limit'
        )
    limit = scan_limit(request.m, b, z)
    brackets = _brackets(request.m, b, z, limit, policy)
    if len(brackets) < request.m:
        raise BracketNotFound(
            f'only {len(brackets)} of {request.m} a-roots of M(a, {b}, {z}) found '
            f'in the scan range [-{limit}, 0]'
        )
    wanted = range(1, request.m + 1) if indices is None else sorted(set(indices))
    roots = []
    for index in wanted:
        anchor, offset = _refine_a(brackets[index - 1], b, z, tol, policy)
        roots.append(ARoot(index, anchor, offset))
    return roots


def a_root(m, b, z, tol=DEFAULT_TOL, policy=None):
    """m-th a-root as an ``ARoot`` (anchor and offset kept apart)."""
    return a_roots(m, b, z, tol=tol, policy=policy, indices=[m])[0]


def root_a(m, b, z, tol=DEFAULT_TOL, policy=None):
    """m-th negative root a_m(b, z) of a -> M(a, b, z).

    Parameters
    ----------
    m: int
        Root index, roots sorted in decreasing order.

    b: float
        Second Kummer parameter, b > 0.

    z: float
        Argument, z >= 1e-8.

    tol: float, optional (default=1e-12)
        Relative tolerance on the root.

    Returns
    -------
    a: float
        Lies strictly below -(m - 1).
    """
    return a_root(m, b, z, tol=tol, policy=policy).value


def count_a_roots(b, z, a_min, strict=False, policy=None):
    """Number of a-roots of M(a, b, z) that are >= a_min (> a_min when ``strict``)."""
    policy = policy or default_policy()
    if z < MIN_Z:
        raise DomainTooSmall(f'z={z:g} is below {MIN_Z:g}')
    if a_min >= 0:
        return 0
    depth = int(math.floor(-a_min))
    if depth + 1 > MAX_SCAN_DEPTH:
        raise BracketNotFound(f'counting a-roots down to {a_min:g} exceeds the scan depth {MAX_SCAN_DEPTH}')

    brackets = _brackets(depth + 1, b, z, depth + 1, policy)
    count = 0
    for bracket in brackets:
        if bracket.j <= depth:
            if not (strict and bracket.exact and -bracket.j == a_min):
                count += 1
            continue
        # root in [-(depth + 1), -depth]; compare against a_min inside that interval
        if bracket.exact:
            root_above = -bracket.j > a_min or (not strict and -bracket.j == a_min)
            count += int(root_above)
            continue
        frac = Fraction(a_min)
        if frac == -depth:
            continue
        s = kummer_m_sign(KummerArgs(frac, b, z), policy).sign
        if s == Sign.ZERO:
            count += int(not strict)
        elif s != bracket.s_hi:
            count += 1
    return count


def _laguerre_roots(k, b):
    """Roots of the degree-k polynomial M(-k, b, .) from its Jacobi matrix."""
    if k == 1:
        return np.array([float(b)])
    alpha = b - 1.0
    j = np.arange(k, dtype=float)
    diag = 2.0 * j + alpha + 1.0
    off = np.sqrt(j[1:] * (j[1:] + alpha))
    return eigvalsh_tridiagonal(diag, off)


def _z_sign(a, b, z, policy):
    return kummer_m_sign(KummerArgs(a, b, z), policy)


def _refine_z(a, b, lo, hi, s_hi, tol, policy):
    """Brent's method on [lo, hi] in z with certified signs at the ends."""

    def f(z):
        return _z_sign(a, b, z, policy).value_estimate

    root = brentq(f, lo, hi, xtol=TINY, rtol=max(tol, 4 * np.finfo(float).eps))
    width = tol * root
    s_left = _z_sign(a, b, max(root - width, lo), policy).sign
    s_right = _z_sign(a, b, min(root + width, hi), policy).sign
    if s_left in (Sign(-s_hi), Sign.ZERO) and s_right in (s_hi, Sign.ZERO):
        return root

    s_lo = Sign(-s_hi)
    for _ in range(MAX_BISECTION_STEPS):
        mid = 0.5 * (lo + hi)
        if hi - lo <= tol * mid:
            break
        s = _z_sign(a, b, mid, policy).sign
        if s == Sign.ZERO:
            return mid
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _polynomial_root(m, k, b, tol, policy, estimates=None):
    """m-th root of M(-k, b, z), polished from its Jacobi-matrix estimate."""
    roots = _laguerre_roots(k, b) if estimates is None else estimates
    r = roots[m - 1]
    below = roots[m - 2] if m >= 2 else 0.0
    above = roots[m] if m < k else 2.0 * r + 1.0
    lo_cap = 0.5 * (below + r)
    hi_cap = 0.5 * (r + above)

    expected_lo = Sign.POSITIVE if m % 2 == 1 else Sign.NEGATIVE
    spread = 1e-10
    while True:
        lo = max(r * (1 - spread), lo_cap)
        hi = min(r * (1 + spread), hi_cap)
        s_lo = _z_sign(-k, b, lo, policy).sign
        s_hi = _z_sign(-k, b, hi, policy).sign
        if s_lo == Sign.ZERO:
            return lo
        if s_hi == Sign.ZERO:
            return hi
        if s_lo == expected_lo and s_hi == Sign(-expected_lo):
            return _refine_z(-k, b, lo, hi, s_hi, tol, policy)
        if lo == lo_cap and hi == hi_cap:
            raise BracketNotFound(f'could not bracket root {m} of M(-{k}, {b}, z) near z={r:g}')
        spread *= 10.0


def root_z(m, a, b, tol=DEFAULT_TOL, policy=None):
    """m-th positive root z_m(a, b) of z -> M(a, b, z).

    Parameters
    ----------
    m: int
        Root index, roots sorted in increasing order, m <= ceil(-a).

    a: float
        First Kummer parameter, a < 0.

    b: float
        Second Kummer parameter, b > 0.

    tol: float, optional (default=1e-12)
        Relative tolerance on the root.

    Returns
    -------
    z: float
    """
    if not a < 0:
        raise InvalidParam(f'z-roots need a < 0, got a={a}')
    request = RootRequest(m, b, a, tol)
    policy = policy or default_policy()
    n_roots = count_roots_z(a)
    if request.m > n_roots:
        raise IndexOutOfRange(f'M({a}, {b}, z) has {n_roots} positive roots, index {m} requested')

    degree = nonpositive_integer_degree(a)
    if degree is not None:
        return _polynomial_root(m, degree, b, tol, policy)

    # z_m(-K) < z_m(a) < z_m(-K + 1) for -K < a < -K + 1, z_m increasing in a
    k = n_roots
    lo = _polynomial_root(m, k, b, tol, policy)
    expected_lo = Sign.POSITIVE if m % 2 == 1 else Sign.NEGATIVE
    if m <= k - 1:
        hi = _polynomial_root(m, k - 1, b, tol, policy)
    else:
        hi = 2.0 * lo + 2.0
        while _z_sign(a, b, hi, policy).sign != Sign(-expected_lo):
            hi *= 2.0
            if not policy.admits(hi):
                raise BracketNotFound(f'no sign change of M({a}, {b}, z) found up to z={hi:g}')

    s_lo = _z_sign(a, b, lo, policy).sign
    s_hi = _z_sign(a, b, hi, policy).sign
    if s_lo == Sign.ZERO:
        return lo
    if s_hi == Sign.ZERO:
        return hi
    if s_lo != expected_lo or s_hi != Sign(-expected_lo):
        raise BracketNotFound(f'interlacing bracket [{lo:g}, {hi:g}] does not isolate root {m} of M({a}, {b}, z)')
    return _refine_z(a, b, lo, hi, s_hi, tol, policy)

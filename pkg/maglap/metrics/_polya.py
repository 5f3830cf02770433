# -*- coding: utf-8 -*-
"""
Polya ratios, critical fields and Riesz-mean ratios for disk systems.

With a constant field the Polya ratio lambda_n |Omega| / (4 pi n) can drop
below 1, but never below 1/2; the sharp constant in front of the classical
Riesz bound is R_gamma.
"""

import math
import warnings
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
import pandas as pd
from scipy.optimize import minimize_scalar

from maglap.core.domain import FieldStrength, as_system
from maglap.core.exceptions import InvalidParam, TailUnsafe, BadBracket
from maglap.core.rootfind import DEFAULT_TOL
from maglap.models.disk import KummerDiskSolver, nth_eigenvalue


TAIL_FRACTION = 0.1
TAIL_GAP = 0.05
WINDOW_FLOOR = 50


@dataclass(frozen=True)
class PolyaScan:
    """Minimum Polya ratio over the first ``n_searched`` eigenvalues.

    ``weyl_limited`` marks a window whose minimum is >= 1: the ratios then
    approach 1 from above as n grows and the window minimum is not the
    infimum over all n.
    """
    B: float
    min_ratio: float
    argmin_n: int
    n_searched: int
    weyl_limited: bool = False
    ratios: np.ndarray = field(default=None, repr=False, compare=False)


@dataclass(frozen=True)
class LambdaGridSpec:
    """
    lambda grid of a Riesz ratio scan: ``points`` equidistant values in
    (B, lambda_max], lambda_max = factor * B unless given.
    """
    factor: float = 10.0
    points: int = 200
    lambda_max: Optional[float] = None

    def __post_init__(self):
        if not self.factor > 1:
            raise InvalidParam(f'grid factor must exceed 1, got {self.factor}')
        if int(self.points) != self.points or self.points < 1:
            raise InvalidParam(f'grid points must be a positive integer, got {self.points}')

    def upper(self, B):
        upper = self.lambda_max if self.lambda_max is not None else self.factor * B
        if not upper > B:
            raise InvalidParam(f'lambda_max={upper:g} must exceed B={B:g}')
        return upper

    def grid(self, B):
        upper = self.upper(B)
        return np.linspace(B, upper, self.points + 1)[1:]


@dataclass(frozen=True)
class RieszRatioScan:
    gamma: float
    B: float
    best_lambda: float
    max_ratio: float
    table: pd.DataFrame = field(default=None, repr=False, compare=False)


def excess_constant(gamma):
    """R_gamma: 2 at gamma = 0, 2 (gamma / (gamma + 1))^gamma on (0, 1), 1 for gamma >= 1."""
    if not gamma >= 0:
        raise InvalidParam(f'gamma must be non-negative, got {gamma}')
    if gamma == 0:
        return 2.0
    if gamma < 1:
        return 2.0 * (gamma / (gamma + 1.0)) ** gamma
    return 1.0


def classical_constant(gamma):
    """Semiclassical constant L_{gamma,2}^cl = 1 / (4 pi (1 + gamma))."""
    if not gamma >= 0:
        raise InvalidParam(f'gamma must be non-negative, got {gamma}')
    return 1.0 / (4.0 * math.pi * (1.0 + gamma))


def _ratios(lambdas, area):
    n = np.arange(1, len(lambdas) + 1, dtype=float)
    return np.asarray(lambdas, dtype=float) * area / (4.0 * math.pi * n)


def polya_ratio(system, field_strength, n, tol=DEFAULT_TOL, n_jobs=1):
    """lambda_n |Omega| / (4 pi n)."""
    system = as_system(system)
    lam, _, _ = nth_eigenvalue(system, field_strength, n, tol=tol, n_jobs=n_jobs)
    return lam * system.total_area / (4.0 * math.pi * n)


def search_window(system, field_strength, search_margin=3.0):
    """ceil(search_margin * B |Omega| / (4 pi)) + 50."""
    if not search_margin >= 2:
        raise InvalidParam(f'search_margin must be >= 2, got {search_margin}')
    B, _ = FieldStrength.normalize(field_strength)
    return int(math.ceil(search_margin * B.value * as_system(system).total_area / (4 * math.pi))) + WINDOW_FLOOR


def min_polya_ratio(system, field_strength, search_margin=3.0, tol=DEFAULT_TOL, n_jobs=1, verbose=0):
    """
    Minimum Polya ratio over a Weyl-scale window of eigenvalue indices.

    Parameters
    ----------
    system: DiskSystem

    field_strength: FieldStrength or float

    search_margin: float, optional (default=3.0)
        Multiplier (>= 2) on the Weyl-scale window B |Omega| / (4 pi).

    Returns
    -------
    scan: PolyaScan

    Raises
    ------
    TailUnsafe
        A minimum below 1 is not separated by 0.05 from every ratio in the
        last decile of the window.
    """
    system = as_system(system)
    B, _ = FieldStrength.normalize(field_strength)
    n_search = search_window(system, B, search_margin)

    solver = KummerDiskSolver(tol=tol, n_jobs=n_jobs, verbose=verbose)
    ratios = _ratios(solver.lowest(system, B, n_search).lambdas, system.total_area)
    argmin = int(np.argmin(ratios))
    min_ratio = float(ratios[argmin])

    if min_ratio >= 1.0:
        warnings.warn(f'minimum Polya ratio {min_ratio:.6f} at B={B.value:g} lies in the Weyl regime; '
                      f'ratios approach 1 from above beyond n={n_search}')
        return PolyaScan(B.value, min_ratio, argmin + 1, n_search, True, ratios)

    tail = ratios[int(math.floor((1 - TAIL_FRACTION) * n_search)):]
    if float(np.min(tail)) <= min_ratio + TAIL_GAP:
        raise TailUnsafe(
            f'last decile of the Polya window at B={B.value:g} reaches {np.min(tail):.4f}, within '
            f'{TAIL_GAP} of the minimum {min_ratio:.4f}; raise search_margin above {search_margin:g}'
        )
    return PolyaScan(B.value, min_ratio, argmin + 1, n_search, False, ratios)


def critical_field(system, bracket_lo, bracket_hi, tol_B=0.01, search_margin=3.0, tol=DEFAULT_TOL,
                   n_jobs=1, verbose=0):
    """
    Smallest field where the minimum Polya ratio drops below 1, by bisection.

    Returns
    -------
    (B_crit, n_crit): tuple of (float, int)
        Midpoint of the final bracket of width <= tol_B, and the minimizing
        index on its upper end.

    Raises
    ------
    BadBracket
        The minimum ratio is not >= 1 at bracket_lo and < 1 at bracket_hi.
    """
    if not 0 < bracket_lo < bracket_hi:
        raise InvalidParam(f'need 0 < bracket_lo < bracket_hi, got [{bracket_lo}, {bracket_hi}]')
    if not tol_B > 0:
        raise InvalidParam(f'tol_B must be positive, got {tol_B}')
    system = as_system(system)

    def scan(B):
        with warnings.catch_warnings():
            warnings.simplefilter('ignore')
            result = min_polya_ratio(system, B, search_margin=search_margin, tol=tol, n_jobs=n_jobs)
        if verbose >= 1:
            print(f'critical_field: B={B:.6f} min ratio {result.min_ratio:.6f} at n={result.argmin_n}')
        return result

    lo_scan, hi_scan = scan(bracket_lo), scan(bracket_hi)
    if lo_scan.min_ratio < 1 or hi_scan.min_ratio >= 1:
        raise BadBracket(
            f'bracket [{bracket_lo:g}, {bracket_hi:g}] gives minimum ratios '
            f'{lo_scan.min_ratio:.4f} and {hi_scan.min_ratio:.4f}; need >= 1 below and < 1 above'
        )

    lo, hi = float(bracket_lo), float(bracket_hi)
    while hi - lo > tol_B:
        mid = 0.5 * (lo + hi)
        mid_scan = scan(mid)
        if mid_scan.min_ratio < 1:
            hi, hi_scan = mid, mid_scan
        else:
            lo = mid
    return 0.5 * (lo + hi), hi_scan.argmin_n


def _riesz_values(lambdas, lam, gamma):
    gaps = lam - lambdas[lambdas < lam]
    if gamma == 0:
        return float(gaps.size)
    return float(np.sum(gaps ** gamma))


def riesz_ratio(lambdas, area, lam, gamma):
    """Riesz mean at ``lam`` divided by L_{gamma,2}^cl |Omega| lam^(1 + gamma)."""
    value = _riesz_values(np.asarray(lambdas, dtype=float), lam, gamma)
    return value / (classical_constant(gamma) * area * lam ** (1 + gamma))


def riesz_ratio_scan(system, field_strength, gamma, grid=None, tol=DEFAULT_TOL, n_jobs=1):
    """
    Largest Riesz ratio over lambda in (B, lambda_max].

    For gamma = 0 the supremum over each gap is the limit from above at an
    eigenvalue, n 4 pi / (|Omega| lambda_n) with n the last index of a tied
    group. For gamma > 0 the ratio is smooth between eigenvalues and every
    gap is refined with a bounded scalar maximization.

    Returns
    -------
    scan: RieszRatioScan
        ``table`` holds lambda, value, ratio, R_gamma on the grid.
    """
    if not gamma >= 0:
        raise InvalidParam(f'gamma must be non-negative, got {gamma}')
    grid = grid or LambdaGridSpec()
    system = as_system(system)
    B, _ = FieldStrength.normalize(field_strength)
    area = system.total_area
    upper = grid.upper(B.value)

    solver = KummerDiskSolver(tol=tol, n_jobs=n_jobs)
    lambdas = solver.spectrum(system, B, upper).lambdas

    lam_grid = grid.grid(B.value)
    values = np.array([_riesz_values(lambdas, x, gamma) for x in lam_grid])
    ratios = values / (classical_constant(gamma) * area * lam_grid ** (1 + gamma))
    table = pd.DataFrame({'lambda': lam_grid, 'value': values, 'ratio': ratios,
                          'R_gamma': excess_constant(gamma)})

    best = int(np.argmax(ratios)) if ratios.size else 0
    best_lambda, max_ratio = (float(lam_grid[best]), float(ratios[best])) if ratios.size else (upper, 0.0)

    if lambdas.size and gamma == 0:
        # last index of every tied group
        last = np.r_[np.nonzero(np.diff(lambdas))[0], lambdas.size - 1]
        left = (last + 1) * 4 * math.pi / (area * lambdas[last])
        k = int(np.argmax(left))
        if left[k] > max_ratio:
            best_lambda, max_ratio = float(lambdas[last[k]]), float(left[k])
    elif lambdas.size:
        edges = np.r_[np.unique(lambdas), upper]
        for lo, hi in zip(edges[:-1], edges[1:]):
            if not hi > lo:
                continue
            result = minimize_scalar(lambda x: -riesz_ratio(lambdas, area, x, gamma),
                                     bounds=(lo, hi), method='bounded')
            if -result.fun > max_ratio:
                best_lambda, max_ratio = float(result.x), float(-result.fun)

    return RieszRatioScan(gamma, B.value, best_lambda, max_ratio, table)


def sum_bound_ratio(system, field_strength, n, tol=DEFAULT_TOL, n_jobs=1):
    """sum_{k <= n} lambda_k |Omega| / (2 pi n^2); at least 1 for constant fields."""
    system = as_system(system)
    B, _ = FieldStrength.normalize(field_strength)
    lambdas = KummerDiskSolver(tol=tol, n_jobs=n_jobs).lowest(system, B, n).lambdas
    return float(np.sum(lambdas)) * system.total_area / (2 * math.pi * n * n)


def weyl_count(system, lam, boundary=False):
    """|Omega| lam / (4 pi), minus |boundary| sqrt(lam) / (4 pi) when ``boundary``."""
    system = as_system(system)
    if lam <= 0:
        return 0.0
    count = system.total_area * lam / (4 * math.pi)
    if boundary:
        count -= system.perimeter * math.sqrt(lam) / (4 * math.pi)
    return count

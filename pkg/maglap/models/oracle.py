# -*- coding: utf-8 -*-
"""
Finite-difference solver for the radial eigenvalue problem

    -(1/r) (r Z')' + (B^2 r^2 / 4 + B l + l^2 / r^2) Z = lambda Z,  Z(R) = 0,

on a staggered grid r_j = (j - 1/2) h, so no node sits at the singular
endpoint r = 0. The conservative (flux) discretization is symmetrized with
the weights r_j, giving a symmetric tridiagonal matrix whose eigenvalues
are found by Sturm bisection. Richardson extrapolation in h^2 removes the
leading discretization error.

This path shares nothing with the Kummer evaluator and serves as an
independent check of it.
"""

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigvalsh_tridiagonal

from maglap.core.base_solver import BaseRadialSolver
from maglap.core.domain import as_field
from maglap.core.exceptions import InvalidParam, ConvergenceFailure


MIN_GRID_POINTS = 200
MAX_EIGENVALUES = 20
LEVEL_TOLERANCE = 1e-3


@dataclass(frozen=True)
class OracleConfig:
    """
    Parameters of one finite-difference sector solve.

    Parameters
    ----------
    l: int
        Angular momentum.

    B: float
        Field strength, B >= 0; B = 0 is the Bessel problem.

    R: float
        Disk radius.

    m_max: int, optional (default=1)
        Number of lowest eigenvalues returned, at most 20.

    grid_points: int, optional (default=4000)
        Interior points of the coarsest grid, at least 200.

    richardson_levels: int, optional (default=2)
        Number of grids, each with twice the points of the previous one.
    """
    l: int
    B: float
    R: float
    m_max: int = 1
    grid_points: int = 4000
    richardson_levels: int = 2

    def __post_init__(self):
        if int(self.l) != self.l:
            raise InvalidParam(f'l must be an integer, got {self.l}')
        if not np.isfinite(self.B) or self.B < 0:
            raise InvalidParam(f'oracle field strength must be finite and >= 0, got {self.B}')
        if not np.isfinite(self.R) or not self.R > 0:
            raise InvalidParam(f'radius must be finite and positive, got {self.R}')
        if int(self.m_max) != self.m_max or not 1 <= self.m_max <= MAX_EIGENVALUES:
            raise InvalidParam(f'm_max must lie in [1, {MAX_EIGENVALUES}], got {self.m_max}')
        if int(self.grid_points) != self.grid_points or self.grid_points < MIN_GRID_POINTS:
            raise InvalidParam(f'grid_points must be an integer >= {MIN_GRID_POINTS}, got {self.grid_points}')
        if self.richardson_levels not in (1, 2, 3):
            raise InvalidParam(f'richardson_levels must be 1, 2 or 3, got {self.richardson_levels}')


def radial_matrix(l, B, R, n):
    """
    Symmetric tridiagonal discretization of sector l on n interior points.

    Returns
    -------
    diag: numpy array of shape (n,)

    off: numpy array of shape (n - 1,)

    h: float
        Grid spacing R / (n + 1/2).
    """
    h = R / (n + 0.5)
    j = np.arange(1, n + 1, dtype=float)
    r = (j - 0.5) * h
    # r_{j +- 1/2} = j h and (j - 1) h; the flux through r = 0 vanishes
    diag = (j + (j - 1)) / (r * h) + B * B * r * r / 4 + B * l + l * l / (r * r)
    off = -j[:-1] / (h * np.sqrt(r[:-1] * r[1:]))
    return diag, off, h


def sturm_count(diag, off, lam):
    """
    Number of eigenvalues of a symmetric tridiagonal matrix below ``lam``.

    Counts negative pivots of the LDL^T factorization of T - lam I. A pivot
    that vanishes or falls below the underflow guard is replaced by the
    positive guard value, so eigenvalues equal to ``lam`` are not counted.

    Parameters
    ----------
    diag: array-like of shape (n,)
        Diagonal, n >= 1.

    off: array-like of shape (n - 1,)
        Off-diagonal.

    lam: float or array-like
        Shift(s); an array returns one count per shift.

    Returns
    -------
    count: int or numpy array of int
    """
    diag = np.asarray(diag, dtype=float)
    off = np.asarray(off, dtype=float)
    if diag.ndim != 1 or diag.size < 1:
        raise InvalidParam('sturm_count needs a non-empty diagonal')
    if off.size != diag.size - 1:
        raise InvalidParam(f'off-diagonal must have {diag.size - 1} entries, got {off.size}')

    scalar = np.ndim(lam) == 0
    lam = np.atleast_1d(np.asarray(lam, dtype=float))
    e2 = off * off
    pivmin = np.finfo(float).tiny * max(1.0, float(np.max(e2)) if e2.size else 1.0)

    count = np.zeros(lam.shape, dtype=int)
    q = diag[0] - lam
    q = np.where(np.abs(q) <= pivmin, pivmin, q)
    count += q < 0
    for i in range(1, diag.size):
        q = diag[i] - lam - e2[i - 1] / q
        q = np.where(np.abs(q) <= pivmin, pivmin, q)
        count += q < 0
    return int(count[0]) if scalar else count


def _grid_eigenvalues(config, n):
    diag, off, h = radial_matrix(config.l, config.B, config.R, n)
    values = eigvalsh_tridiagonal(diag, off, select='i', select_range=(0, config.m_max - 1),
                                  lapack_driver='stebz')
    return values, h


def richardson_extrapolate(hs, values):
    """
    Eliminate the h^2, h^4, ... error terms from per-level eigenvalues.

    Parameters
    ----------
    hs: array-like of shape (n_levels,)

    values: array-like of shape (n_levels, n_eigenvalues)

    Returns
    -------
    limit: numpy array of shape (n_eigenvalues,)
    """
    hs = np.asarray(hs, dtype=float)
    values = np.atleast_2d(np.asarray(values, dtype=float))
    if hs.size == 1:
        return values[0]
    vander = np.vander(hs * hs, N=hs.size, increasing=True)
    return np.linalg.solve(vander, values)[0]


def radial_eigenvalues_fd(config):
    """
    The m_max lowest eigenvalues of sector ``config.l``.

    Parameters
    ----------
    config: OracleConfig

    Returns
    -------
    eigenvalues: numpy array of shape (m_max,)
    """
    hs, levels = [], []
    for k in range(config.richardson_levels):
        values, h = _grid_eigenvalues(config, config.grid_points * 2 ** k)
        hs.append(h)
        levels.append(values)

    limit = richardson_extrapolate(hs, levels)
    spread = np.max(np.abs(limit - levels[-1]) / np.abs(limit))
    if spread > LEVEL_TOLERANCE:
        raise ConvergenceFailure(
            f'oracle levels for l={config.l}, B={config.B:g}, R={config.R:g} disagree by '
            f'{spread:.2e} > {LEVEL_TOLERANCE:g}; increase grid_points'
        )
    if spread > LEVEL_TOLERANCE / 2:
        warnings.warn(f'oracle extrapolation for l={config.l} close to tolerance ({spread:.2e})')
    return limit


def convergence_order(config, exact):
    """Observed order p of the raw grid error, from grids n and 2n: log2(e_n / e_2n)."""
    errors = []
    for k in range(2):
        values, _ = _grid_eigenvalues(config, config.grid_points * 2 ** k)
        errors.append(np.abs(values - np.asarray(exact, dtype=float)))
    return np.log2(errors[0] / errors[1])


class FiniteDifferenceSolver(BaseRadialSolver):
    """
    Sector eigenvalues from the finite-difference discretization.

    Parameters
    ----------
    grid_points: int, optional (default=4000)
        Interior points of the coarsest grid.

    richardson_levels: int, optional (default=2)
        Number of grids used for extrapolation.

    n_jobs: int, optional (default=1)
        Number of joblib workers over angular sectors.

    verbose: int, optional (default=0)
        Verbosity mode.
    """
    def __init__(self, grid_points=4000, richardson_levels=2, n_jobs=1, sector_margin=1.0, verbose=0):
        super(FiniteDifferenceSolver, self).__init__(
            solver_name='FiniteDifference', tol=LEVEL_TOLERANCE, n_jobs=n_jobs,
            sector_margin=sector_margin, verbose=verbose
        )
        self.grid_points = grid_points
        self.richardson_levels = richardson_levels

    def _sector(self, l, field_strength, radius, lam):
        B = as_field(field_strength).value
        diag, off, _ = radial_matrix(l, B, radius, self.grid_points)
        # one spare eigenvalue covers grid eigenvalues that drift across lam
        n = sturm_count(diag, off, lam) + 1
        if n > MAX_EIGENVALUES:
            raise InvalidParam(
                f'sector l={l} holds more than {MAX_EIGENVALUES - 1} eigenvalues below {lam:g}; '
                f'the oracle is meant for the low spectrum'
            )
        config = OracleConfig(l=l, B=B, R=radius, m_max=n, grid_points=self.grid_points,
                              richardson_levels=self.richardson_levels)
        return radial_eigenvalues_fd(config)

    def sector_eigenvalues(self, l, field_strength, radius, threshold):
        values = self._sector(l, field_strength, radius, threshold)
        return [(m, float(v)) for m, v in enumerate(values, start=1) if v <= threshold]

    def sector_count(self, l, field_strength, radius, lam):
        return int(np.sum(self._sector(l, field_strength, radius, lam) < lam))

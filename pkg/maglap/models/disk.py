# -*- coding: utf-8 -*-
"""
Eigenvalues of the magnetic Dirichlet Laplacian on disks through the roots
of Kummer's function.

On the disk D_R the sector l reduces to M(a, |l| + 1, B R^2 / 2) = 0 and
every root a_m gives the eigenvalue
lambda_{m,l}(B) = (l + |l| + 1 - 2 a_m(|l| + 1, B R^2 / 2)) B.
"""

import math

from maglap.core.base_solver import BaseRadialSolver
from maglap.core.domain import BranchId, Disk, FieldStrength, as_disk, as_field, as_system
from maglap.core.exceptions import InvalidParam
from maglap.core.rootfind import DEFAULT_TOL, a_root, a_roots, count_a_roots, root_z


class KummerDiskSolver(BaseRadialSolver):
    """
    Sector eigenvalues from certified roots of a -> M(a, |l| + 1, B R^2 / 2).

    Parameters
    ----------
    tol: float, optional (default=1e-12)
        Relative tolerance of the a-roots; eigenvalues carry a relative error
        of at most 4 * tol.

    policy: PrecisionPolicy, optional (default=None)
        Working-precision schedule, ``default_policy()`` when None.

    n_jobs: int, optional (default=1)
        Number of joblib workers over angular sectors.

    sector_margin: float, optional (default=1.0)
        Multiplier on the angular-momentum truncation bounds.

    verbose: int, optional (default=0)
        Verbosity mode.
    """
    def __init__(self, tol=DEFAULT_TOL, policy=None, n_jobs=1, sector_margin=1.0, verbose=0):
        super(KummerDiskSolver, self).__init__(
            solver_name='Kummer', tol=tol, policy=policy, n_jobs=n_jobs,
            sector_margin=sector_margin, verbose=verbose
        )

    def branch(self, branch, field_strength, radius):
        """lambda_{m,l}(B) on the disk of the given radius."""
        B, branch = FieldStrength.normalize(field_strength, branch)
        z = B.value * radius * radius / 2
        root = a_root(branch.m, branch.b, z, tol=self.tol, policy=self.policy)
        return B.value * (branch.limit() + 2 * root.excess())

    def sector_eigenvalues(self, l, field_strength, radius, threshold):
        B = as_field(field_strength).value
        z = B * radius * radius / 2
        b = abs(l) + 1
        offset = l + abs(l) + 1
        a_min = (offset - threshold / B) / 2
        count = count_a_roots(b, z, a_min, policy=self.policy)
        if count == 0:
            return []
        roots = a_roots(count, b, z, tol=self.tol, policy=self.policy)
        return [(root.index, B * (offset + 2 * (root.index - 1) + 2 * root.excess())) for root in roots]

    def sector_count(self, l, field_strength, radius, lam):
        B = as_field(field_strength).value
        z = B * radius * radius / 2
        a_min = (l + abs(l) + 1 - lam / B) / 2
        return count_a_roots(abs(l) + 1, z, a_min, strict=True, policy=self.policy)


def _solver(tol, n_jobs=1, verbose=0, policy=None):
    return KummerDiskSolver(tol=tol, policy=policy, n_jobs=n_jobs, verbose=verbose)


def branch_eigenvalue(branch, field_strength, disk, tol=DEFAULT_TOL, policy=None):
    """
    Eigenvalue branch lambda_{m,l}(B) on a disk.

    Parameters
    ----------
    branch: BranchId
        Radial index m and angular momentum l.

    field_strength: FieldStrength or float
        Field strength; a negative value is mapped through (B, l) -> (-B, -l).

    disk: Disk or float
        Disk or its radius; B R^2 / 2 must be at least 1e-8.

    tol: float, optional (default=1e-12)
        Relative tolerance of the underlying a-root.

    Returns
    -------
    lam: float
        Strictly above (l + |l| + 1 + 2(m - 1)) B.
    """
    disk = as_disk(disk)
    return _solver(tol, policy=policy).branch(branch, field_strength, disk.radius)


def enumerate_spectrum(system, field_strength, threshold, tol=DEFAULT_TOL, n_jobs=1,
                       sector_margin=1.0, verbose=0, policy=None):
    """
    Every eigenvalue <= threshold of a disk or disjoint union of disks.

    Returns
    -------
    spectrum: Spectrum
        Sorted by (lambda, disk_index, m, l); empty when threshold <= B.
    """
    B, _ = FieldStrength.normalize(field_strength)
    solver = KummerDiskSolver(tol=tol, policy=policy, n_jobs=n_jobs,
                              sector_margin=sector_margin, verbose=verbose)
    return solver.spectrum(as_system(system), B, threshold)


def nth_eigenvalue(system, field_strength, n, tol=DEFAULT_TOL, n_jobs=1, verbose=0, policy=None):
    """
    n-th smallest eigenvalue with its branch and disk index.

    For a single disk with B >= 2n / R^2 the n lowest eigenvalues are the
    m = 1 branches with l = 0, -1, ..., -(n - 1) in increasing order, so
    lambda_n = lambda_{1,-(n-1)} is computed directly.

    Returns
    -------
    (lam, branch, disk_index): tuple of (float, BranchId, int)
    """
    if int(n) != n or n < 1:
        raise InvalidParam(f'eigenvalue index n must be a positive integer, got {n}')
    system = as_system(system)
    B, _ = FieldStrength.normalize(field_strength)
    solver = _solver(tol, n_jobs=n_jobs, verbose=verbose, policy=policy)
    if len(system) == 1:
        radius = system.disks[0].radius
        if B.value >= 2 * n / radius ** 2:
            branch = BranchId(1, -(int(n) - 1))
            return solver.branch(branch, B, radius), branch, 0
    return solver.nth(system, B, int(n))


def counting_function(system, field_strength, lam, n_jobs=1, policy=None):
    """N(lam) = #{n : lambda_n < lam} with multiplicities; 0 for lam <= B."""
    B, _ = FieldStrength.normalize(field_strength)
    return _solver(DEFAULT_TOL, n_jobs=n_jobs, policy=policy).counting(as_system(system), B, lam)


def riesz_mean(system, field_strength, lam, gamma, tol=DEFAULT_TOL, n_jobs=1, policy=None):
    """Sum over lambda_n < lam of (lam - lambda_n)^gamma; the counting function at gamma = 0."""
    B, _ = FieldStrength.normalize(field_strength)
    return _solver(tol, n_jobs=n_jobs, policy=policy).riesz(as_system(system), B, lam, gamma)


def crossing_field(m, l, k, radius, tol=DEFAULT_TOL, policy=None):
    """
    Field where lambda_{m,l}(B) = (l + |l| + 1 + 2k) B.

    The crossing exists exactly for k >= m and happens at
    B = 2 z_m(-k, |l| + 1) / R^2.
    """
    branch = BranchId(m, l)
    if int(k) != k or k < branch.m:
        raise InvalidParam(f'branch ({m}, {l}) never meets the Landau line with k={k}; need k >= m')
    radius = as_disk(radius).radius
    return 2 * root_z(branch.m, -int(k), branch.b, tol=tol, policy=policy) / radius ** 2


def lowest_band_count(disk, field_strength):
    """Number of branches lambda_{1,l}, l <= 0, at or below 3B: floor(B R^2 / 2)."""
    disk = as_disk(disk)
    B = as_field(field_strength)
    return int(math.floor(disk.z(B)))


def scale_spectrum(field_strength, radius):
    """(B R^2, R^-2): lambda_n(D_R, B) equals the factor times lambda_n(D_1, B R^2)."""
    B = as_field(field_strength).value
    R = as_disk(radius).radius
    return B * R * R, 1.0 / (R * R)


__all__ = ['KummerDiskSolver', 'Disk', 'branch_eigenvalue', 'enumerate_spectrum', 'nth_eigenvalue',
           'counting_function', 'riesz_mean', 'crossing_field', 'lowest_band_count', 'scale_spectrum']

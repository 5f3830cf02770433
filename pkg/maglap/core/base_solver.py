# -*- coding: utf-8 -*-
"""
Base class for radial sector solvers of the magnetic Dirichlet Laplacian on
disks and disjoint unions of disks.

The operator separates in polar coordinates; every angular momentum l gives
a one-dimensional radial problem whose eigenvalues lambda_{m,l}(B), m >= 1,
form one sector. Subclasses supply per-sector eigenvalues and counts; this
class handles sector truncation, unions of disks, parallel execution and the
deterministic merge.
"""

import math
from abc import ABCMeta, abstractmethod

import numpy as np
from joblib import Parallel, delayed
from tqdm import tqdm

from maglap.core.domain import BranchId, Spectrum, SpectrumEntry, as_field, as_system
from maglap.core.exceptions import InvalidParam
from maglap.core.precision import default_policy


class BaseRadialSolver(metaclass=ABCMeta):
    """
    Abstract class for sector-wise eigenvalue solvers

    Parameters
    ----------

    solver_name: str
        Name used in progress output

    tol: float, optional (default=1e-12)
        Relative tolerance of the underlying root or eigenvalue solves

    policy: PrecisionPolicy, optional (default=None)
        Working-precision schedule, ``default_policy()`` when None

    n_jobs: int, optional (default=1)
        Number of joblib workers over (radius, l) sectors; -1 uses all cores

    sector_margin: float, optional (default=1.0)
        Multiplier (>= 1) on the angular-momentum truncation bounds

    verbose: int, optional (default=0)
        Verbosity mode: 1 prints milestones, 2 adds per-sector progress bars

    """
    def __init__(self, solver_name, tol=1e-12, policy=None, n_jobs=1,
                 sector_margin=1.0, verbose=0):
        self.solver_name = solver_name
        self.tol = tol
        self.policy = policy if policy is not None else default_policy()
        self.n_jobs = n_jobs
        self.sector_margin = sector_margin
        self.verbose = verbose

        if not sector_margin >= 1:
            raise InvalidParam(f'sector_margin must be >= 1, got {sector_margin}')
        return

    @abstractmethod
    def sector_eigenvalues(self, l, field_strength, radius, threshold):
        """Eigenvalues <= threshold of sector l as a list of (m, lambda), m increasing."""

    @abstractmethod
    def sector_count(self, l, field_strength, radius, lam):
        """Number of eigenvalues strictly below ``lam`` in sector l."""

    def sectors(self, field_strength, radius, threshold):
        """Angular momenta l whose sector can hold an eigenvalue <= threshold.

        For l <= 0 dropping the confining B^2 r^2 / 4 term leaves
        lambda >= l^2 / R^2 - B |l|; for l > 0, lambda > (2l + 1) B and
        lambda >= l^2 / R^2 + B l.
        """
        B = float(field_strength)
        if threshold <= B:
            return []
        R2 = radius * radius
        margin = self.sector_margin

        # l^2/R^2 - B|l| <= threshold
        neg = int(math.floor(margin * (B + math.sqrt(B * B + 4 * threshold / R2)) * R2 / 2))
        pos_landau = (threshold / B - 1) / 2
        pos_bessel = (-B + math.sqrt(B * B + 4 * threshold / R2)) * R2 / 2
        pos = int(math.floor(margin * min(pos_landau, pos_bessel)))
        return list(range(-neg, 0)) + list(range(0, max(pos, 0) + 1))

    def _progress(self, iterable, desc):
        if self.verbose >= 2:
            return tqdm(iterable, desc=desc, leave=False)
        return iterable

    def _map(self, func, args, desc):
        items = list(self._progress(args, desc))
        if self.n_jobs == 1 or len(items) <= 1:
            return [func(*a) for a in items]
        return Parallel(n_jobs=self.n_jobs)(delayed(func)(*a) for a in items)

    def spectrum(self, system, field_strength, threshold):
        """
        Complete sorted spectrum of ``system`` up to ``threshold``.

        Parameters
        ----------
        system: DiskSystem
            Disk or disjoint union of disks.

        field_strength: FieldStrength or float
            Field strength B > 0.

        threshold: float
            Enumeration cutoff; eigenvalues <= threshold are returned.

        Returns
        -------
        spectrum: Spectrum
        """
        system = as_system(system)
        B = as_field(field_strength)
        radii = sorted(set(system.radii))
        if self.verbose >= 1:
            print(f'{self.solver_name}: enumerating eigenvalues <= {threshold:g} '
                  f'at B={B.value:g} over {len(radii)} radii')

        tasks = [(l, B, r, threshold) for r in radii for l in self.sectors(B, r, threshold)]
        results = self._map(self._sector_task, tasks, desc='sectors')

        per_radius = {r: [] for r in radii}
        for (l, _, r, _), eigs in zip(tasks, results):
            per_radius[r].extend((BranchId(m, l), lam) for m, lam in eigs if lam <= threshold)

        entries = []
        for index, disk in enumerate(system.disks):
            entries.extend(SpectrumEntry(lam, index, branch) for branch, lam in per_radius[disk.radius])
        return Spectrum(tuple(entries), float(threshold), B.value)

    def _sector_task(self, l, field_strength, radius, threshold):
        return self.sector_eigenvalues(l, field_strength, radius, threshold)

    def _count_task(self, l, field_strength, radius, lam):
        return self.sector_count(l, field_strength, radius, lam)

    def counting(self, system, field_strength, lam):
        """N(lam) = #{n : lambda_n < lam}, multiplicities counted."""
        system = as_system(system)
        B = as_field(field_strength)
        if lam <= B.value:
            return 0
        counts = {}
        for r in sorted(set(system.radii)):
            tasks = [(l, B, r, lam) for l in self.sectors(B, r, lam)]
            counts[r] = int(np.sum(self._map(self._count_task, tasks, desc='count'), dtype=int))
        return sum(counts[d.radius] for d in system.disks)

    def lowest(self, system, field_strength, n):
        """Spectrum of the n lowest eigenvalues, ties broken by the sort key.

        The threshold starts at the Weyl scale B + 4 pi n / |Omega| and its
        excess over B doubles until n eigenvalues are enclosed.
        """
        if int(n) != n or n < 1:
            raise InvalidParam(f'eigenvalue index n must be a positive integer, got {n}')
        system = as_system(system)
        B = as_field(field_strength)
        excess = max(4 * math.pi * n / system.total_area, 2 * B.value)
        while True:
            threshold = B.value + excess
            spec = self.spectrum(system, B, threshold)
            if len(spec) >= n:
                return spec.truncate(n)
            if self.verbose >= 1:
                print(f'{self.solver_name}: {len(spec)} < {n} eigenvalues below {threshold:g}, widening')
            excess *= 2

    def nth(self, system, field_strength, n):
        """(lambda_n, branch, disk_index) of the n-th eigenvalue."""
        entry = self.lowest(system, field_strength, n)[n - 1]
        return entry.lam, entry.branch, entry.disk_index

    def riesz(self, system, field_strength, lam, gamma):
        """Riesz mean sum over lambda_n < lam of (lam - lambda_n)^gamma."""
        if not gamma >= 0:
            raise InvalidParam(f'gamma must be non-negative, got {gamma}')
        if gamma == 0:
            return float(self.counting(system, field_strength, lam))
        B = as_field(field_strength)
        if lam <= B.value:
            return 0.0
        lambdas = self.spectrum(system, B, lam).lambdas
        gaps = lam - lambdas[lambdas < lam]
        return float(np.sum(gaps ** gamma))

# -*- coding: utf-8 -*-
"""Disk fixtures and randomized parameter grids for property checks
"""

import math

import numpy as np
from sklearn.utils import check_random_state

from maglap.core.domain import BranchId, Disk, DiskSystem


UNIT_AREA_RADIUS = 1.0 / math.sqrt(math.pi)


def unit_area_disk():
    """Disk of area 1, radius 1 / sqrt(pi)."""
    return Disk(UNIT_AREA_RADIUS)


def unit_area_system(n_disks=1):
    """``n_disks`` disjoint copies of the unit-area disk."""
    return DiskSystem(tuple(unit_area_disk() for _ in range(n_disks)))


def random_root_cases(n_cases=200, m_max=3, b_max=8, z_range=(0.5, 40.0), random_state=None):
    """Utility function to draw (m, b, z) triples for a-root property tests.

    Parameters
    ----------
    n_cases : int, optional (default=200)
        Number of triples.

    m_max : int, optional (default=3)
        Largest root index.

    b_max : int, optional (default=8)
        b is drawn from the integers 1..b_max, as b = |l| + 1.

    z_range : tuple of float, optional (default=(0.5, 40.0))
        z is drawn log-uniformly from this range.

    random_state : int, RandomState instance or None, optional (default=None)
        If int, random_state is the seed used by the random number generator;
        If RandomState instance, random_state is the random number generator;
        If None, the random number generator is the RandomState instance used
        by `np.random`.

    Returns
    -------
    cases : list of tuple (int, int, float)
    """
    random_state = check_random_state(random_state)
    m = random_state.randint(1, m_max + 1, size=n_cases)
    b = random_state.randint(1, b_max + 1, size=n_cases)
    log_lo, log_hi = np.log(z_range[0]), np.log(z_range[1])
    z = np.exp(random_state.uniform(log_lo, log_hi, size=n_cases))
    return [(int(mi), int(bi), float(zi)) for mi, bi, zi in zip(m, b, z)]


def random_branches(n_cases=50, m_max=2, l_range=(-6, 3), random_state=None):
    """Draw eigenvalue branches (m, l) uniformly from the given ranges."""
    random_state = check_random_state(random_state)
    m = random_state.randint(1, m_max + 1, size=n_cases)
    l = random_state.randint(l_range[0], l_range[1] + 1, size=n_cases)
    return [BranchId(int(mi), int(li)) for mi, li in zip(m, l)]

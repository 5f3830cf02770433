# -*- coding: utf-8 -*-
"""
Strong-field behaviour of the eigenvalue branches.

lambda_{m,l}(B) / B tends to the Landau level l + |l| + 1 + 2(m - 1) with
the exponentially small remainder

    2 / (Gamma(|l| + m) Gamma(m)) * z^(|l| + 1 + 2(m - 1)) * exp(-z),  z = B R^2 / 2,

up to a factor 1 + O(1/B).
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from maglap.core.domain import BranchId, FieldStrength, as_disk
from maglap.core.exceptions import AsymptoticRegimeError, PrecisionExceeded
from maglap.core.precision import default_policy
from maglap.core.rootfind import DEFAULT_TOL, a_root

# fraction of the predicted remainder the eigenvalue error may use up
RESOLUTION_FRACTION = 0.01


@dataclass(frozen=True)
class RemainderReport:
    """Computed versus predicted remainder lambda / B - limit of one branch."""
    branch: BranchId
    z: float
    computed: float
    predicted: float
    ratio: float

    @property
    def deviation(self):
        return abs(self.ratio - 1.0)


def limit_value(branch):
    """Strong-field limit of lambda_{m,l}(B) / B."""
    return branch.limit()


def _exponent(branch):
    return abs(branch.l) + 1 + 2 * (branch.m - 1)


def _log_predicted(branch, z):
    return (math.log(2.0) - gammaln(abs(branch.l) + branch.m) - gammaln(branch.m)
            + _exponent(branch) * math.log(z) - z)


def predicted_remainder(branch, field_strength, disk):
    """
    Leading term of lambda_{m,l}(B) / B - limit_value(branch).

    Parameters
    ----------
    branch: BranchId

    field_strength: FieldStrength or float

    disk: Disk or float
        Disk or its radius.

    Returns
    -------
    remainder: float
        May underflow to 0 for very large z.
    """
    B, branch = FieldStrength.normalize(field_strength, branch)
    z = B.value * as_disk(disk).radius ** 2 / 2
    return float(np.exp(_log_predicted(branch, z)))


def epsilon_m(m, b, z, tol=DEFAULT_TOL, policy=None):
    """-(m - 1) - a_m(b, z), strictly positive."""
    return a_root(m, b, z, tol=tol, policy=policy).excess()


def remainder_report(branch, field_strength, disk, tol=DEFAULT_TOL, policy=None):
    """
    Compare the computed remainder of a branch with its leading asymptotic term.

    Parameters
    ----------
    branch: BranchId

    field_strength: FieldStrength or float

    disk: Disk or float

    tol: float, optional (default=1e-12)
        Relative tolerance of the underlying a-root.

    Returns
    -------
    report: RemainderReport

    Raises
    ------
    AsymptoticRegimeError
        z <= 2 (|l| + 1 + 2(m - 1)), where the expansion is meaningless.
    PrecisionExceeded
        The precision ceiling cannot resolve the remainder.
    """
    policy = policy or default_policy()
    B, branch = FieldStrength.normalize(field_strength, branch)
    z = B.value * as_disk(disk).radius ** 2 / 2
    p = _exponent(branch)
    if z <= 2 * p:
        raise AsymptoticRegimeError(
            f'z={z:g} is outside the strong-field regime of branch ({branch.m}, {branch.l}); need z > {2 * p}'
        )
    needed = int(math.ceil(z * math.log10(math.e))) + 15
    if needed > policy.max_digits:
        raise PrecisionExceeded(
            f'resolving the remainder at z={z:g} needs {needed} digits, max_digits={policy.max_digits}'
        )

    root = a_root(branch.m, branch.b, z, tol=tol, policy=policy)
    computed = 2 * root.excess()
    predicted = float(np.exp(_log_predicted(branch, z)))

    if root.anchor == -(branch.m - 1):
        budget = 2 * tol * computed
    else:
        budget = 2 * tol * abs(root.value)
    if not predicted > 0 or budget > RESOLUTION_FRACTION * predicted:
        raise PrecisionExceeded(
            f'eigenvalue error budget {budget:.2e} exceeds {RESOLUTION_FRACTION:g} of the '
            f'predicted remainder {predicted:.2e} at z={z:g}'
        )
    return RemainderReport(branch, z, computed, predicted, computed / predicted)


def remainder_table(branch, z_values, radius=1.0, tol=DEFAULT_TOL, policy=None):
    """Reports for a list of z = B R^2 / 2 at fixed radius, in the given order."""
    reports = []
    for z in z_values:
        B = 2 * z / radius ** 2
        reports.append(remainder_report(branch, B, radius, tol=tol, policy=policy))
    return reports

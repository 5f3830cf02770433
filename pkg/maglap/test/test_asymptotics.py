# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function

import os
import sys
import math
import unittest

from numpy.testing import assert_allclose, assert_equal

# temporary solution for relative imports in case maglap is not installed
# if maglap is installed, no need to use the following line
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from maglap.core.domain import BranchId
from maglap.core.exceptions import AsymptoticRegimeError, PrecisionExceeded
from maglap.core.precision import PrecisionPolicy
from maglap.metrics import (
    epsilon_m, limit_value, predicted_remainder, remainder_report, remainder_table
)
from maglap.models.disk import branch_eigenvalue


class TestAsymptotics(unittest.TestCase):
    def test_limit(self):
        assert_equal(limit_value(BranchId(1, 0)), 1)
        assert_equal(limit_value(BranchId(3, -2)), 5)
        assert_equal(limit_value(BranchId(1, 2)), 5)

    def test_epsilon_ratio(self):
        z = 25.0
        predicted = z * math.exp(-z)
        assert_allclose(epsilon_m(1, 1, z) / predicted, 0.96, atol=0.01)

    def test_predicted(self):
        assert_allclose(predicted_remainder(BranchId(1, 0), 50.0, 1.0), 50 * math.exp(-25), rtol=1e-12)
        # (m, l) = (2, -1): 2 / (Gamma(3) Gamma(2)) z^4 e^-z
        assert_allclose(predicted_remainder(BranchId(2, -1), 40.0, 1.0), 20.0 ** 4 * math.exp(-20), rtol=1e-12)

    def test_report(self):
        report = remainder_report(BranchId(1, 0), 50.0, 1.0)
        assert_allclose(report.z, 25.0)
        self.assertLess(report.deviation, 0.1)
        lam = branch_eigenvalue(BranchId(1, 0), 50.0, 1.0)
        assert_allclose(report.computed, lam / 50.0 - 1.0, rtol=1e-6)

    def test_table_convergence(self):
        reports = remainder_table(BranchId(1, -1), [15.0, 25.0, 35.0])
        deviations = [r.deviation for r in reports]
        self.assertTrue(deviations[0] > deviations[1] > deviations[2])

    def test_remainder_envelope(self):
        z_values = [15.0, 25.0, 35.0]
        for m, l in ((1, 0), (1, -2), (2, 0), (2, 1)):
            reports = remainder_table(BranchId(m, l), z_values)
            for z, report in zip(z_values, reports):
                self.assertGreater(report.computed, 0.0)
                self.assertLessEqual(abs(report.ratio - 1.0), 10.0 / z)
            deviations = [r.deviation for r in reports]
            self.assertTrue(deviations[0] > deviations[1] > deviations[2], msg=f'branch ({m}, {l})')

    def test_weak_field(self):
        with self.assertRaises(AsymptoticRegimeError):
            remainder_report(BranchId(2, -3), 10.0, 1.0)

    def test_precision_ceiling(self):
        with self.assertRaises(PrecisionExceeded):
            remainder_report(BranchId(1, 0), 400.0, 1.0, policy=PrecisionPolicy(max_digits=60))


if __name__ == '__main__':
    unittest.main()

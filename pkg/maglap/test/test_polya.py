# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function

import os
import sys
import math
import unittest
import warnings

import numpy as np
from numpy.testing import assert_allclose, assert_equal

# temporary solution for relative imports in case maglap is not installed
# if maglap is installed, no need to use the following line
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from maglap.core.domain import BranchId
from maglap.core.exceptions import BadBracket, InvalidParam
from maglap.metrics import (
    LambdaGridSpec, classical_constant, critical_field, excess_constant, min_polya_ratio,
    polya_ratio, riesz_ratio, riesz_ratio_scan, search_window, sum_bound_ratio, weyl_count
)
from maglap.models.disk import branch_eigenvalue
from maglap.utils.data import unit_area_system


class TestConstants(unittest.TestCase):
    def test_excess_constant(self):
        assert_equal(excess_constant(0), 2.0)
        assert_allclose(excess_constant(0.5), 2 / math.sqrt(3), rtol=1e-15)
        assert_equal(excess_constant(1), 1.0)
        assert_equal(excess_constant(2.5), 1.0)
        with self.assertRaises(InvalidParam):
            excess_constant(-0.1)

    def test_classical_constant(self):
        assert_allclose(classical_constant(1), 1 / (8 * math.pi), rtol=1e-15)

    def test_weyl_count(self):
        assert_allclose(weyl_count(1.0, 40.0), 10.0, rtol=1e-15)
        assert_allclose(weyl_count(1.0, 16.0, boundary=True), 4.0 - 2.0, rtol=1e-14)
        assert_equal(weyl_count(1.0, -1.0), 0.0)


class TestPolyaRatio(unittest.TestCase):
    def test_band_edge(self):
        # lambda_3 of the unit disk sits on the crossing lambda = 3B at B = 6
        assert_allclose(polya_ratio(1.0, 6.0, 3), 1.5, rtol=1e-9)

    def test_window(self):
        assert_equal(search_window(1.0, 5.0, search_margin=2.0), 53)
        with self.assertRaises(InvalidParam):
            search_window(1.0, 5.0, search_margin=1.5)

    def test_weyl_limited(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            scan = min_polya_ratio(unit_area_system(), 50.0)
        self.assertTrue(scan.weyl_limited)
        self.assertGreaterEqual(scan.min_ratio, 1.0)
        self.assertTrue(len(caught) > 0)

    def test_strong_field(self):
        scan = min_polya_ratio(unit_area_system(), 300.0)
        self.assertFalse(scan.weyl_limited)
        self.assertLess(scan.min_ratio, 1.0)
        self.assertGreaterEqual(scan.min_ratio, 0.5)
        assert_equal(scan.ratios.size, scan.n_searched)
        assert_allclose(scan.ratios[scan.argmin_n - 1], scan.min_ratio)

    def test_critical_field(self):
        B_crit, n_crit = critical_field(unit_area_system(), 50.0, 200.0, tol_B=0.01)
        self.assertLess(abs(B_crit - 110.335), 0.01)
        assert_equal(n_crit, 11)

    def test_field_grid(self):
        minima = []
        for B in (50.0, 100.0, 200.0, 500.0, 1000.0):
            with warnings.catch_warnings():
                warnings.simplefilter('ignore')
                scan = min_polya_ratio(unit_area_system(), B)
            self.assertTrue(np.all(scan.ratios >= 0.5 - 1e-9))
            minima.append(scan.min_ratio)
        self.assertGreater(minima[0], 1.0)
        self.assertLess(minima[2], 1.0)
        self.assertTrue(np.all(np.diff(minima) <= 1e-3))
        # the last state of the lowest band, (1, -125), attains the minimum at B = 1000
        lam = branch_eigenvalue(BranchId(1, -125), 1000.0, 1 / math.sqrt(math.pi))
        assert_allclose(lam, 1039.8323611208941, rtol=1e-10)
        assert_allclose(minima[4], lam / (4 * math.pi * 126), rtol=1e-9)
        self.assertTrue(0.6 < minima[4] < 0.7)

    def test_bad_bracket(self):
        with self.assertRaises(BadBracket):
            critical_field(unit_area_system(), 50.0, 60.0)
        with self.assertRaises(InvalidParam):
            critical_field(unit_area_system(), 60.0, 50.0)

    def test_sum_bound(self):
        for B in (2.0, 20.0, 80.0):
            self.assertGreaterEqual(sum_bound_ratio(1.0, B, 10), 1.0)


class TestRieszRatio(unittest.TestCase):
    def test_ratio(self):
        lambdas = np.array([1.0, 2.0])
        assert_allclose(riesz_ratio(lambdas, math.pi, 3.0, 1), 3.0 / (classical_constant(1) * math.pi * 9.0))

    def test_grid(self):
        spec = LambdaGridSpec(factor=4, points=10)
        grid = spec.grid(5.0)
        assert_equal(grid.size, 10)
        assert_allclose(grid[-1], 20.0)
        self.assertGreater(grid[0], 5.0)
        with self.assertRaises(InvalidParam):
            LambdaGridSpec(factor=1)
        with self.assertRaises(InvalidParam):
            LambdaGridSpec(lambda_max=2.0).upper(5.0)

    def test_strong_field_bound(self):
        grid = LambdaGridSpec(factor=4)
        for gamma in (0, 0.5, 1):
            scan = riesz_ratio_scan(unit_area_system(), 500.0, gamma, grid=grid)
            self.assertLessEqual(scan.max_ratio, excess_constant(gamma) + 1e-9)
            self.assertTrue(500.0 < scan.best_lambda <= 2000.0)
            assert_equal(len(scan.table), grid.points)

    def test_counting_supremum(self):
        maxima = []
        for B in (200.0, 500.0):
            scan = riesz_ratio_scan(unit_area_system(), B, 0, grid=LambdaGridSpec(factor=4))
            polya = min_polya_ratio(unit_area_system(), B)
            # the gamma = 0 supremum is attained just above the Polya minimizer
            assert_allclose(scan.max_ratio, 1.0 / polya.min_ratio, rtol=1e-9)
            maxima.append(scan.max_ratio)
        self.assertGreater(maxima[1], maxima[0])
        self.assertGreater(maxima[0], 1.0)


if __name__ == '__main__':
    unittest.main()

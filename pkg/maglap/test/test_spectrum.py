# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function

import os
import sys
import math
import unittest

import numpy as np
from numpy.testing import assert_allclose, assert_equal, assert_array_equal

# temporary solution for relative imports in case maglap is not installed
# if maglap is installed, no need to use the following line
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from maglap.core.domain import BranchId, Disk, DiskSystem, FieldStrength
from maglap.core.exceptions import InvalidParam, NonMagneticUnsupported
from maglap.models.disk import (
    KummerDiskSolver, branch_eigenvalue, counting_function, crossing_field, enumerate_spectrum,
    lowest_band_count, nth_eigenvalue, riesz_mean, scale_spectrum
)
from maglap.models.oracle import FiniteDifferenceSolver
from maglap.metrics import weyl_count
from maglap.utils.data import random_branches, unit_area_disk


class TestDomain(unittest.TestCase):
    def test_branch(self):
        with self.assertRaises(InvalidParam):
            BranchId(0, 1)
        branch = BranchId(2, -3)
        assert_equal(branch.b, 4)
        assert_equal(branch.limit(), 3)
        assert_equal(BranchId(2, 1).limit(), 5)

    def test_field(self):
        with self.assertRaises(NonMagneticUnsupported):
            FieldStrength(0.0)
        with self.assertRaises(InvalidParam):
            FieldStrength(-1.0)
        B, branch = FieldStrength.normalize(-5.0, BranchId(1, 2))
        assert_equal(B.value, 5.0)
        assert_equal(branch, BranchId(1, -2))

    def test_system(self):
        with self.assertRaises(InvalidParam):
            DiskSystem(())
        with self.assertRaises(InvalidParam):
            Disk(-1.0)
        system = DiskSystem.from_radii(1.0, 2.0)
        assert_allclose(system.total_area, 5 * math.pi)
        assert_allclose(system.perimeter, 6 * math.pi)


class TestBranchEigenvalue(unittest.TestCase):
    def test_crossing_values(self):
        assert_allclose(branch_eigenvalue(BranchId(1, 0), 2.0, 1.0), 6.0, rtol=1e-10)
        assert_allclose(branch_eigenvalue(BranchId(1, -4), 10.0, 1.0), 30.0, rtol=1e-10)

    def test_strong_field(self):
        lam = branch_eigenvalue(BranchId(1, 0), 50.0, 1.0)
        remainder = lam / 50.0 - 1.0
        predicted = 2 * 25 * math.exp(-25)
        self.assertLess(abs(remainder / predicted - 1), 0.1)

    def test_lower_bound(self):
        for branch in random_branches(n_cases=30, random_state=3):
            for B in (0.5, 4.0, 20.0):
                self.assertGreater(branch_eigenvalue(branch, B, 1.0) / B, branch.limit())

    def test_monotone_ratio(self):
        for branch in (BranchId(1, 0), BranchId(1, -2), BranchId(2, 0), BranchId(2, 1)):
            ratios = [branch_eigenvalue(branch, B, 1.0) / B for B in (1.0, 3.0, 10.0, 30.0)]
            self.assertTrue(np.all(np.diff(ratios) < 0))

    def test_l_ordering(self):
        values = [branch_eigenvalue(BranchId(1, l), 5.0, 1.0) for l in range(0, -6, -1)]
        self.assertTrue(np.all(np.diff(values) > 0))

    def test_negative_field(self):
        assert_allclose(branch_eigenvalue(BranchId(1, 2), -5.0, 1.0),
                        branch_eigenvalue(BranchId(1, -2), 5.0, 1.0), rtol=1e-15)
        with self.assertRaises(NonMagneticUnsupported):
            branch_eigenvalue(BranchId(1, 0), 0.0, 1.0)

    def test_crossings(self):
        for k in (1, 2, 3):
            for m in range(1, k + 1):
                for l in (-5, -2, 0, 1, 3, 5):
                    for R in (0.5, 1.0):
                        branch = BranchId(m, l)
                        B = crossing_field(m, l, k, R)
                        lam = branch_eigenvalue(branch, B, R)
                        assert_allclose(lam, (l + abs(l) + 1 + 2 * k) * B, rtol=1e-9)
        with self.assertRaises(InvalidParam):
            crossing_field(2, 0, 1, 1.0)


class TestSpectrum(unittest.TestCase):
    def setUp(self):
        self.solver = KummerDiskSolver()

    def test_empty(self):
        spectrum = enumerate_spectrum(1.0, 10.0, 9.0)
        assert_equal(len(spectrum), 0)

    def test_sorted_and_bounded(self):
        spectrum = enumerate_spectrum(1.0, 3.0, 40.0)
        lambdas = spectrum.lambdas
        self.assertTrue(np.all(np.diff(lambdas) >= 0))
        self.assertTrue(np.all(lambdas <= 40.0))
        self.assertTrue(np.all(lambdas > 3.0))

    def test_critical_disk(self):
        spectrum = enumerate_spectrum(unit_area_disk(), 110.335, 139.0)
        self.assertGreaterEqual(len(spectrum), 11)
        assert_allclose(spectrum[10].lam, 4 * math.pi * 11, atol=0.2)

    def test_oracle_agreement(self):
        kummer = enumerate_spectrum(1.0, 3.0, 40.0).lambdas
        oracle = FiniteDifferenceSolver().lowest(1.0, 3.0, len(kummer)).lambdas
        assert_allclose(oracle, kummer, rtol=1e-4)

    def test_completeness(self):
        default = enumerate_spectrum(1.0, 8.0, 120.0)
        wide = enumerate_spectrum(1.0, 8.0, 120.0, sector_margin=2.0)
        assert_array_equal(default.lambdas, wide.lambdas)

    def test_union(self):
        system = DiskSystem.from_radii(1.0, 0.7)
        union = enumerate_spectrum(system, 6.0, 80.0)
        merged = np.sort(np.r_[enumerate_spectrum(1.0, 6.0, 80.0).lambdas,
                               enumerate_spectrum(0.7, 6.0, 80.0).lambdas])
        assert_array_equal(union.lambdas, merged)
        assert_equal(sorted({e.disk_index for e in union}), [0, 1])

    def test_parallel_merge(self):
        serial = enumerate_spectrum(1.0, 5.0, 60.0)
        parallel = enumerate_spectrum(1.0, 5.0, 60.0, n_jobs=2)
        assert_equal(serial.entries, parallel.entries)

    def test_domain_inclusion(self):
        for B in (5.0, 50.0):
            small = self.solver.lowest(0.8, B, 20).lambdas
            large = self.solver.lowest(1.0, B, 20).lambdas
            self.assertTrue(np.all(small >= large))

    def test_scaling(self):
        B, R = 3.0, 2.0
        scaled_field, factor = scale_spectrum(B, R)
        direct = self.solver.lowest(R, B, 10).lambdas
        unit = self.solver.lowest(1.0, scaled_field, 10).lambdas
        assert_allclose(direct, factor * unit, rtol=1e-9)


class TestNthEigenvalue(unittest.TestCase):
    def test_fast_path(self):
        lam, branch, disk_index = nth_eigenvalue(1.0, 22.0, 11)
        assert_equal(branch, BranchId(1, -10))
        assert_equal(disk_index, 0)
        reference, _, _ = KummerDiskSolver().nth(1.0, 22.0, 11)
        assert_allclose(lam, reference, rtol=1e-10)

    def test_lowest(self):
        lam, _, _ = nth_eigenvalue(1.0, 4.0, 1)
        assert_allclose(lam, enumerate_spectrum(1.0, 4.0, 40.0).lambdas.min(), rtol=1e-14)

    def test_duplicated_disks(self):
        single, _, _ = nth_eigenvalue(1.0, 5.0, 1)
        double, _, disk_index = nth_eigenvalue(DiskSystem.from_radii(1.0, 1.0), 5.0, 2)
        assert_allclose(double, single, rtol=1e-14)
        assert_equal(disk_index, 1)

    def test_invalid(self):
        with self.assertRaises(InvalidParam):
            nth_eigenvalue(1.0, 4.0, 0)


class TestCounting(unittest.TestCase):
    def test_below_field(self):
        assert_equal(counting_function(1.0, 10.0, 10.0), 0)

    def test_weak_field(self):
        # Bessel zeros of the unit disk below 30: j01, j11 (twice), j21 (twice)
        count = counting_function(1.0, 0.01, 30.0)
        assert_equal(count, 5)
        estimate = weyl_count(1.0, 30.0, boundary=True)
        self.assertLess(abs(count - estimate) / estimate, 0.15)

    def test_matches_spectrum(self):
        spectrum = enumerate_spectrum(1.0, 3.0, 20.0)
        assert_equal(counting_function(1.0, 3.0, 20.0), int(np.sum(spectrum.lambdas < 20.0)))

    def test_oracle_count(self):
        assert_equal(FiniteDifferenceSolver().counting(1.0, 3.0, 20.0), counting_function(1.0, 3.0, 20.0))

    def test_lowest_band(self):
        disk = Disk(1.0)
        assert_equal(lowest_band_count(disk, 10.5), 5)
        assert_equal(counting_function(disk, 10.5, 3 * 10.5), lowest_band_count(disk, 10.5))


class TestRieszMean(unittest.TestCase):
    def test_counting_limit(self):
        assert_equal(riesz_mean(1.0, 3.0, 20.0, 0), counting_function(1.0, 3.0, 20.0))

    def test_first_moment(self):
        lambdas = enumerate_spectrum(1.0, 5.0, 5.5).lambdas
        expected = float(np.sum(np.clip(5.5 - lambdas, 0, None)))
        assert_allclose(riesz_mean(1.0, 5.0, 5.5, 1), expected, atol=1e-14)
        lambdas = enumerate_spectrum(1.0, 5.0, 30.0).lambdas
        assert_allclose(riesz_mean(1.0, 5.0, 30.0, 1), float(np.sum(30.0 - lambdas[lambdas < 30.0])),
                        rtol=1e-12)

    def test_classical_bound(self):
        area = math.pi
        for B, lam in ((2.0, 30.0), (10.0, 60.0), (40.0, 200.0)):
            self.assertLessEqual(riesz_mean(1.0, B, lam, 1), area * lam ** 2 / (8 * math.pi))

    def test_invalid(self):
        with self.assertRaises(InvalidParam):
            riesz_mean(1.0, 3.0, 20.0, -1)


if __name__ == '__main__':
    unittest.main()

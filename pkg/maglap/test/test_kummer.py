# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function

import os
import sys
import math
import unittest
from fractions import Fraction
from unittest import mock

import mpmath
import numpy as np
from numpy.testing import assert_allclose, assert_equal
from sklearn.utils import check_random_state

# temporary solution for relative imports in case maglap is not installed
# if maglap is installed, no need to use the following line
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from maglap.core.exceptions import InvalidParam, PrecisionExceeded
from maglap.core.kummer import KummerArgs, Sign, kummer_m, kummer_m_sign, hyp2f2
from maglap.core.precision import PrecisionPolicy, MAX_DIGITS_ENV, default_policy, get_context


def mp_hyp1f1(a, b, z, dps=60):
    with mpmath.workdps(dps):
        return mpmath.hyp1f1(mpmath.mpf(a), mpmath.mpf(b), mpmath.mpf(z))


class TestPrecisionPolicy(unittest.TestCase):
    def test_defaults(self):
        policy = PrecisionPolicy()
        assert_equal(policy.working_digits(0), 30)
        assert_equal(policy.working_digits(100), 60)
        assert_equal(policy.escalate(30), 60)
        assert_equal(policy.escalate(200), 220)
        self.assertIsNone(policy.escalate(220))

    def test_ceiling(self):
        policy = PrecisionPolicy(max_digits=40)
        self.assertFalse(policy.admits(100))
        with self.assertRaises(PrecisionExceeded):
            policy.working_digits(100)

    def test_invalid(self):
        with self.assertRaises(InvalidParam):
            PrecisionPolicy(base_digits=0)
        with self.assertRaises(InvalidParam):
            PrecisionPolicy(slope=-1)

    def test_env_override(self):
        with mock.patch.dict(os.environ, {MAX_DIGITS_ENV: '400'}):
            assert_equal(default_policy().max_digits, 400)
        with mock.patch.dict(os.environ, {MAX_DIGITS_ENV: 'many'}):
            with self.assertRaises(InvalidParam):
                default_policy()

    def test_contexts(self):
        self.assertIs(get_context(15), mpmath.fp)
        ctx = get_context(40)
        self.assertIsNot(ctx, mpmath.fp)
        self.assertIs(get_context(80), ctx)


class TestKummer(unittest.TestCase):
    def setUp(self):
        self.policy = PrecisionPolicy()

    def test_values(self):
        assert_allclose(kummer_m(KummerArgs(-1, 2, 1)), 0.5, rtol=1e-15)
        assert_equal(kummer_m(KummerArgs(7.3, 1, 0)), 1.0)
        assert_allclose(kummer_m(KummerArgs(-0.5, 1, 1)), float(mp_hyp1f1(-0.5, 1, 1)), rtol=1e-14)

    def test_args(self):
        with self.assertRaises(InvalidParam):
            KummerArgs(-1, 0, 1)
        with self.assertRaises(InvalidParam):
            KummerArgs(-1, -2, 1)
        with self.assertRaises(InvalidParam):
            KummerArgs(-1, 2, -1)
        with self.assertRaises(InvalidParam):
            KummerArgs(float('nan'), 2, 1)
        assert_equal(KummerArgs(-3, 2, 1).degree, 3)
        assert_equal(KummerArgs(-3.0, 2, 1).degree, 3)
        assert_equal(KummerArgs(Fraction(-6, 2), 2, 1).degree, 3)
        self.assertIsNone(KummerArgs(-3.0000001, 2, 1).degree)

    def test_signs(self):
        self.assertEqual(kummer_m_sign(KummerArgs(-1, 2, 1.5)).sign, Sign.POSITIVE)
        self.assertEqual(kummer_m_sign(KummerArgs(-1, 2, 3)).sign, Sign.NEGATIVE)
        self.assertEqual(kummer_m_sign(KummerArgs(-1, 2, 2)).sign, Sign.ZERO)
        reference = mp_hyp1f1(-0.9, 1, 30)
        certified = kummer_m_sign(KummerArgs(-0.9, 1, 30))
        self.assertEqual(int(certified.sign), int(mpmath.sign(reference)))
        self.assertGreater(abs(certified.value_estimate), certified.error_bound)

    def test_kummer_transformation(self):
        for a in (-2.5, -0.7, 0.3, 1.9):
            for b in (1.0, 2.5, 4.0):
                for z in (0.5, 7.0, 20.0, 40.0):
                    with mpmath.workdps(60):
                        reference = mpmath.exp(z) * mpmath.hyp1f1(b - a, b, -z)
                    value = kummer_m(KummerArgs(a, b, z))
                    self.assertLessEqual(abs(value - float(reference)), 1e-10 * abs(float(reference)))

    def test_polynomial(self):
        for k in (0, 1, 4, 9):
            for b in (1, 3, 7):
                for z in (Fraction(1, 2), Fraction(5), Fraction(31, 4)):
                    exact = Fraction(0)
                    term = Fraction(1)
                    for j in range(k + 1):
                        exact += term
                        term = term * (j - k) * z / ((b + j) * (j + 1))
                    assert_equal(kummer_m(KummerArgs(-k, b, float(z))), float(exact))

    def test_polynomial_skips_series(self):
        with mock.patch('maglap.core.kummer._evaluate') as evaluate:
            assert_equal(kummer_m(KummerArgs(-2, 2, 2)), float(Fraction(-1, 3)))
            assert_equal(kummer_m(KummerArgs(-1, 2, 2)), 0.0)
            assert_equal(kummer_m(KummerArgs(-40.0, 1, 90)), float(
                sum(Fraction(math.comb(40, j)) * (-90) ** j / math.factorial(j) for j in range(41))))
        evaluate.assert_not_called()

    def test_positivity(self):
        for a in (0, 0.1, 2.5, 10):
            for z in (0, 0.3, 12, 45):
                self.assertGreaterEqual(kummer_m(KummerArgs(a, 1.5, z)), 1.0)

    def test_sign_certification(self):
        random_state = check_random_state(42)
        for _ in range(60):
            a = random_state.uniform(-12, 0)
            b = float(random_state.randint(1, 8))
            z = random_state.uniform(0.1, 40)
            certified = kummer_m_sign(KummerArgs(a, b, z), self.policy)
            digits = 2 * self.policy.working_digits(z)
            reference = mp_hyp1f1(a, b, z, dps=digits)
            self.assertEqual(int(certified.sign), int(mpmath.sign(reference)))

    def test_precision_exceeded(self):
        with self.assertRaises(PrecisionExceeded):
            kummer_m(KummerArgs(-0.5, 1, 200), policy=PrecisionPolicy(max_digits=40))


class TestHyp2f2(unittest.TestCase):
    def test_telescoping(self):
        for z in (0.5, 3.0, 12.0):
            assert_allclose(hyp2f2(1, 1, 2, 1, z), math.expm1(z) / z, rtol=1e-12)

    def test_growth(self):
        z = 40.0
        value = hyp2f2(1, 1, 2, 2, z)
        leading = math.exp(z) / z ** 2
        self.assertLess(abs(value / leading - 1), 0.05)

    def test_reference(self):
        with mpmath.workdps(60):
            reference = mpmath.hyp2f2(1, 0.5, 2, 2, 1)
        assert_allclose(hyp2f2(1, 0.5, 2, 2, 1), float(reference), rtol=1e-12)

    def test_invalid(self):
        with self.assertRaises(InvalidParam):
            hyp2f2(1, 1, 0, 2, 1.0)
        with self.assertRaises(InvalidParam):
            hyp2f2(1, 1, 2, -3, 1.0)


if __name__ == '__main__':
    unittest.main()

# SPDX-License-Identifier: BSD-2-Clause
# Copyright  (c) 2024, the 'bohrlab' Developers. All rights reserved.
import math
import unittest
from unittest.mock import patch

from bohrlab.exceptions import ConfigurationError, DomainError, NumericError, RootNotFoundError
from bohrlab.rootfind import (
    PolynomialSpec,
    abs_quartic,
    bisect,
    maximal_positive_root,
    minimal_positive_root,
    roots_in_unit_interval,
    theorem1_polynomial,
    theorem2_cubic,
)
from bohrlab.settings import METHOD_BISECTION, METHOD_BISECTION_NEWTON
from .utils import fail


class TestPolynomialSpec(unittest.TestCase):
    def test_theorem1_collapse(self):
        self.assertEqual(theorem1_polynomial(1).coefficients, {0: -4.0, 2: 8.0})
        self.assertEqual(theorem1_polynomial(2).coefficients, {0: 1.0, 1: -6.0, 2: 1.0, 4: 8.0})
        self.assertEqual(theorem1_polynomial(3).coefficients, {0: 1.0, 2: -6.0, 4: 1.0, 6: 8.0})
        with self.assertRaises(DomainError):
            theorem1_polynomial(0)

    def test_evaluation(self):
        poly = theorem2_cubic()
        self.assertEqual(poly.degree, 3)
        self.assertAlmostEqual(float(poly(2.0)), 8 - 8 - 2 + 1)
        self.assertAlmostEqual(float(poly.derivative(1.0)), 3 - 4 - 1)

    def test_validation(self):
        with self.assertRaises(DomainError):
            PolynomialSpec({0: 3.0})
        with self.assertRaises(DomainError):
            PolynomialSpec({-1: 1.0, 1: 1.0})
        with self.assertRaises(NumericError):
            PolynomialSpec({1: math.nan})

    def test_str(self):
        self.assertEqual(str(theorem1_polynomial(1)), "8r^2 - 4")
        self.assertEqual(str(theorem2_cubic()), "r^3 - 2r^2 - r + 1")


class TestRoots(unittest.TestCase):
    @patch('bohrlab.rootfind.logger')
    def test_theorem1_roots(self, mock_logger):
        mock_logger.warning = fail
        r1 = maximal_positive_root(theorem1_polynomial(1), tol=1e-12)
        self.assertAlmostEqual(r1.root, 1 / math.sqrt(2), delta=1e-12)
        self.assertEqual(minimal_positive_root(theorem1_polynomial(1), tol=1e-12).root, r1.root)
        r2 = maximal_positive_root(theorem1_polynomial(2), tol=1e-12)
        self.assertAlmostEqual(r2.root, 0.789991, delta=5e-7)
        self.assertLess(r2.residual, 1e-12)
        r3 = maximal_positive_root(theorem1_polynomial(3), tol=1e-12)
        self.assertTrue(r2.root < r3.root < 1)
        self.assertLess(r3.residual, 1e-12)

    def test_brackets(self):
        for result in roots_in_unit_interval(theorem1_polynomial(2)):
            poly = theorem1_polynomial(2)
            self.assertTrue(result.bracket.lo <= result.root <= result.bracket.hi)
            self.assertLess(poly(result.bracket.lo) * poly(result.bracket.hi), 0)
            self.assertLess(result.bracket.width, 1e-13)
            self.assertIn(result.method, (METHOD_BISECTION, METHOD_BISECTION_NEWTON))

    def test_two_roots_sorted(self):
        roots = roots_in_unit_interval(theorem1_polynomial(2))
        self.assertEqual(len(roots), 2)
        self.assertLess(roots[0].root, roots[1].root)
        self.assertAlmostEqual(roots[0].root, 0.173, delta=5e-3)

    def test_named_polynomials(self):
        self.assertAlmostEqual(minimal_positive_root(theorem2_cubic()).root, 0.554958, delta=5e-7)
        roots = [r.root for r in roots_in_unit_interval(abs_quartic()) if r.root > 1 / math.sqrt(3)]
        self.assertEqual(len(roots), 1)
        self.assertAlmostEqual(roots[0], 0.7313, delta=5e-5)

    def test_large_p(self):
        result = maximal_positive_root(theorem1_polynomial(32))
        self.assertTrue(0 < result.root < 1)
        self.assertLess(result.residual, 1e-11)

    def test_grid_point_root(self):
        # 2r - 1 vanishes exactly on a grid point
        roots = roots_in_unit_interval(PolynomialSpec({0: -1.0, 1: 2.0}))
        self.assertEqual(len(roots), 1)
        self.assertEqual(roots[0].root, 0.5)

    def test_no_root(self):
        poly = PolynomialSpec({0: 1.0, 2: 1.0})
        self.assertEqual(roots_in_unit_interval(poly), [])
        with self.assertRaises(RootNotFoundError):
            maximal_positive_root(poly)
        with self.assertRaises(RootNotFoundError):
            minimal_positive_root(poly)

    @patch('bohrlab.rootfind.logger')
    def test_tangential_warning(self, mock_logger):
        # (r - 0.5)^2 touches zero without a sign change
        roots = roots_in_unit_interval(PolynomialSpec({0: 0.25, 1: -1.0, 2: 1.0}))
        self.assertEqual(roots, [])
        mock_logger.warning.assert_called()

    def test_finer_scan_keeps_roots(self):
        polynomials = [theorem1_polynomial(p) for p in range(1, 9)] + [abs_quartic(), theorem2_cubic()]
        for poly in polynomials:
            coarse = [r.root for r in roots_in_unit_interval(poly, scan_step=1e-3)]
            fine = [r.root for r in roots_in_unit_interval(poly, scan_step=1e-5)]
            self.assertTrue(coarse, str(poly))
            for root in coarse:
                self.assertTrue(any(abs(root - other) < 1e-10 for other in fine), (str(poly), root))

    def test_configuration(self):
        with self.assertRaises(ConfigurationError):
            roots_in_unit_interval(theorem2_cubic(), scan_step=0.1)
        with self.assertRaises(ConfigurationError):
            roots_in_unit_interval(theorem2_cubic(), tol=0)


class TestBisect(unittest.TestCase):
    def test_shrinks(self):
        lo, hi, iterations = bisect(lambda x: x - 0.3, 0.0, 1.0, 1e-10)
        self.assertTrue(lo <= 0.3 <= hi)
        self.assertLess(hi - lo, 1e-10)
        self.assertGreater(iterations, 30)

    def test_not_a_bracket(self):
        with self.assertRaises(NumericError):
            bisect(lambda x: x + 1, 0.0, 1.0, 1e-10)

    def test_exact_endpoint(self):
        self.assertEqual(bisect(lambda x: x, 0.0, 1.0, 1e-10), (0.0, 0.0, 0))

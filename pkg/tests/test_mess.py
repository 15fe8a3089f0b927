from unittest import TestCase

import numpy as np

from geometry import ComplexField, QuadDifferential, TangentField, make_grid
from mess import (
    CotangentPoint,
    chart_pullback,
    compose_coefficient,
    mess_forward,
    mess_pointwise_invert,
    section_target,
)
from tags import Sign
from utils.errors import NormTooLargeError, NormViolationError


class TestPointwiseInversion(TestCase):
    def setUp(self):
        self.grid = make_grid(8, 16, 0.8)
        z = self.grid.z
        self.a = ComplexField(self.grid, 0.3 * z)
        self.b = ComplexField(self.grid, 0.2 * np.conj(z) + 0.05j)

    def test_recovers_both_coefficients(self):
        A = ComplexField(self.grid, compose_coefficient(self.a.values, self.b.values))
        B = ComplexField(self.grid, compose_coefficient(self.a.values, -self.b.values))
        a, b = mess_pointwise_invert(A, B)
        np.testing.assert_allclose(a.values, self.a.values, atol=1e-10)
        np.testing.assert_allclose(b.values, self.b.values, atol=1e-10)

    def test_zero_targets(self):
        zero = ComplexField.zeros(self.grid)
        a, b = mess_pointwise_invert(zero, zero)
        np.testing.assert_array_equal(a.values, 0.0)
        np.testing.assert_array_equal(b.values, 0.0)

    def test_sections(self):
        for sign in Sign:
            A, B = section_target(self.a, sign)
            a, b = mess_pointwise_invert(A, B)
            np.testing.assert_allclose(a.values, self.a.values, atol=1e-10)
            np.testing.assert_allclose(b.values, int(sign) * self.a.values, atol=1e-10)

    def test_targets_outside_the_disc(self):
        ones = ComplexField(self.grid, np.ones(self.grid.shape))
        with self.assertRaises(NormViolationError):
            mess_pointwise_invert(ones, ComplexField.zeros(self.grid))


class TestCotangentPoint(TestCase):
    def test_norms(self):
        grid = make_grid(16, 32, 0.8)
        point = CotangentPoint(TangentField([0.0, 0.5], grid), QuadDifferential([0.1]))
        self.assertGreater(point.wp_norm_mu, 0.0)
        self.assertGreater(point.a2_norm_Phi, 0.0)
        origin = CotangentPoint.origin(grid)
        self.assertEqual(origin.wp_norm_mu, 0.0)
        self.assertEqual(origin.a2_norm_Phi, 0.0)

    def test_solver_regime(self):
        grid = make_grid(16, 32, 0.8)
        with self.assertRaises(NormTooLargeError):
            CotangentPoint(TangentField([2.4], grid), QuadDifferential([0.0]))


class TestMessForward(TestCase):
    def test_origin(self):
        image = mess_forward(CotangentPoint.origin(make_grid(16, 32, 0.8)))
        self.assertEqual(image.mu_plus_target.sup_norm, 0.0)
        self.assertEqual(image.mu_minus_target.sup_norm, 0.0)
        self.assertTrue(image.traces_increasing())

    def test_zero_differential_keeps_the_chart(self):
        grid = make_grid(16, 32, 0.8)
        point = CotangentPoint(TangentField([0.0, 0.5], grid), QuadDifferential([0.0]))
        image = mess_forward(point)
        np.testing.assert_allclose(image.mu_plus_target.values, point.mu_base.values, atol=1e-15)
        np.testing.assert_allclose(image.mu_minus_target.values, point.mu_base.values, atol=1e-15)
        np.testing.assert_allclose(image.trace_plus, image.trace_minus, atol=1e-12)
        self.assertTrue(image.traces_increasing())

    def test_roundtrip(self):
        grid = make_grid(16, 32, 0.8)
        point = CotangentPoint(TangentField([0.0, 0.5], grid), QuadDifferential([0.1]))
        image = mess_forward(point)
        self.assertLess(image.mu_plus_target.sup_norm, 1.0)
        self.assertLess(image.mu_minus_target.sup_norm, 1.0)
        self.assertTrue(image.traces_increasing())
        a, b = mess_pointwise_invert(image.mu_plus_target.field, image.mu_minus_target.field)
        np.testing.assert_allclose(a.values, point.mu_base.values, atol=1e-9)
        np.testing.assert_allclose(b.values, chart_pullback(image.pair.mu_plus, image.chart), atol=1e-9)

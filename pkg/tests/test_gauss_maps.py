from unittest import TestCase

import numpy as np

from gauss import solve_gauss
from gauss_maps import (
    anti_holomorphic_energy,
    beltrami_of_F,
    build_pair,
    build_surface,
    energy_density_defect,
    gauss_map_composite_norm,
    harmonic_residual,
    hopf_differential,
    total_curvature_integral,
)
from geometry import QuadDifferential, make_grid
from tags import Sign
from utils.errors import InvalidParameterError


class TestFlatData(TestCase):
    """At Phi = 0 both Gauss maps are the identity of the disc."""

    @classmethod
    def setUpClass(cls):
        cls.grid = make_grid(16, 32, 0.8)
        cls.pair = build_surface(QuadDifferential([0.0]), cls.grid)

    def test_identity_maps(self):
        for sign in Sign:
            F = self.pair.F(sign)
            self.assertTrue(self.pair.mu(sign).is_zero)
            np.testing.assert_allclose(F.values.values, self.grid.z, atol=1e-8)

    def test_identities_hold(self):
        F = self.pair.F_plus
        self.assertLess(hopf_differential(F).sup(), 1e-12)
        self.assertLess(energy_density_defect(F, self.pair.phi), 1e-7)
        self.assertLess(harmonic_residual(F), 1e-6)
        self.assertEqual(anti_holomorphic_energy(self.pair.phi), 0.0)


class TestInducedPair(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.grid = make_grid(16, 32, 0.8)
        cls.Phi = QuadDifferential([0.1])
        cls.pair = build_surface(cls.Phi, cls.grid, 1e-10)

    def test_coefficients(self):
        phi = self.pair.phi
        expected = np.conj(self.Phi.evaluate(self.grid.z)) * phi.exp_minus_phi.values
        np.testing.assert_allclose(self.pair.mu_plus.values, expected, rtol=1e-14)
        np.testing.assert_array_equal(self.pair.mu_minus.values, -self.pair.mu_plus.values)
        np.testing.assert_array_equal(beltrami_of_F(phi, sign=Sign.MINUS).values, -expected)
        self.assertLess(self.pair.mu_plus.sup_norm, 1.0)

    def test_maps_are_orientation_preserving(self):
        for sign in Sign:
            F = self.pair.F(sign)
            self.assertTrue(F.is_orientation_preserving())
            self.assertLess(F.residual, 1e-8)
            self.assertTrue(np.all(np.abs(F.values.values) < 1.0))

    def test_hopf_differential(self):
        mask = self.grid.interior_mask(3)
        weight = self.pair.phi.exp_minus_phi.values[mask]
        Phi = self.Phi.evaluate(self.grid.z)[mask]
        scale = np.sqrt(np.sum(weight * np.abs(Phi) ** 2))
        for sign in Sign:
            hopf = hopf_differential(self.pair.F(sign)).values[mask]
            defect = np.sqrt(np.sum(weight * np.abs(hopf - int(sign) * Phi) ** 2))
            self.assertLess(defect / scale, 1e-3)

    def test_composite_coefficient_modulus(self):
        measured, predicted = gauss_map_composite_norm(self.pair)
        mask = self.grid.interior_mask(3)
        self.assertGreater(float(np.max(predicted.values[mask])), 0.0)
        self.assertLess(float(np.max(np.abs(measured.values - predicted.values)[mask])), 1e-4)

    def test_energy_and_total_curvature_agree(self):
        # |mu_F|^2 e^phi = |Phi|^2 e^{-phi} pointwise
        energy = anti_holomorphic_energy(self.pair.phi)
        self.assertGreater(energy, 0.0)
        self.assertAlmostEqual(total_curvature_integral(self.pair.phi) / energy, 1.0, places=12)

    def test_energy_scales_with_data(self):
        small = anti_holomorphic_energy(solve_gauss(QuadDifferential([0.05]), self.grid))
        self.assertLess(small, anti_holomorphic_energy(self.pair.phi))

    def test_mismatched_data(self):
        with self.assertRaises(InvalidParameterError):
            build_pair(self.pair.phi, QuadDifferential([0.2]))

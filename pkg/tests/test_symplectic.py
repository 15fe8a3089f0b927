from unittest import TestCase

import numpy as np

from gauss_maps import build_surface
from geometry import ComplexField, QuadDifferential, TangentField, make_grid, wp_inner
from symplectic import (
    CotangentTangent,
    TangentBasis,
    mess_pullback_wp,
    omega_c,
    omega_wp,
    random_unitary,
    remix_basis,
    verify_kahler_potential,
    verify_symplectomorphism,
)
from tags import PullbackWeight, Sign
from utils.errors import InvalidParameterError


class TestBasis(TestCase):
    def setUp(self):
        self.grid = make_grid(16, 32, 0.8)

    def test_monomials_are_orthonormal(self):
        basis = TangentBasis.monomials(4, self.grid)
        self.assertEqual(len(basis), 4)
        np.testing.assert_allclose(basis.gram, np.eye(4), atol=1e-12)

    def test_size_limits(self):
        with self.assertRaises(InvalidParameterError):
            TangentBasis.monomials(0, self.grid)
        with self.assertRaises(InvalidParameterError):
            TangentBasis.monomials(10, self.grid)

    def test_random_unitary(self):
        unitary = random_unitary(4, seed=7)
        np.testing.assert_allclose(unitary @ unitary.conj().T, np.eye(4), atol=1e-12)
        np.testing.assert_array_equal(unitary, random_unitary(4, seed=7))

    def test_remix_keeps_orthonormality(self):
        basis = TangentBasis.monomials(3, self.grid)
        remixed = remix_basis(basis, random_unitary(3, seed=1))
        np.testing.assert_allclose(remixed.gram, np.eye(3), atol=1e-12)
        with self.assertRaises(InvalidParameterError):
            remix_basis(basis, 2.0 * np.eye(3))
        with self.assertRaises(InvalidParameterError):
            remix_basis(basis, np.eye(2))


class TestForms(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.grid = make_grid(16, 32, 0.8)
        cls.flat = build_surface(QuadDifferential([0.0]), cls.grid)
        cls.pair = build_surface(QuadDifferential([0.1]), cls.grid, 1e-10)

    def test_omega_wp(self):
        nu = TangentField.monomial(1, self.grid)
        nu = nu.scaled(1.0 / nu.wp_norm())
        self.assertEqual(omega_wp(nu, nu), 0.0)
        self.assertAlmostEqual(omega_wp(nu, nu.scaled(1j)), 1.0, places=12)
        other = TangentField([0.2, 0.0, 0.1j], self.grid)
        self.assertAlmostEqual(omega_wp(nu, other), -omega_wp(other, nu), places=14)

    def test_omega_c_is_antisymmetric_and_bilinear(self):
        first = CotangentTangent.from_sides(self.pair, TangentField([0.3], self.grid), None, "a")
        second = CotangentTangent.from_sides(self.pair, None, TangentField([0.0, 0.2j], self.grid), "b")
        value = omega_c(first, second)
        self.assertNotEqual(value, 0.0)
        self.assertAlmostEqual(omega_c(second, first), -value, places=14)
        self.assertAlmostEqual(omega_c(first, first), 0.0, places=14)
        self.assertAlmostEqual(omega_c(first.scaled(2.0), second), 2.0 * value, places=12)

    def test_mess_pullback_at_the_origin(self):
        nu = TangentField([0.3, 0.1], self.grid)
        other = TangentField([0.0, 0.2j, 0.1], self.grid)
        expected = omega_wp(nu, other)
        for sign in Sign:
            for weight in PullbackWeight:
                measured = mess_pullback_wp(sign, nu, other, self.flat, weight)
                self.assertAlmostEqual(measured, expected, delta=1e-7 * abs(expected))

    def test_canonical_form_at_the_origin(self):
        nu = TangentField([0.3, 0.1], self.grid)
        other = TangentField([0.0, 0.2j, 0.1], self.grid)
        first = CotangentTangent.from_sides(self.flat, nu, None)
        second = CotangentTangent.from_sides(self.flat, other, None)
        # on the + factor alone omega_C = -omega_WP
        self.assertAlmostEqual(omega_c(first, second), -omega_wp(nu, other), delta=1e-7 * abs(omega_wp(nu, other)))

    def test_pairing_is_hermitian(self):
        nu = TangentField([0.3, 0.1], self.grid)
        other = TangentField([0.0, 0.2j], self.grid)
        self.assertAlmostEqual(wp_inner(nu, other), np.conj(wp_inner(other, nu)), places=14)

    def test_direction_as_sampled_field(self):
        nu = TangentField([0.3, 0.1], self.grid)
        other = TangentField([0.0, 0.2j], self.grid)
        sampled = ComplexField(self.grid, nu.field.values)
        self.assertAlmostEqual(omega_wp(sampled, other), omega_wp(nu, other), places=14)


class TestSymplectomorphism(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.grid = make_grid(16, 32, 0.8)
        cls.flat = build_surface(QuadDifferential([0.0]), cls.grid)
        cls.pair = build_surface(QuadDifferential([0.1]), cls.grid, 1e-10)
        cls.basis = TangentBasis.monomials(3, cls.grid)

    def test_origin(self):
        report = verify_symplectomorphism(self.flat, self.basis, self.basis, 1e-6, PullbackWeight.JACOBIAN)
        self.assertEqual(len(report.labels), 12)
        self.assertEqual(report.labels[:2], ["+0", "+i0"])
        self.assertLess(report.discrepancy, 1e-6)
        self.assertTrue(report.passed)

    def test_sigma_weight_is_exact(self):
        report = verify_symplectomorphism(self.pair, self.basis, self.basis, 1e-10, PullbackWeight.SIGMA)
        self.assertLess(report.discrepancy, 1e-10)
        np.testing.assert_allclose(report.canonical, -report.canonical.T, atol=0.0)
        self.assertGreater(np.max(np.abs(report.pulled)), 0.0)

    def test_threads_do_not_change_the_matrices(self):
        single = verify_symplectomorphism(self.pair, self.basis, self.basis, weight=PullbackWeight.SIGMA)
        pooled = verify_symplectomorphism(self.pair, self.basis, self.basis, weight=PullbackWeight.SIGMA, workers=4)
        np.testing.assert_array_equal(single.canonical, pooled.canonical)
        np.testing.assert_array_equal(single.pulled, pooled.pulled)

    def test_basis_independence(self):
        remixed = remix_basis(self.basis, random_unitary(3, seed=3))
        before = verify_symplectomorphism(self.pair, self.basis, self.basis, weight=PullbackWeight.JACOBIAN)
        after = verify_symplectomorphism(self.pair, remixed, remixed, weight=PullbackWeight.JACOBIAN)
        self.assertAlmostEqual(before.discrepancy, after.discrepancy, delta=1e-8)
        self.assertLess(before.discrepancy, 5e-3)

    def test_basis_limits(self):
        large = TangentBasis.monomials(6, self.grid)
        with self.assertRaises(InvalidParameterError):
            verify_symplectomorphism(self.pair, large, self.basis)
        other = TangentBasis.monomials(3, make_grid(8, 32, 0.8))
        with self.assertRaises(InvalidParameterError):
            verify_symplectomorphism(self.pair, other, self.basis)


class TestKahlerPotential(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.grid = make_grid(16, 32, 0.8)
        cls.basis = TangentBasis.monomials(3, cls.grid)

    def test_origin(self):
        flat = build_surface(QuadDifferential([0.0]), self.grid)
        plus = verify_kahler_potential(flat, self.basis, Sign.PLUS, 1e-8)
        np.testing.assert_allclose(plus.route_b, 2.0 * np.eye(3), atol=1e-10)
        np.testing.assert_allclose(plus.route_a, plus.route_b, atol=1e-8)
        minus = verify_kahler_potential(flat, self.basis, Sign.MINUS, 1e-8)
        np.testing.assert_allclose(minus.route_a, -minus.route_b, atol=1e-8)
        self.assertTrue(plus.passed and minus.passed)

    def test_both_sections(self):
        pair = build_surface(QuadDifferential([0.1]), self.grid, 1e-10)
        for sign in Sign:
            report = verify_kahler_potential(pair, self.basis, sign)
            self.assertLess(report.discrepancy, 5e-3)
            self.assertTrue(report.passed)
        partial = verify_kahler_potential(pair, self.basis, Sign.PLUS, members=2)
        self.assertEqual(partial.route_a.shape, (2, 2))

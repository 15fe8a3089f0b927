from unittest import TestCase

import numpy as np

from geometry import ComplexField, TangentField, d_zbar, make_annulus, make_grid
from quasiconformal import (
    BeltramiCoefficient,
    Mobius,
    bers_embedding,
    exterior_density,
    group_law,
    measured_coefficient,
    pullback_beltrami,
    reflect_extension,
    right_translation_pullback,
    schwarzian,
    solve_beltrami,
)
from quasiconformal.solver import THREE_POINT_SOURCES, THREE_POINT_TARGETS
from tags import Normalization
from utils.errors import InvalidParameterError, NormTooLargeError, NormViolationError


def bump(grid, amplitude=0.2):
    """Smooth coefficient vanishing to high order at |z| = R."""
    z = grid.z
    values = amplitude * (1.0 - np.abs(z) ** 2 / grid.R**2) ** 4 * np.conj(z) / grid.R
    return BeltramiCoefficient(ComplexField(grid, values))


class TestMobius(TestCase):
    def test_three_point(self):
        source = (0.5, 2.0j, -1.0)
        target = (1.0, -1.0, -1.0j)
        mobius = Mobius.three_point(source, target)
        np.testing.assert_allclose(mobius(np.array(source)), np.array(target), atol=1e-12)

    def test_inverse_and_compose(self):
        mobius = Mobius(1.0, 0.3j, 0.2, 1.0)
        points = np.array([0.1, 0.4j, -0.3 + 0.2j])
        np.testing.assert_allclose(mobius.inverse()(mobius(points)), points, atol=1e-13)
        np.testing.assert_allclose(mobius.itransform(mobius(points)), points, atol=1e-13)
        square = mobius.compose(mobius)
        np.testing.assert_allclose(square(points), mobius(mobius(points)), atol=1e-13)

    def test_series_normal(self):
        mobius = Mobius.series_normal(0.2, 1.5j, 0.3)
        # f(z) = 0.2 + 1.5i z + 0.15 z^2 up to second order
        h = 1e-3
        f = lambda z: 0.2 + 1.5j * z + 0.15 * z**2
        self.assertAlmostEqual(abs(mobius(f(0.0))), 0.0, places=12)
        slope = (mobius(f(h)) - mobius(f(-h))) / (2.0 * h)
        self.assertAlmostEqual(abs(slope - 1.0), 0.0, places=4)

    def test_singular(self):
        with self.assertRaises(InvalidParameterError):
            Mobius(1.0, 2.0, 2.0, 4.0)


class TestBeltramiCoefficient(TestCase):
    def test_norm_violation(self):
        grid = make_grid(8, 16, 0.8)
        with self.assertRaises(NormViolationError):
            BeltramiCoefficient(ComplexField(grid, np.ones(grid.shape)))

    def test_zero_outside_grid(self):
        grid = make_grid(8, 16, 0.8)
        mu = bump(grid)
        self.assertEqual(complex(mu.at(np.array([0.95]))[0]), 0.0)

    def test_reflection(self):
        grid = make_grid(16, 32, 0.8)
        mu = BeltramiCoefficient(ComplexField(grid, 0.2 * np.conj(grid.z)))
        exterior = make_annulus(8, 32, 1.3, 1.5)
        reflected = reflect_extension(mu, exterior)
        z = exterior.z
        np.testing.assert_allclose(reflected.values, 0.2 * z**2 / np.conj(z) ** 3, atol=1e-10)
        with self.assertRaises(InvalidParameterError):
            reflect_extension(mu, make_annulus(8, 32, 0.9, 1.5))


class TestSolveBeltrami(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.grid = make_grid(16, 32, 0.8)
        cls.mu = bump(cls.grid)
        cls.w = solve_beltrami(cls.mu, Normalization.THREE_POINT, 1e-10)

    def test_zero_coefficient_gives_identity(self):
        w = solve_beltrami(BeltramiCoefficient.zero(self.grid))
        np.testing.assert_allclose(w.values.values, self.grid.z, atol=1e-8)
        np.testing.assert_allclose(w.dz.values, 1.0, atol=1e-8)
        self.assertEqual(w.iterations, 0)

    def test_residual_and_orientation(self):
        self.assertLess(self.w.residual, 1e-8)
        self.assertTrue(self.w.is_orientation_preserving())
        np.testing.assert_allclose(
            self.w.dzbar.values[:-1], self.mu.values[:-1] * self.w.dz.values[:-1], atol=1e-8
        )

    def test_three_point_normalization(self):
        values = self.w.circle_values(np.array(THREE_POINT_SOURCES))
        np.testing.assert_allclose(values, np.array(THREE_POINT_TARGETS), atol=1e-10)
        self.assertTrue(np.all(np.abs(self.w.values.values) < 1.0))

    def test_series_normalization(self):
        w = solve_beltrami(self.mu, Normalization.SERIES, 1e-10)
        value, slope, _ = w.evaluate(np.zeros(1, dtype=complex))
        self.assertAlmostEqual(abs(value[0]), 0.0, places=10)
        self.assertAlmostEqual(abs(slope[0] - 1.0), 0.0, places=10)

    def test_boundary_trace_is_monotone(self):
        angles = self.w.trace_angles
        self.assertTrue(np.all(np.diff(angles) > 0.0))
        self.assertLess(angles[-1] - angles[0], 2.0 * np.pi)

    def test_inverse(self):
        nodes = self.grid.z[:-3]
        preimages = self.w.inverse(self.w.values.values[:-3])
        np.testing.assert_allclose(preimages, nodes, atol=1e-8)

    def test_regime(self):
        mu = bump(self.grid, amplitude=3.0)
        with self.assertRaises(NormTooLargeError):
            solve_beltrami(mu)
        with self.assertRaises(InvalidParameterError):
            solve_beltrami(self.mu, tol=0.0)


class TestGroup(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.grid = make_grid(16, 32, 0.8)
        cls.mu = bump(cls.grid, 0.1)

    def test_group_law_identities(self):
        zero = BeltramiCoefficient.zero(self.grid)
        np.testing.assert_array_equal(group_law(self.mu, zero).values, self.mu.values)
        np.testing.assert_allclose(group_law(self.mu, self.mu).values, 0.0, atol=1e-14)

    def test_right_translation_at_identity(self):
        nu = TangentField([0.3, 0.1j], self.grid)
        zero = BeltramiCoefficient.zero(self.grid)
        np.testing.assert_array_equal(right_translation_pullback(nu, zero).values, nu.field.values)

    def test_right_translation_is_complex_linear(self):
        nu = TangentField([0.3, 0.1j], self.grid)
        w = solve_beltrami(self.mu)
        single = right_translation_pullback(nu, self.mu, w_mu=w)
        rotated = right_translation_pullback(nu.scaled(1j), self.mu, w_mu=w)
        np.testing.assert_allclose(rotated.values, 1j * single.values, atol=1e-12)

    def test_right_translation_is_linear(self):
        first = TangentField([0.3, 0.1j], self.grid)
        second = TangentField([0.0, 0.0, 0.2], self.grid)
        a, b = 0.7 - 0.2j, -1.3
        w = solve_beltrami(self.mu)
        combined = right_translation_pullback(first.scaled(a) + second.scaled(b), self.mu, w_mu=w)
        separate = a * right_translation_pullback(first, self.mu, w_mu=w).values + b * right_translation_pullback(
            second, self.mu, w_mu=w
        ).values
        np.testing.assert_allclose(combined.values, separate, atol=1e-10)

    def test_right_translation_tends_to_the_identity(self):
        nu = TangentField([0.3, 0.1j], self.grid)
        gaps = []
        for t in (0.1, 0.05, 0.025):
            mu = BeltramiCoefficient(nu.field * t)
            gaps.append((right_translation_pullback(nu, mu, tol=1e-12) - nu.field).sup())
        self.assertLess(gaps[1], 0.75 * gaps[0])
        self.assertLess(gaps[2], 0.75 * gaps[1])

    def test_group_law_matches_the_composed_map(self):
        grid = make_grid(32, 64, 0.8)
        z = grid.z
        profile = (1.0 - np.abs(z) ** 2 / grid.R**2) ** 4
        mu = bump(grid, 0.8)
        nu = BeltramiCoefficient(ComplexField(grid, 0.5 * profile * (0.3 + 0.2j * z / grid.R)))
        w_mu = solve_beltrami(mu, Normalization.THREE_POINT, 1e-12)
        w_nu = solve_beltrami(nu, Normalization.THREE_POINT, 1e-12)
        composed, _, _ = w_nu.evaluate(w_mu.inverse(z))
        measured = measured_coefficient(ComplexField(grid, composed))
        expected = group_law(nu, mu, w_mu=w_mu)
        inside = grid.mask(0.6)
        self.assertLess(float(np.max(np.abs(measured.values - expected.values)[inside])), 1e-4)

    def test_pullback_along_identity(self):
        nu = TangentField([0.3, 0.1j], self.grid)
        identity = solve_beltrami(BeltramiCoefficient.zero(self.grid))
        np.testing.assert_allclose(pullback_beltrami(nu, identity).values, nu.field.values, atol=1e-7)

    def test_measured_coefficient(self):
        z = self.grid.z
        samples = ComplexField(self.grid, z + 0.1 * np.conj(z))
        np.testing.assert_allclose(measured_coefficient(samples).values, 0.1, atol=1e-9)


class TestSchwarzian(TestCase):
    def test_mobius_has_vanishing_schwarzian(self):
        grid = make_grid(32, 64, 0.8)
        mobius = Mobius(1.0, 0.3, 0.2, 1.0)
        samples = ComplexField(grid, mobius(grid.z))
        S = schwarzian(samples)
        self.assertLess(S.sup(grid.interior_mask(3)), 1e-4)

    def test_quadratic(self):
        grid = make_grid(32, 64, 0.8)
        z = grid.z
        samples = ComplexField(grid, z + 0.2 * z**2)
        # S(z + a z^2) = -6 a^2 / (1 + 2 a z)^2
        expected = -6.0 * 0.04 / (1.0 + 0.4 * z) ** 2
        np.testing.assert_allclose(schwarzian(samples).values[:-3], expected[:-3], atol=1e-5)

    def test_exponential(self):
        grid = make_grid(32, 64, 0.8)
        S = schwarzian(ComplexField(grid, np.exp(grid.z)))
        mask = grid.interior_mask(3)
        np.testing.assert_allclose(S.values[mask], -0.5, atol=1e-6)

    def test_square_on_an_annulus(self):
        annulus = make_annulus(32, 64, 0.4, 0.9)
        z = annulus.z
        S = schwarzian(ComplexField(annulus, z**2))
        mask = annulus.interior_mask(3)
        np.testing.assert_allclose(S.values[mask], (-1.5 / z**2)[mask], rtol=1e-5)

    def test_bers_embedding_is_holomorphic(self):
        grid = make_grid(16, 32, 0.8)
        exterior = make_annulus(16, 64, 1.1, 1.5)
        S = bers_embedding(bump(grid, 0.5), exterior)
        self.assertGreater(S.sup(), 0.0)
        self.assertLess(d_zbar(S).sup(exterior.interior_mask(3)), 1e-5)

    def test_bers_embedding_is_linear_near_the_origin(self):
        grid = make_grid(16, 32, 0.8)
        exterior = make_annulus(8, 32, 1.1, 1.5)
        weight = exterior_density(exterior)
        sizes = [
            float(np.max(np.abs(bers_embedding(bump(grid, t), exterior).values) / weight)) for t in (0.2, 0.1, 0.05)
        ]
        self.assertAlmostEqual(sizes[1] / sizes[0], 0.5, delta=0.05)
        self.assertAlmostEqual(sizes[2] / sizes[1], 0.5, delta=0.05)

    def test_bers_embedding(self):
        grid = make_grid(16, 32, 0.8)
        exterior = make_annulus(8, 32, 1.1, 1.5)
        zero = bers_embedding(BeltramiCoefficient.zero(grid), exterior)
        np.testing.assert_array_equal(zero.values, 0.0)
        S = bers_embedding(bump(grid, 0.1), exterior)
        self.assertTrue(np.all(np.isfinite(S.values)))
        with self.assertRaises(NormTooLargeError):
            bers_embedding(bump(grid, 2.0), exterior)
        with self.assertRaises(InvalidParameterError):
            bers_embedding(bump(grid, 0.1), make_annulus(8, 32, 0.7, 1.5))

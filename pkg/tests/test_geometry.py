from unittest import TestCase

import numpy as np

from geometry import (
    ComplexField,
    QuadDifferential,
    RealField,
    TangentField,
    d_z,
    d_zbar,
    hyperbolic_density,
    hyperbolic_density_at,
    integrate,
    laplacian,
    make_annulus,
    make_grid,
    wp_inner,
)
from utils.errors import GridMismatchError, InvalidParameterError


class TestGrid(TestCase):
    def test_nodes(self):
        grid = make_grid(16, 32, 0.8)
        self.assertEqual(grid.shape, (16, 32))
        self.assertEqual(grid.size, 512)
        self.assertAlmostEqual(grid.r_max, 0.8, places=14)
        self.assertTrue(np.all(np.diff(grid.r_nodes) > 0.0))
        self.assertGreater(grid.r_nodes[0], 0.0)

    def test_equal_arguments_give_equal_grids(self):
        self.assertEqual(make_grid(16, 32, 0.8).key, make_grid(16, 32, 0.8).key)
        self.assertNotEqual(make_grid(16, 32, 0.8).key, make_grid(16, 32, 0.9).key)

    def test_invalid_parameters(self):
        with self.assertRaises(InvalidParameterError):
            make_grid(3, 32, 0.8)
        with self.assertRaises(InvalidParameterError):
            make_grid(16, 31, 0.8)
        with self.assertRaises(InvalidParameterError):
            make_grid(16, 32, 1.0)
        with self.assertRaises(InvalidParameterError):
            make_annulus(16, 32, 1.2, 1.1)

    def test_interior_mask(self):
        grid = make_grid(16, 32, 0.8)
        mask = grid.interior_mask(3)
        self.assertTrue(np.all(mask[:13]))
        self.assertFalse(np.any(mask[13:]))

    def test_quadrature_area(self):
        grid = make_grid(24, 32, 0.8)
        self.assertAlmostEqual(float(np.sum(grid.quad_weights)), np.pi * 0.64, places=10)
        annulus = make_annulus(24, 32, 1.1, 1.5)
        self.assertAlmostEqual(float(np.sum(annulus.quad_weights)), np.pi * (1.5**2 - 1.1**2), places=10)

    def test_quadrature_is_exact_for_even_radial_powers(self):
        grid = make_grid(24, 32, 0.8)
        radius = np.abs(grid.z)
        for k in range(5):
            with self.subTest(k=k):
                exact = 2.0 * np.pi * 0.8 ** (2 * k + 2) / (2 * k + 2)
                self.assertAlmostEqual(integrate(RealField(grid, radius ** (2 * k))), exact, delta=1e-9)


class TestOperators(TestCase):
    def setUp(self):
        self.grid = make_grid(24, 32, 0.8)

    def test_wirtinger_derivatives_of_polynomials(self):
        z = self.grid.z
        f = ComplexField(self.grid, z**2 + 0.5 * np.conj(z))
        np.testing.assert_allclose(d_z(f).values, 2.0 * z, atol=1e-9)
        np.testing.assert_allclose(d_zbar(f).values, 0.5 * np.ones_like(z), atol=1e-9)

    def test_laplacian_of_radial_polynomial(self):
        f = RealField(self.grid, np.abs(self.grid.z) ** 2)
        np.testing.assert_allclose(laplacian(f).values, 4.0, atol=1e-8)

    def test_integrate(self):
        f = RealField(self.grid, np.abs(self.grid.z) ** 2)
        self.assertAlmostEqual(integrate(f), 0.5 * np.pi * 0.8**4, places=10)
        g = ComplexField(self.grid, self.grid.z)
        self.assertAlmostEqual(abs(integrate(g)), 0.0, places=12)

    def test_interpolation_between_nodes(self):
        f = ComplexField(self.grid, self.grid.z**3)
        points = np.array([0.1 + 0.2j, -0.4 + 0.1j, 0.05j, 0.6])
        np.testing.assert_allclose(f.at(points), points**3, atol=1e-7)

    def test_grid_mismatch(self):
        other = make_grid(16, 32, 0.8)
        with self.assertRaises(GridMismatchError):
            _ = ComplexField.zeros(self.grid) + ComplexField.zeros(other)


class TestDifferentials(TestCase):
    def setUp(self):
        self.grid = make_grid(24, 32, 0.8)

    def test_hyperbolic_density(self):
        self.assertAlmostEqual(float(hyperbolic_density_at(np.array([0.0]))[0]), 4.0)
        self.assertAlmostEqual(float(hyperbolic_density_at(np.array([0.5]))[0]), 64.0 / 9.0)
        density = hyperbolic_density(self.grid)
        np.testing.assert_allclose(density.values, hyperbolic_density_at(self.grid.z))
        # one value per ring
        np.testing.assert_array_equal(np.ptp(density.values, axis=1), 0.0)

    def test_liouville_equation(self):
        grid = make_grid(64, 128, 0.9)
        density = hyperbolic_density(grid)
        psi_zzbar = 0.25 * laplacian(density.apply(np.log)).values
        residual = np.abs(psi_zzbar - 0.5 * density.values)
        self.assertLess(float(np.max(residual[grid.mask(0.5)])), 1e-6)
        mask = grid.mask(0.8)
        self.assertLess(float(np.max(residual[mask] / density.values[mask])), 1e-5)

    def test_hyperbolic_weight_integral_converges(self):
        # int (1 - |z|^2)^2 / 4 over |z| <= R is pi (1 - (1 - R^2)^3) / 12
        errors = []
        for R in (0.9, 0.95, 0.99):
            grid = make_grid(32, 64, R)
            value = integrate(1.0 / hyperbolic_density(grid))
            self.assertAlmostEqual(value, np.pi * (1.0 - (1.0 - R**2) ** 3) / 12.0, places=10)
            errors.append(abs(value - np.pi / 12.0))
        self.assertTrue(errors[0] > errors[1] > errors[2])
        self.assertLess(errors[2] / (np.pi / 12.0), 1e-5)

    def test_quad_differential_degree_limit(self):
        with self.assertRaises(InvalidParameterError):
            QuadDifferential(np.ones(10))
        Phi = QuadDifferential([0.1, 0.0, 0.2])
        self.assertEqual(Phi.degree, 2)
        self.assertAlmostEqual(complex(Phi.evaluate(np.array([0.5]))[0]), 0.15)

    def test_tangent_field_closed_form(self):
        nu = TangentField([0.0, 1.0], self.grid)
        z = self.grid.z
        np.testing.assert_allclose(nu.field.values, np.conj(z) * (1.0 - np.abs(z) ** 2) ** 2 / 4.0)

    def test_wp_pairing(self):
        nu = TangentField.monomial(1, self.grid)
        other = TangentField.monomial(2, self.grid)
        self.assertAlmostEqual(abs(wp_inner(nu, other)), 0.0, places=12)
        norm = nu.wp_norm()
        self.assertGreater(norm, 0.0)
        self.assertAlmostEqual(wp_inner(nu, nu.scaled(1j)), -1j * norm**2, places=12)
        self.assertAlmostEqual(wp_inner(nu.scaled(2.0), nu), 2.0 * norm**2, places=12)

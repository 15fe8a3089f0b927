from unittest import TestCase

import numpy as np
from scipy.integrate import solve_bvp

from gauss import curvature, gauss_residual, holomorphic_energy_density, solve_gauss, w_field
from geometry import QuadDifferential, hyperbolic_density, make_annulus, make_grid
from utils.errors import InvalidParameterError


class TestSolveGauss(TestCase):
    def test_zero_differential_gives_hyperbolic_metric(self):
        grid = make_grid(16, 32, 0.8)
        phi = solve_gauss(QuadDifferential([0.0]), grid)
        self.assertEqual(phi.iterations, 0)
        np.testing.assert_array_equal(phi.u.values, 0.0)
        np.testing.assert_allclose(phi.exp_phi.values, hyperbolic_density(grid).values, rtol=1e-14)
        np.testing.assert_allclose(curvature(phi).values, -1.0, atol=1e-12)

    def test_constant_differential(self):
        grid = make_grid(16, 32, 0.8)
        Phi = QuadDifferential([0.3])
        phi = solve_gauss(Phi, grid, 1e-10)
        self.assertLessEqual(phi.residual_sup, 1e-10)
        self.assertLessEqual(gauss_residual(phi).sup(grid.interior_mask(1)), 1e-10)
        np.testing.assert_array_equal(phi.u.values[-1], 0.0)
        self.assertGreaterEqual(float(np.min(w_field(phi).values)), -1e-10)
        # the solution of a rotation-invariant problem is radial
        spread = np.ptp(phi.u.values, axis=1)
        self.assertLess(float(np.max(spread)), 1e-9)
        density = holomorphic_energy_density(phi).values
        self.assertTrue(np.all(density >= hyperbolic_density(grid).values * (1.0 - 1e-12)))

    def test_curvature_identity(self):
        grid = make_grid(16, 32, 0.8)
        Phi = QuadDifferential([0.1, 0.2j])
        phi = solve_gauss(Phi, grid, 1e-11)
        modulus = np.abs(Phi.evaluate(grid.z)) ** 2
        identity = curvature(phi).values + 1.0 - modulus * phi.exp_minus_phi.values**2
        mask = grid.interior_mask(1)
        self.assertLess(float(np.max(np.abs(identity[mask]))), 1e-8)

    def test_refinement(self):
        Phi = QuadDifferential([0.3])
        origin = np.zeros(1, dtype=complex)
        coarse = solve_gauss(Phi, make_grid(16, 16, 0.8), 1e-11)
        fine = solve_gauss(Phi, make_grid(32, 16, 0.8), 1e-11)
        self.assertGreater(float(fine.u.at(origin)[0].real), 0.0)
        self.assertAlmostEqual(
            float(coarse.u.at(origin)[0].real), float(fine.u.at(origin)[0].real), places=5
        )

    def test_invalid_arguments(self):
        with self.assertRaises(InvalidParameterError):
            solve_gauss(QuadDifferential([0.1]), make_grid(16, 32, 0.8), tol=0.0)
        with self.assertRaises(InvalidParameterError):
            solve_gauss(QuadDifferential([0.1]), make_annulus(16, 32, 0.2, 0.8))

    def test_agrees_with_radial_boundary_value_solver(self):
        grid = make_grid(32, 16, 0.8)
        c = 0.3
        phi = solve_gauss(QuadDifferential([c]), grid, 1e-12)

        def rhs(r, y):
            density = 4.0 / (1.0 - r**2) ** 2
            source = 2.0 * (density * np.expm1(y[0]) - np.exp(-y[0]) * c**2 / density)
            return np.vstack([y[1], source])

        def bc(ya, yb):
            return np.array([ya[1], yb[0]])

        mesh = np.linspace(0.0, grid.R, 65)
        oracle = solve_bvp(
            rhs, bc, mesh, np.zeros((2, mesh.size)), S=np.array([[0.0, 0.0], [0.0, -1.0]]), tol=1e-10, max_nodes=100000
        )
        self.assertTrue(oracle.success)
        np.testing.assert_allclose(phi.u.values[:, 0], oracle.sol(grid.r_nodes)[0], atol=1e-6)

import math
from unittest import TestCase

import numpy as np

from deformation import (
    DeformationScenario,
    RadialCutoff,
    ahlfors_direction,
    ahlfors_residual,
    energy_fd,
    energy_first_variation,
    energy_second_variation,
    full_velocity,
    lie_check,
    lie_energy_density_closed,
    lie_fd,
    lie_hopf_closed,
    lie_mu_F_closed,
    mu_H_dot_closed,
    pm_variations,
    pm_variations_pulled,
    pulled_back,
    push_forward,
    richardson,
    section_lift,
    stream_function,
)
from gauss_maps import build_surface
from geometry import (
    ComplexField,
    QuadDifferential,
    TangentField,
    d_z,
    d_zbar,
    hyperbolic_density_at,
    make_grid,
    psi_u,
)
from tags import Quantity, Sign
from utils.errors import GridMismatchError, InvalidParameterError


class TestRichardson(TestCase):
    def test_smooth_function(self):
        samples = np.array([1.0, 2.0, -0.5])
        result = richardson(lambda eps: np.sin(1.0 + eps) * samples, (0.1, 0.05, 0.025))
        np.testing.assert_allclose(result.value, np.cos(1.0) * samples, atol=1e-7)
        self.assertEqual(len(result.differences), 3)
        self.assertAlmostEqual(result.order_estimate, 2.0, delta=0.05)

    def test_linear_function_is_below_noise_floor(self):
        result = richardson(lambda eps: 3.0 * eps * np.ones(4), (0.02, 0.01, 0.005))
        np.testing.assert_allclose(result.value, 3.0)
        self.assertTrue(math.isnan(result.order_estimate))

    def test_two_step_ladder_has_no_order(self):
        result = richardson(lambda eps: np.exp(eps), (0.02, 0.01))
        self.assertAlmostEqual(float(result.value), 1.0, places=8)
        self.assertTrue(math.isnan(result.order_estimate))


class TestClosedForms(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.grid = make_grid(16, 32, 0.8)
        cls.pair = build_surface(QuadDifferential([0.1]), cls.grid, 1e-10)
        cls.nu = TangentField([0.2, 0.1j], cls.grid)

    def test_mu_H_dot_routes_agree(self):
        mu_F = self.pair.mu_plus.field
        pulled = pulled_back(self.nu, self.pair.F_plus)
        nu_f = TangentField([0.0, 0.0, 0.3], self.grid)
        through_lie = mu_H_dot_closed(nu_f, pulled, mu_F, through_lie=True)
        direct = mu_H_dot_closed(nu_f, pulled, mu_F, through_lie=False)
        np.testing.assert_allclose(through_lie.values, direct.values, atol=1e-14)

    def test_section_lift_moves_the_base_point_along_nu(self):
        lift = section_lift(self.nu, self.pair)
        zero = ComplexField.zeros(self.grid)
        m = self.pair.mu_plus.field
        expected_Phi = self.pair.phi.exp_phi * (1.0 + m.abs() ** 2) * self.nu.field.conj()
        delta_mu, delta_Phi = pm_variations_pulled(lift, zero, self.pair)
        np.testing.assert_allclose(delta_mu.values, self.nu.field.values, atol=1e-14)
        np.testing.assert_allclose(delta_Phi.values, expected_Phi.values, rtol=1e-12, atol=1e-14)
        delta_mu, delta_Phi = pm_variations_pulled(zero, lift, self.pair)
        np.testing.assert_allclose(delta_mu.values, self.nu.field.values, atol=1e-14)
        np.testing.assert_allclose(delta_Phi.values, -expected_Phi.values, rtol=1e-12, atol=1e-14)

    def test_energy_variations(self):
        first = energy_first_variation(self.nu, self.pair)
        rotated = energy_first_variation(self.nu.scaled(1j), self.pair)
        self.assertAlmostEqual(rotated, 1j * first, places=12)
        second = energy_second_variation(self.nu, self.nu, self.pair)
        self.assertGreater(second.real, 0.0)
        self.assertAlmostEqual(second.imag, 0.0, places=12)
        other = TangentField([0.0, 0.0, 0.5], self.grid)
        self.assertAlmostEqual(
            energy_second_variation(self.nu, other, self.pair),
            np.conj(energy_second_variation(other, self.nu, self.pair)),
            places=12,
        )

    def test_push_forward_inverts_the_pullback(self):
        lift = section_lift(self.nu, self.pair)
        target = push_forward(lift, self.pair.F_plus)
        pulled = pulled_back(target, self.pair.F_plus)
        mask = self.grid.interior_mask(3)
        gap = np.max(np.abs(pulled.values - lift.values)[mask])
        self.assertLess(gap / lift.sup(mask), 1e-4)


class TestDeformationScenario(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.grid = make_grid(16, 32, 0.8)
        cls.flat = build_surface(QuadDifferential([0.0]), cls.grid)

    def test_validation(self):
        nu = TangentField([0.4], self.grid)
        with self.assertRaises(InvalidParameterError):
            DeformationScenario(self.flat)
        with self.assertRaises(InvalidParameterError):
            DeformationScenario(self.flat, nu_plus=nu, epsilons=(0.01, 0.02))
        with self.assertRaises(InvalidParameterError):
            DeformationScenario(self.flat, nu_plus=nu, epsilons=(0.01,))
        with self.assertRaises(GridMismatchError):
            DeformationScenario(self.flat, nu_plus=TangentField([0.4], make_grid(8, 32, 0.8)))

    def test_members_are_memoized(self):
        scenario = DeformationScenario(self.flat, nu_plus=TangentField([0.4], self.grid))
        self.assertIs(scenario.member(0.01), scenario.member(0.01))
        self.assertIsNot(scenario.member(0.01), scenario.member(-0.01))

    def test_target_deformation_of_the_identity(self):
        nu = TangentField([0.4], self.grid)
        scenario = DeformationScenario(self.flat, nu_plus=nu)
        report = lie_check(scenario, Quantity.MU_F, Sign.PLUS)
        self.assertLess(report.rel_error, 1e-5)
        np.testing.assert_allclose(
            report.closed_value.values, scenario.nu_plus.values, atol=1e-8 * nu.field.sup()
        )

    def test_ahlfors_residual_needs_a_direction(self):
        with self.assertRaises(InvalidParameterError):
            ahlfors_residual(TangentField([0.0], self.grid))


class TestLieDerivatives(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.grid = make_grid(16, 32, 0.8)
        cls.pair = build_surface(QuadDifferential([0.1]), cls.grid, 1e-12)
        cls.scenario = DeformationScenario(
            cls.pair, nu_plus=TangentField([0.4], cls.grid), tol=1e-12
        )

    def test_beltrami_coefficient(self):
        report = lie_check(self.scenario, Quantity.MU_F, Sign.PLUS)
        self.assertLess(report.rel_error, 1e-2)

    def test_composed_coefficient(self):
        report = lie_check(self.scenario, Quantity.MU_H_DOT, Sign.PLUS)
        self.assertLess(report.rel_error, 1e-2)


class TestFlatClosedForms(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.grid = make_grid(16, 32, 0.8)
        cls.flat = build_surface(QuadDifferential([0.0]), cls.grid)
        z = cls.grid.z
        cls.nu_f = ComplexField(cls.grid, 0.1 * np.conj(z))
        cls.pulled = ComplexField(cls.grid, 0.2 + 0.05j * z)
        cls.zero = ComplexField.zeros(cls.grid)

    def test_coefficient(self):
        lie = lie_mu_F_closed(self.nu_f, self.pulled, self.zero)
        np.testing.assert_allclose(lie.values, (self.pulled - self.nu_f).values, atol=1e-15)

    def test_hopf_differential(self):
        lie = lie_hopf_closed(self.nu_f, self.pulled, self.zero, self.flat.phi)
        expected = self.flat.phi.exp_phi * (self.pulled.conj() - self.nu_f.conj())
        np.testing.assert_allclose(lie.values, expected.values, rtol=1e-14)

    def test_energy_densities_are_stationary(self):
        lie = lie_energy_density_closed(self.nu_f, self.pulled, self.zero, self.flat.phi)
        np.testing.assert_array_equal(lie.values, 0.0)

    def test_absent_directions(self):
        delta_mu, delta_Phi = pm_variations(None, None, self.flat)
        np.testing.assert_array_equal(delta_mu.values, 0.0)
        np.testing.assert_array_equal(delta_Phi.values, 0.0)

    def test_branch_without_direction_does_not_move(self):
        scenario = DeformationScenario(self.flat, nu_plus=TangentField([0.4], self.grid))
        fd = lie_fd(scenario, Quantity.PHI, Sign.MINUS)
        np.testing.assert_array_equal(fd.value.values, 0.0)
        self.assertTrue(math.isnan(fd.order_estimate))


class TestRadialCutoff(TestCase):
    def test_profile(self):
        cutoff = RadialCutoff(0.2, 0.8)
        np.testing.assert_allclose(cutoff(np.array([0.1, 0.2, 0.5, 0.8, 0.85])), [1.0, 1.0, 0.5, 0.0, 0.0])
        with self.assertRaises(InvalidParameterError):
            RadialCutoff(0.5, 0.4)

    def test_derivatives(self):
        cutoff = RadialCutoff(0.2, 0.8)
        radius = np.linspace(0.3, 0.7, 9)
        delta = 1e-5
        _, first, second = cutoff.derivatives(radius)
        np.testing.assert_allclose(first, (cutoff(radius + delta) - cutoff(radius - delta)) / (2 * delta), atol=1e-7)
        slope = lambda r: cutoff.derivatives(r)[1]
        np.testing.assert_allclose(second, (slope(radius + delta) - slope(radius - delta)) / (2 * delta), atol=1e-5)


class TestAhlforsDirection(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.grid = make_grid(32, 64, 0.9)
        cls.nu = TangentField([0.3, 0.1j, 0.2], cls.grid)
        cls.mask = cls.grid.interior_mask(3)
        cls.coefficient, cls.velocity = ahlfors_direction(cls.nu)

    def drift(self, velocity):
        slope = d_z(velocity).values
        combination = 2.0 * np.real(psi_u(self.grid.z) * velocity.values + slope)
        return np.max(np.abs(combination[self.mask])) / np.max(np.abs(slope[self.mask]))

    def test_full_velocity_is_tangent_to_the_circle(self):
        circle = np.exp(1j * np.linspace(0.0, 2 * np.pi, 17))
        normal = np.real(np.conj(circle) * full_velocity(self.nu, circle))
        np.testing.assert_allclose(normal, 0.0, atol=1e-15)

    def test_full_velocity_solves_the_beltrami_equation(self):
        velocity = ComplexField(self.grid, full_velocity(self.nu, self.grid.z))
        gap = np.max(np.abs(d_zbar(velocity).values - self.nu.field.values)[self.mask])
        self.assertLess(gap / self.nu.field.sup(), 1e-4)
        self.assertLess(self.drift(velocity), 1e-4)

    def test_stream_function_generates_the_velocity(self):
        sigma = ComplexField(self.grid, stream_function(self.nu, self.grid.z).astype(complex))
        generated = 2j * d_zbar(sigma).values / hyperbolic_density_at(self.grid.z)
        expected = full_velocity(self.nu, self.grid.z)
        inside = self.grid.mask(0.6)
        gap = np.max(np.abs(generated - expected)[inside])
        self.assertLess(gap / np.max(np.abs(expected)), 1e-4)

    def test_localized_direction_agrees_near_the_origin(self):
        inner = self.grid.mask(0.2 * self.grid.r_max)
        np.testing.assert_allclose(self.coefficient.values[inner], self.nu.field.values[inner], atol=1e-15)
        outer = ~self.grid.mask(0.9 * self.grid.r_max)
        np.testing.assert_array_equal(self.coefficient.values[outer], 0.0)
        np.testing.assert_array_equal(self.velocity.values[outer], 0.0)

    def test_localized_velocity(self):
        gap = np.max(np.abs(d_zbar(self.velocity).values - self.coefficient.values)[self.mask])
        self.assertLess(gap / self.coefficient.sup(), 1e-3)
        self.assertLess(self.drift(self.velocity), 1e-3)


class TestHarmonicTargets(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.grid = make_grid(24, 32, 0.9)
        cls.pair = build_surface(QuadDifferential([0.1]), cls.grid, 1e-12)
        cls.nu = TangentField([0.4], cls.grid)
        cls.target = DeformationScenario(cls.pair, nu_plus=cls.nu, tol=1e-12)
        cls.both = DeformationScenario(
            cls.pair, nu_source=TangentField([0.0, 0.4j], cls.grid), nu_plus=cls.nu, tol=1e-12
        )

    def test_target_velocity_keeps_the_conformal_factor(self):
        localized = ahlfors_residual(self.target.nu_plus)
        self.assertLess(localized, 2e-3)
        self.assertGreater(ahlfors_residual(self.nu), localized)

    def test_target_family(self):
        for quantity in (Quantity.PHI, Quantity.ANTIHOL_DENSITY, Quantity.HOL_DENSITY):
            with self.subTest(quantity=quantity):
                self.assertLess(lie_check(self.target, quantity, Sign.PLUS).rel_error, 5e-3)

    def test_source_and_target_family(self):
        for quantity in (Quantity.MU_F, Quantity.PHI, Quantity.ANTIHOL_DENSITY, Quantity.HOL_DENSITY):
            with self.subTest(quantity=quantity):
                self.assertLess(lie_check(self.both, quantity, Sign.PLUS).rel_error, 5e-3)

    def test_energy_first_variation(self):
        nu = TangentField([0.2, 0.1j], self.grid)
        closed = energy_first_variation(nu, self.pair)
        fd = energy_fd(self.pair, nu)
        self.assertLess(abs(fd - closed) / abs(closed), 5e-3)

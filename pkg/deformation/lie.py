__all__ = [
    "FiniteDifference",
    "LieReport",
    "richardson",
    "lie_fd",
    "closed_value",
    "lie_check",
    "energy_fd",
    "ahlfors_residual",
    "push_forward",
]


import math
from typing import Callable, Sequence, Tuple, Union

import numpy as np

from deformation.closed import (
    lie_energy_density_closed,
    lie_hopf_closed,
    lie_mu_F_closed,
    mu_H_dot_closed,
    pulled_back,
    section_lift,
)
from deformation.scenario import DEFAULT_EPSILONS, DeformationScenario, Source
from gauss_maps.pair import InducedGaussPair
from geometry.differential import TangentField, psi_u
from geometry.field import ComplexField
from geometry.operators import d_z
from quasiconformal.beltrami import BeltramiCoefficient
from quasiconformal.solver import QCMap, solve_beltrami
from tags.normalization import Normalization
from tags.quantity import EnergyDensity, Quantity
from tags.sign import Sign
from utils.errors import InvalidParameterError
from utils.logger import get_logger


logger = get_logger(__name__)


MIN_ORDER = 1.5
NOISE_FLOOR = 1e-13


Sample = Union[np.ndarray, float]


class FiniteDifference:
    """
    Richardson-extrapolated central difference over an epsilon ladder.

    Attributes:
        value (Sample): The extrapolated derivative.
        differences (Tuple[Sample, ...]): Central differences, one per epsilon.
        order_estimate (float): Observed order from the last three differences,
            NaN when the differences are below the noise floor.
    """

    __slots__ = ("__value", "__differences", "__order")

    def __init__(self, value: Sample, differences: Sequence[Sample], order_estimate: float) -> None:
        self.__value = value
        self.__differences = tuple(differences)
        self.__order = float(order_estimate)

    @property
    def value(self) -> Sample:
        """Returns the extrapolated derivative."""
        return self.__value

    @property
    def differences(self) -> Tuple[Sample, ...]:
        """Returns the raw central differences."""
        return self.__differences

    @property
    def order_estimate(self) -> float:
        """Returns the observed convergence order."""
        return self.__order

    def __repr__(self) -> str:
        return f"FiniteDifference(order={self.__order:.3g}, members={len(self.__differences)})"


class LieReport:
    """
    Comparison of a finite-difference Lie derivative with its closed form.

    Attributes:
        quantity (Quantity): The differentiated quantity.
        sign (Sign): Branch of the Gauss map.
        fd_value (ComplexField): Richardson-extrapolated finite difference.
        closed_value (ComplexField): The closed form.
        rel_error (float): Sup of the difference over the interior nodes,
            relative to the sup of the closed form.
        order_estimate (float): Observed order of the central differences.
    """

    __slots__ = ("__quantity", "__sign", "__fd", "__closed", "__rel_error", "__order")

    def __init__(
        self,
        quantity: Quantity,
        sign: Sign,
        fd_value: ComplexField,
        closed_value: ComplexField,
        rel_error: float,
        order_estimate: float,
    ) -> None:
        self.__quantity = Quantity(quantity)
        self.__sign = Sign(sign)
        self.__fd = fd_value
        self.__closed = closed_value
        self.__rel_error = float(rel_error)
        self.__order = float(order_estimate)

    @property
    def quantity(self) -> Quantity:
        """Returns the quantity tag."""
        return self.__quantity

    @property
    def sign(self) -> Sign:
        """Returns the branch."""
        return self.__sign

    @property
    def fd_value(self) -> ComplexField:
        """Returns the finite-difference value."""
        return self.__fd

    @property
    def closed_value(self) -> ComplexField:
        """Returns the closed-form value."""
        return self.__closed

    @property
    def rel_error(self) -> float:
        """Returns the relative discrepancy."""
        return self.__rel_error

    @property
    def order_estimate(self) -> float:
        """Returns the observed order."""
        return self.__order

    def __repr__(self) -> str:
        return (
            f"LieReport({self.__quantity.name}, {self.__sign.name}, "
            f"rel_error={self.__rel_error:.3e}, order={self.__order:.3g})"
        )


def _sup(sample: Sample, mask: np.ndarray = None) -> float:
    array = np.abs(np.asarray(sample))
    if mask is not None and array.shape == mask.shape:
        array = array[mask]
    return float(np.max(array)) if array.size else 0.0


def richardson(
    evaluate: Callable[[float], Sample],
    epsilons: Sequence[float],
    mask: np.ndarray = None,
) -> FiniteDifference:
    """
    Central differences (Q(eps) - Q(-eps)) / (2 eps) with one Richardson step.

    The last two ladder entries are combined as (r^2 D(eps / r) - D(eps)) / (r^2 - 1).

    Args:
        evaluate (Callable[[float], Sample]): Q as a function of the signed epsilon.
        epsilons (Sequence[float]): Positive, strictly decreasing ladder.
        mask (np.ndarray): Nodes used by the order estimate.

    Returns:
        FiniteDifference: The extrapolated derivative.
    """
    differences = [(evaluate(eps) - evaluate(-eps)) / (2.0 * eps) for eps in epsilons]
    ratio = epsilons[-2] / epsilons[-1]
    value = (ratio**2 * differences[-1] - differences[-2]) / (ratio**2 - 1.0)
    order = math.nan
    if len(differences) >= 3:
        coarse = _sup(differences[-3] - differences[-2], mask)
        fine = _sup(differences[-2] - differences[-1], mask)
        scale = max(_sup(differences[-1], mask), 1.0)
        if fine > NOISE_FLOOR * scale and coarse > 0.0:
            order = math.log(coarse / fine) / math.log(epsilons[-2] / epsilons[-1])
    return FiniteDifference(value, differences, order)


def lie_fd(
    scenario: DeformationScenario,
    quantity: Quantity,
    sign: Sign = Sign.PLUS,
    margin: int = 3,
) -> FiniteDifference:
    """
    Finite-difference Lie derivative of a pulled-back quantity along the family.

    Logs a warning when the observed order falls below 1.5.

    Args:
        scenario (DeformationScenario): The deformation data.
        quantity (Quantity): Quantity to differentiate.
        sign (Sign): Branch of the Gauss map.
        margin (int): Rings excluded from the order estimate at the boundary.

    Returns:
        FiniteDifference: Extrapolated field samples and the observed order.
    """
    quantity = Quantity(quantity)
    grid = scenario.pair.grid
    mask = grid.interior_mask(margin)
    result = richardson(
        lambda eps: scenario.member(eps, sign).quantity(quantity), scenario.epsilons, mask
    )
    value = ComplexField(grid, result.value)
    if not math.isnan(result.order_estimate) and result.order_estimate < MIN_ORDER:
        logger.warning(
            "finite difference of %s converges with order %.2f < %.1f",
            quantity.name,
            result.order_estimate,
            MIN_ORDER,
        )
    return FiniteDifference(value, result.differences, result.order_estimate)


def closed_value(scenario: DeformationScenario, quantity: Quantity, sign: Sign = Sign.PLUS) -> ComplexField:
    """Evaluates the closed form of the Lie derivative of ``quantity``."""
    pair = scenario.pair
    F = pair.F(sign)
    mu_F = pair.mu(sign).field
    pulled = pulled_back(scenario.nu_target(sign), F)
    nu_f = scenario.nu_source
    if nu_f is None:
        nu_f = ComplexField.zeros(pair.grid)
    quantity = Quantity(quantity)
    if quantity == Quantity.MU_F:
        return lie_mu_F_closed(nu_f, pulled, mu_F)
    if quantity == Quantity.PHI:
        return lie_hopf_closed(nu_f, pulled, mu_F, pair.phi)
    if quantity == Quantity.ANTIHOL_DENSITY:
        return lie_energy_density_closed(nu_f, pulled, mu_F, pair.phi, EnergyDensity.ANTIHOLOMORPHIC)
    if quantity == Quantity.HOL_DENSITY:
        return lie_energy_density_closed(nu_f, pulled, mu_F, pair.phi, EnergyDensity.HOLOMORPHIC)
    return mu_H_dot_closed(nu_f, pulled, mu_F, through_lie=False)


def lie_check(
    scenario: DeformationScenario,
    quantity: Quantity,
    sign: Sign = Sign.PLUS,
    margin: int = 3,
) -> LieReport:
    """Compares :func:`lie_fd` with :func:`closed_value` over the interior nodes."""
    fd = lie_fd(scenario, quantity, sign, margin)
    closed = closed_value(scenario, quantity, sign)
    mask = scenario.pair.grid.interior_mask(margin)
    error = _sup(fd.value.values - closed.values, mask)
    scale = max(_sup(closed.values, mask), _sup(fd.value.values, mask))
    rel_error = error / scale if scale > 0.0 else 0.0
    report = LieReport(quantity, sign, fd.value, closed, rel_error, fd.order_estimate)
    logger.info("%r", report)
    return report


def push_forward(lift: ComplexField, F: QCMap) -> ComplexField:
    """
    Target-side field nu_h with F*(nu_h) = ``lift``.

    nu_h(y) = lift(x) F_z(x) / conj(F_z(x)) at x = F^{-1}(y), for every node y.
    """
    x = F.inverse(F.grid.z)
    _, slope, _ = F.evaluate(x)
    return ComplexField(F.grid, lift.at(x) * slope / np.conj(slope))


def energy_fd(
    pair: InducedGaussPair,
    nu: Source,
    epsilons: Sequence[float] = DEFAULT_EPSILONS,
    tol: float = 1e-12,
) -> complex:
    """
    Finite-difference derivative L_nu E - i L_{i nu} E of E along the + section.

    For each direction the source coefficient is nu itself and the target
    coefficient is pushed forward from the one-sided lift, so that
    delta_mu = nu and F_-*(nu_-) = 0. The energy of every member is the
    anti-holomorphic energy of F^eps integrated over the source disc.

    Returns:
        complex: Comparable with :func:`energy_first_variation`.
    """
    field = nu.field if isinstance(nu, TangentField) else nu
    derivatives = []
    for direction in (field, field * 1j):
        target = push_forward(section_lift(direction, pair), pair.F_plus)
        scenario = DeformationScenario(pair, direction, target, None, epsilons, tol)
        result = richardson(lambda eps: scenario.member(eps, Sign.PLUS).energy, scenario.epsilons)
        derivatives.append(float(np.real(result.value)))
    value = complex(derivatives[0], -derivatives[1])
    logger.info("energy finite difference: %s", value)
    return value


def ahlfors_residual(
    nu: Source,
    epsilons: Sequence[float] = DEFAULT_EPSILONS,
    tol: float = 1e-12,
    margin: int = 3,
) -> float:
    """
    Relative sup of psi_u h' + psi_ubar conj(h') + h'_u + conj(h')_ubar.

    h' is the Richardson derivative at eps = 0 of the three-point normalized
    solutions h^eps with coefficient eps nu; the combination is
    2 Re(psi_u h' + h'_u) and is divided by sup |h'_u|.

    A harmonic ``nu`` is used as sampled, truncated at the grid radius; the
    localized directions of a ``DeformationScenario`` are passed as fields.

    Raises:
        InvalidParameterError: If ``nu`` is the zero field.
    """
    grid = nu.grid
    field = nu.field if isinstance(nu, TangentField) else nu
    if field.sup() == 0.0:
        raise InvalidParameterError("the Ahlfors residual needs a nonzero direction")

    def values(eps: float) -> np.ndarray:
        mu = BeltramiCoefficient(field * eps)
        return solve_beltrami(mu, Normalization.THREE_POINT, tol).values.values

    mask = grid.interior_mask(margin)
    velocity = ComplexField(grid, richardson(values, epsilons, mask).value)
    slope = d_z(velocity).values
    combination = 2.0 * np.real(psi_u(grid.z) * velocity.values + slope)
    return float(np.max(np.abs(combination[mask])) / np.max(np.abs(slope[mask])))

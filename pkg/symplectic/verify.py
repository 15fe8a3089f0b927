__all__ = [
    "SymplecticReport",
    "KahlerReport",
    "verify_symplectomorphism",
    "verify_kahler_potential",
]


from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, Tuple

import numpy as np

from deformation.closed import energy_second_variation, pulled_back, section_lift
from deformation.lie import push_forward
from gauss_maps.pair import InducedGaussPair
from geometry.differential import TangentField
from geometry.field import ComplexField
from symplectic.basis import TangentBasis
from symplectic.forms import CotangentTangent, omega_c, pullback_weight, pulled_pairing
from tags.sign import Sign
from tags.weight import PullbackWeight
from utils.errors import InvalidParameterError
from utils.logger import get_logger


logger = get_logger(__name__)


MAX_MEMBERS = 5


class SymplecticReport:
    """
    Matrices of omega_C and of -Mess_+* omega_WP + Mess_-* omega_WP on a list of tangent vectors.

    Attributes:
        labels (List[str]): One label per tangent vector, e.g. ``+0``, ``+i0``, ``-1``.
        canonical (np.ndarray): omega_C evaluated on every pair.
        pulled (np.ndarray): The Mess pullback combination on every pair.
        discrepancy (float): Frobenius norm of canonical - pulled relative to
            that of pulled; invariant under a unitary re-mixing of the bases.
        max_entry (float): max |canonical - pulled| / max |pulled|.
        passed (bool): Whether the discrepancy is within the tolerance.
    """

    __slots__ = ("__labels", "__canonical", "__pulled", "__discrepancy", "__max_entry", "__passed")

    def __init__(self, labels: Sequence[str], canonical: np.ndarray, pulled: np.ndarray, tol: float) -> None:
        self.__labels = list(labels)
        self.__canonical = canonical
        self.__pulled = pulled
        scale = max(np.linalg.norm(pulled), np.linalg.norm(canonical))
        self.__discrepancy = float(np.linalg.norm(canonical - pulled) / scale) if scale > 0.0 else 0.0
        self.__max_entry = _relative(canonical, pulled)
        self.__passed = bool(self.__discrepancy <= tol)

    @property
    def labels(self) -> List[str]:
        """Returns the tangent vector labels."""
        return list(self.__labels)

    @property
    def canonical(self) -> np.ndarray:
        """Returns the omega_C matrix."""
        return self.__canonical

    @property
    def pulled(self) -> np.ndarray:
        """Returns the Mess pullback matrix."""
        return self.__pulled

    @property
    def discrepancy(self) -> float:
        """Returns the relative discrepancy."""
        return self.__discrepancy

    @property
    def max_entry(self) -> float:
        """Returns the entrywise relative discrepancy."""
        return self.__max_entry

    @property
    def passed(self) -> bool:
        """Returns the verdict."""
        return self.__passed

    def __repr__(self) -> str:
        return f"SymplecticReport(vectors={len(self.__labels)}, discrepancy={self.__discrepancy:.3e}, passed={self.__passed})"


class KahlerReport:
    """
    Route A (canonical form on lifted one-sided deformations) against Route B
    (Hessian form of the energy) on a section.

    Attributes:
        sign (Sign): The section.
        route_a (np.ndarray): H^A_jk = (-omega_C(t_j, i t_k) + i omega_C(t_j, t_k)) / 2.
        route_b (np.ndarray): H^B_jk = 2 int e^phi (1 + |mu_F|^2) nu_j conj(nu_k).
        discrepancy (float): max |H^A - sign H^B| / max |H^B|.
        passed (bool): Whether the discrepancy is within the tolerance.
    """

    __slots__ = ("__sign", "__route_a", "__route_b", "__discrepancy", "__passed")

    def __init__(self, sign: Sign, route_a: np.ndarray, route_b: np.ndarray, tol: float) -> None:
        self.__sign = Sign(sign)
        self.__route_a = route_a
        self.__route_b = route_b
        self.__discrepancy = _relative(route_a, int(self.__sign) * route_b)
        self.__passed = bool(self.__discrepancy <= tol)

    @property
    def sign(self) -> Sign:
        """Returns the section."""
        return self.__sign

    @property
    def route_a(self) -> np.ndarray:
        """Returns the canonical-form matrix."""
        return self.__route_a

    @property
    def route_b(self) -> np.ndarray:
        """Returns the Hessian matrix."""
        return self.__route_b

    @property
    def discrepancy(self) -> float:
        """Returns the relative discrepancy."""
        return self.__discrepancy

    @property
    def passed(self) -> bool:
        """Returns the verdict."""
        return self.__passed

    def __repr__(self) -> str:
        return f"KahlerReport({self.__sign.name}, discrepancy={self.__discrepancy:.3e}, passed={self.__passed})"


def _relative(measured: np.ndarray, reference: np.ndarray) -> float:
    scale = max(float(np.max(np.abs(reference))), float(np.max(np.abs(measured))))
    if scale == 0.0:
        return 0.0
    return float(np.max(np.abs(measured - reference)) / scale)


def _check_basis(basis: TangentBasis, pair: InducedGaussPair) -> None:
    if len(basis) > MAX_MEMBERS:
        raise InvalidParameterError(f"at most {MAX_MEMBERS} basis members are supported, got {len(basis)}")
    if basis.grid != pair.grid:
        raise InvalidParameterError(f"basis grid {basis.grid!r} does not match {pair.grid!r}")


def _directions(basis: TangentBasis, prefix: str) -> List[Tuple[str, TangentField]]:
    # nu and i nu span the real tangent plane of each member
    directions = []
    for index, member in enumerate(basis):
        directions.append((f"{prefix}{index}", member))
        directions.append((f"{prefix}i{index}", member.scaled(1j)))
    return directions


def verify_symplectomorphism(
    pair: InducedGaussPair,
    basis_plus: TangentBasis,
    basis_minus: TangentBasis,
    tol: float = 5e-3,
    weight: PullbackWeight = PullbackWeight.JACOBIAN,
    workers: int = 1,
) -> SymplecticReport:
    """
    Compares omega_C with -Mess_+* omega_WP + Mess_-* omega_WP.

    Every basis member nu (and i nu) of ``basis_plus`` becomes the tangent
    vector (nu, 0) of the product of target spaces, every member of
    ``basis_minus`` becomes (0, nu). Each vector is lifted to the cotangent
    bundle through the pulled-back variations; both forms are evaluated on
    all pairs, including mixed + / - pairs.

    Args:
        pair (InducedGaussPair): Gauss maps at the base point.
        basis_plus (TangentBasis): Directions on the target of F_+.
        basis_minus (TangentBasis): Directions on the target of F_-.
        tol (float): Pass threshold of the relative discrepancy.
        weight (PullbackWeight): Area weight of the Mess pullbacks.
        workers (int): Threads used to pull back the directions.

    Returns:
        SymplecticReport: Both matrices and the verdict.
    """
    _check_basis(basis_plus, pair)
    _check_basis(basis_minus, pair)
    entries = [(label, nu, Sign.PLUS) for label, nu in _directions(basis_plus, "+")]
    entries += [(label, nu, Sign.MINUS) for label, nu in _directions(basis_minus, "-")]
    zero = ComplexField.zeros(pair.grid)

    def lift(entry) -> Tuple[ComplexField, ComplexField]:
        _, nu, side = entry
        pulled = pulled_back(nu, pair.F(side))
        return (pulled, zero) if side == Sign.PLUS else (zero, pulled)

    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        lifted = list(executor.map(lift, entries))

    tangents = [
        CotangentTangent.from_pulled(pair, plus, minus, label)
        for (label, _, _), (plus, minus) in zip(entries, lifted)
    ]
    weights = {side: pullback_weight(pair, side, weight) for side in Sign}
    size = len(entries)
    canonical = np.zeros((size, size))
    pulled = np.zeros((size, size))
    for j in range(size):
        for k in range(j + 1, size):
            canonical[j, k] = omega_c(tangents[j], tangents[k])
            pulled[j, k] = -pulled_pairing(lifted[j][0], lifted[k][0], weights[Sign.PLUS]) + pulled_pairing(
                lifted[j][1], lifted[k][1], weights[Sign.MINUS]
            )
            canonical[k, j] = -canonical[j, k]
            pulled[k, j] = -pulled[j, k]
    report = SymplecticReport([label for label, _, _ in entries], canonical, pulled, tol)
    logger.info("%r", report)
    return report


def verify_kahler_potential(
    pair: InducedGaussPair,
    basis: TangentBasis,
    sign: Sign = Sign.PLUS,
    tol: float = 5e-3,
    members: Optional[int] = None,
) -> KahlerReport:
    """
    Compares the canonical form on a section with the Hessian of the energy.

    Route A pushes the one-sided lift of nu_j (and of i nu_j) forward to the
    target disc of the ``sign`` side and lifts that target direction back
    through the Gauss maps, so that delta_mu = nu_j, and evaluates
    H^A_jk = (-omega_C(t_j, t(i nu_k)) + i omega_C(t_j, t_k)) / 2.
    Route B is 2 int e^phi (1 + |mu_F|^2) nu_j conj(nu_k). On the + section
    H^A = H^B, on the - section H^A = -H^B.

    Args:
        pair (InducedGaussPair): Gauss maps at the base point.
        basis (TangentBasis): Directions of the source disc.
        sign (Sign): The section.
        tol (float): Pass threshold of the relative discrepancy.
        members (Optional[int]): Use only the first members of the basis.

    Returns:
        KahlerReport: Both matrices and the verdict.
    """
    _check_basis(basis, pair)
    sign = Sign(sign)
    fields = basis.members[: members or len(basis)]

    def tangent(nu: TangentField, label: str) -> CotangentTangent:
        target = push_forward(section_lift(nu, pair), pair.F(sign))
        if sign == Sign.PLUS:
            return CotangentTangent.from_sides(pair, target, None, label)
        return CotangentTangent.from_sides(pair, None, target, label)

    real = [tangent(nu, f"{index}") for index, nu in enumerate(fields)]
    rotated = [tangent(nu.scaled(1j), f"i{index}") for index, nu in enumerate(fields)]
    size = len(fields)
    route_a = np.zeros((size, size), dtype=complex)
    route_b = np.zeros((size, size), dtype=complex)
    for j in range(size):
        for k in range(size):
            route_a[j, k] = 0.5 * (-omega_c(real[j], rotated[k]) + 1j * omega_c(real[j], real[k]))
            route_b[j, k] = energy_second_variation(fields[j], fields[k], pair)
    report = KahlerReport(sign, route_a, route_b, tol)
    logger.info("%r", report)
    return report

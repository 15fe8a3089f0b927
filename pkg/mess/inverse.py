__all__ = ["mess_pointwise_invert", "section_target"]


from typing import Tuple

import numpy as np

from geometry.field import ComplexField, same_grid
from tags.sign import Sign
from utils.errors import (
    InvalidParameterError,
    NewtonDivergenceError,
    NonUniqueCandidateError,
    NormViolationError,
)
from utils.logger import get_logger


logger = get_logger(__name__)


def _equations(a, b, A, B):
    first = a + b - A - A * np.conj(a) * b
    second = a - b - B + B * np.conj(a) * b
    return first, second


def _holomorphic_block(c: np.ndarray) -> np.ndarray:
    # c * dv as a real 2x2 block acting on (Re dv, Im dv)
    return np.stack([np.stack([c.real, -c.imag], -1), np.stack([c.imag, c.real], -1)], -2)


def _antiholomorphic_block(c: np.ndarray) -> np.ndarray:
    # c * conj(dv)
    return np.stack([np.stack([c.real, c.imag], -1), np.stack([c.imag, -c.real], -1)], -2)


def _jacobian(a, b, A, B) -> np.ndarray:
    size = a.size
    J = np.zeros((size, 4, 4))
    # d/da, d/dconj(a), d/db of both equations
    J[:, 0:2, 0:2] = _holomorphic_block(np.ones(size, dtype=complex)) + _antiholomorphic_block(-A * b)
    J[:, 0:2, 2:4] = _holomorphic_block(1.0 - A * np.conj(a))
    J[:, 2:4, 0:2] = _holomorphic_block(np.ones(size, dtype=complex)) + _antiholomorphic_block(B * b)
    J[:, 2:4, 2:4] = _holomorphic_block(-1.0 + B * np.conj(a))
    return J


def _newton(a, b, A, B, tol: float, maxiter: int):
    a, b = a.copy(), b.copy()
    error = np.full(a.size, np.inf)
    for _ in range(maxiter):
        first, second = _equations(a, b, A, B)
        error = np.abs(first) + np.abs(second)
        active = error > tol
        if not np.any(active):
            break
        rhs = -np.column_stack([first.real, first.imag, second.real, second.imag])[active]
        try:
            step = np.linalg.solve(_jacobian(a[active], b[active], A[active], B[active]), rhs[..., None])[..., 0]
        except np.linalg.LinAlgError:
            break
        a[active] += step[:, 0] + 1j * step[:, 1]
        b[active] += step[:, 2] + 1j * step[:, 3]
        if not np.all(np.isfinite(a) & np.isfinite(b)):
            break
    converged = np.isfinite(error) & (error <= tol)
    admissible = converged & (np.abs(a) < 1.0) & (np.abs(b) < 1.0)
    return a, b, admissible, error


def mess_pointwise_invert(
    A: ComplexField,
    B: ComplexField,
    tol: float = 1e-12,
    maxiter: int = 50,
) -> Tuple[ComplexField, ComplexField]:
    """
    Solves A = (a + b) / (1 + conj(a) b), B = (a - b) / (1 - conj(a) b) at every node.

    The system is written as a + b - A - A conj(a) b = 0 and
    a - b - B + B conj(a) b = 0 and solved by Newton's method in four real
    unknowns per node, once from ((A + B) / 2, (A - B) / 2) and once from
    (0, 0). Roots with |a| >= 1 or |b| >= 1 are rejected.

    Args:
        A (ComplexField): Coefficient of z_+.
        B (ComplexField): Coefficient of z_-.
        tol (float): Per-node residual bound.
        maxiter (int): Newton step budget.

    Returns:
        Tuple[ComplexField, ComplexField]: (a, b) = (mu_z, z*(mu_F+)).

    Raises:
        NormViolationError: If sup |A| or sup |B| is not below 1.
        NewtonDivergenceError: If no admissible root is found at some node.
        NonUniqueCandidateError: If the two seeds reach distinct admissible roots.
    """
    grid = same_grid(A, B)
    if tol <= 0.0:
        raise InvalidParameterError(f"tol must be positive, got {tol!r}")
    if A.sup() >= 1.0 or B.sup() >= 1.0:
        raise NormViolationError(f"targets must have sup-norm < 1, got {A.sup():.4g}, {B.sup():.4g}")
    left, right = A.flat.astype(complex), B.flat.astype(complex)
    a1, b1, ok1, error1 = _newton(0.5 * (left + right), 0.5 * (left - right), left, right, tol, maxiter)
    zeros = np.zeros_like(left)
    a2, b2, ok2, _ = _newton(zeros, zeros, left, right, tol, maxiter)
    distinct = ok1 & ok2 & (np.abs(a1 - a2) + np.abs(b1 - b2) > np.sqrt(tol))
    if np.any(distinct):
        node = int(np.flatnonzero(distinct)[0])
        raise NonUniqueCandidateError(f"two admissible roots at node {node}; tolerance too loose")
    failed = ~(ok1 | ok2)
    if np.any(failed):
        node = int(np.flatnonzero(failed)[0])
        raise NewtonDivergenceError("pointwise Mess inversion failed", float(error1[node]), maxiter, node)
    a = np.where(ok1, a1, a2)
    b = np.where(ok1, b1, b2)
    logger.debug("pointwise inversion: %d nodes solved from the secondary seed", int(np.sum(~ok1)))
    return ComplexField(grid, a), ComplexField(grid, b)


def section_target(mu_z: ComplexField, sign: Sign = Sign.PLUS) -> Tuple[ComplexField, ComplexField]:
    """
    Mess targets along the one-sided sections z*(mu_F+) = +-mu_z.

    On the + section the target pair is (2 mu_z / (1 + |mu_z|^2), 0), on the
    - section it is (0, 2 mu_z / (1 + |mu_z|^2)).
    """
    folded = 2.0 * mu_z / (1.0 + mu_z.abs() ** 2)
    zero = ComplexField.zeros(mu_z.grid)
    if Sign(sign) == Sign.PLUS:
        return ComplexField(mu_z.grid, folded.values), zero
    return zero, ComplexField(mu_z.grid, folded.values)

__all__ = ["STENCIL_WIDTH", "INTERP_WIDTH", "fd_weights", "lagrange_weights", "interval_weights"]


from math import factorial

import numpy as np
from scipy import linalg


STENCIL_WIDTH = 7
INTERP_WIDTH = 6


def fd_weights(offsets: np.ndarray, order: int) -> np.ndarray:
    """Finite-difference weights on unit-spaced nodes.

    Solves the Vandermonde system sum_k w_k x_k^p / p! = delta_{p, order} so that
    sum_k w_k f(x_k) approximates the ``order``-th derivative at 0.

    Args:
        offsets (np.ndarray): Node positions relative to the evaluation point,
            in units of the grid spacing.
        order (int): Derivative order (0 <= order < len(offsets)).

    Returns:
        np.ndarray: One weight per offset.
    """
    offsets = np.asarray(offsets, dtype=float)
    powers = np.arange(offsets.size)
    vandermonde = offsets[None, :] ** powers[:, None]
    vandermonde /= np.array([factorial(p) for p in powers], dtype=float)[:, None]
    rhs = np.zeros(offsets.size)
    rhs[order] = 1.0
    return linalg.solve(vandermonde, rhs)


def lagrange_weights(t: np.ndarray, width: int = INTERP_WIDTH) -> np.ndarray:
    """Lagrange basis values on the nodes 0, 1, ..., width - 1.

    Args:
        t (np.ndarray): Evaluation positions relative to the first window node.
        width (int): Number of window nodes.

    Returns:
        np.ndarray: Array of shape ``t.shape + (width,)``.
    """
    t = np.asarray(t, dtype=float)
    nodes = np.arange(width, dtype=float)
    weights = np.ones(t.shape + (width,))
    for k in range(width):
        for m in range(width):
            if m != k:
                weights[..., k] *= (t - nodes[m]) / (nodes[k] - nodes[m])
    return weights


def interval_weights(nodes: np.ndarray, a: float, b: float) -> np.ndarray:
    """Weights integrating the interpolating polynomial of ``nodes`` over [a, b]."""
    center = nodes.mean()
    scale = max(np.ptp(nodes), 1e-300)
    u = (nodes - center) / scale
    ua, ub = (a - center) / scale, (b - center) / scale
    powers = np.arange(nodes.size)
    moments = scale * (ub ** (powers + 1) - ua ** (powers + 1)) / (powers + 1)
    vandermonde = u[:, None] ** powers[None, :]
    return linalg.solve(vandermonde.T, moments)

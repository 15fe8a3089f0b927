__all__ = ["RiemannMap", "harmonic_conjugate"]


from typing import Tuple

import numpy as np

from utils.errors import ConvergenceError
from utils.logger import get_logger


logger = get_logger(__name__)


def harmonic_conjugate(values: np.ndarray) -> np.ndarray:
    """Discrete harmonic conjugate of real boundary data on equispaced angles."""
    spectrum = -1j * np.fft.rfft(values)
    spectrum[0] = 0.0
    return np.fft.irfft(spectrum, n=values.size)


class RiemannMap:
    """
    Conformal map f of the unit disc onto the interior of a starlike curve.

    The curve is gamma(s) = e^{is} + sum_{n<0} c_n e^{ins}, the image of the
    unit circle under z + sum c_n z^n. The boundary correspondence
    f(e^{it}) = gamma(S(t)) with f(0) = 0, f'(0) > 0 is found by Theodorsen's
    fixed-point iteration written for the parametrization S; the inverse map
    is evaluated inside the curve by the barycentric Cauchy formula.
    """

    def __init__(
        self,
        laurent: np.ndarray,
        points: int = 512,
        atol: float = 1e-13,
        maxiter: int = 500,
    ) -> None:
        """Computes the boundary correspondence.

        Args:
            laurent (np.ndarray): Coefficients c_{-1}, c_{-2}, ... of the curve.
            points (int): Number of boundary samples.
            atol (float): Convergence tolerance of the correspondence.
            maxiter (int): Iteration budget.

        Raises:
            ConvergenceError: If the curve is not starlike or the iteration stalls.
        """
        self.__laurent = np.asarray(laurent, dtype=complex)
        self.__modes = -np.arange(1, self.__laurent.size + 1)
        self.__t = 2.0 * np.pi * np.arange(points) / points
        self.__check_starlike()
        S = self.__t.copy()
        change = np.inf
        for iteration in range(1, maxiter + 1):
            target = self.__t + harmonic_conjugate(np.log(np.abs(self.gamma(S))))
            updated = self.__solve_angle(target, S)
            change = float(np.max(np.abs(updated - S)))
            S = updated
            if change < atol:
                logger.debug("boundary correspondence converged after %d iterations", iteration)
                break
        else:
            raise ConvergenceError("boundary correspondence did not converge", change, maxiter)
        self.__S = S
        self.__offset = np.fft.fft(S - self.__t) / points
        self.__wavenumbers = np.fft.fftfreq(points, d=1.0 / points)
        derivative = 1j * self.__wavenumbers * np.fft.fft(S - self.__t)
        derivative[points // 2] = 0.0
        dS = 1.0 + np.fft.ifft(derivative).real
        self.__nodes = self.gamma(S)
        self.__denominator_weights = self.gamma_prime(S) * dS
        self.__numerator_weights = np.exp(1j * self.__t) * self.__denominator_weights

    @property
    def laurent(self) -> np.ndarray:
        """Returns the curve coefficients c_{-1}, c_{-2}, ..."""
        return self.__laurent

    @property
    def correspondence(self) -> Tuple[np.ndarray, np.ndarray]:
        """Returns the samples (t_j, S(t_j))."""
        return self.__t, self.__S

    def gamma(self, s: np.ndarray) -> np.ndarray:
        """The curve gamma(s)."""
        s = np.asarray(s, dtype=float)
        if not self.__laurent.size:
            return np.exp(1j * s)
        return np.exp(1j * s) + np.exp(1j * np.multiply.outer(s, self.__modes)) @ self.__laurent

    def gamma_prime(self, s: np.ndarray) -> np.ndarray:
        """The derivative d gamma / ds."""
        s = np.asarray(s, dtype=float)
        if not self.__laurent.size:
            return 1j * np.exp(1j * s)
        terms = np.exp(1j * np.multiply.outer(s, self.__modes)) * (1j * self.__modes)
        return 1j * np.exp(1j * s) + terms @ self.__laurent

    def preimage_angle(self, sigma: np.ndarray) -> np.ndarray:
        """Returns t with S(t) = sigma, i.e. f(e^{it}) = gamma(sigma)."""
        sigma = np.atleast_1d(np.asarray(sigma, dtype=float))
        t = sigma.copy()
        for _ in range(60):
            phases = np.exp(1j * np.multiply.outer(t, self.__wavenumbers))
            value = t + (phases @ self.__offset).real
            slope = 1.0 + (phases @ (1j * self.__wavenumbers * self.__offset)).real
            step = (value - sigma) / slope
            t = t - step
            if np.max(np.abs(step)) < 1e-15:
                break
        return t

    def inverse(self, points: np.ndarray, chunk: int = 2048) -> Tuple[np.ndarray, np.ndarray]:
        """
        Evaluates f^{-1} and its derivative inside the curve.

        Args:
            points (np.ndarray): Points inside the curve.
            chunk (int): Number of points handled per block.

        Returns:
            Tuple[np.ndarray, np.ndarray]: Values and holomorphic derivatives.
        """
        points = np.asarray(points, dtype=complex)
        flat = points.ravel()
        values = np.empty(flat.size, dtype=complex)
        derivatives = np.empty(flat.size, dtype=complex)
        for start in range(0, flat.size, chunk):
            block = flat[start : start + chunk]
            kernel = 1.0 / (self.__nodes[None, :] - block[:, None])
            numerator = kernel @ self.__numerator_weights
            denominator = kernel @ self.__denominator_weights
            kernel = kernel * kernel
            d_numerator = kernel @ self.__numerator_weights
            d_denominator = kernel @ self.__denominator_weights
            values[start : start + chunk] = numerator / denominator
            derivatives[start : start + chunk] = (
                d_numerator * denominator - numerator * d_denominator
            ) / denominator**2
        return values.reshape(points.shape), derivatives.reshape(points.shape)

    def __check_starlike(self) -> None:
        fine = np.linspace(0.0, 2.0 * np.pi, 4 * self.__t.size, endpoint=False)
        turning = np.imag(self.gamma_prime(fine) / self.gamma(fine))
        if np.min(turning) <= 0.0:
            raise ConvergenceError("image curve is not starlike about the origin", float(np.min(turning)))

    def __solve_angle(self, target: np.ndarray, start: np.ndarray) -> np.ndarray:
        S = start.copy()
        for _ in range(50):
            gamma = self.gamma(S)
            angle = S + np.angle(gamma * np.exp(-1j * S))
            slope = np.imag(self.gamma_prime(S) / gamma)
            step = (angle - target) / slope
            S = S - step
            if np.max(np.abs(step)) < 1e-15:
                break
        return S

__all__ = ["Mobius"]


from typing import Sequence

import numpy as np

from utils.errors import InvalidParameterError


class Mobius:
    """
    Completely immutable Moebius transformation z -> (a z + b) / (c z + d).

    Attributes:
        a, b, c, d (complex): The coefficients, normalized so that ad - bc = 1.

    Methods:
        transform(z): Apply the map.
        itransform(w): Apply the inverse map.
        derivative(z): Holomorphic derivative of the map.
    """

    __slots__ = ("__a", "__b", "__c", "__d")

    def __init__(self, a: complex, b: complex, c: complex, d: complex) -> None:
        """Initializes the transformation.

        Raises:
            InvalidParameterError: If the coefficient matrix is singular.
        """
        det = a * d - b * c
        if det == 0:
            raise InvalidParameterError("singular Moebius coefficients")
        scale = np.sqrt(complex(det))
        self.__a = complex(a) / scale
        self.__b = complex(b) / scale
        self.__c = complex(c) / scale
        self.__d = complex(d) / scale

    @classmethod
    def identity(cls) -> "Mobius":
        """Returns the identity map."""
        return cls(1.0, 0.0, 0.0, 1.0)

    @classmethod
    def to_standard(cls, points: Sequence[complex]) -> "Mobius":
        """Returns the map sending (p1, p2, p3) to (0, infinity, 1)."""
        p1, p2, p3 = (complex(p) for p in points)
        return cls(p3 - p2, -p1 * (p3 - p2), p3 - p1, -p2 * (p3 - p1))

    @classmethod
    def three_point(cls, source: Sequence[complex], target: Sequence[complex]) -> "Mobius":
        """Returns the unique map sending the three ``source`` points to ``target``."""
        return cls.to_standard(target).inverse().compose(cls.to_standard(source))

    @classmethod
    def series_normal(cls, w0: complex, w1: complex, w2: complex) -> "Mobius":
        """Returns M with M(f) normalized at 0 for a map with f(0)=w0, f'(0)=w1, f''(0)=w2.

        M(zeta) = a (zeta - w0) / (1 + c (zeta - w0)) with a = 1 / w1 and
        c = w2 / (2 w1^2) makes (M o f)(0) = 0, (M o f)'(0) = 1 and (M o f)''(0) = 0.
        """
        a = 1.0 / w1
        c = w2 / (2.0 * w1**2)
        return cls(a, -a * w0, c, 1.0 - c * w0)

    @property
    def a(self) -> complex:
        """Returns the coefficient a."""
        return self.__a

    @property
    def b(self) -> complex:
        """Returns the coefficient b."""
        return self.__b

    @property
    def c(self) -> complex:
        """Returns the coefficient c."""
        return self.__c

    @property
    def d(self) -> complex:
        """Returns the coefficient d."""
        return self.__d

    def transform(self, z: np.ndarray) -> np.ndarray:
        return (self.__a * z + self.__b) / (self.__c * z + self.__d)

    __call__ = transform

    def itransform(self, w: np.ndarray) -> np.ndarray:
        return (self.__d * w - self.__b) / (-self.__c * w + self.__a)

    def derivative(self, z: np.ndarray) -> np.ndarray:
        return 1.0 / (self.__c * z + self.__d) ** 2

    def inverse(self) -> "Mobius":
        """Returns the inverse transformation."""
        return Mobius(self.__d, -self.__b, -self.__c, self.__a)

    def compose(self, inner: "Mobius") -> "Mobius":
        """Returns self o inner."""
        return Mobius(
            self.__a * inner.a + self.__b * inner.c,
            self.__a * inner.b + self.__b * inner.d,
            self.__c * inner.a + self.__d * inner.c,
            self.__c * inner.b + self.__d * inner.d,
        )

    def __repr__(self) -> str:
        return f"Mobius(a={self.__a:.6g}, b={self.__b:.6g}, c={self.__c:.6g}, d={self.__d:.6g})"

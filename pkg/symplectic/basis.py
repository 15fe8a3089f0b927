__all__ = ["TangentBasis", "remix_basis", "random_unitary", "MAX_BASIS"]


from typing import List, Sequence

import numpy as np

from geometry.differential import MAX_DEGREE, TangentField, wp_inner
from geometry.grid import PolarGrid
from utils.errors import GridMismatchError, InvalidParameterError


MAX_BASIS = MAX_DEGREE + 1


def _combine(members: Sequence[TangentField], weights: Sequence[complex]) -> TangentField:
    total = members[0].scaled(weights[0])
    for member, weight in zip(members[1:], weights[1:]):
        total = total + member.scaled(weight)
    return total


def _gram(members: Sequence[TangentField]) -> np.ndarray:
    size = len(members)
    gram = np.empty((size, size), dtype=complex)
    for j in range(size):
        for k in range(j, size):
            gram[j, k] = wp_inner(members[j], members[k])
            gram[k, j] = np.conj(gram[j, k])
    return gram


class TangentBasis:
    """
    Weil-Petersson orthonormal family of tangent fields on one grid.

    Attributes:
        members (List[TangentField]): The basis vectors.
        gram (np.ndarray): Hermitian matrix of pairings <members_j, members_k>.
    """

    __slots__ = ("__members", "__gram")

    def __init__(self, members: Sequence[TangentField]) -> None:
        """Initializes the basis from already orthonormal members.

        Raises:
            InvalidParameterError: If the family is empty or too large.
            GridMismatchError: If the members live on different grids.
        """
        members = list(members)
        if not 1 <= len(members) <= MAX_BASIS:
            raise InvalidParameterError(f"a basis needs 1 to {MAX_BASIS} members, got {len(members)}")
        for member in members[1:]:
            if member.grid != members[0].grid:
                raise GridMismatchError(f"{member.grid!r} does not match {members[0].grid!r}")
        self.__members = members
        self.__gram = _gram(members)

    @classmethod
    def monomials(cls, size: int, grid: PolarGrid) -> "TangentBasis":
        """
        Orthonormalizes the fields of q = z^k, k < size, under the WP pairing.

        On a disc the monomials are already orthogonal and Gram-Schmidt
        reduces to a normalization.
        """
        if not 1 <= size <= MAX_BASIS:
            raise InvalidParameterError(f"basis size must be in [1, {MAX_BASIS}], got {size}")
        members: List[TangentField] = []
        for k in range(size):
            vector = TangentField.monomial(k, grid)
            for previous in members:
                vector = vector + previous.scaled(-wp_inner(vector, previous))
            norm = vector.wp_norm()
            if norm == 0.0:
                raise InvalidParameterError(f"monomial {k} is dependent on the lower degrees")
            members.append(vector.scaled(1.0 / norm))
        return cls(members)

    @property
    def members(self) -> List[TangentField]:
        """Returns a copy of the member list."""
        return list(self.__members)

    @property
    def gram(self) -> np.ndarray:
        """Returns the Gram matrix."""
        return self.__gram.copy()

    @property
    def grid(self) -> PolarGrid:
        """Returns the common grid."""
        return self.__members[0].grid

    def __len__(self) -> int:
        return len(self.__members)

    def __iter__(self):
        return iter(self.__members)

    def __getitem__(self, index: int) -> TangentField:
        return self.__members[index]

    def __repr__(self) -> str:
        return f"TangentBasis(size={len(self.__members)}, {self.grid!r})"


def remix_basis(basis: TangentBasis, unitary: np.ndarray, tol: float = 1e-10) -> TangentBasis:
    """
    Returns the basis with members sum_k U_jk members_k.

    Raises:
        InvalidParameterError: If ``unitary`` is not a unitary matrix of the basis size.
    """
    unitary = np.asarray(unitary, dtype=complex)
    size = len(basis)
    if unitary.shape != (size, size):
        raise InvalidParameterError(f"expected a {size}x{size} matrix, got shape {unitary.shape}")
    if np.max(np.abs(unitary @ unitary.conj().T - np.eye(size))) > tol:
        raise InvalidParameterError("re-mixing matrix is not unitary")
    members = basis.members
    return TangentBasis([_combine(members, row) for row in unitary])


def random_unitary(size: int, seed: int = 0) -> np.ndarray:
    """Returns a Haar-distributed unitary matrix from a seeded generator (QR with phase fix)."""
    rng = np.random.default_rng(seed)
    gaussian = rng.standard_normal((size, size)) + 1j * rng.standard_normal((size, size))
    q, r = np.linalg.qr(gaussian)
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases[None, :]

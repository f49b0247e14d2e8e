from typing import List, Sequence

import numpy as np

from hochschild.errors import DimensionMismatch, NotACocycle
from hochschild.linalg.modular import rank, solve
from hochschild.linalg.subspace import Subspace


class CohomologyBlock:
    """Cohomology of one weight block: its coordinates in C^m, coboundaries and representative cocycles."""

    def __init__(self, indices: np.ndarray, image: Subspace, representatives: np.ndarray):
        self.indices = indices
        self.image = image
        self.representatives = representatives
        self._solver = np.concatenate([representatives, image.basis]).T if len(indices) else None

    @property
    def dim(self) -> int:
        return self.representatives.shape[0]


class CohomologyGroup:
    """H^m of a :class:`CochainComplex` with a fixed basis of representative cocycles."""

    def __init__(self, complex_, degree: int, blocks: List[CohomologyBlock]):
        self.complex = complex_
        self.degree = degree
        self.blocks = blocks
        self.dim = sum(block.dim for block in blocks)
        self.ambient_dim = complex_.dimension(degree)

    def __repr__(self):
        return "H^%d(dim=%d)" % (self.degree, self.dim)

    def representatives(self) -> np.ndarray:
        rows = np.zeros((self.dim, self.ambient_dim), dtype=np.int64)
        row = 0
        for block in self.blocks:
            for representative in block.representatives:
                rows[row, block.indices] = representative
                row += 1
        return rows

    def _vector(self, vector: np.ndarray) -> np.ndarray:
        vector = np.asarray(vector, dtype=np.int64).reshape(-1) % self.complex.p
        if vector.shape[0] != self.ambient_dim:
            raise DimensionMismatch("Cochain of length %d in C^%d of dim %d"
                                    % (vector.shape[0], self.degree, self.ambient_dim))
        return vector

    def is_cocycle(self, vector: np.ndarray) -> bool:
        return not np.any(self.complex.apply(self.degree, self._vector(vector)[None, :]))

    def is_coboundary(self, vector: np.ndarray) -> bool:
        vector = self._vector(vector)
        return all(block.image.contains(vector[block.indices]) for block in self.blocks)

    def class_equal(self, first: np.ndarray, second: np.ndarray) -> bool:
        return self.is_coboundary(self._vector(first) - self._vector(second))

    def coordinates(self, vector: np.ndarray) -> np.ndarray:
        """
        Coefficients of the class of a cocycle in the representative basis.
        :raises: NotACocycle
        """
        vector = self._vector(vector)
        if not self.is_cocycle(vector):
            raise NotACocycle("Cochain in degree %d is not a cocycle" % self.degree)
        coordinates = []
        for block in self.blocks:
            if block.dim == 0:
                continue
            solution = solve(block._solver, vector[block.indices], self.complex.p)
            coordinates.append(solution[:block.dim])
        if not coordinates:
            return np.zeros(0, dtype=np.int64)
        return np.concatenate(coordinates)

    def coordinate_matrix(self, cocycles: Sequence[np.ndarray]) -> np.ndarray:
        return np.array([self.coordinates(cocycle) for cocycle in cocycles]).reshape(len(cocycles), self.dim)

    def is_basis(self, cocycles: Sequence[np.ndarray]) -> bool:
        """Whether the classes of `cocycles` form a basis of H^m."""
        if len(cocycles) != self.dim:
            return False
        if self.dim == 0:
            return True
        return rank(self.coordinate_matrix(cocycles), self.complex.p) == self.dim

    def express(self, vector: np.ndarray, basis_cocycles: Sequence[np.ndarray]) -> np.ndarray:
        """Coefficients c with class(vector) = sum c_i class(basis_cocycles[i])."""
        if self.dim == 0:
            return np.zeros(len(basis_cocycles), dtype=np.int64)
        matrix = self.coordinate_matrix(basis_cocycles)
        return solve(matrix.T, self.coordinates(vector), self.complex.p)


class CohomologyClass:
    """A cocycle of a complex, remembered with its degree."""

    def __init__(self, complex_, degree: int, representative: np.ndarray):
        self.complex = complex_
        self.degree = degree
        self.representative = np.asarray(representative, dtype=np.int64).reshape(-1) % complex_.p
        if np.any(complex_.apply(degree, self.representative[None, :])):
            raise NotACocycle("Representative in degree %d is not a cocycle" % degree)

    def __repr__(self):
        return "CohomologyClass(degree=%d)" % self.degree

    def group(self) -> CohomologyGroup:
        return self.complex.cohomology(self.degree)

    def is_zero(self) -> bool:
        return self.group().is_coboundary(self.representative)

    def __eq__(self, other):
        return isinstance(other, CohomologyClass) and other.complex is self.complex \
            and other.degree == self.degree and self.group().class_equal(self.representative, other.representative)

    def __hash__(self):
        return hash((id(self.complex), self.degree))

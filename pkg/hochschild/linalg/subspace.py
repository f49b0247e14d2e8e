from typing import List

import numpy as np

from hochschild.errors import DimensionMismatch
from hochschild.linalg.modular import rref


class Subspace:
    """A subspace of F_p^ambient_dim given by a basis in reduced row echelon form."""

    def __init__(self, basis: np.ndarray, pivots: List[int], ambient_dim: int, p: int):
        self.basis = basis
        self.pivots = list(pivots)
        self.ambient_dim = ambient_dim
        self.p = p

    @classmethod
    def span(cls, vectors: np.ndarray, ambient_dim: int, p: int) -> 'Subspace':
        vectors = np.asarray(vectors, dtype=np.int64).reshape(-1, ambient_dim)
        if vectors.shape[0] == 0:
            return cls.zero(ambient_dim, p)
        reduced, span_rank, pivots = rref(vectors, p)
        return cls(reduced[:span_rank].copy(), pivots, ambient_dim, p)

    @classmethod
    def from_echelon(cls, basis: np.ndarray, ambient_dim: int, p: int) -> 'Subspace':
        """Wrap rows that are already in reduced row echelon form (leading entry 1, pivot columns clear)."""
        basis = np.asarray(basis, dtype=np.int64).reshape(-1, ambient_dim) % p
        pivots = [int(np.nonzero(row)[0][0]) for row in basis]
        order = np.argsort(pivots, kind="stable")
        return cls(basis[order], [pivots[i] for i in order], ambient_dim, p)

    @classmethod
    def zero(cls, ambient_dim: int, p: int) -> 'Subspace':
        return cls(np.zeros((0, ambient_dim), dtype=np.int64), [], ambient_dim, p)

    @classmethod
    def full(cls, ambient_dim: int, p: int) -> 'Subspace':
        return cls(np.eye(ambient_dim, dtype=np.int64), list(range(ambient_dim)), ambient_dim, p)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __repr__(self):
        return "Subspace(dim=%d, ambient=%d, p=%d)" % (self.dim, self.ambient_dim, self.p)

    def _check(self, vector: np.ndarray) -> np.ndarray:
        vector = np.asarray(vector, dtype=np.int64)
        if vector.shape[-1] != self.ambient_dim:
            raise DimensionMismatch("Vector of length %d against subspace of F_p^%d"
                                    % (vector.shape[-1], self.ambient_dim))
        return vector % self.p

    def reduce(self, vector: np.ndarray) -> np.ndarray:
        """Remainder of `vector` (or rows of a matrix) after clearing the pivot columns."""
        vector = self._check(vector)
        if self.dim == 0:
            return vector
        coefficients = vector[..., self.pivots]
        return (vector - coefficients @ self.basis) % self.p

    def contains(self, vector: np.ndarray) -> bool:
        return not np.any(self.reduce(vector))

    def class_equal(self, first: np.ndarray, second: np.ndarray) -> bool:
        return self.contains(self._check(first) - self._check(second))

    def coordinates(self, vector: np.ndarray) -> np.ndarray:
        """Coordinates of a member with respect to the echelon basis."""
        vector = self._check(vector)
        if not self.contains(vector):
            raise DimensionMismatch("Vector is not in the subspace")
        return vector[..., self.pivots] % self.p

    def sum(self, other: 'Subspace') -> 'Subspace':
        return Subspace.span(np.concatenate([self.basis, other.basis]), self.ambient_dim, self.p)


def membership(vector: np.ndarray, subspace: Subspace) -> bool:
    return subspace.contains(vector)


def class_equal(first: np.ndarray, second: np.ndarray, subspace: Subspace) -> bool:
    return subspace.class_equal(first, second)

#!/usr/bin/python
"""This module provides the :class:`Algebra` object, an associative unital algebra given by structure constants."""

import logging
from typing import List, Optional

import numpy as np
from scipy import sparse

from hochschild.algebras.grading import Grading
from hochschild.constants import Constants
from hochschild.errors import AlgebraMismatch, BadParameter, BudgetExceeded
from hochschild.field.prime_field import PrimeField

LOGGER = logging.getLogger(__name__)


class Algebra:
    """
    A finite-dimensional algebra over F_p.

    Structure constants live in a sparse matrix of shape (dim^2, dim): row i*dim + j holds the
    coordinates of e_i e_j. A dense (dim, dim, dim) tensor is available for small algebras.
    """

    def __init__(self, field: PrimeField, labels: List[str], structure: sparse.spmatrix, unit: np.ndarray,
                 grading: Optional[Grading] = None, validate: bool = True):
        """
        :param field: ground field
        :param labels: basis names, one per basis element
        :param structure: structure constants, shape (dim^2, dim)
        :param unit: coordinates of the unit
        :param grading: optional weights of the basis respected by the product
        :param validate: run the associativity and unit checks
        """
        self.field = field
        self.p = field.p
        self.labels = list(labels)
        self.dim = len(self.labels)
        if structure.shape != (self.dim * self.dim, self.dim):
            raise BadParameter("Structure constants have shape %s, expected %s"
                               % (structure.shape, (self.dim * self.dim, self.dim)))
        structure = sparse.csr_matrix(structure, dtype=np.int64)
        structure.data %= self.p
        structure.eliminate_zeros()
        self.structure = structure
        self.unit = np.asarray(unit, dtype=np.int64) % self.p
        self.grading = grading if grading is not None and grading.is_homogeneous(self) else None
        self._dense = None
        self._opposite = None
        self._left = None
        self._right = None
        if validate:
            self.validate()

    @classmethod
    def from_triples(cls, field: PrimeField, labels: List[str], first, second, target, values,
                     unit: np.ndarray, grading: Optional[Grading] = None, validate: bool = True) -> 'Algebra':
        """Build from parallel arrays meaning e_first * e_second has coefficient `values` on e_target."""
        dim = len(labels)
        first = np.asarray(first, dtype=np.int64)
        rows = first * dim + np.asarray(second, dtype=np.int64)
        values = np.asarray(values, dtype=np.int64) % field.p
        structure = sparse.coo_matrix((values, (rows, np.asarray(target, dtype=np.int64))),
                                      shape=(dim * dim, dim)).tocsr()
        return cls(field, labels, structure, unit, grading, validate)

    def __repr__(self):
        return "Algebra(dim=%d, p=%d)" % (self.dim, self.p)

    @property
    def unit_index(self) -> Optional[int]:
        """Index of the basis element equal to the unit, if there is one."""
        support = np.nonzero(self.unit)[0]
        if support.size == 1 and self.unit[support[0]] == 1:
            return int(support[0])
        return None

    def basis_vector(self, index: int) -> np.ndarray:
        vector = np.zeros(self.dim, dtype=np.int64)
        vector[index] = 1
        return vector

    def dense_structure(self) -> np.ndarray:
        """Structure constants as c[i, j, k]."""
        if self._dense is None:
            if self.dim > Constants.DENSE_STRUCTURE_MAX_DIM:
                raise BudgetExceeded("dense structure constants", self.dim ** 3,
                                     Constants.DENSE_STRUCTURE_MAX_DIM ** 3)
            self._dense = self.structure.toarray().reshape(self.dim, self.dim, self.dim)
        return self._dense

    def opposite_structure(self) -> sparse.csr_matrix:
        """Rows reindexed so that row j*dim + i holds e_i e_j."""
        if self._opposite is None:
            coo = self.structure.tocoo()
            i, j = np.divmod(coo.row, self.dim)
            self._opposite = sparse.coo_matrix((coo.data, (j * self.dim + i, coo.col)),
                                               shape=self.structure.shape).tocsr()
        return self._opposite

    def basis_product(self, i: int, j: int) -> np.ndarray:
        return self.structure[i * self.dim + j].toarray().reshape(-1)

    def multiply(self, first: np.ndarray, second: np.ndarray) -> np.ndarray:
        first = np.asarray(first, dtype=np.int64) % self.p
        second = np.asarray(second, dtype=np.int64) % self.p
        left = np.nonzero(first)[0]
        right = np.nonzero(second)[0]
        if left.size == 0 or right.size == 0:
            return np.zeros(self.dim, dtype=np.int64)
        rows = (left[:, None] * self.dim + right[None, :]).reshape(-1)
        coefficients = (first[left][:, None] * second[right][None, :]).reshape(-1) % self.p
        return (self.structure[rows].T @ coefficients) % self.p

    def _multiplication_matrix(self, structure: sparse.csr_matrix, element: np.ndarray) -> np.ndarray:
        element = np.asarray(element, dtype=np.int64) % self.p
        transposed = np.zeros((self.dim, self.dim), dtype=np.int64)
        for index in np.nonzero(element)[0]:
            block = structure[index * self.dim:(index + 1) * self.dim].toarray()
            transposed = (transposed + element[index] * block) % self.p
        return transposed.T

    def left_matrix(self, element: np.ndarray) -> np.ndarray:
        """Matrix of m -> element * m."""
        return self._multiplication_matrix(self.structure, element)

    def right_matrix(self, element: np.ndarray) -> np.ndarray:
        """Matrix of m -> m * element."""
        return self._multiplication_matrix(self.opposite_structure(), element)

    def left_matrices(self) -> np.ndarray:
        """L[i] = matrix of left multiplication by e_i."""
        if self._left is None:
            self._left = np.ascontiguousarray(self.dense_structure().transpose(0, 2, 1))
        return self._left

    def right_matrices(self) -> np.ndarray:
        """R[j] = matrix of right multiplication by e_j."""
        if self._right is None:
            self._right = np.ascontiguousarray(self.dense_structure().transpose(1, 2, 0))
        return self._right

    def is_commutative(self) -> bool:
        difference = (self.structure - self.opposite_structure()).tocoo()
        return not np.any(difference.data % self.p)

    def validate(self) -> None:
        """
        Check the unit and associativity.
        :raises: BadParameter
        """
        identity = np.eye(self.dim, dtype=np.int64)
        if not np.array_equal(self.left_matrix(self.unit), identity) \
                or not np.array_equal(self.right_matrix(self.unit), identity):
            raise BadParameter("Unit is not a two-sided identity")
        if self.dim <= Constants.EXHAUSTIVE_ASSOCIATIVITY_DIM:
            c = self.dense_structure()
            left = np.einsum('ijk,klm->ijlm', c, c) % self.p
            right = np.einsum('jlk,ikm->ijlm', c, c) % self.p
            if not np.array_equal(left, right):
                raise BadParameter("Structure constants are not associative")
            return
        rng = np.random.default_rng(Constants.RANDOM_SEED)
        triples = rng.integers(0, self.dim, size=(Constants.SAMPLED_TRIPLES, 3))
        for i, j, l in triples:
            left = self.multiply(self.basis_product(i, j), self.basis_vector(l))
            right = self.multiply(self.basis_vector(i), self.basis_product(j, l))
            if not np.array_equal(left, right):
                raise BadParameter("(%s %s) %s != %s (%s %s)" % (self.labels[i], self.labels[j], self.labels[l],
                                                               self.labels[i], self.labels[j], self.labels[l]))
        LOGGER.debug("Associativity of dim-%d algebra checked on %d sampled triples",
                     self.dim, Constants.SAMPLED_TRIPLES)

    def check_same(self, other: 'Algebra') -> None:
        if other is not self and (other.dim != self.dim or other.p != self.p
                                  or (self.structure != other.structure).nnz):
            raise AlgebraMismatch("Modules are over different algebras")

    def label_of(self, vector: np.ndarray) -> str:
        terms = []
        for index in np.nonzero(np.asarray(vector) % self.p)[0]:
            coefficient = int(vector[index]) % self.p
            terms.append(self.labels[index] if coefficient == 1 else "%d*%s" % (coefficient, self.labels[index]))
        return " + ".join(terms) if terms else "0"

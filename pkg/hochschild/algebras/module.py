#!/usr/bin/python
"""Left modules and bimodules over an :class:`Algebra`, stored as action matrices per basis element."""

import logging
from typing import Optional, Sequence

import numpy as np

from hochschild.algebras.algebra import Algebra
from hochschild.algebras.grading import Grading
from hochschild.constants import Constants
from hochschild.errors import BadParameter

LOGGER = logging.getLogger(__name__)


def _pairs(count: int):
    """All index pairs for small algebras, a seeded sample otherwise."""
    if count <= Constants.EXHAUSTIVE_ASSOCIATIVITY_DIM:
        return [(i, j) for i in range(count) for j in range(count)]
    rng = np.random.default_rng(Constants.RANDOM_SEED)
    return [tuple(pair) for pair in rng.integers(0, count, size=(Constants.SAMPLED_MODULE_PAIRS, 2))]


class ModuleOverAlgebra:
    """A left module: actions[i] is the matrix by which e_i acts (column convention)."""

    def __init__(self, algebra: Algebra, actions: np.ndarray, validate: bool = True):
        self.algebra = algebra
        self.p = algebra.p
        self.actions = np.asarray(actions, dtype=np.int64) % self.p
        if self.actions.ndim != 3 or self.actions.shape[0] != algebra.dim \
                or self.actions.shape[1] != self.actions.shape[2]:
            raise BadParameter("Expected %d square action matrices, got shape %s"
                               % (algebra.dim, self.actions.shape))
        self.dim = self.actions.shape[1]
        if validate:
            self.validate()

    def __repr__(self):
        return "ModuleOverAlgebra(dim=%d over %r)" % (self.dim, self.algebra)

    def act(self, element: np.ndarray) -> np.ndarray:
        """Action matrix of an arbitrary algebra element."""
        element = np.asarray(element, dtype=np.int64) % self.p
        return np.einsum('i,iab->ab', element, self.actions) % self.p

    def validate(self) -> None:
        identity = np.eye(self.dim, dtype=np.int64)
        if not np.array_equal(self.act(self.algebra.unit), identity):
            raise BadParameter("Unit does not act as the identity")
        for i, j in _pairs(self.algebra.dim):
            composite = (self.actions[i] @ self.actions[j]) % self.p
            expected = self.act(self.algebra.basis_product(i, j))
            if not np.array_equal(composite, expected):
                raise BadParameter("Action is not multiplicative on (%s, %s)"
                                   % (self.algebra.labels[i], self.algebra.labels[j]))

    def is_submodule(self, indices: Sequence[int]) -> bool:
        """Whether the span of the given basis vectors is stable under every action matrix."""
        inside = np.zeros(self.dim, dtype=bool)
        inside[list(indices)] = True
        return not np.any(self.actions[:, ~inside][:, :, inside])

    def restrict(self, indices: Sequence[int]) -> 'ModuleOverAlgebra':
        if not self.is_submodule(indices):
            raise BadParameter("Basis subset is not a submodule")
        indices = list(indices)
        return ModuleOverAlgebra(self.algebra, self.actions[:, indices][:, :, indices], validate=False)


class Bimodule:
    """
    A bimodule over `algebra`: left[i] and right[i] are the matrices of m -> e_i m and m -> m e_i.
    The action of e_i (x) e_j in the enveloping algebra is left[i] . right[j].
    """

    def __init__(self, algebra: Algebra, left: np.ndarray, right: np.ndarray,
                 grading: Optional[Grading] = None, product: Optional[Algebra] = None, validate: bool = True):
        """
        :param product: set when the bimodule is itself an algebra (cup products need it)
        """
        self.algebra = algebra
        self.p = algebra.p
        self.left = np.asarray(left, dtype=np.int64) % self.p
        self.right = np.asarray(right, dtype=np.int64) % self.p
        self.dim = self.left.shape[1]
        self.grading = grading
        self.product = product
        if validate:
            self.validate()

    @classmethod
    def regular(cls, algebra: Algebra) -> 'Bimodule':
        return cls(algebra, algebra.left_matrices(), algebra.right_matrices(), algebra.grading, algebra,
                   validate=False)

    @classmethod
    def restricted(cls, algebra: Algebra, ambient: Algebra, embedding: np.ndarray) -> 'Bimodule':
        """
        The regular bimodule of `ambient` viewed over the subalgebra `algebra`.

        :param embedding: rows are the images of the basis of `algebra` in `ambient`
        """
        left = np.array([ambient.left_matrix(row) for row in embedding])
        right = np.array([ambient.right_matrix(row) for row in embedding])
        return cls(algebra, left, right, ambient.grading, ambient)

    def __repr__(self):
        return "Bimodule(dim=%d over %r)" % (self.dim, self.algebra)

    def validate(self) -> None:
        left_module = ModuleOverAlgebra(self.algebra, self.left, validate=False)
        left_module.validate()
        identity = np.eye(self.dim, dtype=np.int64)
        unit = self.algebra.unit
        if not np.array_equal(np.einsum('i,iab->ab', unit, self.right) % self.p, identity):
            raise BadParameter("Unit does not act as the identity on the right")
        for i, j in _pairs(self.algebra.dim):
            # m e_i e_j = (m e_i) e_j
            composite = (self.right[j] @ self.right[i]) % self.p
            expected = np.einsum('k,kab->ab', self.algebra.basis_product(i, j), self.right) % self.p
            if not np.array_equal(composite, expected):
                raise BadParameter("Right action is not multiplicative on (%s, %s)"
                                   % (self.algebra.labels[i], self.algebra.labels[j]))
            if not np.array_equal((self.left[i] @ self.right[j]) % self.p, (self.right[j] @ self.left[i]) % self.p):
                raise BadParameter("Left and right actions do not commute")

    def as_enveloping_module(self, enveloping: Algebra) -> ModuleOverAlgebra:
        """The same bimodule as a left module over A (x) A^op, basis e_i (x) e_j at i*dim + j."""
        actions = np.einsum('iab,jbc->ijac', self.left, self.right).reshape(-1, self.dim, self.dim) % self.p
        return ModuleOverAlgebra(enveloping, actions)

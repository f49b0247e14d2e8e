#!/usr/bin/python
"""Linear actions of a finite group, with a fast path for monomial actions."""

import logging
from math import gcd
from typing import Optional

import numpy as np

from hochschild.errors import BadParameter, CharacteristicDividesGroupOrder
from hochschild.groups.fin_group import FinGroup
from hochschild.linalg.modular import check_budget, inverse_mod
from hochschild.linalg.subspace import Subspace

LOGGER = logging.getLogger(__name__)


class GroupAction:
    """
    rho: G -> GL(dim). Either dense matrices, or monomial data meaning
    rho(g) e_i = scales[g, i] * e_{permutations[g, i]}.
    """

    def __init__(self, group: FinGroup, p: int, dim: int, matrices: Optional[np.ndarray] = None,
                 permutations: Optional[np.ndarray] = None, scales: Optional[np.ndarray] = None):
        self.group = group
        self.p = p
        self.dim = dim
        self.matrices = None if matrices is None else np.asarray(matrices, dtype=np.int64) % p
        self.permutations = None if permutations is None else np.asarray(permutations, dtype=np.int64)
        self.scales = None if scales is None else np.asarray(scales, dtype=np.int64) % p
        if self.matrices is None and self.permutations is None:
            raise BadParameter("A group action needs matrices or monomial data")

    @classmethod
    def monomial(cls, group: FinGroup, p: int, permutations: np.ndarray, scales: np.ndarray) -> 'GroupAction':
        permutations = np.asarray(permutations, dtype=np.int64)
        return cls(group, p, permutations.shape[1], permutations=permutations, scales=scales)

    @classmethod
    def from_matrices(cls, group: FinGroup, p: int, matrices: np.ndarray) -> 'GroupAction':
        matrices = np.asarray(matrices, dtype=np.int64)
        return cls(group, p, matrices.shape[1], matrices=matrices)

    @classmethod
    def trivial(cls, group: FinGroup, p: int, dim: int) -> 'GroupAction':
        permutations = np.tile(np.arange(dim, dtype=np.int64), (group.order, 1))
        return cls.monomial(group, p, permutations, np.ones_like(permutations))

    @property
    def is_monomial(self) -> bool:
        return self.permutations is not None

    def __repr__(self):
        return "GroupAction(order=%d, dim=%d, monomial=%s)" % (self.group.order, self.dim, self.is_monomial)

    def matrix(self, g: int) -> np.ndarray:
        if not self.is_monomial:
            return self.matrices[g]
        check_budget(self.dim, self.dim, "group action matrix")
        matrix = np.zeros((self.dim, self.dim), dtype=np.int64)
        matrix[self.permutations[g], np.arange(self.dim)] = self.scales[g]
        return matrix

    def apply(self, g: int, rows: np.ndarray) -> np.ndarray:
        """rho(g) applied to every row of `rows`."""
        rows = np.asarray(rows, dtype=np.int64)
        if not self.is_monomial:
            return (rows @ self.matrices[g].T) % self.p
        result = np.zeros_like(rows)
        result[..., self.permutations[g]] = (rows * self.scales[g]) % self.p
        return result

    def twisted(self, factors: np.ndarray) -> 'GroupAction':
        """rho'(g) = factors[g] * rho(g) for a character given by its values."""
        factors = np.asarray(factors, dtype=np.int64)
        if self.is_monomial:
            return GroupAction.monomial(self.group, self.p, self.permutations, self.scales * factors[:, None])
        return GroupAction.from_matrices(self.group, self.p, self.matrices * factors[:, None, None])

    def transposed_inverse(self) -> 'GroupAction':
        """The contragredient action g -> rho(g^-1)^T."""
        inverses = np.array(self.group.inverses, dtype=np.int64)
        if not self.is_monomial:
            return GroupAction.from_matrices(self.group, self.p, self.matrices[inverses].transpose(0, 2, 1))
        permutations = np.zeros_like(self.permutations)
        scales = np.zeros_like(self.scales)
        for g in range(self.group.order):
            inverse_perm = self.permutations[inverses[g]]
            # rho(g^-1) e_i = s e_{pi i}  =>  rho(g^-1)^T e_{pi i} = s e_i
            permutations[g, inverse_perm] = np.arange(self.dim)
            scales[g, inverse_perm] = self.scales[inverses[g]]
        return GroupAction.monomial(self.group, self.p, permutations, scales)

    def kron(self, other: 'GroupAction') -> 'GroupAction':
        """Tensor product action on V (x) W with index v*dim W + w."""
        if self.is_monomial and other.is_monomial:
            permutations = (self.permutations[:, :, None] * other.dim + other.permutations[:, None, :])
            scales = (self.scales[:, :, None] * other.scales[:, None, :]) % self.p
            return GroupAction.monomial(self.group, self.p, permutations.reshape(self.group.order, -1),
                                        scales.reshape(self.group.order, -1))
        check_budget(self.group.order * self.dim * other.dim, self.dim * other.dim, "tensor product action")
        matrices = np.array([np.kron(self.matrix(g), other.matrix(g)) for g in range(self.group.order)])
        return GroupAction.from_matrices(self.group, self.p, matrices)

    def validate(self) -> None:
        """rho(1) = id and rho(g) rho(h) = rho(gh)."""
        group = self.group
        if self.is_monomial:
            identity = group.identity
            if not np.array_equal(self.permutations[identity], np.arange(self.dim)) \
                    or np.any(self.scales[identity] != 1):
                raise BadParameter("Identity does not act trivially")
            for g in range(group.order):
                for h in range(group.order):
                    gh = group.mul(g, h)
                    composed_perm = self.permutations[g][self.permutations[h]]
                    composed_scale = (self.scales[h] * self.scales[g][self.permutations[h]]) % self.p
                    if not np.array_equal(composed_perm, self.permutations[gh]) \
                            or not np.array_equal(composed_scale, self.scales[gh]):
                        raise BadParameter("Action is not a homomorphism at (%s, %s)"
                                           % (group.labels[g], group.labels[h]))
            return
        if not np.array_equal(self.matrices[group.identity], np.eye(self.dim, dtype=np.int64)):
            raise BadParameter("Identity does not act trivially")
        for g in range(group.order):
            for h in range(group.order):
                if not np.array_equal((self.matrices[g] @ self.matrices[h]) % self.p,
                                      self.matrices[group.mul(g, h)]):
                    raise BadParameter("Action is not a homomorphism at (%s, %s)"
                                       % (group.labels[g], group.labels[h]))

    def projector(self) -> np.ndarray:
        """The averaging idempotent (1/|G|) sum rho(g)."""
        self._check_characteristic()
        total = np.zeros((self.dim, self.dim), dtype=np.int64)
        for g in range(self.group.order):
            total = (total + self.matrix(g)) % self.p
        return (total * inverse_mod(self.group.order, self.p)) % self.p

    def invariants(self) -> Subspace:
        """
        Image of the averaging projector.
        For monomial actions the image is spanned by the averages of single basis vectors, one per orbit,
        which have disjoint supports.
        """
        self._check_characteristic()
        if not self.is_monomial:
            invariant = Subspace.span(self.projector().T, self.dim, self.p)
        else:
            visited = np.zeros(self.dim, dtype=bool)
            vectors = []
            for start in range(self.dim):
                if visited[start]:
                    continue
                orbit = self.permutations[:, start]
                visited[orbit] = True
                average = np.zeros(self.dim, dtype=np.int64)
                np.add.at(average, orbit, self.scales[:, start])
                average %= self.p
                support = np.nonzero(average)[0]
                if support.size:
                    average = (average * inverse_mod(average[support[0]], self.p)) % self.p
                    vectors.append(average)
            if vectors:
                invariant = Subspace.from_echelon(np.array(vectors), self.dim, self.p)
            else:
                invariant = Subspace.zero(self.dim, self.p)
        for g in range(self.group.order):
            if invariant.dim and not np.array_equal(self.apply(g, invariant.basis), invariant.basis):
                raise BadParameter("Averaged vector is not fixed by %s" % self.group.labels[g])
        LOGGER.debug("Invariants of %r: dim %d", self, invariant.dim)
        return invariant

    def _check_characteristic(self):
        if gcd(self.p, self.group.order) != 1:
            raise CharacteristicDividesGroupOrder("p = %d divides |G| = %d" % (self.p, self.group.order))

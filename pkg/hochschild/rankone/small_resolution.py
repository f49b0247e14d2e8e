#!/usr/bin/python
"""
The periodic free A^e-resolution of A = k[x]/(x^n):

    ... -> A^e --.v--> A^e --.u--> A^e --mult--> A -> 0

with u = x(x)1 - 1(x)x and v = sum_k x^(n-1-k) (x) x^k, and G acting on the degree-d term by
chi(g)^e(d) times the diagonal action, e(2i) = in, e(2i+1) = in + 1.
A^e has basis x^i (x) x^j at index i * n + j.
"""

import logging
from typing import List

import numpy as np

from hochschild.algebras.constructions import enveloping_algebra
from hochschild.algebras.group_action import GroupAction
from hochschild.errors import BadParameter, NotAComplex
from hochschild.linalg.modular import rank
from hochschild.rankone.rank_one_data import RankOneData

LOGGER = logging.getLogger(__name__)


class SmallResolution:

    def __init__(self, data: RankOneData, max_degree: int):
        if max_degree < 1:
            raise BadParameter("The small resolution needs max_degree >= 1")
        self.data = data
        self.max_degree = max_degree
        self.p = data.p
        n = data.n
        self.enveloping = enveloping_algebra(data.A)
        self.u = np.zeros(n * n, dtype=np.int64)
        self.u[1 * n + 0] = 1
        self.u[0 * n + 1] = self.p - 1
        self.v = np.zeros(n * n, dtype=np.int64)
        for k in range(n):
            self.v[(n - 1 - k) * n + k] = 1
        self.times_u = self.enveloping.right_matrix(self.u)
        self.times_v = self.enveloping.right_matrix(self.v)
        self.diagonal = data.algebra_action.kron(data.algebra_action)
        self.twists = [self.twist(d) for d in range(max_degree + 1)]
        self.verify()

    def __repr__(self):
        return "SmallResolution(n=%d, max_degree=%d)" % (self.data.n, self.max_degree)

    def boundary(self, degree: int) -> np.ndarray:
        """The map P_degree -> P_(degree-1): right multiplication by u (odd degree) or v (even degree)."""
        if not 1 <= degree <= self.max_degree:
            raise BadParameter("No boundary map in degree %d" % degree)
        return self.times_u if degree % 2 else self.times_v

    def multiplication(self) -> np.ndarray:
        """The augmentation A^e -> A, a (x) b -> ab."""
        n = self.data.n
        matrix = np.zeros((n, n * n), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                if i + j < n:
                    matrix[i + j, i * n + j] = 1
        return matrix

    def twist(self, degree: int) -> GroupAction:
        data = self.data
        factors = np.array([data.chi.power_value(g, data.twist_exponent(degree)) for g in range(data.group.order)],
                           dtype=np.int64)
        return self.diagonal.twisted(factors)

    def verify(self) -> None:
        """
        Consecutive maps compose to zero, the sequence is exact at every inner term and every map is
        G-equivariant for the twisted actions.

        :raises: NotAComplex, BadParameter
        """
        p = self.p
        n = self.data.n
        size = n * n
        augmentation = self.multiplication()
        if np.any((augmentation @ self.times_u) % p):
            raise NotAComplex("mult(w u) != 0")
        if rank(augmentation, p) + rank(self.times_u, p) != size:
            raise NotAComplex("Resolution is not exact at degree 0")
        for degree in range(1, self.max_degree):
            inner = self.boundary(degree)
            outer = self.boundary(degree + 1)
            if np.any((inner @ outer) % p):
                raise NotAComplex("Boundaries %d and %d do not compose to zero" % (degree, degree + 1))
            if rank(inner, p) + rank(outer, p) != size:
                raise NotAComplex("Resolution is not exact at degree %d" % degree)
        for degree in range(1, self.max_degree + 1):
            boundary = self.boundary(degree)
            for g in range(self.data.group.order):
                before = (boundary @ self.twists[degree].matrix(g)) % p
                after = (self.twists[degree - 1].matrix(g) @ boundary) % p
                if not np.array_equal(before, after):
                    raise BadParameter("Boundary %d is not equivariant for %s"
                                       % (degree, self.data.group.labels[g]))
        LOGGER.debug("Small resolution verified up to degree %d", self.max_degree)

    def hom_differential(self, degree: int) -> np.ndarray:
        """
        The map Hom_{A^e}(P_degree, B) = B -> B = Hom_{A^e}(P_(degree+1), B) induced by the next boundary:
        b -> xb - bx for even degree, b -> sum_k x^(n-1-k) b x^k for odd degree.
        """
        data = self.data
        B = data.B
        left = B.left_matrix(data.x())
        right = B.right_matrix(data.x())
        if degree % 2 == 0:
            return (left - right) % self.p
        identity = np.eye(B.dim, dtype=np.int64)
        left_powers = [identity]
        right_powers = [identity]
        for _ in range(data.n - 1):
            left_powers.append((left_powers[-1] @ left) % self.p)
            right_powers.append((right_powers[-1] @ right) % self.p)
        total = np.zeros((B.dim, B.dim), dtype=np.int64)
        for k in range(data.n):
            total = (total + left_powers[data.n - 1 - k] @ right_powers[k]) % self.p
        return total

    def hom_differentials(self, top: int) -> List[np.ndarray]:
        return [self.hom_differential(m) for m in range(top + 1)]


def small_resolution(data: RankOneData, max_degree: int) -> SmallResolution:
    return SmallResolution(data, max_degree)

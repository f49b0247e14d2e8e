#!/usr/bin/python
"""
Gamma = A^e with kG acting diagonally, written on a (x) b (x) h and multiplied by

    (a (x) b (x) h)(c (x) d (x) l) = a (h . c) (x) (h . d) b (x) hl

Gamma is isomorphic to D: a (x) b (x) g goes to a g (x) g^-1 b in B^e, which lies in D.
"""

import logging
from typing import Dict, Optional, Tuple

import numpy as np

from hochschild.algebras.algebra import Algebra
from hochschild.algebras.constructions import basis_pairs, pure_tensor
from hochschild.constants import Constants
from hochschild.errors import IsoCheckFailed
from hochschild.linalg.modular import rank
from hochschild.rankone.rank_one_data import RankOneData
from hochschild.smashext.delta import d_subalgebra

LOGGER = logging.getLogger(__name__)


def gamma_index(data: RankOneData, i: int, j: int, h: int) -> int:
    n = data.n
    return i * n + j + n * n * h


def gamma_label(data: RankOneData, i: int, j: int, h: int) -> str:
    labels = data.A.labels
    return "%s(x)%s(x)%s" % (labels[i], labels[j], data.group.labels[h])


def build_gamma(data: RankOneData, validate: bool = True) -> Algebra:
    """
    :raises: BadParameter when the product fails the associativity or unit checks
    """
    n, order, p = data.n, data.group.order, data.p
    h, i, j, l, k, q = np.indices((order, n, n, order, n, n)).reshape(6, -1)
    keep = (i + k < n) & (q + j < n)
    h, i, j, l, k, q = h[keep], i[keep], j[keep], l[keep], k[keep], q[keep]
    chi_values = np.array([data.chi(g) for g in range(order)], dtype=np.int64)
    # (h . c) (x) (h . d) with c = x^k, d = x^q
    values = np.array([pow(int(chi_values[a]), int(e), p) for a, e in zip(h, k + q)], dtype=np.int64)
    products = data.group.table[h, l]
    first = i * n + j + n * n * h
    second = k * n + q + n * n * l
    target = (i + k) * n + (q + j) + n * n * products
    labels = [gamma_label(data, a, b, g) for g in range(order) for a in range(n) for b in range(n)]
    unit = np.zeros(n * n * order, dtype=np.int64)
    unit[gamma_index(data, 0, 0, data.group.identity)] = 1
    gamma = Algebra.from_triples(data.field, labels, first, second, target, values, unit, validate=validate)
    LOGGER.info("Gamma built with dim %d", gamma.dim)
    return gamma


def gamma_image(data: RankOneData, i: int, j: int, g: int) -> np.ndarray:
    """a (x) b (x) g -> a g (x) g^-1 b as a pure tensor in B^e."""
    B = data.B
    left = B.multiply(data.element(i, data.group.identity), data.group_element(g))
    right = B.multiply(data.group_element(data.group.inv(g)), data.element(j, data.group.identity))
    return pure_tensor(left, right) % data.p


class GammaIso:
    """
    The isomorphism Gamma -> D. Both sides have monomial images in B^e, so the map is monomial:
    to_d[w] is the coordinate vector in D of the image of the basis element w of Gamma.
    """

    def __init__(self, data: RankOneData, gamma: Algebra, d_algebra: Algebra, d_embedding: np.ndarray):
        self.data = data
        self.gamma = gamma
        self.d_algebra = d_algebra
        self.d_embedding = d_embedding
        self.to_d = self._solve()
        self.exhaustive = gamma.dim <= Constants.EXHAUSTIVE_ISO_DIM
        self.pairs_checked = 0

    def _solve(self) -> np.ndarray:
        data = self.data
        p = data.p
        support = {}
        for u, row in enumerate(self.d_embedding):
            nonzero = np.nonzero(row)[0]
            if nonzero.size != 1:
                raise IsoCheckFailed("Image of %s in B^e is not a pure basis tensor" % self.d_algebra.labels[u])
            support[int(nonzero[0])] = (u, int(row[nonzero[0]]))
        to_d = np.zeros((self.gamma.dim, self.d_algebra.dim), dtype=np.int64)
        for g in range(data.group.order):
            for i in range(data.n):
                for j in range(data.n):
                    w = gamma_index(data, i, j, g)
                    image = gamma_image(data, i, j, g)
                    nonzero = np.nonzero(image)[0]
                    if nonzero.size != 1 or int(nonzero[0]) not in support:
                        raise IsoCheckFailed("Image of %s does not lie in D" % self.gamma.labels[w])
                    u, scale = support[int(nonzero[0])]
                    to_d[w, u] = image[nonzero[0]] * data.field.inv(scale) % p
        return to_d

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.to_d, np.eye(self.gamma.dim, dtype=np.int64)))

    def apply(self, vector: np.ndarray) -> np.ndarray:
        return (np.asarray(vector, dtype=np.int64) @ self.to_d) % self.data.p

    def verify(self, pairs=None) -> None:
        """
        Bijective, unital and multiplicative on basis pairs.

        :raises: IsoCheckFailed
        """
        p = self.data.p
        if self.gamma.dim != self.d_algebra.dim or rank(self.to_d, p) != self.gamma.dim:
            raise IsoCheckFailed("Gamma -> D is not bijective")
        if not np.array_equal(self.apply(self.gamma.unit), self.d_algebra.unit):
            raise IsoCheckFailed("Gamma -> D does not send 1 to 1")
        pairs = basis_pairs(self.gamma.dim) if pairs is None else pairs
        for w, v in pairs:
            image = self.apply(self.gamma.basis_product(w, v))
            expected = self.d_algebra.multiply(self.to_d[w], self.to_d[v])
            if not np.array_equal(image, expected):
                raise IsoCheckFailed("Gamma -> D is not multiplicative on (%s, %s)"
                                     % (self.gamma.labels[w], self.gamma.labels[v]))
        self.pairs_checked = len(pairs)
        LOGGER.info("Gamma -> D verified on %d basis pairs (%s)", self.pairs_checked,
                    "exhaustive" if self.exhaustive else "sampled")

    def to_dict(self) -> Dict[str, object]:
        return {"dim": self.gamma.dim, "identity": self.is_identity(), "pairs_checked": self.pairs_checked,
                "exhaustive": self.exhaustive}


def gamma_iso_D(data: RankOneData, gamma: Optional[Algebra] = None,
                d: Optional[Tuple[Algebra, np.ndarray]] = None) -> GammaIso:
    """
    Build and verify Gamma -> D. A D already built by d_subalgebra may be passed in.

    :raises: IsoCheckFailed
    """
    gamma = gamma if gamma is not None else build_gamma(data)
    d_algebra, embedding = d if d is not None else d_subalgebra(data)
    iso = GammaIso(data, gamma, d_algebra, embedding)
    iso.verify()
    return iso


def gamma_generators(data: RankOneData):
    """x (x) 1 (x) 1, 1 (x) x (x) 1 and 1 (x) 1 (x) g for the group generators g."""
    identity = data.group.identity
    return [gamma_index(data, 1, 0, identity), gamma_index(data, 0, 1, identity)] + \
        [gamma_index(data, 0, 0, g) for g in data.group.generators()]


#!/usr/bin/python
"""
Rank-one data (n, G, chi, g1) and the algebras built from it.

B = k[x]/(x^n) # kG with g x g^-1 = chi(g) x, g1 central and chi(g1) a primitive n-th root of unity.
Basis of B: x^i h at index i + n * h.
"""

import logging
from math import gcd
from typing import Dict, List

import numpy as np

from hochschild.algebras.constructions import character_action, smash_product, truncated_poly
from hochschild.algebras.group_action import GroupAction
from hochschild.errors import BadCharacteristic, G1NotCentral, NotPrimitiveRoot
from hochschild.field.prime_field import PrimeField
from hochschild.groups.character import Character, character_power, kernel_of_character
from hochschild.groups.fin_group import FinGroup

LOGGER = logging.getLogger(__name__)


class RankOneData:

    def __init__(self, field: PrimeField, n: int, group: FinGroup, chi: Character, g1: int):
        """
        :raises: BadCharacteristic, G1NotCentral, NotPrimitiveRoot
        """
        self.field = field
        self.p = field.p
        self.n = n
        self.group = group
        self.chi = chi
        self.g1 = g1
        self._validate()
        self.zeta = chi(g1)
        self.A = truncated_poly(field, n)
        self.B = smash_product(self.A, group, chi)
        self.algebra_action = character_action(self.A, chi)
        self.kernel, self.g_class_count, self.n_class_count = kernel_of_character(group, chi)
        self.p_ord = self._kernel_power_order()
        self._conjugation = None
        LOGGER.info("Rank-one data: p=%d, n=%d, |G|=%d, |N|=%d, p_ord=%d",
                    self.p, n, group.order, len(self.kernel), self.p_ord)

    def _validate(self):
        if not 0 <= self.g1 < self.group.order:
            raise NotPrimitiveRoot("g1 = %d is not an element of a group of order %d" % (self.g1, self.group.order))
        if gcd(self.p, self.group.order) != 1:
            raise BadCharacteristic("p = %d divides |G| = %d" % (self.p, self.group.order))
        if self.n < 2 or (self.p - 1) % self.n:
            raise NotPrimitiveRoot("n = %d must be at least 2 and divide p - 1 = %d" % (self.n, self.p - 1))
        if not self.group.is_central(self.g1):
            raise G1NotCentral("g1 = %s is not central" % self.group.labels[self.g1])
        order = self.field.multiplicative_order(self.chi(self.g1))
        if order != self.n:
            raise NotPrimitiveRoot("chi(g1) = %d has order %d, not %d" % (self.chi(self.g1), order, self.n))

    def _kernel_power_order(self) -> int:
        """Least j >= 1 with chi^(n j) trivial."""
        base = character_power(self.chi, self.n)
        j = 1
        current = base
        while not current.is_trivial():
            j += 1
            current = character_power(self.chi, self.n * j)
        return j

    @property
    def dim(self) -> int:
        return self.B.dim

    def index(self, exponent: int, g: int) -> int:
        return exponent + self.n * g

    def element(self, exponent: int, g: int) -> np.ndarray:
        return self.B.basis_vector(self.index(exponent, g))

    def group_element(self, g: int) -> np.ndarray:
        return self.element(0, g)

    def x(self) -> np.ndarray:
        return self.element(1, self.group.identity)

    def embedding_of_A(self) -> np.ndarray:
        """Rows: x^i in B."""
        return np.eye(self.n, self.dim, dtype=np.int64)

    def twist_exponent(self, degree: int) -> int:
        """in in degree 2i, in + 1 in degree 2i + 1."""
        return (degree // 2) * self.n + degree % 2

    def twist_is_trivial(self, degree: int) -> bool:
        """Whether chi^(in) is trivial for degree 2i or 2i + 1."""
        return (degree // 2) % self.p_ord == 0

    def conjugation(self) -> GroupAction:
        """g . (x^i h) = chi(g)^i x^i g h g^-1."""
        if self._conjugation is None:
            order, n = self.group.order, self.n
            permutations = np.zeros((order, self.dim), dtype=np.int64)
            scales = np.zeros((order, self.dim), dtype=np.int64)
            for g in range(order):
                for h in range(order):
                    target = self.group.conjugate(g, h)
                    for i in range(n):
                        permutations[g, self.index(i, h)] = self.index(i, target)
                        scales[g, self.index(i, h)] = self.chi.power_value(g, i)
            self._conjugation = GroupAction.monomial(self.group, self.p, permutations, scales)
        return self._conjugation

    def twisted_conjugation(self, degree: int) -> GroupAction:
        """g . b = chi(g)^-e g b g^-1 with e the twist exponent of `degree`."""
        factors = np.array([self.field.pow(self.chi(g), -self.twist_exponent(degree))
                            for g in range(self.group.order)], dtype=np.int64)
        return self.conjugation().twisted(factors)

    def kernel_class_sums(self) -> List[np.ndarray]:
        """Class sums of the G-conjugacy classes inside N, as elements of B, ordered by minimal member."""
        members = set(self.kernel)
        sums = []
        for class_members in self.group.conjugacy_data().members:
            if set(class_members) <= members:
                total = np.zeros(self.dim, dtype=np.int64)
                for h in class_members:
                    total[self.index(0, h)] = 1
                sums.append(total)
        return sums

    def class_sum_label(self, vector: np.ndarray) -> str:
        return "+".join(self.group.labels[h] for h in range(self.group.order) if vector[self.index(0, h)])

    def closed_form_dims(self, max_degree: int) -> List[int]:
        """dim HH^m(B): the number of G-classes in N when chi^(in) is trivial, else 0."""
        return [self.g_class_count if self.twist_is_trivial(m) else 0 for m in range(max_degree + 1)]

    def coproduct_record(self) -> Dict[str, str]:
        g1 = self.group.labels[self.g1]
        return {
            "delta_x": "x(x)1 + %s(x)x" % g1,
            "delta_g": "g(x)g",
            "counit_x": "0",
            "antipode_x": "-%s^-1*x" % g1,
            "antipode_g": "g^-1",
        }

    def describe(self) -> Dict[str, object]:
        return {
            "p": self.p,
            "n": self.n,
            "group_order": self.group.order,
            "g1": self.group.labels[self.g1],
            "zeta": self.zeta,
            "kernel": [self.group.labels[h] for h in self.kernel],
            "p_ord": self.p_ord,
            "dim_B": self.dim,
            "g_classes_in_N": self.g_class_count,
            "dim_Z_kN": self.n_class_count,
            "coproduct": self.coproduct_record(),
        }


def build_rankone(field: PrimeField, n: int, group: FinGroup, chi: Character, g1: int) -> RankOneData:
    return RankOneData(field, n, group, chi, g1)

#!/usr/bin/python
"""This module provides :class:`FinGroup`, a finite group stored as its Cayley table."""

import logging
from typing import List, Optional, Sequence

import numpy as np

from hochschild.constants import Constants
from hochschild.errors import InvalidTable

LOGGER = logging.getLogger(__name__)


class ConjClasses:
    """Conjugacy classes; each class is represented by its smallest element index."""

    def __init__(self, class_of: List[int], members: List[List[int]]):
        self.class_of = class_of
        self.members = members
        self.representatives = [class_members[0] for class_members in members]

    def __len__(self):
        return len(self.members)

    def __repr__(self):
        return "ConjClasses(%s)" % self.members


class FinGroup:
    """
    A finite group given by table[g][h] = gh.
    Element labels are only used for reports.
    """

    def __init__(self, table: Sequence[Sequence[int]], labels: Optional[List[str]] = None):
        """
        :param table: order x order Cayley table
        :param labels: optional names of the elements
        :raises: InvalidTable
        """
        self.table = np.array(table, dtype=np.int64)
        if self.table.ndim != 2 or self.table.shape[0] != self.table.shape[1] or self.table.shape[0] == 0:
            raise InvalidTable("Cayley table must be a non-empty square, got shape %s" % (self.table.shape,))
        self.order = self.table.shape[0]
        self.labels = labels or ["g%d" % element for element in range(self.order)]
        self._validate_latin_square()
        self.identity = self._find_identity()
        self.inverses = self._find_inverses()
        self._validate_associativity()
        self._conjugacy = None
        self._generators = None

    def _validate_latin_square(self):
        expected = np.arange(self.order)
        if self.table.min() < 0 or self.table.max() >= self.order:
            raise InvalidTable("Cayley table entries must lie in [0, %d)" % self.order)
        for row in range(self.order):
            if not np.array_equal(np.sort(self.table[row]), expected):
                raise InvalidTable("Row %d of the Cayley table is not a permutation" % row)
            if not np.array_equal(np.sort(self.table[:, row]), expected):
                raise InvalidTable("Column %d of the Cayley table is not a permutation" % row)

    def _find_identity(self) -> int:
        for candidate in range(self.order):
            if np.array_equal(self.table[candidate], np.arange(self.order)) \
                    and np.array_equal(self.table[:, candidate], np.arange(self.order)):
                return candidate
        raise InvalidTable("Cayley table has no identity element")

    def _find_inverses(self) -> List[int]:
        inverses = []
        for element in range(self.order):
            inverse = int(np.nonzero(self.table[element] == self.identity)[0][0])
            if self.table[inverse, element] != self.identity:
                raise InvalidTable("Left and right inverse of %d differ" % element)
            inverses.append(inverse)
        return inverses

    def _validate_associativity(self):
        if self.order <= Constants.EXHAUSTIVE_GROUP_ORDER:
            left = self.table[self.table, :]  # left[a, b, c] = (ab)c
            right = self.table[:, self.table]  # right[a, b, c] = a(bc)
            if not np.array_equal(left, right):
                raise InvalidTable("Cayley table is not associative")
            return
        rng = np.random.default_rng(Constants.RANDOM_SEED)
        triples = rng.integers(0, self.order, size=(Constants.SAMPLED_TRIPLES, 3))
        a, b, c = triples[:, 0], triples[:, 1], triples[:, 2]
        if not np.array_equal(self.table[self.table[a, b], c], self.table[a, self.table[b, c]]):
            raise InvalidTable("Cayley table is not associative")
        LOGGER.debug("Associativity of a group of order %d checked on %d sampled triples",
                     self.order, Constants.SAMPLED_TRIPLES)

    def mul(self, g: int, h: int) -> int:
        return int(self.table[g, h])

    def inv(self, g: int) -> int:
        return self.inverses[g]

    def conjugate(self, g: int, h: int) -> int:
        """g h g^-1"""
        return int(self.table[self.table[g, h], self.inverses[g]])

    def power(self, g: int, exponent: int) -> int:
        result = self.identity
        base = g if exponent >= 0 else self.inverses[g]
        for _ in range(abs(exponent)):
            result = int(self.table[result, base])
        return result

    def element_order(self, g: int) -> int:
        order = 1
        current = g
        while current != self.identity:
            current = int(self.table[current, g])
            order += 1
        return order

    def is_abelian(self) -> bool:
        return np.array_equal(self.table, self.table.T)

    def is_central(self, g: int) -> bool:
        return np.array_equal(self.table[g, :], self.table[:, g])

    def centralizer(self, g: int) -> List[int]:
        return [h for h in range(self.order) if self.table[g, h] == self.table[h, g]]

    def conjugacy_data(self) -> ConjClasses:
        if self._conjugacy is None:
            class_of = [-1] * self.order
            members = []
            for element in range(self.order):
                if class_of[element] >= 0:
                    continue
                orbit = sorted({self.conjugate(h, element) for h in range(self.order)})
                for member in orbit:
                    class_of[member] = len(members)
                members.append(orbit)
            self._conjugacy = ConjClasses(class_of, members)
        return self._conjugacy

    def is_normal_subgroup(self, subset: Sequence[int]) -> bool:
        members = set(subset)
        if self.identity not in members:
            return False
        for g in members:
            for h in members:
                if int(self.table[g, self.inverses[h]]) not in members:
                    return False
        return all(self.conjugate(g, h) in members for g in range(self.order) for h in members)

    def subgroup_class_count(self, subset: Sequence[int]) -> int:
        """Number of conjugacy classes of the subgroup `subset` under its own conjugation."""
        members = sorted(subset)
        seen = set()
        count = 0
        for element in members:
            if element in seen:
                continue
            count += 1
            seen.update(self.conjugate(h, element) for h in members)
        return count

    def generated_subgroup(self, elements: Sequence[int]) -> List[int]:
        members = {self.identity}
        frontier = [self.identity]
        while frontier:
            current = frontier.pop()
            for g in elements:
                product = int(self.table[current, g])
                if product not in members:
                    members.add(product)
                    frontier.append(product)
        return sorted(members)

    def generators(self) -> List[int]:
        """A small generating set, chosen greedily by decreasing element order."""
        if self._generators is None:
            chosen = []
            reached = {self.identity}
            for element in sorted(range(self.order), key=lambda g: (-self.element_order(g), g)):
                if element not in reached:
                    chosen.append(element)
                    reached = set(self.generated_subgroup(chosen))
                if len(reached) == self.order:
                    break
            self._generators = chosen
        return self._generators

    def __repr__(self):
        return "FinGroup(order=%d)" % self.order

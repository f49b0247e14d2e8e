#!/usr/bin/python
"""Characters G -> F_p^x and the kernel subgroup N = ker(chi)."""

import logging
from typing import Dict, List, Tuple

from hochschild.errors import NotAHomomorphism
from hochschild.field.prime_field import PrimeField, Scalar
from hochschild.groups.fin_group import FinGroup

LOGGER = logging.getLogger(__name__)


class Character:
    """A group homomorphism chi: G -> F_p^x stored as its value table (residues)."""

    def __init__(self, group: FinGroup, field: PrimeField, values: List[int]):
        self.group = group
        self.field = field
        self.values = [int(value) % field.p for value in values]
        self._validate()

    def _validate(self):
        if len(self.values) != self.group.order:
            raise NotAHomomorphism("Character needs %d values, got %d" % (self.group.order, len(self.values)))
        if self.values[self.group.identity] != 1:
            raise NotAHomomorphism("Character must send the identity to 1")
        if any(value == 0 for value in self.values):
            raise NotAHomomorphism("Character values must be units")
        p = self.field.p
        for g in range(self.group.order):
            for h in range(self.group.order):
                if self.values[self.group.mul(g, h)] != (self.values[g] * self.values[h]) % p:
                    raise NotAHomomorphism("chi(%s %s) != chi(%s) chi(%s)"
                                           % (self.group.labels[g], self.group.labels[h],
                                              self.group.labels[g], self.group.labels[h]))

    def __call__(self, g: int) -> int:
        return self.values[g]

    def scalar(self, g: int) -> Scalar:
        return self.field.scalar(self.values[g])

    def power_value(self, g: int, exponent: int) -> int:
        return self.field.pow(self.values[g], exponent)

    def is_trivial(self) -> bool:
        return all(value == 1 for value in self.values)

    def image_order(self) -> int:
        return len(set(self.values))

    def kernel(self) -> List[int]:
        return [g for g, value in enumerate(self.values) if value == 1]

    def __eq__(self, other):
        return isinstance(other, Character) and self.values == other.values and self.field == other.field

    def __hash__(self):
        return hash(tuple(self.values))

    def __repr__(self):
        return "Character(%s)" % self.values


def character_power(chi: Character, exponent: int) -> Character:
    return Character(chi.group, chi.field, [chi.power_value(g, exponent) for g in range(chi.group.order)])


def character_from_generator_values(group: FinGroup, field: PrimeField, assignments: Dict[int, int]) -> Character:
    """
    Extend values on a generating set to a homomorphism by walking the Cayley graph.

    :raises: NotAHomomorphism if the assignments conflict or do not generate the group
    """
    p = field.p
    values = {group.identity: 1}
    frontier = [group.identity]
    generators = [(int(g), int(value) % p) for g, value in sorted(assignments.items())]
    for g, value in generators:
        if not 0 <= g < group.order:
            raise NotAHomomorphism("Element %d is not in a group of order %d" % (g, group.order))
        if value == 0:
            raise NotAHomomorphism("Character value of %s must be a unit" % group.labels[g])
    while frontier:
        current = frontier.pop()
        for g, value in generators:
            target = group.mul(current, g)
            expected = (values[current] * value) % p
            if target in values:
                if values[target] != expected:
                    raise NotAHomomorphism("Assignments do not extend to a homomorphism (conflict at %s)"
                                           % group.labels[target])
            else:
                values[target] = expected
                frontier.append(target)
    if len(values) != group.order:
        raise NotAHomomorphism("Assigned elements generate only %d of %d elements" % (len(values), group.order))
    return Character(group, field, [values[g] for g in range(group.order)])


def kernel_of_character(group: FinGroup, chi: Character) -> Tuple[List[int], int, int]:
    """
    :returns: N = ker(chi), the number of G-conjugacy classes inside N and the number of N-classes of N
    """
    kernel = chi.kernel()
    if not group.is_normal_subgroup(kernel):
        raise NotAHomomorphism("Kernel of %r is not a normal subgroup" % chi)
    classes = group.conjugacy_data()
    members = set(kernel)
    g_classes = sum(1 for class_members in classes.members if set(class_members) <= members)
    n_classes = group.subgroup_class_count(kernel)
    LOGGER.debug("ker chi has order %d, %d G-classes, %d N-classes", len(kernel), g_classes, n_classes)
    return kernel, g_classes, n_classes

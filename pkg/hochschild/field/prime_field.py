#!/usr/bin/python
"""This module provides the :class:`PrimeField` object, exact arithmetic modulo a small odd prime."""

from typing import List, Optional

from hochschild.constants import Constants
from hochschild.errors import BadCharacteristic, DivisionByZero, NoSuchRoot, ZeroElement


class PrimeField:
    """The field F_p for an odd prime p < 2^16."""

    def __init__(self, p: int):
        """
        :param int p: the characteristic
        :raises: BadCharacteristic when p is not an odd prime in range
        """
        if not isinstance(p, int) or isinstance(p, bool):
            raise BadCharacteristic("Characteristic must be an integer, got %r" % (p,))
        if p < 3 or p >= Constants.MAX_PRIME:
            raise BadCharacteristic("Characteristic %d outside [3, %d)" % (p, Constants.MAX_PRIME))
        if not self.is_prime(p):
            raise BadCharacteristic("%d is not prime" % p)
        self.p = p

    @staticmethod
    def is_prime(candidate: int) -> bool:
        if candidate < 2:
            return False
        divisor = 2
        while divisor * divisor <= candidate:
            if candidate % divisor == 0:
                return False
            divisor += 1
        return True

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return "PrimeField(%d)" % self.p

    def scalar(self, value: int) -> 'Scalar':
        return Scalar(value, self)

    def units(self) -> List['Scalar']:
        return [self.scalar(value) for value in range(1, self.p)]

    def reduce(self, value: int) -> int:
        return value % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise DivisionByZero("0 has no inverse in F_%d" % self.p)
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, exponent: int) -> int:
        if exponent < 0:
            return pow(self.inv(a), -exponent, self.p)
        return pow(a % self.p, exponent, self.p)

    def multiplicative_order(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroElement("0 has no multiplicative order")
        order = 1
        power = a
        while power != 1:
            power = (power * a) % self.p
            order += 1
        return order

    def element_of_order(self, m: int) -> 'Scalar':
        """
        Smallest residue of exact multiplicative order m.

        :raises: NoSuchRoot when m does not divide p - 1
        """
        if m < 1 or (self.p - 1) % m != 0:
            raise NoSuchRoot("F_%d has no element of order %d" % (self.p, m))
        for candidate in range(1, self.p):
            if self.multiplicative_order(candidate) == m:
                return self.scalar(candidate)
        raise NoSuchRoot("F_%d has no element of order %d" % (self.p, m))


class Scalar:
    """An element of a :class:`PrimeField`. Immutable."""

    __slots__ = ("residue", "field")

    def __init__(self, value: int, field: PrimeField):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "residue", int(value) % field.p)

    def __setattr__(self, key, value):
        raise AttributeError("Scalar is immutable")

    def _key(self):
        return self.field.p, self.residue

    def _coerce(self, other) -> Optional[int]:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise ValueError("Cannot mix %r and %r" % (self.field, other.field))
            return other.residue
        if isinstance(other, int):
            return other % self.field.p
        return None

    def __eq__(self, other):
        value = self._coerce(other)
        return value is not None and value == self.residue

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return "Scalar(%d mod %d)" % (self.residue, self.field.p)

    def __str__(self):
        return str(self.residue)

    def __int__(self):
        return self.residue

    def __index__(self):
        return self.residue

    def __add__(self, other):
        return Scalar(self.field.add(self.residue, self._coerce(other)), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field.sub(self.residue, self._coerce(other)), self.field)

    def __rsub__(self, other):
        return Scalar(self.field.sub(self._coerce(other), self.residue), self.field)

    def __neg__(self):
        return Scalar(-self.residue, self.field)

    def __mul__(self, other):
        return Scalar(self.field.mul(self.residue, self._coerce(other)), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.field.div(self.residue, self._coerce(other)), self.field)

    def __rtruediv__(self, other):
        return Scalar(self.field.div(self._coerce(other), self.residue), self.field)

    def __pow__(self, exponent: int):
        return Scalar(self.field.pow(self.residue, exponent), self.field)

    def inverse(self) -> 'Scalar':
        return Scalar(self.field.inv(self.residue), self.field)

    def is_zero(self) -> bool:
        return self.residue == 0

    def multiplicative_order(self) -> int:
        return self.field.multiplicative_order(self.residue)


def field_arithmetic(a: Scalar, b: Optional[Scalar], op: str):
    """Dispatch one of add, sub, mul, div, inv, pow. For pow, `b` is an integer exponent."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** int(b)
    raise ValueError("Unknown field operation '%s'" % op)

"""
Group constructors. Element indexing:
  cyclic m:      g^k -> k
  dihedral 2m:   r^k s^e -> k + m*e  (s r s = r^-1); S_3 is dihedral 6
  product G1xG2: (g1, g2) -> g1*|G2| + g2  (left factor slowest)
"""

from typing import Any, Dict

from hochschild.enums.group_kind import GroupKind
from hochschild.errors import InvalidTable
from hochschild.groups.fin_group import FinGroup


def cyclic(order: int) -> FinGroup:
    if order < 1:
        raise InvalidTable("Cyclic group order must be positive, got %d" % order)
    table = [[(i + j) % order for j in range(order)] for i in range(order)]
    labels = ["e" if k == 0 else ("g" if k == 1 else "g^%d" % k) for k in range(order)]
    return FinGroup(table, labels)


def dihedral(order: int) -> FinGroup:
    """Dihedral group with `order` elements (order = 2m, m >= 2)."""
    if order < 4 or order % 2:
        raise InvalidTable("Dihedral group order must be even and at least 4, got %d" % order)
    m = order // 2

    def product(a: int, b: int) -> int:
        k, e = a % m, a // m
        l, f = b % m, b // m
        rotation = (k + (l if e == 0 else -l)) % m
        return rotation + m * ((e + f) % 2)

    table = [[product(a, b) for b in range(order)] for a in range(order)]
    labels = []
    for element in range(order):
        k, e = element % m, element // m
        rotation = "" if k == 0 else ("r" if k == 1 else "r^%d" % k)
        label = rotation + ("s" if e else "")
        labels.append(label or "e")
    return FinGroup(table, labels)


def direct_product(first: FinGroup, second: FinGroup) -> FinGroup:
    size = second.order
    order = first.order * size
    table = [[int(first.table[a // size, b // size]) * size + int(second.table[a % size, b % size])
              for b in range(order)] for a in range(order)]
    labels = ["(%s,%s)" % (first.labels[a // size], second.labels[a % size]) for a in range(order)]
    return FinGroup(table, labels)


def make_group(spec: Dict[str, Any]) -> FinGroup:
    """
    Build a group from its JSON description:
    {"kind": "cyclic", "order": m} | {"kind": "dihedral", "order": 2m}
    | {"kind": "product", "factors": [spec, spec, ...]} | {"kind": "table", "table": [[...]], "labels": [...]}
    """
    try:
        kind = GroupKind(spec["kind"])
    except (KeyError, ValueError, TypeError):
        raise InvalidTable("Unknown group kind in %r" % (spec,))
    try:
        if kind == GroupKind.CYCLIC:
            return cyclic(int(spec["order"]))
        if kind == GroupKind.DIHEDRAL:
            return dihedral(int(spec["order"]))
        if kind == GroupKind.PRODUCT:
            factors = [make_group(factor) for factor in spec["factors"]]
            if not factors:
                raise InvalidTable("Product group needs at least one factor")
            group = factors[0]
            for factor in factors[1:]:
                group = direct_product(group, factor)
            return group
        return FinGroup(spec["table"], spec.get("labels"))
    except KeyError as missing:
        raise InvalidTable("Group spec of kind '%s' is missing %s" % (kind.value, missing))

from typing import Optional

import numpy as np

from hochschild.groups.fin_group import FinGroup
from hochschild.utils.tensors import tensor_digits


class Grading:
    """
    Weights of a basis: an integer degree and, optionally, an element of an abelian group.
    Used to split Hochschild complexes into weight blocks.
    """

    def __init__(self, degrees: np.ndarray, group_parts: Optional[np.ndarray] = None,
                 group: Optional[FinGroup] = None):
        self.degrees = np.asarray(degrees, dtype=np.int64)
        if group_parts is not None and (group is None or not group.is_abelian()):
            group_parts, group = None, None
        self.group_parts = None if group_parts is None else np.asarray(group_parts, dtype=np.int64)
        self.group = group

    def __len__(self):
        return self.degrees.shape[0]

    def restrict(self, indices) -> 'Grading':
        parts = None if self.group_parts is None else self.group_parts[indices]
        return Grading(self.degrees[indices], parts, self.group)

    def is_homogeneous(self, algebra) -> bool:
        """Every nonzero structure constant c[i, j, k] has weight(k) = weight(i) + weight(j)."""
        coo = algebra.structure.tocoo()
        i, j = np.divmod(coo.row, algebra.dim)
        k = coo.col
        if not np.array_equal(self.degrees[k], self.degrees[i] + self.degrees[j]):
            return False
        if self.group_parts is None:
            return True
        products = self.group.table[self.group_parts[i], self.group_parts[j]]
        return np.array_equal(self.group_parts[k], products)

    def cochain_keys(self, inputs: 'Grading', length: int) -> np.ndarray:
        """
        Weight key of every coordinate of Hom(V^{(x)length}, W) where `inputs` grades V and `self` grades W.
        Coordinate (t_1..t_length; o) sits at index tensor(t) * dim W + o and weighs w(o) - sum w(t_i).
        """
        base = len(inputs)
        width = len(self)
        digits = tensor_digits(np.arange(base ** length), base, length)
        input_degree = inputs.degrees[digits].sum(axis=1) if length else np.zeros(1, dtype=np.int64)
        degree = self.degrees[None, :] - input_degree[:, None]
        if self.group_parts is None or inputs.group_parts is None:
            return degree.reshape(-1)
        group = self.group
        total = np.full(base ** length, group.identity, dtype=np.int64)
        for position in range(length):
            total = group.table[total, inputs.group_parts[digits[:, position]]]
        inverse = np.array(group.inverses, dtype=np.int64)[total]
        parts = group.table[self.group_parts[None, :], inverse[:, None]]
        return (degree * group.order + parts).reshape(-1)

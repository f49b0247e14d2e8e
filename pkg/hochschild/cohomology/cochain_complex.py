#!/usr/bin/python
"""
Cochain complexes over F_p.

A complex knows its dimensions for degrees 0..max_degree+1 and how to apply d_m to a batch of cochains
(rows). Cohomology is reported for degrees 0..max_degree. Complexes that carry a weight on their
coordinates (`coordinate_keys`) are reduced block by block.
"""

import logging
from abc import ABCMeta, abstractmethod
from typing import Dict, List, Optional

import numpy as np

from hochschild.constants import Constants
from hochschild.errors import BadParameter, DegreeOutOfRange, NotAComplex
from hochschild.linalg.modular import check_budget, cohomology_at
from hochschild.linalg.subspace import Subspace

LOGGER = logging.getLogger(__name__)


def group_indices(keys: np.ndarray) -> Dict[int, np.ndarray]:
    """Map every distinct key to the sorted positions holding it."""
    order = np.argsort(keys, kind="stable")
    sorted_keys = keys[order]
    boundaries = np.nonzero(np.diff(sorted_keys))[0] + 1
    groups = {}
    for chunk in np.split(order, boundaries):
        if chunk.size:
            groups[int(keys[chunk[0]])] = chunk
    return groups


class CochainComplex(metaclass=ABCMeta):

    def __init__(self, p: int, max_degree: int):
        if max_degree < 0:
            raise DegreeOutOfRange("max_degree must be non-negative, got %d" % max_degree)
        self.p = p
        self.max_degree = max_degree
        self._cohomology = {}
        self._blocks = {}

    @abstractmethod
    def dimension(self, m: int) -> int:
        """Dimension of C^m for 0 <= m <= max_degree + 1."""
        pass

    @abstractmethod
    def apply(self, m: int, rows: np.ndarray) -> np.ndarray:
        """d_m applied to every row of `rows`; returns rows in C^{m+1}."""
        pass

    def coordinate_keys(self, m: int) -> Optional[np.ndarray]:
        """Weight of every coordinate of C^m, preserved by the differential; None for a single block."""
        return None

    @property
    def dims(self) -> List[int]:
        return [self.dimension(m) for m in range(self.max_degree + 2)]

    def _check_degree(self, m: int, top: int):
        if not 0 <= m <= top:
            raise DegreeOutOfRange("Degree %d outside [0, %d]" % (m, top))

    def apply_batched(self, m: int, rows: np.ndarray) -> np.ndarray:
        """Like `apply` but splits large batches to bound memory."""
        rows = np.asarray(rows, dtype=np.int64)
        width = max(1, self.dimension(m + 1))
        step = max(1, Constants.BATCH_ENTRIES // width)
        if rows.shape[0] <= step:
            return self.apply(m, rows)
        return np.concatenate([self.apply(m, rows[start:start + step])
                               for start in range(0, rows.shape[0], step)])

    def block_differential(self, m: int, source: np.ndarray, target: np.ndarray) -> np.ndarray:
        """
        Matrix of d_m from the coordinates `source` of C^m to the coordinates `target` of C^{m+1}.
        The image of `source` must vanish outside `target`.
        """
        self._check_degree(m, self.max_degree)
        check_budget(len(target), len(source), "differential block d_%d" % m)
        if len(source) == 0 or len(target) == 0:
            outside = None
            matrix = np.zeros((len(target), len(source)), dtype=np.int64)
        else:
            width = self.dimension(m)
            units = np.zeros((len(source), width), dtype=np.int64)
            units[np.arange(len(source)), source] = 1
            images = self.apply_batched(m, units)
            matrix = images[:, target].T.copy()
            images[:, target] = 0
            outside = images
        if outside is not None and np.any(outside):
            raise BadParameter("d_%d leaves its weight block" % m)
        return matrix

    def differential(self, m: int) -> np.ndarray:
        """Full matrix of d_m, shape (dim C^{m+1}, dim C^m)."""
        return self.block_differential(m, np.arange(self.dimension(m)), np.arange(self.dimension(m + 1)))

    def _blocks_of(self, m: int) -> Dict[int, np.ndarray]:
        keys = self.coordinate_keys(m)
        if keys is None:
            return {0: np.arange(self.dimension(m))}
        return group_indices(keys)

    def _block_matrix(self, m: int, key: int, source: np.ndarray, target: np.ndarray) -> np.ndarray:
        cache_key = (m, key)
        if cache_key not in self._blocks:
            self._blocks[cache_key] = self.block_differential(m, source, target)
        return self._blocks[cache_key]

    def cohomology(self, m: int) -> 'CohomologyGroup':
        from hochschild.cohomology.cohomology_group import CohomologyBlock, CohomologyGroup
        self._check_degree(m, self.max_degree)
        if m in self._cohomology:
            return self._cohomology[m]
        empty = np.zeros(0, dtype=np.int64)
        blocks_here = self._blocks_of(m)
        blocks_before = self._blocks_of(m - 1) if m > 0 else {}
        blocks_after = self._blocks_of(m + 1)
        blocks = []
        for key, indices in blocks_here.items():
            before = blocks_before.get(key, empty)
            after = blocks_after.get(key, empty)
            d_in = self._block_matrix(m - 1, key, before, indices) if m > 0 \
                else np.zeros((len(indices), 0), dtype=np.int64)
            d_out = self._block_matrix(m, key, indices, after)
            dim, representatives = cohomology_at(d_in, d_out, self.p)
            image = Subspace.span(d_in.T, len(indices), self.p) if d_in.shape[1] \
                else Subspace.zero(len(indices), self.p)
            blocks.append(CohomologyBlock(indices, image, representatives))
        group = CohomologyGroup(self, m, blocks)
        LOGGER.debug("H^%d of %r: dim %d from %d blocks", m, self, group.dim, len(blocks))
        self._cohomology[m] = group
        return group

    def cohomology_dims(self, max_degree: Optional[int] = None) -> List[int]:
        top = self.max_degree if max_degree is None else max_degree
        return [self.cohomology(m).dim for m in range(top + 1)]

    def check_square_zero(self, m: int) -> None:
        """
        d_{m+1} d_m = 0 on every basis cochain of C^m.
        :raises: NotAComplex
        """
        self._check_degree(m, self.max_degree - 1)
        width = self.dimension(m)
        step = max(1, Constants.BATCH_ENTRIES // max(1, self.dimension(m + 2)))
        for start in range(0, width, step):
            stop = min(width, start + step)
            units = np.zeros((stop - start, width), dtype=np.int64)
            units[np.arange(stop - start), np.arange(start, stop)] = 1
            if np.any(self.apply(m + 1, self.apply(m, units))):
                raise NotAComplex("d_%d d_%d != 0" % (m + 1, m))


class MatrixComplex(CochainComplex):
    """A complex given by explicit matrices d_0, ..., d_max_degree."""

    def __init__(self, p: int, matrices: List[np.ndarray]):
        super().__init__(p, len(matrices) - 1)
        self.matrices = [np.asarray(matrix, dtype=np.int64) % p for matrix in matrices]
        for m in range(1, len(self.matrices)):
            if self.matrices[m].shape[1] != self.matrices[m - 1].shape[0]:
                raise BadParameter("d_%d and d_%d do not compose" % (m - 1, m))

    def __repr__(self):
        return "MatrixComplex(dims=%s)" % self.dims

    def dimension(self, m: int) -> int:
        self._check_degree(m, self.max_degree + 1)
        if m == self.max_degree + 1:
            return self.matrices[-1].shape[0]
        return self.matrices[m].shape[1]

    def apply(self, m: int, rows: np.ndarray) -> np.ndarray:
        return (np.asarray(rows, dtype=np.int64) @ self.matrices[m].T) % self.p

#!/usr/bin/python
"""
Dense exact linear algebra over F_p on numpy int64 arrays.

Matrices act on column vectors: a differential d_m: C^m -> C^{m+1} has shape (dim C^{m+1}, dim C^m).
All entries are kept reduced to [0, p). Products of two residues stay below 2^32, so int64
accumulation is exact for every inner dimension this package produces.
"""

import logging
from typing import List, Tuple

import numpy as np

from hochschild.constants import Constants
from hochschild.errors import BudgetExceeded, DimensionMismatch, NotAComplex

LOGGER = logging.getLogger(__name__)


def check_budget(rows: int, cols: int, what: str = "matrix") -> None:
    if rows * cols > Constants.MAX_MATRIX_ENTRIES:
        raise BudgetExceeded(what, rows * cols, Constants.MAX_MATRIX_ENTRIES)


def as_matrix(entries, p: int) -> np.ndarray:
    matrix = np.array(entries, dtype=np.int64)
    if matrix.ndim == 1:
        matrix = matrix.reshape(1, -1)
    return matrix % p


def inverse_mod(value: int, p: int) -> int:
    return pow(int(value) % p, p - 2, p)


def matmul_mod(left: np.ndarray, right: np.ndarray, p: int) -> np.ndarray:
    if left.shape[-1] != right.shape[0]:
        raise DimensionMismatch("Cannot compose %s with %s" % (left.shape, right.shape))
    return (left.astype(np.int64) @ right.astype(np.int64)) % p


def rref(matrix: np.ndarray, p: int) -> Tuple[np.ndarray, int, List[int]]:
    """
    Gauss-Jordan elimination over F_p with first-nonzero pivoting.

    :returns: the reduced row echelon form, the rank and the pivot columns
    """
    reduced = as_matrix(matrix, p)
    rows, cols = reduced.shape
    check_budget(rows, cols, "rref")
    pivots = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        candidates = np.nonzero(reduced[row:, col])[0]
        if candidates.size == 0:
            continue
        pivot_row = row + candidates[0]
        if pivot_row != row:
            reduced[[row, pivot_row]] = reduced[[pivot_row, row]]
        reduced[row, col:] = (reduced[row, col:] * inverse_mod(reduced[row, col], p)) % p
        column = reduced[:, col].copy()
        column[row] = 0
        targets = np.nonzero(column)[0]
        if targets.size:
            reduced[targets, col:] = (reduced[targets, col:]
                                      - np.outer(column[targets], reduced[row, col:])) % p
        pivots.append(col)
        row += 1
    return reduced, row, pivots


def rank(matrix: np.ndarray, p: int) -> int:
    matrix = np.asarray(matrix, dtype=np.int64) % p
    # zero rows and columns never carry a pivot
    matrix = matrix[np.any(matrix, axis=1)][:, np.any(matrix, axis=0)]
    if matrix.size == 0:
        return 0
    # eliminate along the shorter side
    if matrix.shape[0] > matrix.shape[1]:
        matrix = matrix.T
    return rref(matrix, p)[1]


def kernel_basis(matrix: np.ndarray, p: int) -> 'Subspace':
    """Subspace of all v with matrix . v = 0."""
    from hochschild.linalg.subspace import Subspace
    matrix = np.asarray(matrix, dtype=np.int64)
    cols = matrix.shape[1]
    if matrix.shape[0] == 0:
        return Subspace.full(cols, p)
    reduced, matrix_rank, pivots = rref(matrix, p)
    pivot_set = set(pivots)
    free = [col for col in range(cols) if col not in pivot_set]
    vectors = np.zeros((len(free), cols), dtype=np.int64)
    if free:
        vectors[np.arange(len(free)), free] = 1
        if pivots:
            vectors[:, pivots] = (-reduced[:matrix_rank, free]).T % p
    return Subspace.span(vectors, cols, p)


def solve(matrix: np.ndarray, target: np.ndarray, p: int) -> np.ndarray:
    """
    One solution x of matrix . x = target.

    :raises: DimensionMismatch when the system is inconsistent or shapes disagree
    """
    matrix = np.asarray(matrix, dtype=np.int64) % p
    target = np.asarray(target, dtype=np.int64).reshape(-1) % p
    if matrix.shape[0] != target.shape[0]:
        raise DimensionMismatch("System has %d rows, right hand side %d" % (matrix.shape[0], target.shape[0]))
    cols = matrix.shape[1]
    augmented = np.concatenate([matrix, target.reshape(-1, 1)], axis=1)
    reduced, augmented_rank, pivots = rref(augmented, p)
    if pivots and pivots[-1] == cols:
        raise DimensionMismatch("Linear system has no solution")
    solution = np.zeros(cols, dtype=np.int64)
    for row, col in enumerate(pivots):
        solution[col] = reduced[row, cols]
    return solution


def independent_columns(matrix: np.ndarray, p: int) -> List[int]:
    """Greedy left-to-right choice of columns spanning the column space."""
    if matrix.shape[1] == 0 or matrix.shape[0] == 0:
        return []
    return rref(matrix, p)[2]


def cohomology_at(d_in: np.ndarray, d_out: np.ndarray, p: int) -> Tuple[int, np.ndarray]:
    """
    Cohomology of C^{m-1} -> C^m -> C^{m+1} at the middle term.

    :param d_in: shape (dim C^m, dim C^{m-1})
    :param d_out: shape (dim C^{m+1}, dim C^m)
    :returns: the dimension and representative cocycles as rows
    :raises: NotAComplex when d_out . d_in != 0
    """
    from hochschild.linalg.subspace import Subspace
    middle = d_in.shape[0]
    if d_out.shape[1] != middle:
        raise DimensionMismatch("d_in lands in dimension %d but d_out starts from %d" % (middle, d_out.shape[1]))
    if d_out.shape[0] and d_in.shape[1] and np.any(matmul_mod(d_out, d_in, p)):
        raise NotAComplex("Composite of consecutive differentials is nonzero")
    if d_out.shape[0]:
        kernel = kernel_basis(d_out, p)
    else:
        kernel = Subspace.full(middle, p)
    image = Subspace.span(d_in.T, middle, p) if d_in.shape[1] else Subspace.zero(middle, p)
    if kernel.dim == image.dim:
        return 0, np.zeros((0, middle), dtype=np.int64)
    stacked = np.concatenate([image.basis, kernel.basis], axis=0).T
    chosen = [col - image.dim for col in independent_columns(stacked, p) if col >= image.dim]
    representatives = kernel.basis[chosen]
    LOGGER.debug("cohomology_at: ker %d, im %d, dim %d", kernel.dim, image.dim, len(chosen))
    return len(chosen), representatives

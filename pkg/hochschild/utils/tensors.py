"""Index arithmetic for tensor bases. Tensor bases are lexicographic with the leftmost factor slowest."""

import numpy as np


def tensor_digits(indices: np.ndarray, base: int, length: int) -> np.ndarray:
    """Split flat tensor indices into their `length` factor indices (one column per factor)."""
    indices = np.asarray(indices, dtype=np.int64)
    digits = np.zeros((indices.shape[0], length), dtype=np.int64)
    rest = indices.copy()
    for position in range(length - 1, -1, -1):
        digits[:, position] = rest % base
        rest //= base
    return digits


def tensor_index(digits: np.ndarray, base: int) -> np.ndarray:
    digits = np.asarray(digits, dtype=np.int64)
    index = np.zeros(digits.shape[0], dtype=np.int64)
    for position in range(digits.shape[1]):
        index = index * base + digits[:, position]
    return index


def contract_adjacent(batch: np.ndarray, structure: np.ndarray, base: int, length: int, position: int) -> np.ndarray:
    """
    Multiply the factors at `position` and `position + 1` of every tensor in `batch`.

    :param batch: array of shape (rows, base ** length)
    :param structure: dense structure constants of shape (base, base, base)
    :returns: array of shape (rows, base ** (length - 1))
    """
    rows = batch.shape[0]
    left = base ** position
    right = base ** (length - position - 2)
    shaped = batch.reshape(rows, left, base, base, right)
    result = np.einsum('blijr,ijk->blkr', shaped, structure)
    return result.reshape(rows, left * base * right)


def act_on_factor(batch: np.ndarray, matrix: np.ndarray, base: int, length: int, position: int) -> np.ndarray:
    """Apply `matrix` (base x base, column convention) to one tensor factor of every row of `batch`."""
    rows = batch.shape[0]
    left = base ** position
    right = base ** (length - position - 1)
    shaped = batch.reshape(rows, left, base, right)
    result = np.einsum('ki,blir->blkr', matrix, shaped)
    return result.reshape(rows, left * base * right)

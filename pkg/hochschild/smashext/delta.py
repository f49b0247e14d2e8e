"""delta(g) = g (x) g^-1 in B^e for grouplike g, and the checks that it lands in D."""

import logging

import numpy as np

from hochschild.algebras.constructions import enveloping_pure_product, pure_tensor, subalgebra_D_groupcase
from hochschild.errors import IsoCheckFailed
from hochschild.linalg.modular import rank
from hochschild.linalg.subspace import Subspace
from hochschild.rankone.rank_one_data import RankOneData

LOGGER = logging.getLogger(__name__)


def delta_factors(data: RankOneData, g: int):
    return data.group_element(g), data.group_element(data.group.inv(g))


def delta_embedding(data: RankOneData) -> np.ndarray:
    """Rows: delta(g) as pure tensors in B (x) B^op, index b1 * dim B + b2."""
    return np.array([pure_tensor(*delta_factors(data, g)) for g in range(data.group.order)], dtype=np.int64)


def verify_delta(data: RankOneData, d_embedding: np.ndarray) -> None:
    """
    delta(1) = 1 (x) 1, delta is multiplicative, conjugation by delta(g) is the diagonal action on A^e,
    and the image lies in D.

    :raises: IsoCheckFailed
    """
    B = data.B
    group = data.group
    p = data.p
    rows = delta_embedding(data)
    if not np.array_equal(rows[group.identity], pure_tensor(B.unit, B.unit)):
        raise IsoCheckFailed("delta(1) != 1 (x) 1")
    if rank(rows, p) != group.order:
        raise IsoCheckFailed("delta is not injective")
    for g in range(group.order):
        for h in range(group.order):
            product = enveloping_pure_product(B, delta_factors(data, g), delta_factors(data, h))
            if not np.array_equal(pure_tensor(*product) % p, rows[group.mul(g, h)]):
                raise IsoCheckFailed("delta(%s) delta(%s) != delta(%s %s)"
                                     % (group.labels[g], group.labels[h], group.labels[g], group.labels[h]))
    action = data.algebra_action
    x_powers = [data.element(i, group.identity) for i in range(data.n)]
    for g in range(group.order):
        forward = delta_factors(data, g)
        backward = delta_factors(data, group.inv(g))
        scales = action.matrix(g).diagonal()
        for i in range(data.n):
            for j in range(data.n):
                a, b = x_powers[i], x_powers[j]
                conjugated = enveloping_pure_product(B, enveloping_pure_product(B, forward, (a, b)), backward)
                expected = (scales[i] * a, scales[j] * b)
                if not np.array_equal(pure_tensor(*conjugated) % p, pure_tensor(*expected) % p):
                    raise IsoCheckFailed("delta(%s) (x^%d (x) x^%d) delta(%s)^-1 is not the diagonal action"
                                         % (group.labels[g], i, j, group.labels[g]))
    image = Subspace.span(d_embedding, d_embedding.shape[1], p)
    for g in range(group.order):
        if not image.contains(rows[g]):
            raise IsoCheckFailed("delta(%s) is not in D" % group.labels[g])
    LOGGER.debug("delta verified on %d group elements", group.order)


def d_subalgebra(data: RankOneData):
    """:returns: D = A^e # kG and its embedding rows in B^e"""
    return subalgebra_D_groupcase(data.A, data.group, data.chi, data.B)


def d_index(data: RankOneData, i: int, j: int, g: int) -> int:
    """Position of (x^i (x) x^j) g in D."""
    n = data.n
    return i * n + j + n * n * g


def enveloping_operator(data: RankOneData, row: np.ndarray, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """
    The matrix by which an element of B^e acts on a B-bimodule.

    :param row: the element, as coordinates b1 * dim B + b2 of b1 (x) b2
    :param left: left action matrices of the basis of B
    :param right: right action matrices of the basis of B
    """
    pairs = np.asarray(row, dtype=np.int64).reshape(data.dim, data.dim)
    support = np.nonzero(pairs)
    result = np.zeros(left.shape[1:], dtype=np.int64)
    for b1, b2 in zip(*support):
        result = (result + pairs[b1, b2] * (left[b1] @ right[b2])) % data.p
    return result

#!/usr/bin/python
"""
Concrete algebras. Basis conventions, relied on everywhere else:
  k[x]/(x^n):   x^i at index i
  kG:           g at index g
  A # kG:       a_i g at index i + dim(A) * g   (algebra index fastest)
  A (x) A':     e_i (x) f_j at index i * dim(A') + j   (left factor slowest)
"""

import logging
from math import gcd
from typing import Optional, Tuple

import numpy as np
from scipy import sparse

from hochschild.algebras.algebra import Algebra
from hochschild.algebras.grading import Grading
from hochschild.algebras.group_action import GroupAction
from hochschild.constants import Constants
from hochschild.errors import BadParameter, CharacteristicDividesGroupOrder, IsoCheckFailed
from hochschild.field.prime_field import PrimeField
from hochschild.groups.character import Character
from hochschild.groups.fin_group import FinGroup
from hochschild.linalg.modular import kernel_basis, rank
from hochschild.linalg.subspace import Subspace

LOGGER = logging.getLogger(__name__)


def monomial_label(exponent: int) -> str:
    if exponent == 0:
        return "1"
    return "x" if exponent == 1 else "x^%d" % exponent


def truncated_poly(field: PrimeField, n: int) -> Algebra:
    if n < 2:
        raise BadParameter("Truncation n must be at least 2, got %d" % n)
    pairs = [(i, j) for i in range(n) for j in range(n) if i + j < n]
    first = [i for i, _ in pairs]
    second = [j for _, j in pairs]
    target = [i + j for i, j in pairs]
    unit = np.zeros(n, dtype=np.int64)
    unit[0] = 1
    return Algebra.from_triples(field, [monomial_label(i) for i in range(n)], first, second, target,
                                np.ones(len(pairs)), unit, Grading(np.arange(n)))


def group_algebra(field: PrimeField, group: FinGroup) -> Algebra:
    order = group.order
    g, h = np.divmod(np.arange(order * order), order)
    unit = np.zeros(order, dtype=np.int64)
    unit[group.identity] = 1
    grading = Grading(np.zeros(order, dtype=np.int64), np.arange(order), group)
    return Algebra.from_triples(field, list(group.labels), g, h, group.table[g, h], np.ones(order * order),
                                unit, grading)


def character_action(algebra: Algebra, chi: Character) -> GroupAction:
    """g . x^i = chi(g)^i x^i on k[x]/(x^n)."""
    order = chi.group.order
    exponents = np.arange(algebra.dim)
    scales = np.array([[chi.power_value(g, int(i)) for i in exponents] for g in range(order)])
    permutations = np.tile(exponents, (order, 1))
    return GroupAction.monomial(chi.group, algebra.p, permutations, scales)


def smash_label(algebra_label: str, group_label: str, identity: bool) -> str:
    if identity:
        return algebra_label
    if algebra_label == "1":
        return group_label
    return "%s*%s" % (algebra_label, group_label)


def smash_product_by_action(algebra: Algebra, group: FinGroup, action: GroupAction) -> Algebra:
    """
    A # kG with (a g)(b h) = a (g.b) gh, for an action by algebra automorphisms.

    :raises: CharacteristicDividesGroupOrder
    """
    if gcd(algebra.p, group.order) != 1:
        raise CharacteristicDividesGroupOrder("p = %d divides |G| = %d" % (algebra.p, group.order))
    d = algebra.dim
    order = group.order
    dim = d * order
    c = algebra.structure.toarray().reshape(d, d, d)
    firsts, seconds, targets, values = [], [], [], []
    hs = np.arange(order)
    for g in range(order):
        # twisted[a, b, e] = coefficient of e_e in e_a (g . e_b)
        twisted = np.einsum('cb,ace->abe', action.matrix(g), c) % algebra.p
        a, b, e = np.nonzero(twisted)
        coefficient = twisted[a, b, e]
        firsts.append(np.repeat(a + d * g, order))
        seconds.append((b[:, None] + d * hs[None, :]).reshape(-1))
        targets.append((e[:, None] + d * group.table[g, hs][None, :]).reshape(-1))
        values.append(np.repeat(coefficient, order))
    unit = np.zeros(dim, dtype=np.int64)
    unit[:d] = algebra.unit
    unit = np.roll(unit, d * group.identity)
    labels = [smash_label(algebra.labels[i], group.labels[g], g == group.identity)
              for g in range(order) for i in range(d)]
    grading = None
    if algebra.grading is not None:
        grading = Grading(np.tile(algebra.grading.degrees, order), np.repeat(np.arange(order), d), group)
    LOGGER.debug("Smash product of dim %d with group of order %d", d, order)
    return Algebra.from_triples(algebra.field, labels, np.concatenate(firsts), np.concatenate(seconds),
                                np.concatenate(targets), np.concatenate(values), unit, grading)


def smash_product(algebra: Algebra, group: FinGroup, chi: Character) -> Algebra:
    """B = k[x]/(x^n) # kG with g x g^-1 = chi(g) x."""
    return smash_product_by_action(algebra, group, character_action(algebra, chi))


def opposite(algebra: Algebra) -> Algebra:
    return Algebra(algebra.field, algebra.labels, algebra.opposite_structure(), algebra.unit, algebra.grading,
                   validate=False)


def tensor_product_algebra(first: Algebra, second: Algebra) -> Algebra:
    d1, d2 = first.dim, second.dim
    one = first.structure.tocoo()
    two = second.structure.tocoo()
    i, k = np.divmod(one.row, d1)
    j, l = np.divmod(two.row, d2)
    rows = ((i[:, None] * d2 + j[None, :]) * (d1 * d2) + (k[:, None] * d2 + l[None, :])).reshape(-1)
    cols = (one.col[:, None] * d2 + two.col[None, :]).reshape(-1)
    values = (one.data[:, None] * two.data[None, :]).reshape(-1) % first.p
    structure = sparse.coo_matrix((values, (rows, cols)), shape=((d1 * d2) ** 2, d1 * d2)).tocsr()
    unit = np.kron(first.unit, second.unit)
    labels = ["%s(x)%s" % (a, b) for a in first.labels for b in second.labels]
    grading = None
    if first.grading is not None and second.grading is not None:
        grading = Grading((first.grading.degrees[:, None] + second.grading.degrees[None, :]).reshape(-1))
    return Algebra(first.field, labels, structure, unit, grading)


def enveloping_algebra(algebra: Algebra) -> Algebra:
    """A^e = A (x) A^op."""
    return tensor_product_algebra(algebra, opposite(algebra))


def center(algebra: Algebra) -> Subspace:
    """All z with z e_a = e_a z for every basis element."""
    constraints = [algebra.left_matrix(algebra.basis_vector(a)) - algebra.right_matrix(algebra.basis_vector(a))
                   for a in range(algebra.dim)]
    return kernel_basis(np.concatenate(constraints) % algebra.p, algebra.p)


def enveloping_pure_product(algebra: Algebra, first: Tuple[np.ndarray, np.ndarray],
                            second: Tuple[np.ndarray, np.ndarray]) -> Tuple[np.ndarray, np.ndarray]:
    """(a (x) b)(c (x) d) = ac (x) db in A (x) A^op."""
    return algebra.multiply(first[0], second[0]), algebra.multiply(second[1], first[1])


def pure_tensor(first: np.ndarray, second: np.ndarray) -> np.ndarray:
    return np.outer(first, second).reshape(-1)


def check_enveloping_embedding(source: Algebra, ambient: Algebra, factors, embedding: np.ndarray,
                               pairs) -> None:
    """
    Verify that `embedding` (rows = images in ambient (x) ambient^op of the basis of `source`, each the pure
    tensor factors[i]) is a unital injective algebra map on the given basis pairs.

    :raises: IsoCheckFailed
    """
    p = source.p
    unit_image = (source.unit @ embedding) % p
    if not np.array_equal(unit_image, pure_tensor(ambient.unit, ambient.unit)):
        raise IsoCheckFailed("Embedding does not send 1 to 1 (x) 1")
    if rank(embedding, p) != source.dim:
        raise IsoCheckFailed("Embedding is not injective")
    for u, v in pairs:
        left, right = enveloping_pure_product(ambient, factors[u], factors[v])
        expected = (source.basis_product(u, v) @ embedding) % p
        if not np.array_equal(pure_tensor(left, right) % p, expected):
            raise IsoCheckFailed("Embedding is not multiplicative on (%s, %s)" % (source.labels[u], source.labels[v]))


def basis_pairs(dim: int, exhaustive_limit: int = Constants.EXHAUSTIVE_ISO_DIM):
    """All basis pairs up to the limit, a seeded random sample otherwise."""
    if dim <= exhaustive_limit:
        return [(u, v) for u in range(dim) for v in range(dim)]
    rng = np.random.default_rng(Constants.RANDOM_SEED)
    return [tuple(pair) for pair in rng.integers(0, dim, size=(Constants.RANDOM_ISO_PAIRS, 2))]


def subalgebra_D_groupcase(algebra: Algebra, group: FinGroup, chi: Character,
                           smash: Optional[Algebra] = None) -> Tuple[Algebra, np.ndarray]:
    """
    D = A^e # kG with the diagonal action, and its embedding into B^e for B = A # kG:
    (a (x) b) g -> a g (x) (g^-1 . b) g^-1.

    :returns: D and the embedding matrix of shape (dim D, dim B ^ 2)
    """
    smash = smash if smash is not None else smash_product(algebra, group, chi)
    action = character_action(algebra, chi)
    enveloping = enveloping_algebra(algebra)
    diagonal = action.kron(action)
    d_algebra = smash_product_by_action(enveloping, group, diagonal)
    factors = d_embedding_factors(algebra, group, chi, smash)
    embedding = np.array([pure_tensor(left, right) for left, right in factors]) % algebra.p
    check_enveloping_embedding(d_algebra, smash, factors, embedding, basis_pairs(d_algebra.dim))
    LOGGER.info("D has dim %d and embeds into B^e (dim %d)", d_algebra.dim, smash.dim ** 2)
    return d_algebra, embedding


def d_embedding_factors(algebra: Algebra, group: FinGroup, chi: Character, smash: Algebra):
    """Pure-tensor images (a g, (g^-1 . b) g^-1) of the basis (x^i (x) x^j) g of D, in D's index order."""
    n = algebra.dim
    factors = []
    for g in range(group.order):
        g_inverse = group.inv(g)
        for i in range(n):
            for j in range(n):
                left = smash.basis_vector(i + n * g)
                right = smash.basis_vector(j + n * g_inverse) * chi.power_value(g_inverse, j)
                factors.append((left, right % algebra.p))
    return factors

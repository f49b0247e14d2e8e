#!/usr/bin/python
"""
Ext_D(A, B) through the invariant complex Hom(A^{(x)m}, B)^G, with G acting diagonally on the tensor
factors and by conjugation on B. The bar resolution of A is D-projective, so this computes HH*(B).
"""

import logging
from typing import Dict, List, Optional

import numpy as np

from hochschild.algebras.hom import equivariant_maps
from hochschild.algebras.module import Bimodule
from hochschild.cohomology.hochschild_complex import HochschildComplex, feasible_max_degree
from hochschild.cohomology.invariant_complex import InvariantSubcomplex, cochain_actions
from hochschild.constants import Constants
from hochschild.errors import BudgetExceeded, DimensionMismatch
from hochschild.rankone.rank_one_data import RankOneData
from hochschild.smashext.delta import d_index, d_subalgebra, enveloping_operator
from hochschild.utils.tensors import act_on_factor, tensor_digits

LOGGER = logging.getLogger(__name__)


def coefficient_bimodule(data: RankOneData) -> Bimodule:
    """B as a bimodule over A."""
    return Bimodule.restricted(data.A, data.B, data.embedding_of_A())


def ext_d_complex(data: RankOneData, max_degree: int, normalized: bool = False) -> InvariantSubcomplex:
    """
    :param normalized: use normalized cochains of A; the full tensor powers otherwise
    :raises: BudgetExceeded
    """
    complex_ = HochschildComplex(data.A, coefficient_bimodule(data), max_degree, normalized)
    actions = cochain_actions(complex_, data.algebra_action, data.conjugation(), max_degree + 1)
    return InvariantSubcomplex(complex_, actions, max_degree)


def ext_d_feasible_degree(data: RankOneData, normalized: bool = False) -> int:
    return feasible_max_degree(data.A, coefficient_bimodule(data), normalized)


def ext_D_dims(data: RankOneData, max_degree: int, complex_: Optional[InvariantSubcomplex] = None) -> List[int]:
    """
    dim Ext^m_D(A, B) for m = 0..max_degree.

    :raises: BudgetExceeded
    """
    complex_ = complex_ if complex_ is not None else ext_d_complex(data, max_degree)
    dims = complex_.cohomology_dims(max_degree)
    LOGGER.info("Ext over D: %s", dims)
    return dims


def tensor_generator_actions(data: RankOneData, length: int) -> List[np.ndarray]:
    """
    Matrices on A^{(x)length} of the generators x (x) 1, 1 (x) x and the group generators,
    where (a (x) b) g sends t to a (g . t) b.
    """
    n, p = data.n, data.p
    size = n ** length
    x_matrix = data.A.left_matrix(data.A.basis_vector(1))
    identity = np.eye(size, dtype=np.int64)
    # rows are images of basis tensors, hence the transposes
    left = act_on_factor(identity, x_matrix, n, length, 0).T % p
    right = act_on_factor(identity, x_matrix, n, length, length - 1).T % p
    degrees = tensor_digits(np.arange(size), n, length).sum(axis=1)
    actions = [left, right]
    for g in data.group.generators():
        scales = np.array([data.chi.power_value(g, int(d)) for d in degrees], dtype=np.int64)
        actions.append(np.diag(scales))
    return actions


def d_generators(data: RankOneData) -> List[int]:
    identity = data.group.identity
    return [d_index(data, 1, 0, identity), d_index(data, 0, 1, identity)] + \
        [d_index(data, 0, 0, g) for g in data.group.generators()]


def bimodule_generator_actions(data: RankOneData, embedding: np.ndarray, bimodule: Bimodule,
                               generators: List[int]) -> List[np.ndarray]:
    """How the given elements of D act on a B-bimodule through D in B^e."""
    if bimodule.algebra.dim != data.dim:
        raise DimensionMismatch("Coefficients must be a bimodule over B")
    return [enveloping_operator(data, embedding[u], bimodule.left, bimodule.right) for u in generators]


def hom_d_dim(data: RankOneData, degree: int, embedding: np.ndarray,
              bimodule: Optional[Bimodule] = None) -> int:
    """
    dim Hom_D(A^{(x)(degree+2)}, M) solved directly.

    :raises: BudgetExceeded above Constants.MAX_HOM_UNKNOWNS unknowns
    """
    bimodule = bimodule if bimodule is not None else Bimodule.regular(data.B)
    length = degree + 2
    unknowns = data.n ** length * bimodule.dim
    if unknowns > Constants.MAX_HOM_UNKNOWNS:
        raise BudgetExceeded("Hom_D in degree %d" % degree, unknowns, Constants.MAX_HOM_UNKNOWNS)
    source = tensor_generator_actions(data, length)
    target = bimodule_generator_actions(data, embedding, bimodule, d_generators(data))
    return equivariant_maps(source, target, data.p).dim


def hom_d_spot_check(data: RankOneData, complex_: InvariantSubcomplex, top: int = 2,
                     embedding: Optional[np.ndarray] = None) -> Dict[int, Dict[str, int]]:
    """
    Compare dim Hom_D(A^{(x)(m+2)}, B) with the invariant cochains in degree m for m <= top.
    Degrees over the Hom budget are left out.
    """
    if embedding is None:
        _, embedding = d_subalgebra(data)
    results = {}
    for m in range(min(top, complex_.max_degree) + 1):
        try:
            direct = hom_d_dim(data, m, embedding)
        except BudgetExceeded as error:
            LOGGER.warning("Skipping direct Hom over D in degree %d: %s", m, error)
            continue
        results[m] = {"hom_d": direct, "invariant": complex_.dimension(m)}
        LOGGER.debug("Degree %d: Hom_D has dim %d, invariant cochains %d", m, direct, complex_.dimension(m))
    return results

#!/usr/bin/python
"""Hom-spaces of modules and invariants of group actions."""

import logging
from math import gcd
from typing import Optional, Sequence

import numpy as np

from hochschild.algebras.group_action import GroupAction
from hochschild.algebras.module import ModuleOverAlgebra
from hochschild.errors import BadParameter, CharacteristicDividesGroupOrder, DimensionMismatch
from hochschild.linalg.modular import check_budget, kernel_basis
from hochschild.linalg.subspace import Subspace

LOGGER = logging.getLogger(__name__)


def equivariant_maps(source_actions: Sequence[np.ndarray], target_actions: Sequence[np.ndarray],
                     p: int) -> Subspace:
    """
    All linear f with f . S_k = T_k . f for every pair of action matrices.
    Maps are flattened row-major from (target dim, source dim) matrices.
    """
    if len(source_actions) != len(target_actions):
        raise DimensionMismatch("Need one target action per source action")
    source_dim = source_actions[0].shape[0]
    target_dim = target_actions[0].shape[0]
    unknowns = source_dim * target_dim
    check_budget(len(source_actions) * unknowns, unknowns, "Hom constraint system")
    identity_source = np.eye(source_dim, dtype=np.int64)
    identity_target = np.eye(target_dim, dtype=np.int64)
    # vec(f A) = (I (x) A^T) vec(f) and vec(B f) = (B (x) I) vec(f) for row-major vec
    constraints = [np.kron(identity_target, source.T) - np.kron(target, identity_source)
                   for source, target in zip(source_actions, target_actions)]
    space = kernel_basis(np.concatenate(constraints) % p, p)
    for vector in space.basis:
        f = vector.reshape(target_dim, source_dim)
        for source, target in zip(source_actions, target_actions):
            if not np.array_equal((f @ source) % p, (target @ f) % p):
                raise BadParameter("Hom solver returned a non-equivariant map")
    return space


def hom_module_space(source: ModuleOverAlgebra, target: ModuleOverAlgebra,
                     generators: Optional[Sequence[int]] = None) -> Subspace:
    """
    All linear f: source -> target with f(a m) = a f(m).

    Equivariance is imposed on the basis elements listed in `generators` (default: the whole basis),
    which must generate the algebra.

    :raises: AlgebraMismatch
    """
    source.algebra.check_same(target.algebra)
    generators = range(source.algebra.dim) if generators is None else list(generators)
    space = equivariant_maps([source.actions[a] for a in generators], [target.actions[a] for a in generators],
                             source.p)
    LOGGER.debug("Hom space of %r -> %r has dim %d", source, target, space.dim)
    return space


def invariants_of_group_action(action: GroupAction) -> Subspace:
    """
    Image of the averaging projector.

    :raises: CharacteristicDividesGroupOrder
    """
    if gcd(action.p, action.group.order) != 1:
        raise CharacteristicDividesGroupOrder("p = %d divides |G| = %d" % (action.p, action.group.order))
    return action.invariants()

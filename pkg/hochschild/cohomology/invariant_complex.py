#!/usr/bin/python
"""G-invariant subcomplexes of a cochain complex and the actions on Hochschild cochains that produce them."""

import logging
from typing import List

import numpy as np

from hochschild.algebras.group_action import GroupAction
from hochschild.cohomology.cochain_complex import CochainComplex
from hochschild.cohomology.hochschild_complex import HochschildComplex
from hochschild.constants import Constants
from hochschild.errors import ActionNotChainMap, BadParameter, DimensionMismatch

LOGGER = logging.getLogger(__name__)

# cochains tested per group element when checking that an action commutes with d
COMMUTATION_SAMPLES = 16


class InvariantSubcomplex(CochainComplex):
    """
    The invariants C^m_G of a complex under degreewise group actions commuting with d.
    Coordinates in degree m <= max_degree are taken in the echelon basis of C^m_G; the top degree
    max_degree + 1 keeps the ambient coordinates.
    """

    def __init__(self, ambient: CochainComplex, actions: List[GroupAction], max_degree: int = None):
        max_degree = ambient.max_degree if max_degree is None else max_degree
        super().__init__(ambient.p, max_degree)
        if max_degree > ambient.max_degree:
            raise BadParameter("Invariants wanted up to degree %d, ambient complex stops at %d"
                               % (max_degree, ambient.max_degree))
        if len(actions) < max_degree + 1:
            raise BadParameter("Need an action in every degree up to %d" % max_degree)
        for m, action in enumerate(actions[:ambient.max_degree + 2]):
            if action.dim != ambient.dimension(m):
                raise DimensionMismatch("Action in degree %d has dim %d, cochains %d"
                                        % (m, action.dim, ambient.dimension(m)))
        self.ambient = ambient
        self.actions = actions
        self.spaces = [actions[m].invariants() for m in range(max_degree + 1)]
        self.check_commutes()
        LOGGER.debug("Invariant subcomplex dims %s", self.dims)

    def __repr__(self):
        return "InvariantSubcomplex(%r, dims=%s)" % (self.ambient, self.dims[:-1])

    def check_commutes(self) -> None:
        """
        rho_{m+1}(g) d_m = d_m rho_m(g) on every basis cochain of small spaces, on seeded samples otherwise.
        :raises: ActionNotChainMap
        """
        rng = np.random.default_rng(Constants.RANDOM_SEED)
        top = min(len(self.actions) - 1, self.ambient.max_degree + 1)
        for m in range(min(top, self.max_degree + 1)):
            width = self.ambient.dimension(m)
            if width <= COMMUTATION_SAMPLES * 4:
                cochains = np.eye(width, dtype=np.int64)
            else:
                cochains = rng.integers(0, self.p, size=(COMMUTATION_SAMPLES, width))
            image = self.ambient.apply(m, cochains)
            for g in range(self.actions[m].group.order):
                moved_first = self.ambient.apply(m, self.actions[m].apply(g, cochains))
                moved_after = self.actions[m + 1].apply(g, image)
                if not np.array_equal(moved_first % self.p, moved_after % self.p):
                    raise ActionNotChainMap("Action of %s does not commute with d_%d"
                                            % (self.actions[m].group.labels[g], m))

    def dimension(self, m: int) -> int:
        self._check_degree(m, self.max_degree + 1)
        if m == self.max_degree + 1:
            return self.ambient.dimension(m)
        return self.spaces[m].dim

    def lift(self, m: int, coordinates: np.ndarray) -> np.ndarray:
        """Invariant coordinates to ambient cochains (rows)."""
        coordinates = np.asarray(coordinates, dtype=np.int64)
        if m == self.max_degree + 1:
            return coordinates % self.p
        return (coordinates @ self.spaces[m].basis) % self.p

    def restrict(self, m: int, cochains: np.ndarray) -> np.ndarray:
        """Ambient invariant cochains (rows) to invariant coordinates."""
        if m == self.max_degree + 1:
            return np.asarray(cochains, dtype=np.int64) % self.p
        return self.spaces[m].coordinates(cochains)

    def apply(self, m: int, rows: np.ndarray) -> np.ndarray:
        self._check_degree(m, self.max_degree)
        image = self.ambient.apply(m, self.lift(m, rows))
        if m + 1 > self.max_degree:
            return image
        reduced = self.spaces[m + 1].reduce(image)
        if np.any(reduced):
            raise ActionNotChainMap("d_%d leaves the invariants" % m)
        return self.restrict(m + 1, image)


def invariant_complex(complex_: CochainComplex, actions: List[GroupAction], max_degree: int = None) \
        -> InvariantSubcomplex:
    return InvariantSubcomplex(complex_, actions, max_degree)


def cochain_action(complex_: HochschildComplex, input_action: GroupAction, coefficient_action: GroupAction,
                   m: int) -> GroupAction:
    """
    The action (g.f)(a_1..a_m) = g.f(g^-1 a_1, ..., g^-1 a_m) on C^m of a Hochschild complex.

    :param input_action: action on the algebra, restricted to the cochain inputs
    :param coefficient_action: action on the coefficients
    """
    dual = input_action.transposed_inverse()
    action = GroupAction.trivial(input_action.group, complex_.p, 1)
    for _ in range(m):
        action = action.kron(dual)
    return action.kron(coefficient_action)


def restrict_action(action: GroupAction, indices: np.ndarray) -> GroupAction:
    """Restriction of a monomial action to a stable set of basis vectors."""
    if not action.is_monomial:
        raise BadParameter("Only monomial actions restrict to basis subsets")
    indices = np.asarray(indices, dtype=np.int64)
    position = np.full(action.dim, -1, dtype=np.int64)
    position[indices] = np.arange(indices.size)
    permutations = position[action.permutations[:, indices]]
    if np.any(permutations < 0):
        raise BadParameter("Basis subset is not stable under the action")
    return GroupAction.monomial(action.group, action.p, permutations, action.scales[:, indices])


def cochain_actions(complex_: HochschildComplex, algebra_action: GroupAction, coefficient_action: GroupAction,
                    top: int) -> List[GroupAction]:
    """Actions on C^0..C^top for an action on A (by automorphisms fixing 1) and a compatible one on M."""
    inputs = restrict_action(algebra_action, complex_.inputs)
    return [cochain_action(complex_, inputs, coefficient_action, m) for m in range(top + 1)]

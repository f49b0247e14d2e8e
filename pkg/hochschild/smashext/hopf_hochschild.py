#!/usr/bin/python
"""
Hopf-Hochschild cohomology: the complex Hom_Gamma(A^{(x)(m+2)}, M) with differentials restricted from the
bar resolution of A. Gamma acts on tensors by (a (x) b (x) h) t = a (h . t) b and on a B-bimodule M
through Gamma -> D in B^e.
"""

import logging
from typing import Dict, List, Optional

import numpy as np

from hochschild.algebras.hom import equivariant_maps
from hochschild.algebras.module import Bimodule
from hochschild.constants import Constants
from hochschild.errors import BudgetExceeded, NotAComplex
from hochschild.linalg.modular import check_budget, rank
from hochschild.linalg.subspace import Subspace
from hochschild.rankone.chain_maps import bar_boundary
from hochschild.rankone.rank_one_data import RankOneData
from hochschild.smashext.delta import enveloping_operator
from hochschild.smashext.ext_d import tensor_generator_actions
from hochschild.smashext.gamma import GammaIso, gamma_generators, gamma_iso_D

LOGGER = logging.getLogger(__name__)


class HopfHochschildComplex:

    def __init__(self, data: RankOneData, iso: Optional[GammaIso] = None, bimodule: Optional[Bimodule] = None):
        """
        :param iso: a verified Gamma -> D, built when missing
        :param bimodule: coefficients over B, the regular bimodule by default
        """
        self.data = data
        self.iso = iso if iso is not None else gamma_iso_D(data)
        self.bimodule = bimodule if bimodule is not None else Bimodule.regular(data.B)
        self.structure = data.A.dense_structure()
        self.generators = gamma_generators(data)
        # the generators' images in B^e, acting on M
        self.target_actions = [self._bimodule_action(w) for w in self.generators]
        self._homs = {}
        self._ranks = {}

    def __repr__(self):
        return "HopfHochschildComplex(n=%d, |G|=%d, dim M=%d)" % (self.data.n, self.data.group.order,
                                                                 self.bimodule.dim)

    def _bimodule_action(self, w: int) -> np.ndarray:
        row = self.iso.to_d[w] @ self.iso.d_embedding % self.data.p
        return enveloping_operator(self.data, row, self.bimodule.left, self.bimodule.right)

    def unknowns(self, m: int) -> int:
        return self.data.n ** (m + 2) * self.bimodule.dim

    def hom_space(self, m: int) -> Subspace:
        """
        CH^m = Hom_Gamma(A^{(x)(m+2)}, M), maps flattened from (dim M, n^(m+2)) matrices.

        :raises: BudgetExceeded
        """
        if m not in self._homs:
            unknowns = self.unknowns(m)
            if unknowns > Constants.MAX_HOM_UNKNOWNS:
                raise BudgetExceeded("Hom_Gamma in degree %d" % m, unknowns, Constants.MAX_HOM_UNKNOWNS)
            source = tensor_generator_actions(self.data, m + 2)
            self._homs[m] = equivariant_maps(source, self.target_actions, self.data.p)
            LOGGER.debug("CH^%d has dim %d (%d unknowns)", m, self._homs[m].dim, unknowns)
        return self._homs[m]

    def boundary(self, m: int) -> np.ndarray:
        """Rows: the bar boundary of each basis tensor of A^{(x)(m+3)}, in A^{(x)(m+2)}."""
        n = self.data.n
        check_budget(n ** (m + 3), n ** (m + 2), "bar boundary")
        return bar_boundary(np.eye(n ** (m + 3), dtype=np.int64), self.structure, n, m + 1, self.data.p)

    def differential_images(self, m: int) -> np.ndarray:
        """f o delta for every basis map f of CH^m, flattened like maps of CH^(m+1)."""
        data = self.data
        space = self.hom_space(m)
        maps = space.basis.reshape(space.dim, self.bimodule.dim, data.n ** (m + 2))
        images = np.einsum('kot,jt->koj', maps, self.boundary(m)) % data.p
        return images.reshape(space.dim, -1)

    def rank(self, m: int) -> int:
        """Rank of CH^m -> CH^(m+1); checks the images are Gamma-linear."""
        if m < 0:
            return 0
        if m not in self._ranks:
            images = self.differential_images(m)
            try:
                target = self.hom_space(m + 1)
            except BudgetExceeded:
                target = None
            if target is not None and not all(target.contains(row) for row in images):
                raise NotAComplex("The bar boundary does not preserve Gamma-linear maps in degree %d" % m)
            self._ranks[m] = rank(images, self.data.p) if images.shape[0] else 0
        return self._ranks[m]

    def dimension(self, m: int) -> int:
        """dim HH^m_Hopf(A, M)."""
        dim = self.hom_space(m).dim - self.rank(m) - self.rank(m - 1)
        LOGGER.debug("HH^%d_Hopf has dim %d", m, dim)
        return dim

    def dims(self, max_degree: int) -> List[int]:
        """
        :raises: BudgetExceeded at the first degree out of reach
        """
        return [self.dimension(m) for m in range(max_degree + 1)]

    def feasible_dims(self, max_degree: int) -> Dict[str, object]:
        """Every degree that fits the Hom budget, and the error that stopped the rest."""
        dims = []
        for m in range(max_degree + 1):
            try:
                dims.append(self.dimension(m))
            except BudgetExceeded as error:
                LOGGER.warning("Hopf-Hochschild stops at degree %d: %s", m, error)
                return {"dims": dims, "stopped": str(error)}
        return {"dims": dims, "stopped": None}


def hopf_hochschild_dims(data: RankOneData, max_degree: int, bimodule: Optional[Bimodule] = None,
                         iso: Optional[GammaIso] = None) -> List[int]:
    """
    dim HH^m_Hopf(A, M) for m = 0..max_degree.

    :raises: BudgetExceeded
    """
    return HopfHochschildComplex(data, iso, bimodule).dims(max_degree)

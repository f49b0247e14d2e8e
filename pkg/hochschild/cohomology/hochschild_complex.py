#!/usr/bin/python
"""
The Hochschild cochain complex C^m = Hom(A^{(x)m}, M), normalized (inputs from A/k.1) or full.

A cochain f is stored as the array f[t_1, ..., t_m, o]: the coefficient of the basis element o of M
in f(e_{t_1} (x) ... (x) e_{t_m}), flattened with the leftmost factor slowest. The differential is
(df)(a_1..a_{m+1}) = a_1 f(a_2..) + sum_i (-1)^i f(..a_i a_{i+1}..) + (-1)^{m+1} f(a_1..a_m) a_{m+1}.
"""

import logging
from typing import Optional

import numpy as np

from hochschild.algebras.algebra import Algebra
from hochschild.algebras.module import Bimodule
from hochschild.cohomology.cochain_complex import CochainComplex
from hochschild.constants import Constants
from hochschild.errors import BadParameter, BudgetExceeded

LOGGER = logging.getLogger(__name__)


def feasible_max_degree(algebra: Algebra, bimodule: Bimodule, normalized: bool = True,
                        limit: int = Constants.MAX_COCHAIN_DIM) -> int:
    """Largest m whose complex up to C^{m+1} fits under the cochain cap, or -1 if none does."""
    base = algebra.dim - 1 if normalized else algebra.dim
    m = -1
    while bimodule.dim * base ** (m + 2) <= limit:
        m += 1
        if base <= 1 and m >= 64:
            break
    return m


class HochschildComplex(CochainComplex):

    def __init__(self, algebra: Algebra, bimodule: Bimodule, max_degree: int, normalized: bool = True):
        """
        :param algebra: the algebra A
        :param bimodule: coefficients M, a bimodule over A
        :param max_degree: highest degree whose cohomology is wanted; C^{max_degree + 1} is built too
        :param normalized: restrict to cochains vanishing when an input is the unit
        :raises: BudgetExceeded when C^{max_degree + 1} exceeds the cochain cap
        """
        super().__init__(algebra.p, max_degree)
        if bimodule.algebra is not algebra:
            algebra.check_same(bimodule.algebra)
        self.algebra = algebra
        self.bimodule = bimodule
        self.normalized = normalized
        if normalized:
            unit = algebra.unit_index
            if unit is None:
                raise BadParameter("The normalized complex needs the unit among the basis elements")
            self.inputs = np.array([i for i in range(algebra.dim) if i != unit], dtype=np.int64)
        else:
            self.inputs = np.arange(algebra.dim, dtype=np.int64)
        self.base = len(self.inputs)
        self.module_dim = bimodule.dim
        top = self.dimension(max_degree + 1)
        if top > Constants.MAX_COCHAIN_DIM:
            raise BudgetExceeded("cochain space C^%d" % (max_degree + 1), top, Constants.MAX_COCHAIN_DIM)
        # products of inputs, expressed on the inputs; the unit coordinate is dropped since cochains vanish there
        structure = algebra.dense_structure()
        self.product = np.ascontiguousarray(structure[np.ix_(self.inputs, self.inputs, self.inputs)])
        self.left = np.ascontiguousarray(bimodule.left[self.inputs])
        self.right = np.ascontiguousarray(bimodule.right[self.inputs])
        LOGGER.debug("Hochschild complex (%s) over dim %d with coefficients of dim %d up to degree %d",
                     "normalized" if normalized else "full", algebra.dim, bimodule.dim, max_degree)

    def __repr__(self):
        return "HochschildComplex(base=%d, module=%d, max_degree=%d, normalized=%s)" \
               % (self.base, self.module_dim, self.max_degree, self.normalized)

    def dimension(self, m: int) -> int:
        self._check_degree(m, self.max_degree + 1)
        return self.base ** m * self.module_dim

    def apply(self, m: int, rows: np.ndarray) -> np.ndarray:
        self._check_degree(m, self.max_degree)
        p = self.p
        a, d = self.base, self.module_dim
        rows = np.asarray(rows, dtype=np.int64) % p
        batch = rows.shape[0]
        cochains = rows.reshape(batch, a ** m, d)
        # a_1 f(a_2, ..)
        result = np.einsum('toc,bKc->btKo', self.left, cochains).reshape(batch, -1) % p
        for i in range(1, m + 1):
            split = cochains.reshape(batch, a ** (i - 1), a, a ** (m - i) * d)
            term = np.einsum('bLsR,xys->bLxyR', split, self.product).reshape(batch, -1) % p
            result = (result - term) % p if i % 2 else (result + term) % p
        last = np.einsum('bKc,toc->bKto', cochains, self.right).reshape(batch, -1) % p
        result = (result - last) % p if (m + 1) % 2 else (result + last) % p
        return result

    def coordinate_keys(self, m: int) -> Optional[np.ndarray]:
        if self.algebra.grading is None or self.bimodule.grading is None:
            return None
        inputs = self.algebra.grading.restrict(self.inputs)
        return self.bimodule.grading.cochain_keys(inputs, m)


def hochschild_complex(algebra: Algebra, bimodule: Optional[Bimodule], max_degree: int,
                       normalized: bool = True) -> HochschildComplex:
    """C*(A, M); M defaults to the regular bimodule A."""
    bimodule = bimodule if bimodule is not None else Bimodule.regular(algebra)
    return HochschildComplex(algebra, bimodule, max_degree, normalized)

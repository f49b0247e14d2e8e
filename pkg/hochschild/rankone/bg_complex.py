#!/usr/bin/python
"""
HH*(B) from the small resolution: Hom_{A^e}(P_m, B)^G = B^G for the twisted conjugation of degree m,
with differentials b -> xb - bx and b -> sum_k x^(n-1-k) b x^k.
"""

import logging
from typing import List

import numpy as np

from hochschild.cohomology.cochain_complex import MatrixComplex
from hochschild.cohomology.cohomology_group import CohomologyClass
from hochschild.cohomology.invariant_complex import InvariantSubcomplex
from hochschild.rankone.rank_one_data import RankOneData
from hochschild.rankone.small_resolution import SmallResolution

LOGGER = logging.getLogger(__name__)


class BGComplex(InvariantSubcomplex):

    def __init__(self, data: RankOneData, max_degree: int, resolution: SmallResolution = None):
        self.data = data
        self.resolution = resolution if resolution is not None else SmallResolution(data, max_degree + 1)
        ambient = MatrixComplex(data.p, self.resolution.hom_differentials(max_degree))
        actions = [data.twisted_conjugation(m) for m in range(max_degree + 2)]
        super().__init__(ambient, actions, max_degree)
        LOGGER.info("bg complex dims %s", self.dims[:-1])

    def __repr__(self):
        return "BGComplex(max_degree=%d)" % self.max_degree

    def element_class(self, degree: int, element: np.ndarray) -> CohomologyClass:
        """The class of an invariant element of B sitting in degree `degree`."""
        coordinates = self.restrict(degree, np.asarray(element, dtype=np.int64)[None, :])[0]
        return CohomologyClass(self, degree, coordinates)

    def element(self, cohomology_class: CohomologyClass) -> np.ndarray:
        """The element of B representing a class."""
        return self.lift(cohomology_class.degree, cohomology_class.representative[None, :])[0]

    def closed_form_basis(self, degree: int) -> List[np.ndarray]:
        """Class sums c of G-classes in N (even degree) or x c (odd degree) when chi^(in) is trivial."""
        data = self.data
        if not data.twist_is_trivial(degree):
            return []
        sums = data.kernel_class_sums()
        if degree % 2 == 0:
            return sums
        x = data.x()
        return [data.B.multiply(x, total) for total in sums]

    def closed_form_labels(self, degree: int) -> List[str]:
        prefix = "x*" if degree % 2 else ""
        return ["%s(%s)" % (prefix, self.data.class_sum_label(total)) for total in self.data.kernel_class_sums()] \
            if self.data.twist_is_trivial(degree) else []

    def closed_form_classes(self, degree: int) -> List[CohomologyClass]:
        return [self.element_class(degree, element) for element in self.closed_form_basis(degree)]


def bg_complex(data: RankOneData, max_degree: int) -> BGComplex:
    return BGComplex(data, max_degree)

#!/usr/bin/python
"""
The ring HH*(B) = Z(kN) (x) k[y, z]/(z^2) with deg z = 1 (the class of x) and deg y = 2 p_ord (the class of 1),
checked product by product against cup products computed through the chain maps.
"""

import logging
from typing import Dict, List, Optional

import numpy as np

from hochschild.cohomology.cohomology_group import CohomologyClass
from hochschild.errors import DegreeOutOfRange, PresentationMismatch
from hochschild.linalg.modular import rank
from hochschild.rankone.bg_complex import BGComplex
from hochschild.rankone.chain_maps import ChainMaps
from hochschild.rankone.cup_small import cup_small
from hochschild.rankone.rank_one_data import RankOneData

LOGGER = logging.getLogger(__name__)


class RingPresentation:

    def __init__(self, data: RankOneData, degree0_basis: List[str], table: List[Dict[str, object]],
                 y_bijective: Dict[int, bool], z_squared_zero: bool):
        self.data = data
        self.degree0_basis = degree0_basis
        self.z_degree = 1
        self.y_degree = 2 * data.p_ord
        self.table = table
        self.y_bijective = y_bijective
        self.z_squared_zero = z_squared_zero

    @property
    def center_discrepancy(self) -> bool:
        """True when dim Z(kN) differs from the number of G-classes in N."""
        return self.data.n_class_count != self.data.g_class_count

    def to_dict(self) -> Dict[str, object]:
        return {
            "degree0_basis": self.degree0_basis,
            "deg_y": self.y_degree,
            "deg_z": self.z_degree,
            "presentation": "Z(kN) (x) k[y,z]/(z^2)",
            "dim_Z_kN": self.data.n_class_count,
            "g_classes_in_N": self.data.g_class_count,
            "center_discrepancy": self.center_discrepancy,
            "z_squared_zero": self.z_squared_zero,
            "y_bijective": {str(m): holds for m, holds in sorted(self.y_bijective.items())},
            "relations": self.table,
        }


def basis_label(data: RankOneData, degree: int, class_sum: np.ndarray) -> str:
    label = "[%s]" % data.class_sum_label(class_sum)
    power = (degree // 2) // data.p_ord
    if power:
        label += "*y" if power == 1 else "*y^%d" % power
    if degree % 2:
        label += "*z"
    return label


def combination_label(labels: List[str], coefficients: np.ndarray) -> str:
    terms = []
    for label, coefficient in zip(labels, coefficients):
        if coefficient:
            terms.append(label if coefficient == 1 else "%d%s" % (coefficient, label))
    return " + ".join(terms) if terms else "0"


def ring_presentation(data: RankOneData, max_degree: int, bg: Optional[BGComplex] = None,
                      maps: Optional[ChainMaps] = None) -> RingPresentation:
    """
    :raises: DegreeOutOfRange when max_degree < 2 p_ord + 1, PresentationMismatch on any disagreement
    """
    y_degree = 2 * data.p_ord
    if max_degree < y_degree + 1:
        raise DegreeOutOfRange("The presentation needs max_degree >= %d" % (y_degree + 1))
    bg = bg if bg is not None and bg.max_degree >= max_degree else BGComplex(data, max_degree)
    maps = maps if maps is not None and maps.max_degree >= max_degree else ChainMaps(data, max_degree)
    B = data.B
    sums = data.kernel_class_sums()
    if data.n_class_count != data.g_class_count:
        LOGGER.warning("dim Z(kN) = %d differs from the %d G-classes in N", data.n_class_count, data.g_class_count)

    bases = {}
    labels = {}
    for m in range(max_degree + 1):
        classes = bg.closed_form_classes(m)
        group = bg.cohomology(m)
        if not group.is_basis([c.representative for c in classes]):
            raise PresentationMismatch("Class sums do not give a basis of HH^%d (dim %d, %d candidates)"
                                       % (m, group.dim, len(classes)))
        bases[m] = classes
        labels[m] = [basis_label(data, m, total) for total in sums] if classes else []

    z = bg.element_class(1, data.x())
    z_squared_zero = cup_small(bg, maps, z, z).is_zero()
    if not z_squared_zero:
        raise PresentationMismatch("z u z is not zero")

    y = bg.element_class(y_degree, B.unit)
    y_bijective = {}
    for m in range(max_degree - y_degree + 1):
        target = bg.cohomology(m + y_degree)
        images = [cup_small(bg, maps, y, c).representative for c in bases[m]]
        source_dim = bg.cohomology(m).dim
        holds = source_dim == target.dim and (source_dim == 0 or rank(target.coordinate_matrix(images), data.p)
                                              == source_dim)
        y_bijective[m] = holds
        if not holds:
            raise PresentationMismatch("Cup with y is not bijective from degree %d" % m)

    table = []
    for first_degree in range(max_degree + 1):
        for second_degree in range(max_degree + 1 - first_degree):
            total = first_degree + second_degree
            target = bg.cohomology(total)
            target_reps = [c.representative for c in bases[total]]
            for k1, first in enumerate(bases[first_degree]):
                for k2, second in enumerate(bases[second_degree]):
                    product = cup_small(bg, maps, first, second)
                    if first_degree % 2 and second_degree % 2:
                        predicted = np.zeros(B.dim, dtype=np.int64)
                    else:
                        predicted = B.multiply(sums[k1], sums[k2])
                        if (first_degree + second_degree) % 2:
                            predicted = B.multiply(data.x(), predicted)
                    expected = bg.element_class(total, predicted)
                    matches = target.class_equal(product.representative, expected.representative)
                    coefficients = target.express(product.representative, target_reps) if target_reps \
                        else np.zeros(0, dtype=np.int64)
                    table.append({
                        "left": labels[first_degree][k1],
                        "right": labels[second_degree][k2],
                        "degree": total,
                        "product": combination_label(labels[total], coefficients),
                        "matches": bool(matches),
                    })
                    if not matches:
                        raise PresentationMismatch("%s u %s disagrees with the predicted product"
                                                   % (labels[first_degree][k1], labels[second_degree][k2]))
    LOGGER.info("Ring presentation verified up to degree %d with %d products", max_degree, len(table))
    return RingPresentation(data, labels[0], table, y_bijective, z_squared_zero)


def graded_commutative(bg: BGComplex, maps: ChainMaps, first: CohomologyClass, second: CohomologyClass) -> bool:
    forward = cup_small(bg, maps, first, second)
    backward = cup_small(bg, maps, second, first)
    sign = -1 if (first.degree * second.degree) % 2 else 1
    return forward.group().class_equal(forward.representative, sign * backward.representative)

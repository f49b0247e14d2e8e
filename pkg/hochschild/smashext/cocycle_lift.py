#!/usr/bin/python
"""
Cocycles of the small resolution moved to the normalized bar complex of B.

A class b in degree m gives F_b = f_b o psi_m on the bar resolution of A, and then

    f~(a_1 g_1 (x) ... (x) a_m g_m) = F_b(a_1, g_1 . a_2, ..., (g_1 ... g_(m-1)) . a_m) g_1 ... g_m

For grouplike elements the twist indices of a general Hopf algebra all collapse onto the running product
g_1 ... g_(k-1).
"""

import logging
from typing import Dict, List, Optional

import numpy as np

from hochschild.algebras.module import Bimodule
from hochschild.cohomology.cohomology_group import CohomologyClass
from hochschild.cohomology.hochschild_complex import HochschildComplex
from hochschild.constants import Constants
from hochschild.errors import BadParameter, DegreeOutOfRange, IsoCheckFailed, NotACocycle
from hochschild.linalg.modular import rank
from hochschild.rankone.bg_complex import BGComplex
from hochschild.rankone.chain_maps import ChainMaps
from hochschild.rankone.cup_small import bar_cochain
from hochschild.utils.tensors import tensor_digits, tensor_index

LOGGER = logging.getLogger(__name__)

# random coboundaries pushed through the lift per degree
COBOUNDARY_SAMPLES = 4


def bar_complex_of_B(maps: ChainMaps, max_degree: int) -> HochschildComplex:
    """
    :raises: BudgetExceeded
    """
    B = maps.data.B
    return HochschildComplex(B, Bimodule.regular(B), max_degree, normalized=True)


def lift_element(maps: ChainMaps, bar: HochschildComplex, element: np.ndarray, degree: int) -> np.ndarray:
    """f~ for an arbitrary invariant element b of B in `degree`, flattened like a cochain of `bar`."""
    data = maps.data
    group, n, p = data.group, data.n, data.p
    if degree > bar.max_degree + 1:
        raise DegreeOutOfRange("Bar complex stops at degree %d" % (bar.max_degree + 1))
    values = bar_cochain(maps, element, degree)
    count = bar.base ** degree
    inputs = bar.inputs[tensor_digits(np.arange(count), bar.base, degree)]
    exponents = inputs % n
    elements = inputs // n
    sources = tensor_index(exponents, n)
    cochain = np.zeros((count, data.dim), dtype=np.int64)
    for row in range(count):
        scalar = 1
        running = group.identity
        for k in range(degree):
            scalar = scalar * data.chi.power_value(running, int(exponents[row, k])) % p
            running = group.mul(running, int(elements[row, k]))
        value = values[sources[row]]
        if scalar == 0 or not value.any():
            continue
        # right multiplication by the group element `running`
        for index in np.nonzero(value)[0]:
            h, exponent = divmod(int(index), n)
            cochain[row, data.index(exponent, group.mul(h, running))] += scalar * value[index]
    return cochain.reshape(-1) % p


def lift_cocycle_to_bar(bg: BGComplex, maps: ChainMaps, bar: HochschildComplex,
                        cohomology_class: CohomologyClass) -> CohomologyClass:
    """
    The class of f~ in HH*(B) computed from the bar complex.

    :raises: NotACocycle when the lift is not a cocycle
    """
    if cohomology_class.complex is not bg:
        raise BadParameter("Class must come from the given bg complex")
    degree = cohomology_class.degree
    if degree > bar.max_degree:
        raise DegreeOutOfRange("Bar cohomology is computed up to degree %d, not %d" % (bar.max_degree, degree))
    cochain = lift_element(maps, bar, bg.element(cohomology_class), degree)
    if not bar.cohomology(degree).is_cocycle(cochain):
        raise NotACocycle("Lift of a degree %d class is not a bar cocycle" % degree)
    return CohomologyClass(bar, degree, cochain)


def verify_lifts(bg: BGComplex, maps: ChainMaps, bar: HochschildComplex,
                 max_degree: Optional[int] = None) -> Dict[int, Dict[str, object]]:
    """
    In each degree, lift a basis of the bg cohomology, check the lifts are independent in the bar
    cohomology, and that lifted coboundaries stay coboundaries.

    :raises: IsoCheckFailed, NotACocycle
    """
    top = min(bg.max_degree, bar.max_degree, maps.max_degree)
    top = top if max_degree is None else min(top, max_degree)
    rng = np.random.default_rng(Constants.RANDOM_SEED)
    results = {}
    for degree in range(top + 1):
        group = bg.cohomology(degree)
        lifts = [lift_cocycle_to_bar(bg, maps, bar, CohomologyClass(bg, degree, row)).representative
                 for row in group.representatives()]
        bar_group = bar.cohomology(degree)
        independent = rank(bar_group.coordinate_matrix(lifts), bar.p) == len(lifts) if lifts else True
        if not independent:
            raise IsoCheckFailed("Lifted classes in degree %d are dependent in bar cohomology" % degree)
        if degree > 0 and bg.dimension(degree - 1):
            previous = rng.integers(0, bg.p, size=(COBOUNDARY_SAMPLES, bg.dimension(degree - 1)))
            boundaries = bg.lift(degree, bg.apply(degree - 1, previous))
            for element in boundaries:
                if not bar_group.is_coboundary(lift_element(maps, bar, element, degree)):
                    raise IsoCheckFailed("A coboundary in degree %d lifts to a nonzero bar class" % degree)
        results[degree] = {"lifted": len(lifts), "bar_dim": bar_group.dim,
                           "basis": len(lifts) == bar_group.dim}
        LOGGER.debug("Degree %d: %d lifted classes, bar cohomology of dim %d", degree, len(lifts), bar_group.dim)
    return results


def lifted_basis(bg: BGComplex, maps: ChainMaps, bar: HochschildComplex, degree: int) -> List[CohomologyClass]:
    return [lift_cocycle_to_bar(bg, maps, bar, cohomology_class)
            for cohomology_class in bg.closed_form_classes(degree)]

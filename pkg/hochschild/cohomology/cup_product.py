"""Chain-level cup products (f u f')(a_1..a_{l+m}) = f(a_1..a_l) f'(a_{l+1}..a_{l+m}) on Hochschild cochains."""

import logging

import numpy as np

from hochschild.cohomology.cohomology_group import CohomologyClass
from hochschild.cohomology.hochschild_complex import HochschildComplex
from hochschild.cohomology.invariant_complex import InvariantSubcomplex
from hochschild.errors import BadParameter, DegreeOutOfRange, NotACocycle

LOGGER = logging.getLogger(__name__)


def cup_cochains(first: np.ndarray, second: np.ndarray, structure: np.ndarray, p: int) -> np.ndarray:
    """
    :param first: cochain of shape (inputs_l, dim M) or flat
    :param second: cochain of shape (inputs_m, dim M) or flat
    :param structure: dense structure constants of the coefficient algebra M
    :returns: the flat cup product cochain
    """
    width = structure.shape[0]
    first = np.asarray(first, dtype=np.int64).reshape(-1, width)
    second = np.asarray(second, dtype=np.int64).reshape(-1, width)
    partial = np.einsum('ix,xyk->iyk', first, structure) % p
    return (np.einsum('iyk,jy->ijk', partial, second) % p).reshape(-1)


def _coefficient_structure(complex_: HochschildComplex) -> np.ndarray:
    if complex_.bimodule.product is None:
        raise BadParameter("Cup products need coefficients that form an algebra")
    return complex_.bimodule.product.dense_structure()


def _check_degrees(complex_, total: int):
    if total > complex_.max_degree:
        raise DegreeOutOfRange("Product lands in degree %d beyond the computed %d" % (total, complex_.max_degree))


def cup_product_bar(first: CohomologyClass, second: CohomologyClass) -> CohomologyClass:
    """Cup product of two classes of the same Hochschild complex."""
    complex_ = first.complex
    if second.complex is not complex_:
        raise BadParameter("Classes live in different complexes")
    if not isinstance(complex_, HochschildComplex):
        raise BadParameter("Cup products are defined on Hochschild complexes")
    total = first.degree + second.degree
    _check_degrees(complex_, total)
    product = cup_cochains(first.representative, second.representative, _coefficient_structure(complex_),
                           complex_.p)
    return CohomologyClass(complex_, total, product)


def cup_on_invariant(first: CohomologyClass, second: CohomologyClass) -> CohomologyClass:
    """Cup product of invariant classes: computed on the ambient cochains, then restricted."""
    complex_ = first.complex
    if second.complex is not complex_ or not isinstance(complex_, InvariantSubcomplex):
        raise BadParameter("Both classes must live in the same invariant subcomplex")
    ambient = complex_.ambient
    total = first.degree + second.degree
    _check_degrees(complex_, total)
    lifted_first = complex_.lift(first.degree, first.representative[None, :])[0]
    lifted_second = complex_.lift(second.degree, second.representative[None, :])[0]
    product = cup_cochains(lifted_first, lifted_second, _coefficient_structure(ambient), complex_.p)
    try:
        coordinates = complex_.restrict(total, product[None, :])[0]
    except ValueError:
        raise NotACocycle("Cup product of invariant cocycles left the invariants")
    return CohomologyClass(complex_, total, coordinates)


def graded_commutator_vanishes(first: CohomologyClass, second: CohomologyClass, cup=cup_product_bar) -> bool:
    """class(f u f') == (-1)^{lm} class(f' u f)."""
    forward = cup(first, second)
    backward = cup(second, first)
    sign = -1 if (first.degree * second.degree) % 2 else 1
    group = forward.group()
    return group.class_equal(forward.representative, sign * backward.representative)

"""
Cup products of classes of the small resolution. A class b in degree d becomes the bar cochain
F_b(t) = f_b(psi_d(1 (x) t (x) 1)) with f_b(x^i (x) x^j) = x^i b x^j; two such cochains are cupped on the
bar resolution and pulled back along phi.
"""

import logging

import numpy as np

from hochschild.cohomology.cohomology_group import CohomologyClass
from hochschild.cohomology.cup_product import cup_on_invariant
from hochschild.cohomology.invariant_complex import InvariantSubcomplex
from hochschild.errors import BadParameter, DegreeOutOfRange, PresentationMismatch
from hochschild.rankone.bg_complex import BGComplex
from hochschild.rankone.chain_maps import ChainMaps
from hochschild.utils.tensors import tensor_digits, tensor_index

LOGGER = logging.getLogger(__name__)


def evaluation_matrix(maps: ChainMaps, element: np.ndarray) -> np.ndarray:
    """Columns x^i b x^j, indexed i * n + j: the map f_b on A^e."""
    data = maps.data
    B = data.B
    n = data.n
    x_powers = [data.element(i, data.group.identity) for i in range(n)]
    columns = [B.multiply(B.multiply(x_powers[i], element), x_powers[j]) for i in range(n) for j in range(n)]
    return np.array(columns, dtype=np.int64).T % data.p


def bar_cochain(maps: ChainMaps, element: np.ndarray, degree: int) -> np.ndarray:
    """F_b as an array (n^degree, dim B) over all inputs t in A^{(x)degree}."""
    if degree > maps.max_degree:
        raise DegreeOutOfRange("Chain maps are known up to degree %d, not %d" % (maps.max_degree, degree))
    n = maps.n
    core = maps.psi_core(degree).reshape(n ** degree, n * n)
    return (core @ evaluation_matrix(maps, element).T) % maps.p


def cup_small(bg: BGComplex, maps: ChainMaps, first: CohomologyClass, second: CohomologyClass) -> CohomologyClass:
    """
    (F_a u F_b)(phi_(l+m)(1 (x) 1)) for classes a in degree l and b in degree m of the bg complex.

    :raises: DegreeOutOfRange
    """
    if first.complex is not bg or second.complex is not bg:
        raise BadParameter("Classes must come from the given bg complex")
    left_degree, right_degree = first.degree, second.degree
    total = left_degree + right_degree
    if total > bg.max_degree or total > maps.max_degree:
        raise DegreeOutOfRange("Product lands in degree %d beyond the computed range" % total)
    data = bg.data
    B = data.B
    n = data.n
    left = bar_cochain(maps, bg.element(first), left_degree)
    right = bar_cochain(maps, bg.element(second), right_degree)
    generator = maps.phi_generator(total)
    result = np.zeros(B.dim, dtype=np.int64)
    support = np.nonzero(generator)[0]
    for index, digits in zip(support, tensor_digits(support, n, total + 2)):
        inner = digits[1:total + 1]
        left_value = left[tensor_index(inner[None, :left_degree], n)[0]]
        right_value = right[tensor_index(inner[None, left_degree:], n)[0]]
        value = B.multiply(left_value, right_value)
        value = B.multiply(data.element(int(digits[0]), data.group.identity), value)
        value = B.multiply(value, data.element(int(digits[-1]), data.group.identity))
        result = (result + generator[index] * value) % data.p
    LOGGER.debug("cup_small: degrees %d and %d -> %s", left_degree, right_degree, B.label_of(result))
    return bg.element_class(total, result)


def normalized_inputs(n: int, degree: int) -> np.ndarray:
    """Positions in A^{(x)degree} of the tensors of x^i with every i >= 1, in normalized cochain order."""
    digits = tensor_digits(np.arange((n - 1) ** degree), n - 1, degree) + 1
    return tensor_index(digits, n)


def comparison_cochain(maps: ChainMaps, element: np.ndarray, degree: int) -> np.ndarray:
    """F_b restricted to normalized inputs, flattened like a normalized Hochschild cochain of A in B."""
    return bar_cochain(maps, element, degree)[normalized_inputs(maps.n, degree)].reshape(-1)


def compare_to_invariant(bg: BGComplex, maps: ChainMaps, invariant: InvariantSubcomplex,
                         cohomology_class: CohomologyClass) -> CohomologyClass:
    """The class of F_b in the invariant subcomplex of C*(A, B)."""
    cochain = comparison_cochain(maps, bg.element(cohomology_class), cohomology_class.degree)
    coordinates = invariant.restrict(cohomology_class.degree, cochain[None, :])[0]
    return CohomologyClass(invariant, cohomology_class.degree, coordinates)


def verify_cup_agreement(bg: BGComplex, maps: ChainMaps, invariant: InvariantSubcomplex, top: int) -> int:
    """
    cup_small against the cup of the invariant complex, on all closed-form classes of total degree <= top.

    :returns: the number of products compared
    :raises: PresentationMismatch
    """
    top = min(top, bg.max_degree, maps.max_degree, invariant.max_degree)
    classes = {m: bg.closed_form_classes(m) for m in range(top + 1)}
    images = {m: [compare_to_invariant(bg, maps, invariant, c) for c in classes[m]] for m in classes}
    compared = 0
    for left_degree in range(top + 1):
        for right_degree in range(top + 1 - left_degree):
            for a, a_image in zip(classes[left_degree], images[left_degree]):
                for b, b_image in zip(classes[right_degree], images[right_degree]):
                    small = compare_to_invariant(bg, maps, invariant, cup_small(bg, maps, a, b))
                    product = cup_on_invariant(a_image, b_image)
                    if not small.group().class_equal(small.representative, product.representative):
                        raise PresentationMismatch("Cup products in degrees %d and %d disagree with the invariant "
                                                   "complex" % (left_degree, right_degree))
                    compared += 1
    LOGGER.info("cup_small agrees with the invariant complex on %d products up to degree %d", compared, top)
    return compared

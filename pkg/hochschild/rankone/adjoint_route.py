#!/usr/bin/python
"""
HH*(B) = Ext_B(k, B^ad) through the periodic resolution of the trivial module k.

B^ad is B acting on itself by (ad g)(x^i h) = chi(g)^i x^i g h g^-1 and
(ad x)(x^i h) = (1 - chi(g1^i h)) x^(i+1) h. The resolution has P_d = A with x acting by
multiplication and g by chi(g)^(e(d) + i) on x^i; the boundary P_(2i+1) -> P_2i is .x and
P_2i -> P_(2i-1) is .x^(n-1).
"""

import logging
from typing import Dict, List, Optional

import numpy as np

from hochschild.algebras.hom import hom_module_space
from hochschild.algebras.module import ModuleOverAlgebra
from hochschild.errors import BadParameter
from hochschild.linalg.modular import rank
from hochschild.rankone.rank_one_data import RankOneData

LOGGER = logging.getLogger(__name__)


def adjoint_action_matrices(data: RankOneData):
    """:returns: the matrices of ad x and of ad g for every g, in closed form"""
    n, p = data.n, data.p
    group = data.group
    ad_x = np.zeros((data.dim, data.dim), dtype=np.int64)
    for h in range(group.order):
        for i in range(n - 1):
            coefficient = (1 - data.chi.power_value(data.g1, i) * data.chi(h)) % p
            ad_x[data.index(i + 1, h), data.index(i, h)] = coefficient
    ad_group = np.array([data.conjugation().matrix(g) for g in range(group.order)])
    return ad_x, ad_group


def check_adjoint_against_product(data: RankOneData, ad_x: np.ndarray) -> None:
    """(ad x)(l) = x l - g1 l g1^-1 x computed inside B."""
    B = data.B
    x = data.x()
    g1 = data.group_element(data.g1)
    g1_inverse = data.group_element(data.group.inv(data.g1))
    for index in range(data.dim):
        l = B.basis_vector(index)
        expected = (B.multiply(x, l) - B.multiply(B.multiply(B.multiply(g1, l), g1_inverse), x)) % data.p
        if not np.array_equal(ad_x[:, index], expected):
            raise BadParameter("Closed-form ad x disagrees with x l - g1 l g1^-1 x on %s" % B.labels[index])


def module_from_generators(data: RankOneData, x_matrix: np.ndarray, group_matrices: np.ndarray,
                           validate: bool = True) -> ModuleOverAlgebra:
    """The B-module where x^i g acts by X^i rho(g)."""
    dim = x_matrix.shape[0]
    powers = [np.eye(dim, dtype=np.int64)]
    for _ in range(data.n - 1):
        powers.append((powers[-1] @ x_matrix) % data.p)
    actions = np.zeros((data.dim, dim, dim), dtype=np.int64)
    for g in range(data.group.order):
        for i in range(data.n):
            actions[data.index(i, g)] = (powers[i] @ group_matrices[g]) % data.p
    return ModuleOverAlgebra(data.B, actions, validate=validate)


def adjoint_module(data: RankOneData) -> ModuleOverAlgebra:
    ad_x, ad_group = adjoint_action_matrices(data)
    check_adjoint_against_product(data, ad_x)
    return module_from_generators(data, ad_x, ad_group)


def resolution_term(data: RankOneData, degree: int) -> ModuleOverAlgebra:
    """P_degree = A with the twisted G-action of that degree."""
    n = data.n
    x_matrix = data.A.left_matrix(data.A.basis_vector(1))
    exponent = data.twist_exponent(degree)
    group_matrices = np.array([np.diag([data.chi.power_value(g, exponent + i) for i in range(n)])
                               for g in range(data.group.order)], dtype=np.int64)
    return module_from_generators(data, x_matrix, group_matrices)


def resolution_boundary(data: RankOneData, degree: int) -> np.ndarray:
    """P_degree -> P_(degree-1): .x for odd degree, .x^(n-1) for even degree."""
    if degree < 1:
        raise BadParameter("No boundary below degree 1")
    power = 1 if degree % 2 else data.n - 1
    return data.A.left_matrix(data.A.basis_vector(power))


class AdjointRoute:

    def __init__(self, data: RankOneData, max_degree: int):
        self.data = data
        self.max_degree = max_degree
        self.module = adjoint_module(data)
        self.generators = [data.index(1, data.group.identity)] + [data.index(0, g) for g in data.group.generators()]
        self.terms = [resolution_term(data, d) for d in range(max_degree + 1)]
        self.summands = self._summands()

    def _summands(self) -> List[Dict[str, object]]:
        """One summand of B^ad per conjugacy class, with its j split."""
        data = self.data
        n = data.n
        summands = []
        for class_members in data.group.conjugacy_data().members:
            indices = [data.index(i, h) for h in class_members for i in range(n)]
            if not self.module.is_submodule(indices):
                raise BadParameter("Class %s does not span a submodule of B^ad" % class_members)
            representative = class_members[0]
            j = next((j for j in range(n) if data.chi(representative)
                      == data.field.pow(data.chi(data.g1), -j)), n - 1)
            lower = [data.index(i, h) for h in class_members for i in range(j + 1)]
            upper = [data.index(i, h) for h in class_members for i in range(j + 1, n)]
            summands.append({
                "representative": data.group.labels[representative],
                "class_size": len(class_members),
                "indices": indices,
                "j": j,
                "lower_is_submodule": self.module.is_submodule(lower),
                "upper_is_submodule": not upper or self.module.is_submodule(upper),
                "lower": lower,
                "upper": upper,
            })
        return summands

    def ext_dims(self, target: ModuleOverAlgebra) -> List[int]:
        """dim Ext^d_B(k, target) for d = 0..max_degree."""
        p = self.data.p
        homs = [hom_module_space(self.terms[d], target, self.generators) for d in range(self.max_degree + 1)]
        ranks = []
        for d in range(self.max_degree + 1):
            boundary = resolution_boundary(self.data, d + 1)
            space = homs[d]
            if space.dim == 0:
                ranks.append(0)
                continue
            maps = space.basis.reshape(space.dim, target.dim, self.data.n)
            composed = np.einsum('kab,bc->kac', maps, boundary) % p
            ranks.append(rank(composed.reshape(space.dim, -1), p))
        dims = []
        for d in range(self.max_degree + 1):
            previous = ranks[d - 1] if d else 0
            dims.append(homs[d].dim - ranks[d] - previous)
        return dims

    def dims(self) -> List[int]:
        dims = self.ext_dims(self.module)
        LOGGER.info("Adjoint route dims %s", dims)
        return dims

    def summand_dims(self) -> List[Dict[str, object]]:
        """Ext dims per summand; they add up to the total."""
        table = []
        for summand in self.summands:
            restricted = self.module.restrict(summand["indices"])
            entry = {key: summand[key] for key in ("representative", "class_size", "j",
                                                   "lower_is_submodule", "upper_is_submodule")}
            entry["dims"] = self.ext_dims(restricted)
            table.append(entry)
        return table


def adjoint_route(data: RankOneData, max_degree: int, route: Optional[AdjointRoute] = None) -> Dict[str, object]:
    route = route if route is not None else AdjointRoute(data, max_degree)
    dims = route.dims()
    summands = route.summand_dims()
    totals = [sum(entry["dims"][d] for entry in summands) for d in range(max_degree + 1)]
    if totals != dims:
        raise BadParameter("Summand dims %s do not add up to %s" % (totals, dims))
    return {"dims": dims, "summands": summands}

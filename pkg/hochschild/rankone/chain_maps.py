#!/usr/bin/python
"""
Comparison maps between the small resolution P (P_m = A^e) and the bar resolution (A^{(x)(m+2)}) of
A = k[x]/(x^n):

    phi_2l(1(x)1)   = 1 (x) alpha_l
    phi_2l+1(1(x)1) = 1 (x) x (x) alpha_l
    alpha_l         = sum x^i1 (x) x (x) x^i2 (x) x ... x (x) x^i(l+1),  i_1..i_l >= 1, sum = l(n-1)

    psi_2l(1 (x) x^i1 .. x^i2l (x) 1)     = 1 (x) prod_k x^(i_(2k-1) + i_2k - n)
    psi_2l+1(1 (x) x^i1 .. x^i2l+1 (x) 1) = sum_(m < i1) x^m (x) x^(i1-m-1) prod_k x^(i_2k + i_(2k+1) - n)

where x^j = 0 for j < 0 or j >= n. Tensor bases are indexed with the leftmost factor slowest.
"""

import logging
from typing import Dict, List

import numpy as np

from hochschild.errors import BadParameter, ChainMapCheckFailed
from hochschild.rankone.rank_one_data import RankOneData
from hochschild.rankone.small_resolution import SmallResolution
from hochschild.utils.generators import compositions_generator, tuples_generator
from hochschild.utils.tensors import contract_adjacent, tensor_digits, tensor_index

LOGGER = logging.getLogger(__name__)


def alpha_terms(n: int, l: int) -> List[tuple]:
    """The exponent tuples (x^i1, x, x^i2, x, ..., x, x^i(l+1)) of alpha_l."""
    terms = []
    for exponents in compositions_generator(l * (n - 1), [1] * l + [0], n - 1):
        factors = []
        for position, exponent in enumerate(exponents):
            if position:
                factors.append(1)
            factors.append(exponent)
        terms.append(tuple(factors))
    return terms


def bar_boundary(batch: np.ndarray, structure: np.ndarray, n: int, m: int, p: int) -> np.ndarray:
    """delta_m(a_0 .. a_(m+1)) = sum_j (-1)^j a_0 .. a_j a_(j+1) .. a_(m+1) on rows of A^{(x)(m+2)}."""
    result = np.zeros((batch.shape[0], n ** (m + 1)), dtype=np.int64)
    for position in range(m + 1):
        term = contract_adjacent(batch, structure, n, m + 2, position) % p
        result = (result - term) % p if position % 2 else (result + term) % p
    return result


class ChainMaps:

    def __init__(self, data: RankOneData, max_degree: int, resolution: SmallResolution = None):
        """
        :raises: ChainMapCheckFailed when no sign choice for the odd psi makes both maps chain maps
        """
        self.data = data
        self.n = data.n
        self.p = data.p
        self.max_degree = max_degree
        self.resolution = resolution if resolution is not None and resolution.max_degree >= max_degree \
            else SmallResolution(data, max(1, max_degree))
        self.structure = data.A.dense_structure()
        self.phi = [self._phi_matrix(m) for m in range(max_degree + 1)]
        self._psi_cores = [self._psi_core(m) for m in range(max_degree + 1)]
        self.failures = {}
        for sign in (1, -1):
            self.odd_sign = sign
            failure = self._first_psi_failure()
            self.failures[sign] = failure
            if failure is None:
                break
        else:
            raise ChainMapCheckFailed("psi is not a chain map for either odd sign, first failures %s" % self.failures)
        self.psi = [self._psi_matrix(m) for m in range(max_degree + 1)]
        self.verify_phi()
        self.verify_equivariance()
        self.odd_identity = self.verify_inverse()
        LOGGER.info("Chain maps verified up to degree %d (odd psi sign %+d)", max_degree, self.odd_sign)

    def __repr__(self):
        return "ChainMaps(n=%d, max_degree=%d)" % (self.n, self.max_degree)

    def phi_generator(self, m: int) -> np.ndarray:
        """phi_m(1 (x) 1) in A^{(x)(m+2)}."""
        n = self.n
        vector = np.zeros(n ** (m + 2), dtype=np.int64)
        prefix = (0,) if m % 2 == 0 else (0, 1)
        for term in alpha_terms(n, m // 2):
            digits = np.array([prefix + term], dtype=np.int64)
            vector[tensor_index(digits, n)[0]] += 1
        return vector % self.p

    def _shifted(self, block: np.ndarray, left: int, right: int) -> np.ndarray:
        """Multiply the first factor by x^left and the last by x^right in a (n, ..., n) array."""
        n = self.n
        result = np.zeros_like(block)
        result[left:, ..., right:] = block[:n - left, ..., :n - right]
        return result

    def _phi_matrix(self, m: int) -> np.ndarray:
        n = self.n
        generator = self.phi_generator(m).reshape(n, n ** m, n)
        matrix = np.zeros((n ** (m + 2), n * n), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                matrix[:, i * n + j] = self._shifted(generator, i, j).reshape(-1)
        return matrix

    def _psi_value(self, exponents: tuple) -> np.ndarray:
        """psi_m(1 (x) x^e1 .. x^em (x) 1) in A^e as an (n, n) array, odd degrees unsigned."""
        n = self.n
        m = len(exponents)
        value = np.zeros((n, n), dtype=np.int64)
        odd = m % 2
        pairs = exponents[odd:]
        shift = 0
        for k in range(0, len(pairs), 2):
            exponent = pairs[k] + pairs[k + 1] - n
            if exponent < 0:
                return value
            shift += exponent
        if not odd:
            if shift < n:
                value[0, shift] = 1
            return value
        first = exponents[0]
        for left in range(first):
            right = first - left - 1 + shift
            if right < n:
                value[left, right] += 1
        return value

    def _psi_core(self, m: int) -> np.ndarray:
        """psi_m on the free generators: array (n^m, n, n)."""
        return np.array([self._psi_value(exponents) for exponents in tuples_generator(self.n, m)],
                        dtype=np.int64).reshape(self.n ** m, self.n, self.n)

    def _psi_matrix(self, m: int) -> np.ndarray:
        """psi_m as a matrix A^{(x)(m+2)} -> A^e, extended A^e-linearly."""
        n = self.n
        core = self.psi_core(m)
        columns = np.zeros((n, n ** m, n, n, n), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                # a_0 (x) t (x) a_(m+1) -> a_0 psi(1 (x) t (x) 1) a_(m+1)
                columns[i, :, j] = self._shifted(core.transpose(1, 0, 2), i, j).transpose(1, 0, 2)
        return columns.reshape(n ** (m + 2), n * n).T.copy()

    def _shift_rows(self, block: np.ndarray, shifts: np.ndarray, axis: int) -> np.ndarray:
        """Multiply the left (axis 1) or right (axis 2) factor of each A^e element by x^shifts[row]."""
        n = self.n
        result = np.zeros_like(block)
        for shift in range(n):
            rows = np.nonzero(shifts == shift)[0]
            if rows.size == 0:
                continue
            if axis == 1:
                result[rows, shift:, :] = block[rows, :n - shift, :]
            else:
                result[rows, :, shift:] = block[rows, :, :n - shift]
        return result

    def _psi_after_bar_boundary(self, m: int) -> np.ndarray:
        """psi_(m-1) delta_m on every free generator 1 (x) t (x) 1, as (n^m, n, n)."""
        n, p = self.n, self.p
        previous = self.psi_core(m - 1)
        digits = tensor_digits(np.arange(n ** m), n, m)
        result = self._shift_rows(previous[tensor_index(digits[:, 1:], n)], digits[:, 0], 1)
        for j in range(1, m):
            merged = digits[:, j - 1] + digits[:, j]
            alive = merged < n
            reduced = np.concatenate([digits[:, :j - 1], merged[:, None], digits[:, j + 1:]], axis=1)
            term = np.zeros_like(result)
            term[alive] = previous[tensor_index(reduced[alive], n)]
            result = (result - term) % p if j % 2 else (result + term) % p
        last = self._shift_rows(previous[tensor_index(digits[:, :-1], n)], digits[:, -1], 2)
        return (result - last) % p if m % 2 else (result + last) % p

    def _first_psi_failure(self):
        """The first degree where d psi_m != psi_(m-1) delta_m on free generators, or None."""
        n, p = self.n, self.p
        for m in range(1, self.max_degree + 1):
            boundary = self.resolution.boundary(m)
            left = (self.psi_core(m).reshape(n ** m, n * n) @ boundary.T) % p
            right = self._psi_after_bar_boundary(m).reshape(n ** m, n * n)
            if not np.array_equal(left, right):
                return m
        return None

    def verify_phi(self) -> None:
        """delta_m phi_m = phi_(m-1) d_m."""
        n, p = self.n, self.p
        for m in range(1, self.max_degree + 1):
            left = bar_boundary(self.phi[m].T, self.structure, n, m, p).T
            right = (self.phi[m - 1] @ self.resolution.boundary(m)) % p
            if not np.array_equal(left, right):
                raise ChainMapCheckFailed("phi is not a chain map in degree %d" % m)

    def _diagonal_scales(self, g: int, length: int) -> np.ndarray:
        """Scales of the diagonal action of g on A^{(x)length}: chi(g)^(total x-degree)."""
        n = self.n
        degrees = np.zeros(1, dtype=np.int64)
        for _ in range(length):
            degrees = (degrees[:, None] + np.arange(n)[None, :]).reshape(-1)
        chi = self.data.chi(g)
        powers = np.array([self.data.field.pow(chi, k) for k in range(length * (n - 1) + 1)], dtype=np.int64)
        return powers[degrees]

    def verify_equivariance(self) -> None:
        """phi and psi intertwine the twisted action on P_m with the diagonal action on the bar resolution."""
        p = self.p
        for m in range(self.max_degree + 1):
            twist = self.resolution.twist(m)
            for g in range(self.data.group.order):
                if not np.array_equal(twist.permutations[g], np.arange(twist.dim)):
                    raise BadParameter("Twisted action is expected to be diagonal")
                small = twist.scales[g]
                bar = self._diagonal_scales(g, m + 2)
                if not np.array_equal((self.phi[m] * small[None, :]) % p, (bar[:, None] * self.phi[m]) % p):
                    raise ChainMapCheckFailed("phi_%d is not equivariant for %s" % (m, self.data.group.labels[g]))
                if not np.array_equal((self.psi[m] * bar[None, :]) % p, (small[:, None] * self.psi[m]) % p):
                    raise ChainMapCheckFailed("psi_%d is not equivariant for %s" % (m, self.data.group.labels[g]))

    def verify_inverse(self) -> Dict[int, bool]:
        """
        psi_m phi_m = id on A^e, asserted in even degrees.
        :returns: the outcome in odd degrees
        """
        identity = np.eye(self.n * self.n, dtype=np.int64)
        odd = {}
        for m in range(self.max_degree + 1):
            holds = np.array_equal((self.psi[m] @ self.phi[m]) % self.p, identity)
            if m % 2:
                odd[m] = holds
            elif not holds:
                raise ChainMapCheckFailed("psi_%d phi_%d is not the identity" % (m, m))
        return odd

    def psi_core(self, m: int) -> np.ndarray:
        """Signed psi_m(1 (x) t (x) 1) for all t: array (n^m, n, n)."""
        core = self._psi_cores[m]
        return (self.odd_sign * core) % self.p if m % 2 else core

    def sign_convention(self) -> Dict[str, object]:
        return {
            "bar_differential": "sum_j (-1)^j a_0..a_j a_(j+1)..a_(m+1)",
            "odd_boundary": ".u",
            "even_boundary": ".v",
            "psi_odd_sign": self.odd_sign,
            "psi_phi_odd_identity": {str(m): holds for m, holds in sorted(self.odd_identity.items())},
        }


def chain_maps(data: RankOneData, max_degree: int) -> ChainMaps:
    return ChainMaps(data, max_degree)

from unittest import TestCase

import numpy as np

from hochschild.algebras.algebra import Algebra
from hochschild.algebras.constructions import center, character_action, enveloping_algebra, group_algebra, \
    smash_product, subalgebra_D_groupcase, truncated_poly
from hochschild.algebras.group_action import GroupAction
from hochschild.algebras.hom import hom_module_space, invariants_of_group_action
from hochschild.algebras.module import Bimodule, ModuleOverAlgebra
from hochschild.cohomology.hochschild_complex import hochschild_complex
from hochschild.errors import BadParameter, CharacteristicDividesGroupOrder
from hochschild.field.prime_field import PrimeField
from hochschild.groups.character import character_from_generator_values
from hochschild.groups.group_factory import cyclic, dihedral
from hochschild.jobs.demos import demo_spec
from hochschild.linalg.subspace import Subspace


class TestAlgebra(TestCase):

    def setUp(self):
        self.field = PrimeField(5)
        self.A = truncated_poly(self.field, 3)

    def test_truncated_polynomials(self):
        x = self.A.basis_vector(1)
        self.assertTrue(np.array_equal(self.A.multiply(x, x), [0, 0, 1]))
        self.assertFalse(np.any(self.A.multiply(x, self.A.basis_vector(2))))
        self.assertTrue(self.A.is_commutative())
        self.assertEqual(self.A.unit_index, 0)
        self.assertEqual(self.A.label_of(np.array([1, 0, 2])), "1 + 2*x^2")
        with self.assertRaises(BadParameter):
            truncated_poly(self.field, 1)

    def test_bad_unit_is_rejected(self):
        with self.assertRaises(BadParameter):
            Algebra.from_triples(self.field, ["1", "x"], [0, 0, 1], [0, 1, 0], [0, 1, 1], [1, 1, 1],
                                 np.array([0, 1]))

    def test_multiplication_matrices(self):
        x = self.A.basis_vector(1)
        left = self.A.left_matrix(x)
        self.assertTrue(np.array_equal(left, self.A.left_matrices()[1]))
        self.assertTrue(np.array_equal(self.A.right_matrix(x), left))

    def test_enveloping_algebra(self):
        enveloping = enveloping_algebra(self.A)
        self.assertEqual(enveloping.dim, 9)
        self.assertTrue(enveloping.is_commutative())

    def test_group_algebra_center(self):
        kG = group_algebra(self.field, dihedral(6))
        self.assertFalse(kG.is_commutative())
        self.assertEqual(center(kG).dim, 3)


class TestSmashProduct(TestCase):

    def test_sweedler_relation(self):
        data = demo_spec("E1").data
        B = data.B
        self.assertEqual(B.dim, 4)
        g, x = data.group_element(1), data.x()
        # g x = chi(g) x g = -x g
        self.assertTrue(np.array_equal(B.multiply(g, x), (4 * B.multiply(x, g)) % 5))
        self.assertFalse(B.is_commutative())

    def test_center_is_degree_zero_cohomology(self):
        for name, expected in (("E1", 1), ("E3", 1), ("E5", 2), ("E4", 3)):
            B = demo_spec(name).data.B
            z = center(B)
            hh0 = hochschild_complex(B, None, 0).cohomology(0)
            self.assertEqual(z.dim, expected, name)
            self.assertEqual(hh0.dim, z.dim, name)
            for representative in hh0.representatives():
                self.assertTrue(z.contains(representative), name)
            for element in z.basis:
                self.assertTrue(hh0.is_cocycle(element), name)
            self.assertEqual(Subspace.span(hh0.representatives(), B.dim, B.p).dim, z.dim, name)

    def test_characteristic_dividing_group_order(self):
        field = PrimeField(5)
        group = cyclic(5)
        chi = character_from_generator_values(group, field, {1: 1})
        with self.assertRaises(CharacteristicDividesGroupOrder):
            smash_product(truncated_poly(field, 2), group, chi)

    def test_subalgebra_D(self):
        data = demo_spec("E1").data
        d_algebra, embedding = subalgebra_D_groupcase(data.A, data.group, data.chi, data.B)
        self.assertEqual(d_algebra.dim, 8)
        self.assertEqual(embedding.shape, (8, 16))


class TestModules(TestCase):

    def setUp(self):
        self.field = PrimeField(7)
        self.A = truncated_poly(self.field, 3)

    def test_regular_bimodule(self):
        bimodule = Bimodule.regular(self.A)
        bimodule.validate()
        module = bimodule.as_enveloping_module(enveloping_algebra(self.A))
        self.assertEqual(module.dim, 3)

    def test_endomorphisms_of_regular_module(self):
        module = ModuleOverAlgebra(self.A, self.A.left_matrices())
        self.assertEqual(hom_module_space(module, module).dim, 3)
        self.assertTrue(module.is_submodule([1, 2]))
        self.assertFalse(module.is_submodule([0]))
        self.assertEqual(module.restrict([2]).dim, 1)

    def test_non_module_is_rejected(self):
        actions = self.A.left_matrices().copy()
        actions[1] = np.eye(3, dtype=np.int64)
        with self.assertRaises(BadParameter):
            ModuleOverAlgebra(self.A, actions)


class TestGroupAction(TestCase):

    def test_character_action_invariants(self):
        field = PrimeField(5)
        group = cyclic(2)
        chi = character_from_generator_values(group, field, {1: 4})
        action = character_action(truncated_poly(field, 2), chi)
        action.validate()
        invariants = invariants_of_group_action(action)
        self.assertEqual(invariants.dim, 1)
        self.assertTrue(np.array_equal(invariants.basis, [[1, 0]]))
        projector = action.projector()
        self.assertTrue(np.array_equal((projector @ projector) % 5, projector))

    def test_dense_and_monomial_agree(self):
        field = PrimeField(7)
        group = cyclic(3)
        chi = character_from_generator_values(group, field, {1: 2})
        monomial = character_action(truncated_poly(field, 3), chi).kron(character_action(truncated_poly(field, 3), chi))
        dense = GroupAction.from_matrices(group, 7, np.array([monomial.matrix(g) for g in range(3)]))
        self.assertEqual(monomial.invariants().dim, dense.invariants().dim)
        self.assertEqual(monomial.transposed_inverse().invariants().dim, monomial.invariants().dim)

    def test_characteristic_dividing_order(self):
        with self.assertRaises(CharacteristicDividesGroupOrder):
            GroupAction.trivial(cyclic(5), 5, 2).invariants()

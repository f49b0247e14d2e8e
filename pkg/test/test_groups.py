from unittest import TestCase

from hochschild.errors import InvalidTable, NotAHomomorphism
from hochschild.field.prime_field import PrimeField
from hochschild.groups.character import character_from_generator_values, character_power, kernel_of_character
from hochschild.groups.fin_group import FinGroup
from hochschild.groups.group_factory import cyclic, dihedral, direct_product, make_group


class TestFinGroup(TestCase):

    def setUp(self):
        self.s3 = dihedral(6)

    def test_cyclic(self):
        group = cyclic(4)
        self.assertEqual(group.order, 4)
        self.assertTrue(group.is_abelian())
        self.assertEqual(group.element_order(1), 4)
        self.assertEqual(group.element_order(2), 2)
        self.assertEqual(group.inv(1), 3)
        self.assertEqual(group.power(1, -1), 3)
        self.assertEqual(len(group.conjugacy_data()), 4)

    def test_dihedral_relations(self):
        r, s = 1, 3
        self.assertFalse(self.s3.is_abelian())
        self.assertEqual(self.s3.mul(s, s), self.s3.identity)
        # s r s = r^-1
        self.assertEqual(self.s3.mul(self.s3.mul(s, r), s), self.s3.inv(r))
        self.assertEqual(self.s3.labels, ["e", "r", "r^2", "s", "rs", "r^2s"])

    def test_conjugacy_classes(self):
        classes = self.s3.conjugacy_data()
        self.assertEqual(classes.members, [[0], [1, 2], [3, 4, 5]])
        self.assertEqual(classes.representatives, [0, 1, 3])
        self.assertEqual(self.s3.centralizer(1), [0, 1, 2])
        self.assertTrue(self.s3.is_central(0))
        self.assertFalse(self.s3.is_central(3))

    def test_normal_subgroups(self):
        self.assertTrue(self.s3.is_normal_subgroup([0, 1, 2]))
        self.assertFalse(self.s3.is_normal_subgroup([0, 3]))
        self.assertEqual(self.s3.subgroup_class_count([0, 1, 2]), 3)
        self.assertEqual(self.s3.generated_subgroup([1]), [0, 1, 2])

    def test_generators_generate(self):
        for group in (cyclic(6), self.s3, direct_product(cyclic(4), self.s3)):
            self.assertEqual(group.generated_subgroup(group.generators()), list(range(group.order)))

    def test_direct_product_indexing(self):
        group = direct_product(cyclic(4), self.s3)
        self.assertEqual(group.order, 24)
        # (a, e) sits at 1 * 6 + 0 and is central
        self.assertEqual(group.labels[6], "(g,e)")
        self.assertTrue(group.is_central(6))
        self.assertEqual(len(group.conjugacy_data()), 12)

    def test_invalid_tables(self):
        with self.assertRaises(InvalidTable):
            FinGroup([[0, 1], [0, 1]])
        with self.assertRaises(InvalidTable):
            FinGroup([[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]])
        with self.assertRaises(InvalidTable):
            dihedral(5)

    def test_make_group(self):
        self.assertEqual(make_group({"kind": "cyclic", "order": 3}).order, 3)
        group = make_group({"kind": "product", "factors": [{"kind": "cyclic", "order": 2},
                                                           {"kind": "cyclic", "order": 4}]})
        self.assertEqual(group.order, 8)
        self.assertTrue(group.is_abelian())
        self.assertEqual(make_group({"kind": "table", "table": [[0, 1], [1, 0]]}).order, 2)
        with self.assertRaises(InvalidTable):
            make_group({"kind": "free"})
        with self.assertRaises(InvalidTable):
            make_group({"kind": "cyclic"})


class TestCharacter(TestCase):

    def setUp(self):
        self.field = PrimeField(13)
        self.group = direct_product(cyclic(4), dihedral(6))
        self.chi = character_from_generator_values(self.group, self.field, {6: 5, 1: 1, 3: 12})

    def test_extends_to_homomorphism(self):
        for g in range(self.group.order):
            for h in range(self.group.order):
                self.assertEqual(self.chi(self.group.mul(g, h)), self.chi(g) * self.chi(h) % 13)
        self.assertEqual(self.chi.image_order(), 4)

    def test_kernel(self):
        kernel, g_classes, n_classes = kernel_of_character(self.group, self.chi)
        self.assertEqual(len(kernel), 6)
        self.assertEqual(g_classes, 3)
        self.assertEqual(n_classes, 3)

    def test_character_power(self):
        self.assertTrue(character_power(self.chi, 4).is_trivial())
        self.assertFalse(character_power(self.chi, 2).is_trivial())

    def test_conflicting_assignments(self):
        with self.assertRaises(NotAHomomorphism):
            character_from_generator_values(cyclic(2), PrimeField(5), {1: 2})
        with self.assertRaises(NotAHomomorphism):
            character_from_generator_values(cyclic(4), PrimeField(5), {2: 4})
        with self.assertRaises(NotAHomomorphism):
            character_from_generator_values(cyclic(2), PrimeField(5), {1: 0})

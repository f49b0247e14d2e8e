from unittest import TestCase

import numpy as np

from hochschild.errors import DegreeOutOfRange, G1NotCentral, NotPrimitiveRoot
from hochschild.field.prime_field import PrimeField
from hochschild.groups.character import character_from_generator_values
from hochschild.groups.group_factory import cyclic, dihedral
from hochschild.jobs.demos import demo_spec
from hochschild.smashext.ext_d import ext_d_complex
from hochschild.rankone.adjoint_route import adjoint_module, adjoint_route
from hochschild.rankone.bg_complex import BGComplex
from hochschild.rankone.chain_maps import ChainMaps, alpha_terms
from hochschild.rankone.cup_small import compare_to_invariant, cup_small, verify_cup_agreement
from hochschild.rankone.rank_one_data import RankOneData, build_rankone
from hochschild.rankone.ring_presentation import graded_commutative, ring_presentation
from hochschild.rankone.small_resolution import SmallResolution

EXPECTED_DIMS = {
    "E1": [1] * 7,
    "E2": [1] * 7,
    "E3": [1, 1, 0, 0, 1, 1, 0],
    "E4": [3] * 7,
    "E5": [2, 2, 0, 0, 2, 2],
}


class TestRankOneData(TestCase):

    def test_kernel_power_order(self):
        self.assertEqual({name: demo_spec(name).data.p_ord for name in EXPECTED_DIMS},
                         {"E1": 1, "E2": 1, "E3": 2, "E4": 1, "E5": 2})

    def test_closed_form(self):
        for name, expected in EXPECTED_DIMS.items():
            self.assertEqual(demo_spec(name).data.closed_form_dims(len(expected) - 1), expected)

    def test_describe(self):
        description = demo_spec("E5").data.describe()
        self.assertEqual(description["dim_B"], 16)
        self.assertEqual(description["g_classes_in_N"], 2)
        self.assertEqual(description["dim_Z_kN"], 2)
        self.assertEqual(description["coproduct"]["delta_g"], "g(x)g")

    def test_build_rankone(self):
        field = PrimeField(7)
        group = cyclic(3)
        data = build_rankone(field, 3, group, character_from_generator_values(group, field, {1: 2}), 1)
        self.assertEqual(data.dim, 9)
        self.assertEqual(data.p_ord, 1)

    def test_g1_must_be_central(self):
        field = PrimeField(7)
        group = dihedral(6)
        chi = character_from_generator_values(group, field, {1: 1, 3: 6})
        with self.assertRaises(G1NotCentral):
            RankOneData(field, 2, group, chi, 3)

    def test_chi_g1_must_be_primitive(self):
        field = PrimeField(5)
        group = cyclic(4)
        chi = character_from_generator_values(group, field, {1: 2})
        with self.assertRaises(NotPrimitiveRoot):
            RankOneData(field, 2, group, chi, 1)
        with self.assertRaises(NotPrimitiveRoot):
            RankOneData(field, 3, group, chi, 2)

    def test_twisted_conjugation(self):
        data = demo_spec("E1").data
        # g x g^-1 = -x, and the degree 1 twist multiplies by chi(g)^-1 = -1
        self.assertTrue(np.array_equal(data.twisted_conjugation(1).apply(1, data.x()), data.x()))
        self.assertTrue(np.array_equal(data.conjugation().apply(1, data.x()), (4 * data.x()) % 5))


class TestSmallResolution(TestCase):

    def test_boundaries_compose_to_zero(self):
        for name in ("E1", "E2", "E3"):
            resolution = SmallResolution(demo_spec(name).data, 6)
            for degree in range(1, 6):
                product = resolution.boundary(degree) @ resolution.boundary(degree + 1)
                self.assertFalse(np.any(product % resolution.p))

    def test_hom_differentials(self):
        resolution = SmallResolution(demo_spec("E1").data, 3)
        even, odd = resolution.hom_differential(0), resolution.hom_differential(1)
        self.assertFalse(np.any((odd @ even) % 5))


class TestBGComplex(TestCase):

    def test_dims(self):
        for name, expected in EXPECTED_DIMS.items():
            data = demo_spec(name).data
            self.assertEqual(BGComplex(data, len(expected) - 1).cohomology_dims(), expected)

    def test_even_dims_equal_odd_dims(self):
        for name, expected in EXPECTED_DIMS.items():
            for i in range(0, len(expected) - 1, 2):
                self.assertEqual(expected[i], expected[i + 1])

    def test_closed_form_basis(self):
        data = demo_spec("E5").data
        bg = BGComplex(data, 5)
        for m in range(6):
            group = bg.cohomology(m)
            self.assertTrue(group.is_basis([c.representative for c in bg.closed_form_classes(m)]))
        self.assertEqual(bg.closed_form_labels(1), ["x*((e,e))", "x*((g,e))"])


class TestChainMaps(TestCase):

    def test_alpha_terms(self):
        self.assertEqual(alpha_terms(2, 1), [(1, 1, 0)])
        self.assertEqual(alpha_terms(3, 1), [(1, 1, 1), (2, 1, 0)])

    def test_chain_maps_up_to_degree_six(self):
        for name in ("E1", "E2", "E3"):
            maps = ChainMaps(demo_spec(name).data, 6)
            identity = np.eye(maps.n ** 2, dtype=np.int64)
            for m in range(0, 7, 2):
                self.assertTrue(np.array_equal((maps.psi[m] @ maps.phi[m]) % maps.p, identity))
            convention = maps.sign_convention()
            self.assertIn(convention["psi_odd_sign"], (1, -1))
            self.assertEqual(sorted(convention["psi_phi_odd_identity"]), ["1", "3", "5"])

    def test_phi_generator_in_degree_zero(self):
        maps = ChainMaps(demo_spec("E1").data, 1)
        self.assertTrue(np.array_equal(maps.phi_generator(0), [1, 0, 0, 0]))


class TestRing(TestCase):

    def test_presentations(self):
        for name in ("E1", "E2", "E3", "E4", "E5"):
            data = demo_spec(name).data
            top = 5 if name == "E5" else 6
            presentation = ring_presentation(data, top)
            record = presentation.to_dict()
            self.assertTrue(record["z_squared_zero"])
            self.assertTrue(all(record["y_bijective"].values()))
            self.assertTrue(all(entry["matches"] for entry in record["relations"]))
            self.assertEqual(record["deg_y"], 2 * data.p_ord)
            self.assertEqual(len(record["degree0_basis"]), data.g_class_count)
            self.assertFalse(record["center_discrepancy"])

    def test_needs_room_for_y(self):
        with self.assertRaises(DegreeOutOfRange):
            ring_presentation(demo_spec("E3").data, 4)

    def test_cup_small_is_graded_commutative(self):
        for name in ("E1", "E2", "E3"):
            data = demo_spec(name).data
            bg = BGComplex(data, 4)
            maps = ChainMaps(data, 4, bg.resolution)
            found = [c for m in range(5) for c in bg.closed_form_classes(m)]
            for first in found:
                for second in found:
                    if first.degree + second.degree <= 4:
                        self.assertTrue(graded_commutative(bg, maps, first, second))

    def test_unit_class(self):
        data = demo_spec("E1").data
        bg = BGComplex(data, 2)
        maps = ChainMaps(data, 2, bg.resolution)
        unit = bg.element_class(0, data.B.unit)
        z = bg.element_class(1, data.x())
        self.assertEqual(cup_small(bg, maps, unit, z), z)


class TestAdjointRoute(TestCase):

    def test_dims_agree_with_bg(self):
        for name in ("E1", "E3", "E4", "E5"):
            expected = EXPECTED_DIMS[name]
            result = adjoint_route(demo_spec(name).data, len(expected) - 1)
            self.assertEqual(result["dims"], expected)
            self.assertEqual(len(result["summands"]), len(demo_spec(name).data.group.conjugacy_data()))

    def test_adjoint_module(self):
        module = adjoint_module(demo_spec("E2").data)
        self.assertEqual(module.dim, 9)


class TestCupAgreement(TestCase):

    def test_small_cup_matches_invariant_cup(self):
        for name in ("E1", "E2", "E3", "E5"):
            data = demo_spec(name).data
            bg = BGComplex(data, 3)
            maps = ChainMaps(data, 3, bg.resolution)
            invariant = ext_d_complex(data, 3, normalized=True)
            self.assertGreater(verify_cup_agreement(bg, maps, invariant, 3), 0, name)

    def test_comparison_keeps_nonzero_classes(self):
        data = demo_spec("E3").data
        bg = BGComplex(data, 3)
        maps = ChainMaps(data, 3, bg.resolution)
        invariant = ext_d_complex(data, 3, normalized=True)
        z = bg.element_class(1, data.x())
        self.assertFalse(compare_to_invariant(bg, maps, invariant, z).is_zero())

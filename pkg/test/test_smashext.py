from unittest import TestCase

import numpy as np

from hochschild.cohomology.cohomology_group import CohomologyClass
from hochschild.errors import BudgetExceeded, IsoCheckFailed
from hochschild.jobs.demos import demo_spec
from hochschild.rankone.bg_complex import BGComplex
from hochschild.rankone.chain_maps import ChainMaps
from hochschild.smashext.cocycle_lift import bar_complex_of_B, lift_cocycle_to_bar, lifted_basis, verify_lifts
from hochschild.smashext.delta import d_subalgebra, delta_embedding, verify_delta
from hochschild.smashext.ext_d import ext_D_dims, ext_d_complex, ext_d_feasible_degree, hom_d_dim, \
    hom_d_spot_check
from hochschild.smashext.gamma import build_gamma, gamma_iso_D
from hochschild.smashext.hopf_hochschild import HopfHochschildComplex, hopf_hochschild_dims


class TestDelta(TestCase):

    def test_delta_lands_in_D(self):
        for name in ("E1", "E3", "E5"):
            data = demo_spec(name).data
            d_algebra, embedding = d_subalgebra(data)
            self.assertEqual(d_algebra.dim, data.n ** 2 * data.group.order)
            verify_delta(data, embedding)

    def test_delta_outside_a_smaller_subalgebra(self):
        data = demo_spec("E1").data
        _, embedding = d_subalgebra(data)
        # keep only the identity component of D
        with self.assertRaises(IsoCheckFailed):
            verify_delta(data, embedding[:data.n ** 2])

    def test_delta_rows(self):
        data = demo_spec("E3").data
        rows = delta_embedding(data)
        self.assertEqual(rows.shape, (4, data.dim ** 2))
        self.assertTrue(np.all(rows.sum(axis=1) == 1))


class TestExtOverD(TestCase):

    def test_dims_agree_with_bg(self):
        expected = {"E1": [1, 1, 1, 1], "E2": [1, 1, 1, 1], "E3": [1, 1, 0, 0],
                    "E4": [3, 3, 3, 3], "E5": [2, 2, 0, 0]}
        for name, dims in expected.items():
            data = demo_spec(name).data
            self.assertGreaterEqual(ext_d_feasible_degree(data), 3)
            self.assertEqual(ext_D_dims(data, 3), dims)

    def test_normalized_complex(self):
        data = demo_spec("E3").data
        self.assertEqual(ext_d_complex(data, 6, normalized=True).cohomology_dims(), [1, 1, 0, 0, 1, 1, 0])

    def test_hom_over_D_matches_invariant_cochains(self):
        for name in ("E1", "E2", "E3"):
            data = demo_spec(name).data
            complex_ = ext_d_complex(data, 2)
            spot = hom_d_spot_check(data, complex_)
            self.assertTrue(spot)
            for entry in spot.values():
                self.assertEqual(entry["hom_d"], entry["invariant"])

    def test_hom_over_D_budget(self):
        data = demo_spec("E4").data
        _, embedding = d_subalgebra(data)
        with self.assertRaises(BudgetExceeded):
            hom_d_dim(data, 0, embedding)
        self.assertEqual(hom_d_spot_check(data, ext_d_complex(data, 1)), {})


class TestCocycleLift(TestCase):

    def test_lifts_give_bar_bases(self):
        for name in ("E1", "E3"):
            data = demo_spec(name).data
            bg = BGComplex(data, 3)
            maps = ChainMaps(data, 3, bg.resolution)
            bar = bar_complex_of_B(maps, 3)
            results = verify_lifts(bg, maps, bar)
            self.assertEqual(sorted(results), [0, 1, 2, 3])
            for degree, entry in results.items():
                self.assertTrue(entry["basis"])
                self.assertEqual(entry["lifted"], bar.cohomology(degree).dim)

    def test_lift_of_closed_form_classes(self):
        data = demo_spec("E1").data
        bg = BGComplex(data, 2)
        maps = ChainMaps(data, 2, bg.resolution)
        bar = bar_complex_of_B(maps, 2)
        lifted = lifted_basis(bg, maps, bar, 1)
        self.assertEqual(len(lifted), 1)
        self.assertFalse(lifted[0].is_zero())
        unit = lift_cocycle_to_bar(bg, maps, bar, CohomologyClass(bg, 0, bg.cohomology(0).representatives()[0]))
        self.assertFalse(unit.is_zero())


class TestGamma(TestCase):

    def test_exhaustive_iso(self):
        for name, pairs in (("E1", 64), ("E2", 729), ("E3", 256)):
            iso = gamma_iso_D(demo_spec(name).data)
            record = iso.to_dict()
            self.assertTrue(record["exhaustive"])
            self.assertEqual(record["pairs_checked"], pairs)
            self.assertTrue(record["identity"])

    def test_sampled_iso(self):
        data = demo_spec("E4").data
        iso = gamma_iso_D(data)
        self.assertEqual(iso.gamma.dim, 384)
        self.assertFalse(iso.exhaustive)
        self.assertEqual(iso.pairs_checked, 10 ** 4)

    def test_gamma_unit_and_product(self):
        data = demo_spec("E1").data
        gamma = build_gamma(data)
        self.assertEqual(gamma.unit_index, 0)
        self.assertFalse(gamma.is_commutative())


class TestHopfHochschild(TestCase):

    def test_dims_agree_with_bg(self):
        self.assertEqual(hopf_hochschild_dims(demo_spec("E1").data, 3), [1, 1, 1, 1])
        self.assertEqual(hopf_hochschild_dims(demo_spec("E3").data, 3), [1, 1, 0, 0])

    def test_hom_over_gamma_matches_invariant_cochains(self):
        for name in ("E1", "E3"):
            data = demo_spec(name).data
            hopf = HopfHochschildComplex(data)
            invariant = ext_d_complex(data, 2)
            self.assertEqual([hopf.hom_space(m).dim for m in range(3)], invariant.dims[:3])

    def test_budget_stops_large_degrees(self):
        complex_ = HopfHochschildComplex(demo_spec("E2").data)
        result = complex_.feasible_dims(3)
        self.assertEqual(result["dims"], [1, 1, 1])
        self.assertIsNotNone(result["stopped"])
        with self.assertRaises(BudgetExceeded):
            complex_.dims(3)

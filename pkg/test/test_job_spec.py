import json
from unittest import TestCase

from hochschild.enums.check_name import CheckName
from hochschild.errors import ParseError, ValidationError
from hochschild.jobs.demos import DEMOS, demo_names, demo_spec
from hochschild.jobs.job_spec import parse_checks, parse_spec, spec_from_dict

SWEEDLER = {"prime": 5, "n": 2, "group": {"kind": "cyclic", "order": 2}, "chi": [{"element": 1, "value": 4}],
            "g1": 1}


def with_fields(**fields):
    spec = dict(SWEEDLER)
    spec.update(fields)
    return json.dumps(spec)


class TestJobSpec(TestCase):

    def assertInvalid(self, text, field):
        with self.assertRaises(ValidationError) as context:
            parse_spec(text)
        self.assertEqual(context.exception.field, field)

    def test_parse_sweedler(self):
        spec = parse_spec(json.dumps(SWEEDLER))
        self.assertEqual(spec.data.p_ord, 1)
        self.assertEqual(spec.max_degree, 6)
        self.assertEqual(spec.oracle_max_degree, 3)
        self.assertEqual(spec.checks, list(CheckName))

    def test_root_and_powers(self):
        spec = parse_spec(with_fields(prime=5, group={"kind": "cyclic", "order": 4}, root=4,
                                      chi=[{"element": 1, "power": 1}], g1=2))
        self.assertEqual(spec.data.chi(1), 2)
        self.assertEqual(spec.data.p_ord, 2)

    def test_malformed_json(self):
        with self.assertRaises(ParseError):
            parse_spec("{\"prime\": 5,")

    def test_invalid_fields(self):
        self.assertInvalid(with_fields(prime=6), "prime")
        self.assertInvalid(with_fields(prime=3, group={"kind": "cyclic", "order": 3},
                                       chi=[{"element": 1, "value": 1}], n=2), "prime")
        self.assertInvalid(with_fields(n=3), "n")
        self.assertInvalid(with_fields(group={"kind": "free"}), "group")
        self.assertInvalid(with_fields(chi=[{"element": 1, "value": 2}]), "chi")
        self.assertInvalid(with_fields(chi=[{"element": 1, "power": 1}]), "chi[0].power")
        self.assertInvalid(with_fields(chi=[3]), "chi[0]")
        self.assertInvalid(with_fields(chi=[{"element": "g", "value": 4}]), "chi[0].element")
        self.assertInvalid(with_fields(chi=[{"element": 1, "value": 4}, {"element": 1}]), "chi[1].value")
        self.assertInvalid(with_fields(root=4, chi=[{"element": 1, "power": "one"}]), "chi[0].power")
        self.assertInvalid(with_fields(g1=0), "g1")
        self.assertInvalid(with_fields(g1=2), "g1")
        self.assertInvalid(with_fields(max_degree=-1), "max_degree")
        self.assertInvalid(with_fields(oracle_max_degree=-1), "oracle_max_degree")
        self.assertInvalid(with_fields(checks=["bg", "tea"]), "checks[1]")
        self.assertInvalid(with_fields(root=3), "root")
        self.assertInvalid(json.dumps([1, 2]), "spec")
        self.assertInvalid(json.dumps({"prime": 5}), "group")

    def test_g1_must_be_central(self):
        spec = with_fields(prime=7, group={"kind": "dihedral", "order": 6},
                           chi=[{"element": 1, "value": 1}, {"element": 3, "value": 6}], g1=3)
        self.assertInvalid(spec, "g1")

    def test_ring_needs_max_degree(self):
        demo = dict(DEMOS["E3"], max_degree=4, checks=["ring"])
        with self.assertRaises(ValidationError) as context:
            spec_from_dict(demo)
        self.assertEqual(context.exception.field, "max_degree")

    def test_overrides(self):
        spec = demo_spec("E3").with_overrides(max_degree=8, checks=[CheckName.BG])
        self.assertEqual(spec.max_degree, 8)
        self.assertEqual(spec.to_dict()["checks"], ["bg"])
        self.assertEqual(spec.to_dict()["name"], "E3")

    def test_parse_checks(self):
        self.assertEqual(parse_checks(["bg", "ring", "bg"]), [CheckName.BG, CheckName.RING])
        with self.assertRaises(ValidationError):
            parse_checks("bg")


class TestDemos(TestCase):

    def test_demos_validate(self):
        self.assertEqual(demo_names(), ["E1", "E2", "E3", "E4", "E5"])
        dims = {name: demo_spec(name).data.B.dim for name in demo_names()}
        self.assertEqual(dims, {"E1": 4, "E2": 9, "E3": 8, "E4": 96, "E5": 16})
        self.assertNotIn(CheckName.HOPF_HOCHSCHILD, demo_spec("E4").checks)
        self.assertEqual(demo_spec("E5").max_degree, 5)

    def test_unknown_demo(self):
        with self.assertRaises(KeyError):
            demo_spec("E9")

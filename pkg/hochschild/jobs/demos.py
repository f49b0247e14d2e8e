"""Built-in job specifications for the five reference examples."""

from typing import Any, Dict, List

from hochschild.enums.check_name import CheckName
from hochschild.jobs.job_spec import JobSpec, spec_from_dict

DEMOS: Dict[str, Dict[str, Any]] = {
    # Sweedler algebra
    "E1": {"prime": 5, "n": 2, "group": {"kind": "cyclic", "order": 2},
           "chi": [{"element": 1, "value": 4}], "g1": 1},
    # Taft algebra of dimension 9
    "E2": {"prime": 7, "n": 3, "group": {"kind": "cyclic", "order": 3},
           "chi": [{"element": 1, "value": 2}], "g1": 1},
    # chi^2 nontrivial on Z4, so cohomology vanishes in degrees 2 and 3 mod 4
    "E3": {"prime": 5, "n": 2, "group": {"kind": "cyclic", "order": 4},
           "chi": [{"element": 1, "value": 2}], "g1": 2},
    # Z4 x S3 with chi = (5, sign); S3 elements r^k s^e sit at k + 3e
    "E4": {"prime": 13, "n": 4,
           "group": {"kind": "product", "factors": [{"kind": "cyclic", "order": 4},
                                                    {"kind": "dihedral", "order": 6}]},
           "chi": [{"element": 6, "value": 5}, {"element": 1, "value": 1}, {"element": 3, "value": 12}],
           "g1": 6,
           "checks": [check.value for check in CheckName if check != CheckName.HOPF_HOCHSCHILD]},
    # Z2 x Z4 with chi = (1, i), kernel Z2 x 1
    "E5": {"prime": 5, "n": 2,
           "group": {"kind": "product", "factors": [{"kind": "cyclic", "order": 2},
                                                    {"kind": "cyclic", "order": 4}]},
           "chi": [{"element": 4, "value": 1}, {"element": 1, "value": 2}], "g1": 2, "max_degree": 5},
}


def demo_names() -> List[str]:
    return sorted(DEMOS)


def demo_spec(name: str) -> JobSpec:
    """:raises: KeyError for an unknown demo"""
    spec = dict(DEMOS[name])
    spec["name"] = name
    return spec_from_dict(spec)

#!/usr/bin/python
"""Job specifications: JSON text in, validated parameters and rank-one data out."""

import json
import logging
from typing import Any, Dict, List, Optional

from hochschild.constants import Constants
from hochschild.enums.check_name import CheckName
from hochschild.errors import HochschildError, ParseError, ValidationError
from hochschild.field.prime_field import PrimeField
from hochschild.groups.character import Character, character_from_generator_values
from hochschild.groups.fin_group import FinGroup
from hochschild.groups.group_factory import make_group
from hochschild.rankone.rank_one_data import RankOneData

LOGGER = logging.getLogger(__name__)

ALL_CHECKS = list(CheckName)


def _integer(obj: Dict[str, Any], key: str, default: Optional[int] = None, path: str = "") -> int:
    field = path + "." + key if path else key
    value = obj.get(key, default)
    if value is None:
        raise ValidationError(field, "is required")
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValidationError(field, "must be an integer, got %r" % (value,))
    return value


class JobSpec:

    def __init__(self, prime: int, n: int, group: Dict[str, Any], chi: List[Dict[str, int]], g1: int,
                 max_degree: int = Constants.DEFAULT_MAX_DEGREE,
                 oracle_max_degree: int = Constants.DEFAULT_ORACLE_MAX_DEGREE,
                 checks: Optional[List[CheckName]] = None, root: Optional[int] = None, name: Optional[str] = None):
        self.prime = prime
        self.n = n
        self.group = group
        self.chi = chi
        self.g1 = g1
        self.max_degree = max_degree
        self.oracle_max_degree = oracle_max_degree
        self.checks = list(checks) if checks is not None else list(ALL_CHECKS)
        self.root = root
        self.name = name
        self.field = None
        self.data = None
        self.validate()

    def __repr__(self):
        return "JobSpec(p=%d, n=%d, g1=%d, checks=%s)" % (self.prime, self.n, self.g1,
                                                          [check.value for check in self.checks])

    def validate(self) -> None:
        """
        Build the rank-one data, turning every failure into an error naming the offending field.

        :raises: ValidationError
        """
        try:
            self.field = PrimeField(self.prime)
        except HochschildError as error:
            raise ValidationError("prime", str(error))
        if self.n < 2 or (self.prime - 1) % self.n:
            raise ValidationError("n", "n = %d must be at least 2 and divide p - 1 = %d" % (self.n, self.prime - 1))
        try:
            group = make_group(self.group)
        except (HochschildError, ValueError, TypeError) as error:
            raise ValidationError("group", str(error))
        if group.order % self.prime == 0:
            raise ValidationError("prime", "p = %d divides |G| = %d" % (self.prime, group.order))
        chi = self._character(group)
        if not 0 <= self.g1 < group.order:
            raise ValidationError("g1", "%d is not an element of a group of order %d" % (self.g1, group.order))
        if not group.is_central(self.g1):
            raise ValidationError("g1", "%s is not central" % group.labels[self.g1])
        if self.field.multiplicative_order(chi(self.g1)) != self.n:
            raise ValidationError("g1", "chi(g1) = %d is not a primitive %d-th root of unity" % (chi(self.g1), self.n))
        try:
            self.data = RankOneData(self.field, self.n, group, chi, self.g1)
        except HochschildError as error:
            raise ValidationError("g1", str(error))
        if self.max_degree < 0:
            raise ValidationError("max_degree", "must be non-negative")
        if CheckName.RING in self.checks and self.max_degree < 2 * self.data.p_ord + 1:
            raise ValidationError("max_degree", "the ring presentation needs max_degree >= %d"
                                  % (2 * self.data.p_ord + 1))
        if self.oracle_max_degree < 0:
            raise ValidationError("oracle_max_degree", "must be non-negative")
        LOGGER.debug("Validated %r", self)

    def _character(self, group: FinGroup) -> Character:
        root = None
        if self.root is not None:
            try:
                root = self.field.element_of_order(self.root).residue
            except HochschildError as error:
                raise ValidationError("root", str(error))
        assignments = {}
        for position, entry in enumerate(self.chi):
            path = "chi[%d]" % position
            if not isinstance(entry, dict):
                raise ValidationError(path, "must be an object with 'element' and 'value' or 'power'")
            element = _integer(entry, "element", path=path)
            if "power" in entry:
                if root is None:
                    raise ValidationError(path + ".power", "powers need a declared 'root'")
                assignments[element] = self.field.pow(root, _integer(entry, "power", path=path))
            else:
                assignments[element] = _integer(entry, "value", path=path)
        try:
            return character_from_generator_values(group, self.field, assignments)
        except HochschildError as error:
            raise ValidationError("chi", str(error))

    def with_overrides(self, max_degree: Optional[int] = None,
                       checks: Optional[List[CheckName]] = None) -> 'JobSpec':
        return JobSpec(self.prime, self.n, self.group, self.chi, self.g1,
                       self.max_degree if max_degree is None else max_degree, self.oracle_max_degree,
                       self.checks if checks is None else checks, self.root, self.name)

    def to_dict(self) -> Dict[str, Any]:
        result = {
            "prime": self.prime,
            "n": self.n,
            "group": self.group,
            "chi": self.chi,
            "g1": self.g1,
            "max_degree": self.max_degree,
            "oracle_max_degree": self.oracle_max_degree,
            "checks": [check.value for check in self.checks],
        }
        if self.root is not None:
            result["root"] = self.root
        if self.name is not None:
            result["name"] = self.name
        return result


def parse_checks(names: List[Any]) -> List[CheckName]:
    if not isinstance(names, list):
        raise ValidationError("checks", "must be a list of check names")
    checks = []
    for position, name in enumerate(names):
        try:
            check = CheckName.parse(name)
        except ValueError as error:
            raise ValidationError("checks[%d]" % position, str(error))
        if check not in checks:
            checks.append(check)
    return checks


def spec_from_dict(obj: Any) -> JobSpec:
    """:raises: ValidationError"""
    if not isinstance(obj, dict):
        raise ValidationError("spec", "job spec must be a JSON object")
    group = obj.get("group")
    if not isinstance(group, dict):
        raise ValidationError("group", "must be an object with a 'kind'")
    chi = obj.get("chi")
    if not isinstance(chi, list):
        raise ValidationError("chi", "must be a list of assignments")
    checks = parse_checks(obj["checks"]) if "checks" in obj else None
    root = _integer(obj, "root") if "root" in obj else None
    return JobSpec(_integer(obj, "prime"), _integer(obj, "n"), group, chi, _integer(obj, "g1"),
                   _integer(obj, "max_degree", Constants.DEFAULT_MAX_DEGREE),
                   _integer(obj, "oracle_max_degree", Constants.DEFAULT_ORACLE_MAX_DEGREE),
                   checks, root, obj.get("name"))


def parse_spec(text: str) -> JobSpec:
    """
    :raises: ParseError for malformed JSON, ValidationError for bad parameters
    """
    try:
        obj = json.loads(text)
    except (TypeError, ValueError) as error:
        raise ParseError("Job spec is not valid JSON: %s" % error)
    return spec_from_dict(obj)

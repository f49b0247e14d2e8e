#!/usr/bin/python
"""Job reports: dims per route, the ring presentation, check outcomes and timings."""

import json
from typing import Any, Dict, List, Optional

from hochschild.enums.check_name import CheckName
from hochschild.enums.check_status import CheckStatus


class CheckResult:

    def __init__(self, name: CheckName, status: CheckStatus, detail: str = ""):
        self.name = name
        self.status = status
        self.detail = detail

    def __repr__(self):
        return "CheckResult(%s, %s)" % (self.name.value, self.status.value)

    def to_dict(self) -> Dict[str, str]:
        return {"name": self.name.value, "status": self.status.value, "detail": self.detail}


class Report:

    def __init__(self, spec: Dict[str, Any], algebra: Dict[str, Any]):
        self.spec = spec
        self.algebra = algebra
        self.dims = {}
        self.ring = None
        self.checks = []
        self.extras = {}
        self.timings = {}

    def __repr__(self):
        return "Report(dims=%s, checks=%s)" % (self.dims, self.checks)

    def add_dims(self, route: str, dims: List[int]) -> None:
        self.dims[route] = [int(d) for d in dims]

    def add_check(self, result: CheckResult) -> None:
        self.checks.append(result)

    def check(self, name: CheckName) -> Optional[CheckResult]:
        for result in self.checks:
            if result.name == name:
                return result
        return None

    @property
    def failed(self) -> bool:
        return any(result.status == CheckStatus.FAIL for result in self.checks)

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0

    def to_dict(self, include_timings: bool = True) -> Dict[str, Any]:
        result = {
            "input": self.spec,
            "algebra": self.algebra,
            "dims": self.dims,
            "ring": self.ring,
            "checks": [check.to_dict() for check in self.checks],
        }
        result.update(self.extras)
        if include_timings:
            result["timings"] = self.timings
        return result

    def to_json(self, include_timings: bool = True) -> str:
        return json.dumps(self.to_dict(include_timings), indent=2)

from enum import Enum


class CheckStatus(Enum):

    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"  # only ever caused by a budget limit

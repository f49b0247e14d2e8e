from enum import Enum


class OutputFormat(Enum):

    JSON = "json"
    TABLE = "table"

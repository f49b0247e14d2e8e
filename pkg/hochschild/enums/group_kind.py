from enum import Enum


class GroupKind(Enum):

    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"
    PRODUCT = "product"
    TABLE = "table"

from enum import Enum


class CheckName(Enum):

    BG = "bg"                           # small resolution against the closed form
    EXT_D = "ext_d"                     # invariant complexes over the subalgebra D
    BAR = "bar"                         # brute-force normalized bar complex of B
    ADJOINT = "adjoint"                 # Ext_B(k, B^ad) through the twisted resolution of k
    RING = "ring"                       # ring presentation and cup product agreement
    CHAINMAPS = "chainmaps"             # comparison maps between the two resolutions
    GAMMA = "gamma"                     # Gamma isomorphic to D
    HOPF_HOCHSCHILD = "hopf_hochschild"

    @staticmethod
    def parse(name: str) -> 'CheckName':
        for check in CheckName:
            if check.value == name:
                return check
        raise ValueError("Unknown check '%s'" % name)

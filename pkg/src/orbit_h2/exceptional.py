"""Static nilpotent-orbit data for the exceptional simple Lie algebras.

Only nonzero orbits are listed, numbered as in the standard tables of
reductive centralizers.  Rows whose centralizer ``Z_g(X, E, Y)`` is
semisimple (or zero) are not described individually and carry the descriptor
``"semisimple"``; their centre is zero, so their H^2 vanishes whatever the
component group does.  Rows with a toral summand record the centralizer, the
component group and whether it splits off as a semidirect factor.
"""

from collections import namedtuple

Row = namedtuple("Row", "row centralizer component_group splits h2")

SEMISIMPLE = "semisimple"

# number of nonzero nilpotent orbits
ORBIT_COUNTS = {"G2": 4, "F4": 15, "E6": 20, "E7": 44, "E8": 69}

# rows with a nonzero centre: (centralizer, component group, splits, h2)
_TORAL_ROWS = {
    "G2": {},
    "F4": {},
    "E6": {
        2: ("b3+t1", "Trivial", True, 1),
        5: ("a2+t1", "Trivial", True, 1),
        7: ("a1+t1", "Trivial", True, 1),
        8: ("b2+t1", "Trivial", True, 1),
        10: ("a1+t1", "Trivial", True, 1),
        11: ("t2", "S3", True, 0),
        12: ("a1+t1", "Trivial", True, 1),
        14: ("t1", "Trivial", True, 1),
        15: ("t1", "Trivial", True, 1),
        18: ("t1", "Trivial", True, 1),
    },
    "E7": {
        7: ("a3+t1", "Z2", True, 0),
        19: ("a1+t1", "Z2", True, 0),
        21: ("a2+t1", "Z2", True, 0),
        24: ("t2", "Z2", True, 0),
        26: ("a1+t1", "Z2", True, 0),
        38: ("t1", "Z2", True, 0),
    },
    "E8": {
        18: ("b2+t1", "Z2", True, 0),
        24: ("a2+t1", "Z2", True, 0),
        26: ("a1+t1", "Z2", True, 0),
        46: ("t1", "Z2", True, 0),
        49: ("t1", "Z2", True, 0),
        52: ("t1", "Z2", True, 0),
        55: ("t1", "Z2", True, 0),
    },
}


def rows(family):
    """All rows of one exceptional family, in row order."""
    toral = _TORAL_ROWS[family]
    out = []
    for k in range(1, ORBIT_COUNTS[family] + 1):
        if k in toral:
            out.append(Row(k, *toral[k]))
        else:
            out.append(Row(k, SEMISIMPLE, "Unknown", None, 0))
    return out


def toral_rank(descriptor):
    """Dimension of the centre encoded in a descriptor such as ``"a2+t1"``."""
    if descriptor == SEMISIMPLE:
        return 0
    return sum(int(term[1:]) for term in descriptor.split("+") if term.startswith("t"))

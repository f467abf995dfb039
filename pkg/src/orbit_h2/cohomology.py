"""dim H^2(O, R) for nilpotent orbits of complex simple Lie algebras.

Two independent routes are implemented for classical labels: closed-form
family formulas on the partition, and the invariant part of the centre of
the Springer-Steinberg centralizer.  :func:`h2` runs both and refuses to
answer when they disagree.

The reported number is the real dimension of H^2(O, R).  It equals the
*complex* dimension of the component-group invariants of the centre of
Z_g(X, E, Y); no factor of two enters.
"""

from dataclasses import dataclass
from typing import Union

from . import exceptional
from .catalog import (
    CentralizerStructure,
    ComponentGroupInfo,
    OrbitLabel,
    component_group,
    exceptional_row,
    parse_label,
    springer_steinberg,
)
from .errors import BadPartition, RouteMismatch, UnknownLabel
from .partitions import distinct_count, in_P1, in_Pminus1

__all__ = ["H2Result", "h2_sl", "h2_sp", "h2_so", "h2_exceptional", "h2_from_levi", "h2"]

ROUTES = ("A-formula", "C-vanishing", "BD-case", "exceptional-table", "levi-structure", "zero-orbit")


@dataclass(frozen=True)
class H2Result:
    label: OrbitLabel
    dim: int
    route: str
    centralizer: Union[CentralizerStructure, str]
    component_group: ComponentGroupInfo

    def to_json(self):
        return {
            "label": str(self.label),
            "h2": self.dim,
            "route": self.route,
            "centralizer": str(self.centralizer),
        }


def h2_sl(d):
    """|d| - 1."""
    return distinct_count(d) - 1


def h2_sp(d):
    if sum(d) % 2 or not in_Pminus1(d):
        raise BadPartition(f"{d} does not label a symplectic orbit")
    return 0


def h2_so(d):
    """1 iff exactly one odd part value occurs, and it occurs exactly twice."""
    if not in_P1(d):
        raise BadPartition(f"{d} does not label an orthogonal orbit")
    odd = {m: r for m, r in d.multiplicities().items() if m % 2}
    return int(len(odd) == 1 and next(iter(odd.values())) == 2)


def h2_exceptional(label):
    try:
        return exceptional_row(label).h2
    except (IndexError, AttributeError):
        raise UnknownLabel(f"{label} is not in the exceptional table") from None


def h2_from_levi(c, invariant_rule):
    """Invariant centre of ``c`` under its component group.

    The GL block's centre is fixed by the whole centralizer.  Each so_2
    coming from an O_2 factor is negated by any element of determinant -1 in
    that factor; such an element exists unless the O_2 is the only orthogonal
    factor under the S(.) constraint (then the factor is really SO_2).
    """
    n_gl = len(c.kinds("GL"))
    dim = n_gl - 1 if (c.det_constrained and n_gl) else n_gl
    o_factors = c.kinds("O")
    if invariant_rule in ("B", "D"):
        if c.det_constrained and len(o_factors) == 1 and o_factors[0].size == 2:
            dim += 1
    elif invariant_rule == "C":
        pass
    elif invariant_rule != "A":
        raise ValueError(f"unknown invariant rule {invariant_rule!r}")
    return dim


_FORMULAS = {"A": (h2_sl, "A-formula"), "C": (h2_sp, "C-vanishing"), "B": (h2_so, "BD-case"), "D": (h2_so, "BD-case")}


def h2(label):
    """Dispatch a label (object or text) to its family formula, cross-checked."""
    if isinstance(label, str):
        label = parse_label(label)
    algebra = label.algebra
    if not algebra.is_classical:
        row = exceptional_row(label)
        info = ComponentGroupInfo(row.component_group, row.splits)
        dim = row.h2
        center = exceptional.toral_rank(row.centralizer)
        # trivial component group leaves the whole centre invariant
        if (info.description == "Trivial" and dim != center) or dim > center:
            raise RouteMismatch(f"{label}: table h2={dim} but centre has dimension {center}")
        return H2Result(label, dim, "exceptional-table", row.centralizer, info)
    d = label.partition
    c = springer_steinberg(algebra, d)
    info = component_group(c)
    if d.is_zero_orbit():
        # the orbit is a point
        return H2Result(label, 0, "zero-orbit", c, info)
    formula, route = _FORMULAS[algebra.family]
    by_formula = formula(d)
    by_levi = h2_from_levi(c, algebra.family)
    if by_formula != by_levi:
        raise RouteMismatch(f"{label}: {route} gives {by_formula}, levi-structure gives {by_levi}")
    return H2Result(label, by_formula, route, c, info)

"""Orbit labels and the reductive centralizers attached to them.

Classical labels carry a partition; exceptional labels carry a row number of
the static table in :mod:`orbit_h2.exceptional`.  The text form of a label is
``"A4:[1,2,2]"`` or ``"E6:r07"``.
"""

import re
from dataclasses import dataclass
from math import gcd
from typing import Optional, Tuple, Union

from . import exceptional
from .errors import BadPartition, NotClassical, NotExceptional, UnknownLabel
from .partitions import Partition, enumerate_P, enumerate_P1, enumerate_Pminus1, in_P1, in_Pminus1, parse_partition

__all__ = [
    "AlgebraType",
    "OrbitLabel",
    "Factor",
    "CentralizerStructure",
    "ComponentGroupInfo",
    "parse_algebra",
    "parse_label",
    "classical_orbits",
    "exceptional_orbits",
    "orbits",
    "springer_steinberg",
    "center_dim",
    "component_group",
    "exceptional_row",
]

CLASSICAL = ("A", "B", "C", "D")
EXCEPTIONAL = ("G2", "F4", "E6", "E7", "E8")
_MIN_RANK = {"A": 1, "B": 2, "C": 1, "D": 2}


@dataclass(frozen=True, order=True)
class AlgebraType:
    family: str
    rank: Optional[int] = None

    def __post_init__(self):
        if self.family in CLASSICAL:
            if self.rank is None or self.rank < _MIN_RANK[self.family]:
                raise UnknownLabel(f"{self.family} needs rank >= {_MIN_RANK[self.family]}")
        elif self.family in EXCEPTIONAL:
            if self.rank is not None:
                raise UnknownLabel("exceptional families carry no separate rank")
        else:
            raise UnknownLabel(f"unknown algebra family {self.family!r}")

    @property
    def is_classical(self):
        return self.family in CLASSICAL

    @property
    def n(self):
        """Size of the defining matrices (classical families only)."""
        if not self.is_classical:
            raise NotClassical(f"{self} has no matrix model")
        return {"A": self.rank + 1, "B": 2 * self.rank + 1, "C": 2 * self.rank, "D": 2 * self.rank}[
            self.family
        ]

    @property
    def dimension(self):
        n = self.n
        if self.family == "A":
            return n * n - 1
        if self.family == "C":
            return n * (n + 1) // 2
        return n * (n - 1) // 2

    def contains(self, d):
        """Membership predicate of the family's partition set."""
        if d.total != self.n:
            return False
        if self.family == "A":
            return True
        if self.family == "C":
            return in_Pminus1(d)
        return in_P1(d)

    def __str__(self):
        return self.family if self.rank is None else f"{self.family}{self.rank}"


def parse_algebra(text):
    s = str(text).strip().upper()
    if s in EXCEPTIONAL:
        return AlgebraType(s)
    m = re.fullmatch(r"([ABCD])(\d+)", s)
    if not m:
        raise UnknownLabel(f"unknown algebra tag {text!r}")
    return AlgebraType(m.group(1), int(m.group(2)))


@dataclass(frozen=True)
class OrbitLabel:
    algebra: AlgebraType
    key: Union[Partition, int]

    def __post_init__(self):
        if self.algebra.is_classical:
            if not isinstance(self.key, Partition):
                raise UnknownLabel(f"classical label needs a partition, got {self.key!r}")
            if not self.algebra.contains(self.key):
                raise BadPartition(f"{self.key} does not label an orbit of {self.algebra}")
        else:
            if not isinstance(self.key, int) or not 1 <= self.key <= exceptional.ORBIT_COUNTS[self.algebra.family]:
                raise UnknownLabel(f"{self.algebra} has no table row {self.key!r}")

    @property
    def partition(self):
        return self.key if isinstance(self.key, Partition) else None

    def __str__(self):
        if self.algebra.is_classical:
            return f"{self.algebra}:{self.key}"
        return f"{self.algebra}:r{self.key:02d}"


def parse_label(text):
    """Parse ``"A4:[1,2,2]"`` / ``"E6:r07"``.

    Raises UnknownLabel for unknown algebra tags or table rows, ParseError for
    malformed partition text and BadPartition when the partition does not
    belong to the family.
    """
    s = str(text).strip()
    tag, sep, key = s.partition(":")
    if not sep:
        raise UnknownLabel(f"label {text!r} needs the form ALGEBRA:KEY")
    algebra = parse_algebra(tag)
    if algebra.is_classical:
        d = parse_partition(key)
        return OrbitLabel(algebra, d)
    m = re.fullmatch(r"[rR](\d+)", key.strip())
    if not m:
        raise UnknownLabel(f"exceptional key {key!r} must look like r07")
    return OrbitLabel(algebra, int(m.group(1)))


@dataclass(frozen=True)
class Factor:
    kind: str  # "GL", "Sp" or "O"
    size: int  # r_i(d)
    exponent: int  # i, the diagonal-embedding exponent

    def __str__(self):
        return f"{self.kind}{self.size}^{self.exponent}"


@dataclass(frozen=True)
class CentralizerStructure:
    """Formal product of classical groups describing Z_G(X, E, Y)."""

    factors: Tuple[Factor, ...]
    det_constrained: bool = False
    double_cover: bool = False
    family: str = ""

    def kinds(self, kind):
        return [f for f in self.factors if f.kind == kind]

    def total(self):
        return sum(f.size * f.exponent for f in self.factors)

    def __str__(self):
        body = " x ".join(str(f) for f in self.factors) or "1"
        if self.det_constrained:
            body = f"S({body})"
        if self.double_cover:
            body = f"2.{body}"
        return body


@dataclass(frozen=True)
class ComponentGroupInfo:
    description: str  # "Trivial", "Z2", "S3", "Z<k>", "(Z2)^<k>" or "Unknown"
    splits: Optional[bool] = None

    def to_json(self):
        return {"description": self.description, "splits": self.splits}


def springer_steinberg(algebra, d):
    """Centralizer of an sl2-triple through the orbit labelled by ``d``."""
    if not algebra.is_classical:
        raise NotClassical(f"{algebra} is not classical")
    if not algebra.contains(d):
        raise BadPartition(f"{d} does not label an orbit of {algebra}")
    mult = d.multiplicities()
    fam = algebra.family
    if fam == "A":
        factors = tuple(Factor("GL", r, i) for i, r in mult.items())
        return CentralizerStructure(factors, det_constrained=True, family=fam)
    if fam == "C":
        factors = tuple(Factor("Sp" if i % 2 else "O", r, i) for i, r in mult.items())
        return CentralizerStructure(factors, family=fam)
    factors = tuple(Factor("O" if i % 2 else "Sp", r, i) for i, r in mult.items())
    return CentralizerStructure(factors, det_constrained=True, double_cover=True, family=fam)


def center_dim(c):
    """Dimension of the centre of the Lie algebra of ``c``.

    Sp and O_k (k != 2) factors have no centre; O_2 contributes so_2; the GL
    block contributes one dimension per factor, minus one for a determinant
    constraint that involves a GL factor.
    """
    n_gl = len(c.kinds("GL"))
    gl_part = n_gl - 1 if (c.det_constrained and n_gl) else n_gl
    return gl_part + sum(1 for f in c.kinds("O") if f.size == 2)


def component_group(c):
    """Component group of the centralizer as far as the factor kinds determine it.

    Type A: the character ``prod det(A_i)^i`` has kernel with ``gcd(i)`` components.
    Type C: one Z2 per orthogonal factor.  Types B/D (inside SO_n): the odd O
    factors modulo the determinant condition.
    """
    if c.family == "A":
        g = 0
        for f in c.factors:
            g = gcd(g, f.exponent)
        return ComponentGroupInfo(_cyclic(g))
    n_o = len(c.kinds("O"))
    if c.family == "C":
        return ComponentGroupInfo(_elementary(n_o), splits=True)
    return ComponentGroupInfo(_elementary(max(n_o - 1, 0)))


def _cyclic(g):
    return "Trivial" if g <= 1 else f"Z{g}"


def _elementary(k):
    if k == 0:
        return "Trivial"
    return "Z2" if k == 1 else f"(Z2)^{k}"


def classical_orbits(algebra):
    if not algebra.is_classical:
        raise NotClassical(f"{algebra} is not classical")
    n = algebra.n
    parts = {"A": enumerate_P, "C": enumerate_Pminus1}.get(algebra.family, enumerate_P1)(n)
    return [OrbitLabel(algebra, d) for d in parts]


def exceptional_row(label):
    if label.algebra.is_classical:
        raise NotExceptional(f"{label} is classical")
    return exceptional.rows(label.algebra.family)[label.key - 1]


def exceptional_orbits(algebra):
    """Table rows of an exceptional algebra as (label, centralizer, component group) triples."""
    if algebra.is_classical:
        raise NotExceptional(f"{algebra} is classical")
    out = []
    for row in exceptional.rows(algebra.family):
        info = ComponentGroupInfo(row.component_group, row.splits)
        out.append((OrbitLabel(algebra, row.row), row.centralizer, info))
    return out


def orbits(algebra):
    """Every orbit label of ``algebra``."""
    if algebra.is_classical:
        return classical_orbits(algebra)
    return [lab for lab, _, _ in exceptional_orbits(algebra)]

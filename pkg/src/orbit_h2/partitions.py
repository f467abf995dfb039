"""Integer partitions and the parity-restricted sets that label classical orbits.

Partitions are stored with parts in nondecreasing order, ``d_1 <= d_2 <= ...``.
``P1(n)`` (orthogonal labels) requires every even part to occur an even number
of times; ``Pminus1(2n)`` (symplectic labels) requires the same of odd parts.
"""

from collections import Counter
from functools import total_ordering

from .errors import OddTotal, ParseError

__all__ = [
    "Partition",
    "parse_partition",
    "multiplicity",
    "distinct_count",
    "enumerate_P",
    "enumerate_P1",
    "enumerate_Pminus1",
    "in_P1",
    "in_Pminus1",
]


@total_ordering
class Partition:
    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(sorted(int(p) for p in parts))
        if not parts:
            raise ValueError("a partition needs at least one part")
        if parts[0] < 1:
            raise ValueError(f"parts must be positive, got {parts}")
        self.parts = parts

    @property
    def total(self):
        return sum(self.parts)

    def multiplicities(self):
        """Mapping part -> r_part, in increasing part order."""
        return dict(sorted(Counter(self.parts).items()))

    def distinct_parts(self):
        return sorted(set(self.parts))

    def is_zero_orbit(self):
        return self.parts[-1] == 1

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, k):
        return self.parts[k]

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, (list, tuple)):
            return self.parts == tuple(other)
        return NotImplemented

    def __lt__(self, other):
        return self.parts < other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def __str__(self):
        return "[" + ",".join(map(str, self.parts)) + "]"


def parse_partition(text):
    """Parse ``"1,2,2,3"`` or ``"[3,2,2,1]"``; parts may come in any order."""
    s = str(text).strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    try:
        parts = [int(x) for x in s.split(",")]
    except ValueError:
        raise ParseError(f"malformed partition {text!r}") from None
    if not parts or any(p < 1 for p in parts):
        raise ParseError(f"partition parts must be positive integers: {text!r}")
    return Partition(parts)


def multiplicity(d, m):
    """r_m(d): how many parts of ``d`` equal ``m``."""
    if m < 1:
        raise ValueError("m must be positive")
    return sum(1 for p in d if p == m)


def distinct_count(d):
    """|d|, the number of distinct parts."""
    return len(set(d))


def _generate(n, smallest, allowed_mult):
    # yields nondecreasing part tuples in lexicographic order
    if n == 0:
        yield ()
        return
    for first in range(smallest, n + 1):
        max_count = n // first
        for count in range(max_count, 0, -1):
            # larger counts of the smallest part come first lexicographically
            if not allowed_mult(first, count):
                continue
            rest = n - first * count
            if rest == 0:
                yield (first,) * count
                continue
            for tail in _generate(rest, first + 1, allowed_mult):
                yield (first,) * count + tail


def enumerate_P(n):
    """All partitions of ``n`` in lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    return [Partition(p) for p in _generate(n, 1, lambda part, count: True)]


def enumerate_P1(n):
    """Partitions of ``n`` whose even parts have even multiplicity (built directly)."""
    if n < 1:
        raise ValueError("n must be positive")
    return [Partition(p) for p in _generate(n, 1, lambda part, count: part % 2 or count % 2 == 0)]


def enumerate_Pminus1(n):
    """Partitions of even ``n`` whose odd parts have even multiplicity (built directly)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n % 2:
        raise OddTotal(f"Pminus1 needs an even total, got {n}")
    return [
        Partition(p) for p in _generate(n, 1, lambda part, count: part % 2 == 0 or count % 2 == 0)
    ]


def in_P1(d):
    return all(r % 2 == 0 for m, r in Counter(d).items() if m % 2 == 0)


def in_Pminus1(d):
    if sum(d) % 2:
        raise OddTotal(f"{d} partitions an odd integer")
    return all(r % 2 == 0 for m, r in Counter(d).items() if m % 2 == 1)

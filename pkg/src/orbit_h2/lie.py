"""Matrix models of the classical Lie algebras and their sl2-triples.

An algebra is ``sl_n`` (traceless matrices) or the Lie algebra of a
nondegenerate bilinear form ``F``::

    g = {M : M^T F + F M = 0}

with ``F`` symmetric (so_n, families B and D) or alternating (sp_n, family C).

Canonical forms are antidiagonal: the symmetric one has ``F[i, n-1-i] = 1``;
the alternating one has ``F[i, n-1-i] = 1`` for ``i < n/2`` and ``-1`` for
``i >= n/2``.

Nilpotent representatives are assembled block by block from irreducible sl2
modules.  On the block of size ``k`` with weight basis ``v_0..v_{k-1}``::

    E v_j = (k-1-2j) v_j,   Y v_j = v_{j+1},   X v_j = j(k-j) v_{j-1},

and the invariant pairing is ``<v_a, v_{k-1-a}> = (-1)^a`` (symmetric for odd
``k``, alternating for even ``k``).  Blocks whose pairing has the wrong
symmetry for the family are paired with a second copy of the same size
instead.  The resulting partition-adapted form is a signed permutation
matrix; :func:`congruence` moves everything to any other such form.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import isqrt
from typing import Optional

from .catalog import AlgebraType
from .errors import BadPartition, BadSpec, NotInAlgebra
from .partitions import in_P1, in_Pminus1
from .exact import I, ExactMatrix, inverse, nullspace

__all__ = [
    "LieAlgebraSpec",
    "SL2Triple",
    "Block",
    "canonical_form",
    "canonical_spec",
    "partition_spec",
    "block_layout",
    "algebra_basis",
    "triple_from_partition",
    "ad_matrix",
    "killing_form",
    "witt_basis",
    "congruence",
    "to_canonical",
]


@dataclass(frozen=True)
class LieAlgebraSpec:
    family: str
    n: int
    form: Optional[ExactMatrix] = None

    def __post_init__(self):
        if self.family not in ("A", "B", "C", "D"):
            raise BadSpec(f"unknown family {self.family!r}")
        if self.family == "A":
            if self.form is not None:
                raise BadSpec("sl_n carries no form")
            return
        if self.form is None or self.form.shape != (self.n, self.n):
            raise BadSpec(f"family {self.family} needs an {self.n}x{self.n} form")
        if self.family == "C" and self.n % 2:
            raise BadSpec("sp_n needs even n")
        if self.family == "B" and self.n % 2 == 0 or self.family == "D" and self.n % 2:
            raise BadSpec(f"parity of n={self.n} does not match family {self.family}")
        sign = -1 if self.family == "C" else 1
        if self.form.T != self.form.scale(sign):
            raise BadSpec("form has the wrong symmetry for the family")
        if self.form.det() == 0:
            raise BadSpec("form is degenerate")

    # the linear conditions cutting g out of gl_n, one row per condition
    @cached_property
    def _equations(self):
        n = self.n
        if self.family == "A":
            row = [0] * (n * n)
            for i in range(n):
                row[i * n + i] = 1
            return [row]
        F = self.form
        rows = []
        for i in range(n):
            for j in range(i, n):
                row = [0] * (n * n)
                for k in range(n):
                    # (M^T F)_{ij} = sum_k M_{ki} F_{kj};  (F M)_{ij} = sum_k F_{ik} M_{kj}
                    row[k * n + i] += F[k, j]
                    row[k * n + j] += F[i, k]
                if any(row):
                    rows.append(row)
        return rows

    @cached_property
    def _basis_and_coords(self):
        vectors, free = nullspace(self._equations, self.n * self.n)
        return [ExactMatrix(self.n, self.n, v) for v in vectors], free

    @property
    def basis(self):
        return self._basis_and_coords[0]

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, M):
        if M.shape != (self.n, self.n):
            return False
        if self.family == "A":
            return M.trace() == 0
        return (M.T @ self.form + self.form @ M).is_zero()

    def residual(self, M):
        """``M^T F + F M``; for sl_n the 1x1 matrix holding the trace."""
        if self.family == "A":
            return ExactMatrix(1, 1, [M.trace()])
        return M.T @ self.form + self.form @ M

    def coordinates(self, M, check=True):
        """Coordinates of ``M`` in :attr:`basis`."""
        if check and not self.contains(M):
            raise NotInAlgebra(f"matrix is not in {self}")
        _, free = self._basis_and_coords
        e = M.entries
        return [e[k] for k in free]

    def from_coordinates(self, coords):
        n = self.n
        out = [0] * (n * n)
        for c, b in zip(coords, self.basis):
            if c == 0:
                continue
            for k, x in enumerate(b.entries):
                if x != 0:
                    out[k] += c * x
        return ExactMatrix(n, n, out)

    def __str__(self):
        name = {"A": "sl", "B": "so", "C": "sp", "D": "so"}[self.family]
        return f"{name}_{self.n}"


@dataclass(frozen=True)
class SL2Triple:
    X: ExactMatrix
    E: ExactMatrix
    Y: ExactMatrix

    def relations_hold(self):
        X, E, Y = self.X, self.E, self.Y
        return E.bracket(X) == X.scale(2) and E.bracket(Y) == Y.scale(-2) and X.bracket(Y) == E

    def members(self):
        return (self.X, self.E, self.Y)

    def conjugate(self, P, P_inv=None):
        P_inv = P.inverse() if P_inv is None else P_inv
        return SL2Triple(*(P_inv @ M @ P for M in self.members()))


@dataclass(frozen=True)
class Block:
    offset: int
    size: int
    partner: Optional[int] = None  # index of the paired block, if any


def canonical_form(family, n):
    if family == "A":
        return None
    out = [0] * (n * n)
    for i in range(n):
        out[i * n + n - 1 - i] = -1 if family == "C" and i >= n // 2 else 1
    return ExactMatrix(n, n, out)


def canonical_spec(algebra):
    """Spec of a classical algebra with the canonical antidiagonal form."""
    if isinstance(algebra, str):
        from .catalog import parse_algebra

        algebra = parse_algebra(algebra)
    n = algebra.n
    return LieAlgebraSpec(algebra.family, n, canonical_form(algebra.family, n))


def block_layout(family, d):
    """Blocks for the parts of ``d`` in order; mismatched-parity blocks are paired."""
    blocks = []
    offset = 0
    pending = {}
    for size in d:
        needs_pair = (family == "C" and size % 2 == 1) or (family in ("B", "D") and size % 2 == 0)
        idx = len(blocks)
        partner = None
        if needs_pair:
            if size in pending:
                partner = pending.pop(size)
                blocks[partner] = Block(blocks[partner].offset, size, idx)
            else:
                pending[size] = idx
        blocks.append(Block(offset, size, partner))
        offset += size
    if pending:
        raise BadPartition(f"{d} cannot carry an invariant {family} form")
    return blocks


def _block_triple(k):
    E = ExactMatrix.diag([k - 1 - 2 * j for j in range(k)])
    y = [0] * (k * k)
    x = [0] * (k * k)
    for j in range(k - 1):
        y[(j + 1) * k + j] = 1
        x[j * k + j + 1] = (j + 1) * (k - j - 1)
    return ExactMatrix(k, k, x), E, ExactMatrix(k, k, y)


def _partition_form(family, blocks, n):
    out = [0] * (n * n)
    eps = -1 if family == "C" else 1
    for idx, b in enumerate(blocks):
        k = b.size
        if b.partner is None:
            for a in range(k):
                out[(b.offset + a) * n + b.offset + k - 1 - a] = (-1) ** a
        elif b.partner > idx:
            q = blocks[b.partner]
            for a in range(k):
                i, j = b.offset + a, q.offset + k - 1 - a
                out[i * n + j] = (-1) ** a
                out[j * n + i] = eps * (-1) ** a
    return ExactMatrix(n, n, out)


def _check_partition(family, n, d):
    if sum(d) != n:
        raise BadPartition(f"{d} does not partition {n}")
    if family == "C" and not in_Pminus1(d) or family in ("B", "D") and not in_P1(d):
        raise BadPartition(f"{d} does not label an orbit of {family}")


def partition_spec(family, d):
    """Spec whose form is the block form adapted to ``d`` (``family`` may be an AlgebraType)."""
    if isinstance(family, AlgebraType):
        family = family.family
    n = sum(d)
    _check_partition(family, n, d)
    if family == "A":
        return LieAlgebraSpec("A", n)
    return LieAlgebraSpec(family, n, _partition_form(family, block_layout(family, d), n))


def _raw_triple(family, d):
    blocks = block_layout(family, d) if family != "A" else [Block(o, s) for o, s in _offsets(d)]
    parts = [_block_triple(b.size) for b in blocks]
    return SL2Triple(*(ExactMatrix.block_diag([p[k] for p in parts]) for k in range(3))), blocks


def _offsets(d):
    offset = 0
    for s in d:
        yield offset, s
        offset += s


def algebra_basis(spec):
    return list(spec.basis)


def triple_from_partition(spec, d):
    """sl2-triple in ``spec`` whose nil-positive element has Jordan type ``d``."""
    _check_partition(spec.family, spec.n, d)
    triple, blocks = _raw_triple(spec.family, d)
    if spec.family == "A":
        return triple
    source = _partition_form(spec.family, blocks, spec.n)
    if source != spec.form:
        P = congruence(source, spec.form, spec.family)
        triple = triple.conjugate(P)
    return triple


def ad_matrix(spec, M, check=True):
    """Matrix of ``Z -> [M, Z]`` in the basis of ``spec``."""
    if check and not spec.contains(M):
        raise NotInAlgebra(f"matrix is not in {spec}")
    cols = [spec.coordinates(M.bracket(b), check=False) for b in spec.basis]
    return ExactMatrix.from_columns(cols) if cols else ExactMatrix.zeros(0)


def killing_form(spec, M1, M2):
    """``trace(ad M1 . ad M2)``."""
    A = ad_matrix(spec, M1)
    B = ad_matrix(spec, M2)
    n = A.rows
    return sum((A[i, j] * B[j, i] for i in range(n) for j in range(n) if A[i, j] != 0), 0)


def _unit_scale(c):
    # s with s^2 * c == 1, for c = +-1 or +-(rational square)
    if getattr(c, "imag", 0) != 0:
        raise BadSpec("self-paired form entries must be real")
    c = Fraction(c.real)
    a = abs(c)
    num, den = isqrt(a.numerator), isqrt(a.denominator)
    if num * num != a.numerator or den * den != a.denominator:
        raise BadSpec(f"cannot normalise diagonal entry {c} over Q(i)")
    root = Fraction(den, num)
    return root if c > 0 else I * root


def witt_basis(F, family):
    """P with ``P^T F P`` equal to the canonical form, for signed-monomial ``F``."""
    n = F.rows
    partner = []
    for i in range(n):
        nz = [j for j in range(n) if F[i, j] != 0]
        if len(nz) != 1:
            raise BadSpec("witt_basis needs a form with one nonzero entry per row")
        partner.append(nz[0])
    unit = [[1 if k == i else 0 for k in range(n)] for i in range(n)]
    hyperbolic, aniso = [], []
    for i in range(n):
        j = partner[i]
        if j == i:
            if family == "C":
                raise BadSpec("alternating form with a diagonal entry")
            s = _unit_scale(F[i, i])
            aniso.append([s * x for x in unit[i]])
        elif i < j:
            inv = inverse(F[i, j])
            hyperbolic.append((unit[i], [inv * x for x in unit[j]]))
    half = inverse(2)
    for u, w in zip(aniso[0::2], aniso[1::2]):
        e = [a + I * b for a, b in zip(u, w)]
        f = [(a - I * b) * half for a, b in zip(u, w)]
        hyperbolic.append((e, f))
    middle = aniso[-1] if len(aniso) % 2 else None
    cols = [None] * n
    for k, (e, f) in enumerate(hyperbolic):
        cols[k] = e
        cols[n - 1 - k] = f
    if middle is not None:
        cols[n // 2] = middle
    P = ExactMatrix.from_columns(cols)
    if P.T @ F @ P != canonical_form(family, n):
        raise BadSpec("form could not be brought to canonical shape")  # pragma: no cover
    return P


def congruence(source, target, family):
    """P with ``P^T source P == target``; then ``M -> P^-1 M P`` maps g(source) onto g(target)."""
    Ps = witt_basis(source, family)
    Pt = witt_basis(target, family)
    return Ps @ Pt.inverse()


def to_canonical(spec):
    """(canonical spec, P) with ``M -> P^-1 M P`` carrying ``spec`` onto the canonical spec."""
    if spec.family == "A":
        return spec, ExactMatrix.identity(spec.n)
    target = canonical_form(spec.family, spec.n)
    P = congruence(spec.form, target, spec.family)
    return LieAlgebraSpec(spec.family, spec.n, target), P

"""Brute-force checks of the classification by exact linear algebra.

For a classical label the oracle builds an explicit sl2-triple, computes
``Z_g(X, E, Y)`` and its centre as two kernel solves, and then looks for the
component-group elements the proofs rely on: determinant flips that swap the
two summands of an isotypic pair of multiplicity two, corrected by signs on
other blocks so that the element stays in the group.  The invariant part of
the centre under the flips found is compared with the H^2 formulas.

Absence of a flip is certified only relative to this generator set.
"""

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .catalog import AlgebraType, OrbitLabel, center_dim, classical_orbits, springer_steinberg
from .cohomology import h2
from .errors import NoFlipExists, NotClosed, NotInAlgebra
from .exact import ExactMatrix, kernel_basis, rank, solve_in_span
from .lie import LieAlgebraSpec, ad_matrix, block_layout, partition_spec, triple_from_partition

__all__ = [
    "SubalgebraBasis",
    "centralizer_algebra",
    "center_of",
    "orbit_dim",
    "CenterReport",
    "verify_ss_center",
    "FlipReport",
    "flip_action_check",
    "VerifyReport",
    "verify_label",
    "sweep",
    "default_max_rank",
]


@dataclass(frozen=True)
class SubalgebraBasis:
    ambient: LieAlgebraSpec
    vectors: Tuple[ExactMatrix, ...]
    closed: bool = False  # known to be bracket-closed by construction

    @property
    def dim(self):
        return len(self.vectors)

    def coordinates(self):
        return [self.ambient.coordinates(v, check=False) for v in self.vectors]

    def contains(self, M):
        if not self.ambient.contains(M):
            return False
        return solve_in_span(self.coordinates(), self.ambient.coordinates(M, check=False)) is not None

    def is_bracket_closed(self):
        coords = self.coordinates()
        brackets = [
            self.ambient.coordinates(a.bracket(b), check=False)
            for a, b in itertools.combinations(self.vectors, 2)
        ]
        if not brackets:
            return True
        return rank(coords + brackets) == rank(coords) if coords else not any(map(any, brackets))


def centralizer_algebra(spec, elems):
    """``{Z in g : [Z, s] = 0 for all s in elems}`` via the stacked ad matrices."""
    elems = list(elems)
    for s in elems:
        if not spec.contains(s):
            raise NotInAlgebra("centralizer_algebra needs elements of the algebra")
    if not elems:
        return SubalgebraBasis(spec, tuple(spec.basis), closed=True)
    rows = []
    for s in elems:
        rows.extend(ad_matrix(spec, s, check=False).tolist())
    vectors = kernel_basis(rows, spec.dim)
    return SubalgebraBasis(spec, tuple(spec.from_coordinates(v) for v in vectors), closed=True)


def center_of(sub):
    """Centre of a subalgebra: solve ``sum_i c_i [z_i, z_j] = 0`` for every j."""
    if not sub.closed and not sub.is_bracket_closed():
        raise NotClosed("span is not closed under the bracket")
    k = sub.dim
    if k == 0:
        return SubalgebraBasis(sub.ambient, (), closed=True)
    spec = sub.ambient
    brackets = {}
    for i, j in itertools.combinations(range(k), 2):
        brackets[i, j] = spec.coordinates(sub.vectors[i].bracket(sub.vectors[j]), check=False)
    rows = []
    zero = [0] * spec.dim
    for j in range(k):
        cols = []
        for i in range(k):
            if i == j:
                cols.append(zero)
            elif i < j:
                cols.append(brackets[i, j])
            else:
                cols.append([-x for x in brackets[j, i]])
        for p in range(spec.dim):
            row = [cols[i][p] for i in range(k)]
            if any(row):
                rows.append(row)
    if not rows:
        return SubalgebraBasis(spec, sub.vectors, closed=True)
    coeffs = kernel_basis(rows, k)
    vectors = []
    for c in coeffs:
        coords = [0] * spec.dim
        for ci, v in zip(c, sub.coordinates()):
            if ci != 0:
                coords = [a + ci * b for a, b in zip(coords, v)]
        vectors.append(spec.from_coordinates(coords))
    return SubalgebraBasis(spec, tuple(vectors), closed=True)


def orbit_dim(spec, X):
    """dim g - dim Z_g(X)."""
    return spec.dim - centralizer_algebra(spec, [X]).dim


def _triple_setup(algebra, d):
    spec = partition_spec(algebra.family, d)
    triple = triple_from_partition(spec, d)
    return spec, triple


@dataclass(frozen=True)
class CenterReport:
    label: str
    predicted: int
    oracle: int
    centralizer_dim: int

    @property
    def passed(self):
        return self.predicted == self.oracle


def verify_ss_center(algebra, d, _cache=None):
    """Compare the centre of Z_g(X, E, Y) with the Springer-Steinberg prediction."""
    spec, triple = _triple_setup(algebra, d)
    cent = centralizer_algebra(spec, triple.members())
    center = center_of(cent)
    if _cache is not None:
        _cache.update(spec=spec, triple=triple, centralizer=cent, center=center)
    predicted = center_dim(springer_steinberg(algebra, d))
    return CenterReport(str(OrbitLabel(algebra, d)), predicted, center.dim, cent.dim)


@dataclass
class FlipReport:
    m: int
    witness: Optional[ExactMatrix]
    searched: int
    preserves_form: bool
    commutes: bool
    det: int
    in_center: bool
    negates_summand: bool
    action: List[list] = field(default_factory=list)  # Ad(g) on the centre basis

    @property
    def passed(self):
        return self.preserves_form and self.commutes and self.det == 1 and self.in_center and self.negates_summand


def _signed_swap(n, blocks, a, b, signs):
    g = [0] * (n * n)
    A, B = blocks[a], blocks[b]
    for k in range(A.size):
        i, j = A.offset + k, B.offset + k
        g[j * n + i] = 1
        g[i * n + j] = 1
    for idx, blk in enumerate(blocks):
        if idx in (a, b):
            continue
        for k in range(blk.size):
            p = blk.offset + k
            g[p * n + p] = signs.get(idx, 1)
    return ExactMatrix(n, n, g)


def _so2_summand(n, blocks, a, b):
    z = [0] * (n * n)
    A, B = blocks[a], blocks[b]
    for k in range(A.size):
        i, j = A.offset + k, B.offset + k
        z[j * n + i] = 1
        z[i * n + j] = -1
    return ExactMatrix(n, n, z)


def _action_on(center, g):
    spec = center.ambient
    g_inv = g.T  # signed permutation
    basis = center.coordinates()
    action = []
    for z in center.vectors:
        image = spec.coordinates(g @ z @ g_inv, check=False)
        coeffs = solve_in_span(basis, image)
        if coeffs is None:
            raise AssertionError("Ad(g) does not preserve the centre")
        action.append(coeffs)
    # columns are images of basis vectors
    return [[action[j][i] for j in range(len(action))] for i in range(len(action))]


def flip_action_check(algebra, d, m, _cache=None):
    """Find a determinant flip on the O_2 factor of part ``m`` and test its action.

    Candidates are the block swap of the two summands of size ``m`` composed
    with every choice of signs on the other blocks, fewest sign changes first.
    A candidate must preserve the form, commute with the triple and have
    determinant one.  Raises NoFlipExists when no candidate qualifies.
    """
    if _cache and "center" in _cache:
        spec, triple, center = _cache["spec"], _cache["triple"], _cache["center"]
    else:
        cache = {}
        verify_ss_center(algebra, d, cache)
        spec, triple, center = cache["spec"], cache["triple"], cache["center"]
    blocks = block_layout(algebra.family, d)
    pair = [k for k, b in enumerate(blocks) if b.size == m]
    if len(pair) != 2 or any(blocks[k].partner is not None for k in pair):
        raise ValueError(f"part {m} must occur exactly twice, as unpaired blocks, in {d}")
    a, b = pair
    others = [k for k in range(len(blocks)) if k not in pair]
    n = spec.n
    searched = 0
    witness = None
    for count in range(len(others) + 1):
        for flipped in itertools.combinations(others, count):
            searched += 1
            # determinant of a signed block swap, before building the matrix
            det = (-1) ** m
            for k in flipped:
                det *= (-1) ** blocks[k].size
            if det != 1:
                continue
            g = _signed_swap(n, blocks, a, b, {k: -1 for k in flipped})
            if spec.form is not None and g.T @ spec.form @ g != spec.form:
                continue
            if any(g @ M != M @ g for M in triple.members()):
                continue
            witness = g
            break
        if witness is not None:
            break
    if witness is None:
        raise NoFlipExists(f"no determinant-one flip for part {m} of {d}", searched=searched)
    g = witness
    preserves = spec.form is None or g.T @ spec.form @ g == spec.form
    commutes = all(g @ M == M @ g for M in triple.members())
    det = g.det()
    z = _so2_summand(n, blocks, a, b)
    if algebra.family == "A":
        in_center, negates = True, True
    else:
        in_center = spec.contains(z) and center.contains(z)
        negates = g @ z @ g.T == -z
    return FlipReport(m, g, searched, preserves, commutes, int(det), in_center, negates, _action_on(center, g))


def _flip_parts(algebra, d):
    mult = d.multiplicities()
    fam = algebra.family
    if fam == "C":
        return [m for m, r in mult.items() if r == 2 and m % 2 == 0]
    if fam in ("B", "D"):
        return [m for m, r in mult.items() if r == 2 and m % 2 == 1]
    return [m for m, r in mult.items() if r == 2]


def _fixed_dim(center_dim_, actions):
    if center_dim_ == 0:
        return 0
    rows = []
    for act in actions:
        for i in range(center_dim_):
            rows.append([act[i][j] - (1 if i == j else 0) for j in range(center_dim_)])
    if not rows:
        return center_dim_
    return len(kernel_basis(rows, center_dim_))


@dataclass
class VerifyReport:
    label: str
    predicted_center: int
    oracle_center: int
    predicted_h2: int
    oracle_invariant: int
    flips: dict = field(default_factory=dict)  # part -> "found" | "absent"
    flips_as_expected: bool = True
    witnesses_ok: bool = True

    @property
    def passed(self):
        return (
            self.predicted_center == self.oracle_center
            and self.predicted_h2 == self.oracle_invariant
            and self.flips_as_expected
            and self.witnesses_ok
        )

    def to_json(self):
        return {
            "label": self.label,
            "predicted_center": self.predicted_center,
            "oracle_center": self.oracle_center,
            "predicted_h2": self.predicted_h2,
            "oracle_invariant": self.oracle_invariant,
            "flips": {str(k): v for k, v in self.flips.items()},
            "pass": self.passed,
        }


def _flip_expected(algebra, d, m):
    # type A: a swap may or may not fit in SL_n; either way it must act trivially
    if algebra.family == "A":
        return None
    # the only case without a flip: B/D with a single odd part value of multiplicity 2
    if algebra.family in ("B", "D"):
        odd = [p for p in d.multiplicities() if p % 2]
        return odd != [m]
    return True


def verify_label(algebra, d):
    """Full oracle run for one classical label."""
    cache = {}
    center_report = verify_ss_center(algebra, d, cache)
    center = cache["center"]
    predicted_h2 = h2(OrbitLabel(algebra, d)).dim
    report = VerifyReport(
        center_report.label, center_report.predicted, center_report.oracle, predicted_h2, center.dim
    )
    actions = []
    for m in _flip_parts(algebra, d):
        expected = _flip_expected(algebra, d, m)
        try:
            fr = flip_action_check(algebra, d, m, cache)
        except NoFlipExists:
            report.flips[m] = "absent"
            report.flips_as_expected &= expected is not True
            continue
        report.flips[m] = "found"
        report.flips_as_expected &= expected is not False
        report.witnesses_ok &= fr.passed
        actions.append(fr.action)
    report.oracle_invariant = _fixed_dim(center.dim, actions)
    return report


def default_max_rank(family):
    """Rank cutoffs matching the acceptance sweeps (sl_7, sp_8, so_7, so_8)."""
    return {"A": 6, "B": 3, "C": 4, "D": 4}[family]


def _labels(family, min_rank, max_rank):
    out = []
    for r in range(min_rank, max_rank + 1):
        out.extend(classical_orbits(AlgebraType(family, r)))
    return out


def _verify_one(label):
    return verify_label(label.algebra, label.partition)


def sweep(family, max_rank=None, min_rank=None, workers=None):
    """Yield VerifyReports for every label of ``family`` up to ``max_rank``, in label order.

    ``workers`` defaults to the ORBIT_H2_THREADS environment variable (or 1).
    """
    from .catalog import _MIN_RANK

    max_rank = default_max_rank(family) if max_rank is None else max_rank
    min_rank = _MIN_RANK[family] if min_rank is None else min_rank
    labels = _labels(family, min_rank, max_rank)
    if workers is None:
        workers = int(os.environ.get("ORBIT_H2_THREADS", "1") or 1)
    if workers <= 1:
        for lab in labels:
            yield _verify_one(lab)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_verify_one, labels)

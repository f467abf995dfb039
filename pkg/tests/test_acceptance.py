"""Acceptance gate: one test per criterion, summarised at the end of the run."""

import random
import time

import numpy as np

from orbit_h2.catalog import AlgebraType, classical_orbits, exceptional_orbits
from orbit_h2.cohomology import h2, h2_so
from orbit_h2.exact import ExactMatrix, I, Poly, all_roots_real, minimal_polynomial
from orbit_h2.exact.matrix import rank
from orbit_h2.jordan import jordan_chevalley, kk_verdict
from orbit_h2.lie import canonical_spec, partition_spec, triple_from_partition
from orbit_h2.oracle import flip_action_check, verify_label
from orbit_h2.partitions import distinct_count

from conftest import random_fraction, random_gaussian, random_rational_matrix


def _labels(family, ranks):
    out = []
    for r in ranks:
        out.extend(classical_orbits(AlgebraType(family, r)))
    return out


def _parts_with_multiplicity_two(d, parity):
    return [m for m, r in d.multiplicities().items() if r == 2 and m % 2 == parity]


def test_criterion_1_type_a_center():
    start = time.monotonic()
    labels = _labels("A", range(2, 7))  # sl_3 .. sl_7
    assert sum(1 for lab in labels if lab.algebra.n == 7) == 15
    for lab in labels:
        report = verify_label(lab.algebra, lab.partition)
        assert report.oracle_center == distinct_count(lab.partition) - 1, report.to_json()
        assert report.passed, report.to_json()
    assert time.monotonic() - start < 120


def test_criterion_2_type_c_vanishing():
    start = time.monotonic()
    labels = _labels("C", range(1, 5))  # sp_2 .. sp_8
    for lab in labels:
        d = lab.partition
        report = verify_label(lab.algebra, d)
        evens = _parts_with_multiplicity_two(d, 0)
        assert report.oracle_center == len(evens), report.to_json()
        for m in evens:
            flip = flip_action_check(lab.algebra, d, m)
            assert flip.passed and flip.negates_summand
        assert report.oracle_invariant == 0 == h2(lab).dim, report.to_json()
        assert report.passed
    assert time.monotonic() - start < 300


def test_criterion_3_types_bd():
    start = time.monotonic()
    labels = _labels("B", range(2, 4)) + _labels("D", range(2, 5))  # so_4 .. so_8
    assert sorted({lab.algebra.n for lab in labels}) == [4, 5, 6, 7, 8]
    single_odd_cases = 0
    for lab in labels:
        d = lab.partition
        report = verify_label(lab.algebra, d)
        odds = _parts_with_multiplicity_two(d, 1)
        assert report.oracle_center == len(odds), report.to_json()
        expected_h2 = h2_so(d)
        if expected_h2 == 1:
            single_odd_cases += 1
            assert set(report.flips.values()) == {"absent"}
        else:
            assert "absent" not in report.flips.values()
        assert report.oracle_invariant == expected_h2, report.to_json()
        assert report.passed
    assert single_odd_cases > 0
    assert time.monotonic() - start < 600


def test_criterion_4_exceptional_table():
    counts = {"G2": 4, "F4": 15, "E6": 20, "E7": 44, "E8": 69}
    for family, count in counts.items():
        rows = exceptional_orbits(AlgebraType(family))
        assert len(rows) == count
        dims = [h2(lab).dim for lab, _, _ in rows]
        if family == "E6":
            assert dims.count(1) == 9 and dims.count(0) == 11
        else:
            assert set(dims) == {0}


def _jordan_type_ok(X, d):
    n = X.rows
    power = ExactMatrix.identity(n)
    for k in range(1, max(d) + 1):
        power = power @ X
        if rank(power) != sum(max(p - k, 0) for p in d):
            return False
    return power.is_zero()


def test_criterion_5_triples():
    labels = _labels("A", range(2, 7)) + _labels("C", range(1, 5))
    labels += _labels("B", range(2, 4)) + _labels("D", range(2, 5))
    for lab in labels:
        d = lab.partition
        spec = partition_spec(lab.algebra, d)
        triple = triple_from_partition(spec, d)
        X, E, Y = triple.members()
        assert E.bracket(X) == 2 * X
        assert E.bracket(Y) == -2 * Y
        assert X.bracket(Y) == E
        assert _jordan_type_ok(X, d)
        for M in triple.members():
            assert spec.residual(M).is_zero()
        if lab.algebra.family != "A":
            canon = canonical_spec(lab.algebra)
            moved = triple_from_partition(canon, d)
            assert moved.relations_hold()
            assert all(canon.residual(M).is_zero() for M in moved.members())
            assert _jordan_type_ok(moved.X, d)


def test_criterion_6_jordan_chevalley():
    start = time.monotonic()
    rng = random.Random(6)
    for _ in range(50):
        M = random_rational_matrix(rng, 5)
        S, N = jordan_chevalley(M)
        assert S + N == M
        assert S @ N == N @ S
        assert (N**5).is_zero()
        q = minimal_polynomial(S)
        assert q.gcd(q.derivative()).degree == 0
    assert time.monotonic() - start < 60


def _random_nilpotent(rng):
    family, r = rng.choice([("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 2), ("C", 3), ("D", 3), ("D", 4)])
    algebra = AlgebraType(family, r)
    lab = rng.choice([x for x in classical_orbits(algebra) if not x.partition.is_zero_orbit()])
    spec = canonical_spec(algebra)
    triple = triple_from_partition(spec, lab.partition)
    # conjugate by exp(sY), a unipotent element of the group, then rescale
    s = random_fraction(rng)
    g = ExactMatrix.identity(spec.n)
    term = ExactMatrix.identity(spec.n)
    for k in range(1, spec.n):
        term = (term @ triple.Y) * (s / k)
        g = g + term
    g_inv = ExactMatrix.identity(spec.n)
    term = ExactMatrix.identity(spec.n)
    for k in range(1, spec.n):
        term = (term @ triple.Y) * (-s / k)
        g_inv = g_inv + term
    c = random_fraction(rng, 1, 3)
    return spec, (g @ triple.X @ g_inv) * c


def _sl3_sample(rng, kind):
    spec = canonical_spec("A2")
    while True:
        P = random_rational_matrix(rng, 3)
        if P.det() != 0:
            break
    a, b = random_fraction(rng), random_fraction(rng)
    if kind == "real":
        M = P @ ExactMatrix.diag([a, b, -a - b]) @ P.inverse()
    elif kind == "imaginary":
        M = P @ ExactMatrix.diag([I * a, I * b, I * (-a - b)]) @ P.inverse()
    else:
        entries = [random_gaussian(rng) for _ in range(9)]
        M = ExactMatrix(3, 3, entries)
        M = M - ExactMatrix.identity(3) * (M.trace() / 3)
    return spec, M


def test_criterion_7_exactness_verdicts():
    start = time.monotonic()
    rng = random.Random(7)
    for _ in range(20):
        spec, X = _random_nilpotent(rng)
        v = kk_verdict(spec, X)
        assert v.re_exact and v.im_exact and v.spectrum_class == "Nilpotent"

    kinds = ["real", "imaginary", "generic"] * 17
    seen = set()
    for kind in kinds[:50]:
        spec, M = _sl3_sample(rng, kind)
        lhs = kk_verdict(spec, M).im_exact
        rhs = kk_verdict(spec, M * I).re_exact
        assert lhs == rhs
        seen.add(lhs)
    assert seen == {True, False}  # both outcomes exercised

    sl2 = canonical_spec("A1")
    real = kk_verdict(sl2, ExactMatrix.diag([1, -1]))
    imag = kk_verdict(sl2, ExactMatrix.diag([I, -I]))
    mixed = kk_verdict(sl2, ExactMatrix.diag([1 + I, -1 - I]))
    assert (real.re_exact, real.im_exact) == (True, False)
    assert (imag.re_exact, imag.im_exact) == (False, True)
    assert (mixed.re_exact, mixed.im_exact) == (False, False)
    assert time.monotonic() - start < 60


def _float_all_real(p, tol=1e-9):
    coeffs = [float(c) for c in reversed(p.coeffs)]
    return bool(np.all(np.abs(np.roots(coeffs).imag) < tol))


def test_criterion_8_sturm_vs_float():
    rng = random.Random(8)
    disagreements = 0
    for k in range(200):
        planted_real = k < 100
        degree = rng.randint(1, 6) if planted_real else rng.randint(2, 6)
        n_linear = degree if planted_real else degree - 2
        roots = rng.sample(range(-9, 10), n_linear)  # distinct, keeps the float oracle well conditioned
        p = Poly.from_roots(roots)
        if not planted_real:
            a, b = rng.randint(-4, 4), rng.randint(1, 4)
            p = p * Poly([a * a + b * b, -2 * a, 1])
        p = p * rng.randint(1, 5)
        exact = all_roots_real(p)
        assert exact == planted_real
        disagreements += exact != _float_all_real(p)
    assert disagreements == 0

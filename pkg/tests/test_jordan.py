import random

import pytest

from orbit_h2.errors import NonRealCoefficients, NotInAlgebra, NotSemisimple, UnsplittableSpectrum
from orbit_h2.exact import ExactMatrix, I, minimal_polynomial
from orbit_h2.jordan import (
    compact_hyperbolic_split,
    complete_decomposition,
    jordan_chevalley,
    kk_verdict,
    real_form_verdict,
)
from orbit_h2.lie import canonical_spec, triple_from_partition
from orbit_h2.partitions import Partition

from conftest import random_fraction, random_gaussian, random_rational_matrix


def test_jordan_chevalley_examples():
    N = ExactMatrix.from_rows([[0, 1, 3], [0, 0, 2], [0, 0, 0]])
    assert jordan_chevalley(N) == (ExactMatrix.zeros(3), N)
    D = ExactMatrix.diag([1, 2, -3])
    assert jordan_chevalley(D) == (D, ExactMatrix.zeros(3))
    S, Nn = jordan_chevalley(ExactMatrix.from_rows([[1, 1], [0, 1]]))
    assert S == ExactMatrix.identity(2)
    assert Nn.tolist() == [[0, 1], [0, 0]]


def _planted_jordan(rng, n):
    # P J P^-1 with repeated eigenvalues and nontrivial blocks
    J = ExactMatrix.diag([rng.choice([-1, 0, 2]) for _ in range(n)])
    entries = list(J.entries)
    for i in range(n - 1):
        if J[i, i] == J[i + 1, i + 1] and rng.random() < 0.7:
            entries[i * n + i + 1] = 1
    J = ExactMatrix(n, n, entries)
    while True:
        Pm = random_rational_matrix(rng, n)
        if Pm.det() != 0:
            return Pm @ J @ Pm.inverse()


@pytest.mark.parametrize("n", [4, 5])
def test_jordan_chevalley_properties(n):
    rng = random.Random(n)
    for k in range(50):
        M = random_rational_matrix(rng, n) if k % 2 else _planted_jordan(rng, n)
        S, N = jordan_chevalley(M)
        assert S + N == M
        assert S @ N == N @ S
        assert (N**n).is_zero()
        q = minimal_polynomial(S)
        assert q.gcd(q.derivative()).degree == 0


def test_jordan_chevalley_gaussian():
    rng = random.Random(9)
    M = ExactMatrix(3, 3, [random_gaussian(rng) for _ in range(9)])
    S, N = jordan_chevalley(M)
    assert S + N == M and S @ N == N @ S and (N**3).is_zero()


def test_split_examples():
    S = ExactMatrix.diag([I, -I])
    assert compact_hyperbolic_split(S) == (S, ExactMatrix.zeros(2))
    R = ExactMatrix.diag([1, -1])
    assert compact_hyperbolic_split(R) == (ExactMatrix.zeros(2), R)
    K, H = compact_hyperbolic_split(ExactMatrix.diag([1 + I, -1 - I]))
    assert K == ExactMatrix.diag([I, -I]) and H == ExactMatrix.diag([1, -1])


def test_split_errors():
    with pytest.raises(UnsplittableSpectrum):
        compact_hyperbolic_split(ExactMatrix.from_rows([[0, 2], [1, 0]]))
    with pytest.raises(NotSemisimple):
        compact_hyperbolic_split(ExactMatrix.from_rows([[1, 1], [0, 1]]))


def test_complete_decomposition_parts():
    rng = random.Random(12)
    rotation = ExactMatrix.from_rows([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 2, 1], [0, 0, 0, 2]])
    Pm = random_rational_matrix(rng, 4)
    M = Pm @ rotation @ Pm.inverse()
    dec = complete_decomposition(M)
    assert dec.total() == M
    parts = (dec.nilpotent, dec.compact, dec.hyperbolic)
    for a in parts:
        for b in parts:
            assert a @ b == b @ a
    assert (dec.nilpotent**4).is_zero()
    assert not dec.compact.is_zero() and not dec.hyperbolic.is_zero()
    # compact and hyperbolic parts are polynomials in S: they commute with its commutant
    assert (dec.compact @ dec.semisimple) == (dec.semisimple @ dec.compact)


def test_kk_verdict_examples():
    sl2 = canonical_spec("A1")
    real = kk_verdict(sl2, ExactMatrix.diag([1, -1]))
    assert (real.re_exact, real.im_exact) == (True, False)
    imaginary = kk_verdict(sl2, ExactMatrix.diag([I, -I]))
    assert (imaginary.re_exact, imaginary.im_exact) == (False, True)
    assert kk_verdict(sl2, ExactMatrix.diag([1 + I, -1 - I])).spectrum_class == "Mixed"
    for tag, d in [("A3", (1, 3)), ("C2", (2, 2)), ("B3", (1, 3, 3)), ("D4", (4, 4))]:
        spec = canonical_spec(tag)
        v = kk_verdict(spec, triple_from_partition(spec, Partition(d)).X)
        assert v.re_exact and v.im_exact and v.spectrum_class == "Nilpotent"
    with pytest.raises(NotInAlgebra):
        kk_verdict(sl2, ExactMatrix.identity(2))


def test_verdict_invariants():
    rng = random.Random(21)
    spec = canonical_spec("A2")
    for _ in range(30):
        M = ExactMatrix(3, 3, [random_gaussian(rng, -2, 2, 2) for _ in range(9)])
        M = M - ExactMatrix.identity(3) * (M.trace() / 3)
        v = kk_verdict(spec, M)
        if v.spectrum_class == "Nilpotent":
            assert v.re_exact and v.im_exact
        if v.spectrum_class == "AllReal":
            assert v.re_exact
        if v.spectrum_class == "AllImaginary":
            assert v.im_exact


def _diagonalisable_sl3(rng, values):
    while True:
        Pm = random_rational_matrix(rng, 3)
        if Pm.det() != 0:
            return Pm @ ExactMatrix.diag(values) @ Pm.inverse()


def test_j_duality():
    rng = random.Random(77)
    spec = canonical_spec("A2")
    seen = set()
    for k in range(50):
        a, b = random_fraction(rng), random_fraction(rng)
        if k % 3 == 0:
            M = _diagonalisable_sl3(rng, [a, b, -a - b])
        elif k % 3 == 1:
            M = _diagonalisable_sl3(rng, [a * I, b * I, -(a + b) * I])
        else:
            M = ExactMatrix(3, 3, [random_gaussian(rng) for _ in range(9)])
            M = M - ExactMatrix.identity(3) * (M.trace() / 3)
        im = kk_verdict(spec, M).im_exact
        assert im == kk_verdict(spec, M * I).re_exact
        seen.add(im)
    assert seen == {True, False}


def test_split_consistency():
    rng = random.Random(31)
    spec = canonical_spec("A2")
    checked = 0
    for k in range(30):
        a, b = rng.randint(-2, 2), rng.randint(-2, 2)
        first, second = (a + b * I, -a) if k % 2 else (a, b * I)
        values = [first, second, -(first + second)]
        M = _diagonalisable_sl3(rng, values)
        v = kk_verdict(spec, M, with_decomposition=True)
        dec = v.decomposition
        assert dec is not None
        assert v.re_exact == dec.compact.is_zero()
        assert v.im_exact == dec.hyperbolic.is_zero()
        checked += 1
    assert checked == 30


def test_real_form_verdict_examples():
    sl2 = canonical_spec("A1")
    assert real_form_verdict(sl2, ExactMatrix.from_rows([[0, 1], [0, 0]]))
    assert real_form_verdict(sl2, ExactMatrix.diag([1, -1]))
    assert not real_form_verdict(sl2, ExactMatrix.from_rows([[0, 1], [-1, 0]]))
    assert real_form_verdict(sl2, ExactMatrix.from_rows([[0, 2], [1, 0]]))  # spectrum outside Q(i)
    with pytest.raises(NonRealCoefficients):
        real_form_verdict(sl2, ExactMatrix.diag([I, -I]))
    with pytest.raises(NotInAlgebra):
        real_form_verdict(sl2, ExactMatrix.identity(2))


def test_real_form_verdict_so():
    spec = canonical_spec("B2")
    rng = random.Random(4)
    for _ in range(10):
        coords = [rng.randint(-2, 2) for _ in range(spec.dim)]
        M = spec.from_coordinates(coords)
        expected = kk_verdict(spec, M).re_exact
        assert real_form_verdict(spec, M) == expected

import pytest

from orbit_h2.catalog import AlgebraType, classical_orbits
from orbit_h2.errors import NoFlipExists, NotClosed, NotInAlgebra
from orbit_h2.exact import ExactMatrix
from orbit_h2.lie import canonical_spec, partition_spec, triple_from_partition
from orbit_h2.oracle import (
    SubalgebraBasis,
    center_of,
    centralizer_algebra,
    flip_action_check,
    orbit_dim,
    sweep,
    verify_label,
    verify_ss_center,
)
from orbit_h2.partitions import Partition


def P(*parts):
    return Partition(parts)


def _triple(tag, d):
    algebra = AlgebraType(tag[0], int(tag[1:]))
    spec = partition_spec(algebra, d)
    return spec, triple_from_partition(spec, d)


def test_centralizer_examples():
    spec = canonical_spec("A1")
    assert centralizer_algebra(spec, []).dim == 3
    t = triple_from_partition(spec, P(2))
    assert centralizer_algebra(spec, t.members()).dim == 0
    spec3, t3 = _triple("A2", P(1, 2))
    assert centralizer_algebra(spec3, t3.members()).dim == 1


def test_centralizer_rejects_outsiders():
    with pytest.raises(NotInAlgebra):
        centralizer_algebra(canonical_spec("A1"), [ExactMatrix.identity(2)])


def test_centralizer_is_closed_and_commutes():
    for tag, d in [("C3", P(1, 1, 2, 2)), ("D4", P(1, 1, 3, 3)), ("A4", P(1, 2, 2))]:
        spec, t = _triple(tag, d)
        cent = centralizer_algebra(spec, t.members())
        assert SubalgebraBasis(spec, cent.vectors).is_bracket_closed()
        for z in cent.vectors:
            assert all(z.bracket(M).is_zero() for M in t.members())


def test_center_examples():
    spec = canonical_spec("A2")
    diag = SubalgebraBasis(spec, (ExactMatrix.diag([1, -1, 0]), ExactMatrix.diag([0, 1, -1])))
    assert center_of(diag).dim == 2  # abelian
    sl2 = canonical_spec("A1")
    assert center_of(SubalgebraBasis(sl2, tuple(sl2.basis), closed=True)).dim == 0
    spec4, t = _triple("C2", P(2, 2))
    assert center_of(centralizer_algebra(spec4, t.members())).dim == 1


def test_center_needs_closed_span():
    spec = canonical_spec("A1")
    t = triple_from_partition(spec, P(2))
    with pytest.raises(NotClosed):
        center_of(SubalgebraBasis(spec, (t.X, t.Y)))


def test_center_commutes_with_centralizer():
    spec, t = _triple("A5", P(1, 1, 2, 2))
    cent = centralizer_algebra(spec, t.members())
    center = center_of(cent)
    assert center.dim == 1
    for z in center.vectors:
        assert all(z.bracket(c).is_zero() for c in cent.vectors)


@pytest.mark.parametrize(
    "tag,d,predicted",
    [("A2", P(1, 2), 1), ("C2", P(2, 2), 1), ("A2", P(3), 0), ("D5", P(2, 2, 3, 3), 1), ("B3", P(1, 3, 3), 1)],
)
def test_verify_ss_center(tag, d, predicted):
    report = verify_ss_center(AlgebraType(tag[0], int(tag[1:])), d)
    assert report.predicted == report.oracle == predicted
    assert report.passed


def test_flip_sp4():
    fr = flip_action_check(AlgebraType("C", 2), P(2, 2), 2)
    assert fr.passed and fr.negates_summand and fr.det == 1
    assert fr.action == [[-1]]
    g = fr.witness
    assert g.shape == (4, 4)


def test_no_flip_in_single_odd_case():
    with pytest.raises(NoFlipExists) as info:
        flip_action_check(AlgebraType("D", 5), P(2, 2, 3, 3), 3)
    assert info.value.searched > 0
    report = verify_label(AlgebraType("D", 5), P(2, 2, 3, 3))
    assert report.oracle_invariant == 1 == report.predicted_h2
    assert report.flips == {3: "absent"}


def test_flip_borrows_other_orthogonal_factor():
    fr = flip_action_check(AlgebraType("D", 4), P(1, 1, 3, 3), 3)
    assert fr.passed
    report = verify_label(AlgebraType("D", 4), P(1, 1, 3, 3))
    assert report.oracle_invariant == 0
    assert report.flips == {1: "found", 3: "found"}


def test_flip_requires_multiplicity_two():
    with pytest.raises(ValueError):
        flip_action_check(AlgebraType("C", 3), P(2, 4), 2)


def test_type_a_flips_act_trivially():
    for r in range(1, 6):
        algebra = AlgebraType("A", r)
        for lab in classical_orbits(algebra):
            d = lab.partition
            for m, count in d.multiplicities().items():
                if count != 2:
                    continue
                try:
                    fr = flip_action_check(algebra, d, m)
                except NoFlipExists:
                    continue
                size = len(fr.action)
                assert fr.action == [[1 if i == j else 0 for j in range(size)] for i in range(size)]


def test_orbit_dim_examples():
    sl2 = canonical_spec("A1")
    assert orbit_dim(sl2, ExactMatrix.zeros(2)) == 0
    assert orbit_dim(sl2, triple_from_partition(sl2, P(2)).X) == 2
    sl3 = canonical_spec("A2")
    assert orbit_dim(sl3, triple_from_partition(sl3, P(3)).X) == 6


def test_verify_json_schema():
    keys = set(verify_label(AlgebraType("C", 2), P(2, 2)).to_json())
    assert {"label", "predicted_center", "oracle_center", "predicted_h2", "oracle_invariant", "pass"} <= keys


@pytest.mark.parametrize("family", "ABCD")
def test_sweeps_pass(family):
    reports = list(sweep(family))
    assert reports and all(r.passed for r in reports)


def test_parallel_sweep_matches_serial():
    serial = [r.to_json() for r in sweep("C", max_rank=3, workers=1)]
    parallel = [r.to_json() for r in sweep("C", max_rank=3, workers=2)]
    assert serial == parallel


def test_thread_env_var(monkeypatch):
    monkeypatch.setenv("ORBIT_H2_THREADS", "2")
    labels = [r.label for r in sweep("B", max_rank=2)]
    assert labels == [str(lab) for lab in classical_orbits(AlgebraType("B", 2))]

from itertools import product

import pytest

from coxnest import (
    NCCase,
    NNKind,
    b_arc_diagram,
    classify_nc_b_minus_d,
    classify_nn_d_minus_b,
    crosses_d,
    d_arc_diagram,
    enumerate_all,
    interleaves,
    is_d_partition,
    is_noncrossing_b,
    is_noncrossing_d,
    is_nonnesting_b,
    is_nonnesting_d,
    parse,
)
from coxnest.diagrams import CircularPositions, nc_b_minus_d_conditions
from coxnest.errors import NotADPartition, OverlappingSets, PreconditionError
from coxnest.partition import canonicalize
from brute import chords_interleave
from conftest import DEEP
from geometry import crosses_geometric
from named import named


def cp(m, occ):
    return CircularPositions.of(m, occ)


def test_interleaves_examples():
    assert not interleaves(cp(8, {1, 5}), cp(8, {0, 7}))
    assert interleaves(cp(8, {0, 2}), cp(8, {1, 5}))
    assert not interleaves(cp(4, {0}), cp(4, {2}))
    with pytest.raises(OverlappingSets):
        interleaves(cp(6, {0, 1}), cp(6, {1, 3}))


@pytest.mark.parametrize("m", range(2, 13 if DEEP else 9))
def test_interleaves_exhaustive(m):
    # every way to colour the circle with s, t or neither
    for colours in product((0, 1, 2), repeat=m):
        s = {p for p, c in enumerate(colours) if c == 1}
        t = {p for p, c in enumerate(colours) if c == 2}
        got = interleaves(cp(m, s), cp(m, t))
        assert got == interleaves(cp(m, t), cp(m, s))
        assert got == chords_interleave(s, t, m)


def test_noncrossing_examples():
    assert is_noncrossing_b(named("B"))
    assert is_noncrossing_b(named("B'"))
    assert not is_noncrossing_b(named("C"))
    assert is_noncrossing_d(named("C"))
    assert is_noncrossing_d(named("C'")) and is_noncrossing_b(named("C'"))
    assert not is_noncrossing_b(named("F"))
    assert is_noncrossing_d(parse("{{-3,-1,1,3},{2,-5},{-2,5},{4},{-4}}", 5))
    with pytest.raises(NotADPartition):
        is_noncrossing_d(named("A"))


def test_crosses_d_examples():
    assert not crosses_d((-4, -3, -1, 1, 3, 4), (-5, 2), 5)
    assert not crosses_d((1,), (-1,), 3)
    # a zero block avoiding 1 meets the centre occupied by the block of 1
    assert crosses_d((-3, -2, 2, 3), (1,), 3)
    assert not crosses_d((-3, -1, 1, 3), (2,), 3)


@pytest.mark.parametrize("n", range(2, 6))
def test_crosses_d_matches_geometry(n):
    for pi in enumerate_all("ALL_D", n):
        bl = pi.blocks
        for i in range(len(bl)):
            for j in range(i + 1, len(bl)):
                assert crosses_d(bl[i], bl[j], n) == crosses_geometric(bl[i], bl[j], n), (pi, bl[i], bl[j])


def test_nonnesting_examples():
    assert is_nonnesting_b(named("D"))
    assert not is_nonnesting_b(named("F"))
    assert not is_nonnesting_b(named("etaF"))
    assert is_nonnesting_d(named("E"))
    assert is_nonnesting_d(named("F"))
    assert is_nonnesting_d(named("etaF"))
    with pytest.raises(NotADPartition):
        is_nonnesting_d(named("A"))


def test_arc_diagrams():
    a = parse("{{-1,1},{2},{-2}}", 2)
    assert b_arc_diagram(a).to_json() == {"ground": "B", "arcs": [[-1, 0], [0, 1]]}
    z = parse("{{-2,-1,1,2}}", 2)
    assert d_arc_diagram(z).to_json()["arcs"] == [[-2, -1], [-2, 1], [-1, 2], [1, 2]]
    assert d_arc_diagram(parse("{{-2,2},{1},{-1}}", 2)) is None
    # a single 1 / -1 containment with a shared coordinate is not a nesting
    assert is_nonnesting_d(parse("{{-2,1},{2,-1}}", 2))


def test_classify_examples():
    assert classify_nn_d_minus_b(named("F")) is NNKind.KIND1
    assert classify_nn_d_minus_b(named("etaF")) is NNKind.KIND2
    # the corrected πE has 4̄,1,2 in a row, so it is Kind1 as well
    assert classify_nn_d_minus_b(named("E")) is NNKind.KIND1
    assert classify_nn_d_minus_b(parse("{{-1,4},{-4,1},{-2,3},{-3,2}}", 4)) is None
    assert classify_nc_b_minus_d(parse("{{1,-1},{2},{-2}}", 2)) is NCCase.CASE1
    assert classify_nc_b_minus_d(parse("{{-3,3},{1,2,-5},{-1,-2,5},{4},{-4}}", 5)) is NCCase.CASE2
    assert classify_nc_b_minus_d(parse("{{-1,4},{-4,1},{-2,3},{-3,2}}", 4)) is NCCase.CASE3
    assert classify_nc_b_minus_d(named("C'")) is None
    with pytest.raises(PreconditionError):
        classify_nc_b_minus_d(named("C"))
    with pytest.raises(PreconditionError):
        classify_nn_d_minus_b(parse("{{-3,-2,2,3},{1},{-1}}", 3))


RANKS = range(2, 7)


@pytest.mark.parametrize("n", RANKS)
def test_nc_classification_exhaustive(n):
    nc_d = enumerate_all("NC_D", n).as_set
    for pi in enumerate_all("NC_B", n):
        assert sum(nc_b_minus_d_conditions(pi)) <= 1
        assert (classify_nc_b_minus_d(pi) is None) == (pi in nc_d)


@pytest.mark.parametrize("n", RANKS)
def test_nn_classification_exhaustive(n):
    nn_b = enumerate_all("NN_B", n).as_set
    for pi in enumerate_all("NN_D", n):
        assert (classify_nn_d_minus_b(pi) is None) == (pi in nn_b)


@pytest.mark.parametrize("n", range(1, 6))
def test_negation_symmetry(n):
    for pi in enumerate_all("ALL_B", n):
        neg = canonicalize([[-x for x in b] for b in pi.blocks], n)
        assert is_noncrossing_b(pi) == is_noncrossing_b(neg)
        assert is_nonnesting_b(pi) == is_nonnesting_b(neg)
        if is_d_partition(pi) and n >= 2:
            assert is_noncrossing_d(pi) == is_noncrossing_d(neg)
            assert is_nonnesting_d(pi) == is_nonnesting_d(neg)


@pytest.mark.parametrize("n", range(2, 6))
def test_predicates_against_families(n):
    all_b = enumerate_all("ALL_B", n)
    assert {p for p in all_b if is_nonnesting_b(p)} == enumerate_all("NN_B", n).as_set
    nn_d = {p for p in all_b if is_d_partition(p) and is_nonnesting_d(p)}
    assert nn_d == enumerate_all("NN_D", n).as_set

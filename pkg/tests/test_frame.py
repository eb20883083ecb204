import itertools

import pytest

from gds import Frame, FrameMismatch, Proposition, UnknownElement, intersect, is_empty, is_subset, label, powerset
from gds.frame import submasks

from conftest import FRAMES


def as_set(p):
    return frozenset(p.elements)


def test_powerset_single():
    f = FRAMES[1]
    assert [p.bits for p in powerset(f)] == [0, 1]


def test_powerset_two_labels():
    f = FRAMES[2]
    assert [label(p) for p in powerset(f)] == ["∅", "A", "B", "A,B"]


def test_powerset_three_matches_enumeration():
    f = FRAMES[3]
    subsets = [as_set(p) for p in powerset(f)]
    expected = {frozenset(c) for r in range(4) for c in itertools.combinations("ABC", r)}
    assert len(subsets) == 8
    assert set(subsets) == expected


def test_intersect_examples():
    f = FRAMES[2]
    empty = intersect(f.proposition("A"), f.proposition("B"))
    assert is_empty(empty)
    assert is_subset(f.proposition("A"), f.proposition("A,B"))


def test_intersect_matches_naive_sets():
    f = FRAMES[3]
    for a in powerset(f):
        for b in powerset(f):
            naive = [e for e in a.elements if e in b.elements]
            assert as_set(intersect(a, b)) == frozenset(naive)
            assert is_subset(a, b) == all(e in b.elements for e in a.elements)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_intersection_laws(n):
    f = FRAMES[n]
    props = list(powerset(f))
    for a in props:
        assert a & a == a
        assert a & f.omega == a
        for b in props:
            assert a & b == b & a
            for c in props:
                assert (a & b) & c == a & (b & c)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_subset_partial_order(n):
    props = list(powerset(FRAMES[n]))
    for a in props:
        assert a <= a
        for b in props:
            if a <= b and b <= a:
                assert a == b
            for c in props:
                if a <= b and b <= c:
                    assert a <= c


def test_submasks_enumerates_all_subsets():
    for bits in range(16):
        expected = {s for s in range(16) if s & ~bits == 0}
        got = list(submasks(bits))
        assert len(got) == len(expected) and set(got) == expected


def test_label_sorts_names():
    f = Frame(["z", "a", "m"])
    assert label(f.omega) == "a,m,z"
    assert str(f.proposition(["m"])) == "m"


def test_proposition_from_string():
    f = FRAMES[3]
    assert f.proposition("A, C") == f.proposition(["C", "A"])
    with pytest.raises(UnknownElement):
        f.proposition("D")


def test_frame_mismatch():
    a = FRAMES[2].proposition("A")
    b = Frame(["A", "C"]).proposition("A")
    with pytest.raises(FrameMismatch):
        intersect(a, b)
    with pytest.raises(FrameMismatch):
        is_subset(a, b)


def test_equal_frames_are_interchangeable():
    assert intersect(Frame("AB").proposition("A"), Frame("AB").omega).bits == 1


@pytest.mark.parametrize("labels", [[], ["A", "A"], ["A", ""], [str(i) for i in range(33)]])
def test_invalid_frames(labels):
    with pytest.raises(ValueError):
        Frame(labels)


def test_capacity_bound():
    f = Frame([f"e{i}" for i in range(32)])
    assert f.omega.bits == 2**32 - 1
    with pytest.raises(ValueError):
        Proposition(f, 2**32)

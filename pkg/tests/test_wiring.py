from collections import Counter
from fractions import Fraction

import pytest

from lusztig_cones import InputError
from lusztig_cones.quiver import Quiver, all_quivers, parse_quiver
from lusztig_cones.weyl import ReducedWord, commutation_classes, commutation_equivalent, enumerate_reduced_words
from lusztig_cones.wiring import (
    arrangement,
    chamber_diagram,
    chamber_partial_quivers,
    chamber_sets,
    compatible_word,
    is_compatible,
)


def labels(n, letters):
    return [set(c.label) for c in chamber_sets(ReducedWord(n, letters))]


@pytest.mark.parametrize("n, letters, snaps", [
    (2, (1, 2, 1), [(1, 2, 3), (2, 1, 3), (2, 3, 1), (3, 2, 1)]),
    (2, (2, 1, 2), [(1, 2, 3), (1, 3, 2), (3, 1, 2), (3, 2, 1)]),
    (1, (1,), [(1, 2), (2, 1)]),
])
def test_snapshots(n, letters, snaps):
    assert list(chamber_diagram(ReducedWord(n, letters)).snapshots) == snaps


def test_chamber_labels():
    assert labels(3, (1, 3, 2, 1, 3, 2)) == [{1, 3, 4}, {3}, {1, 3}]
    assert labels(2, (1, 2, 1)) == [{1, 3}]
    assert labels(2, (2, 1, 2)) == [{2}]
    assert labels(1, (1,)) == []


def test_chamber_partial_quivers():
    got = [P.code for P in chamber_partial_quivers(ReducedWord(3, (1, 3, 2, 1, 3, 2)))]
    assert got == ["-R", "L-", "LR"]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_labels_are_distinct_chamber_sets(n):
    for w in enumerate_reduced_words(n):
        ls = [c.label for c in chamber_sets(w)]
        assert len(set(ls)) == len(ls) == w.k - n


@pytest.mark.parametrize("n", [2, 3, 4])
def test_chamber_multiset_constant_on_commutation_classes(n):
    cc = commutation_classes(n)
    for members in cc.partition():
        first = Counter(c.label for c in chamber_sets(members[0]))
        assert all(Counter(c.label for c in chamber_sets(w)) == first for w in members)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_exactly_one_compatible_class_per_quiver(n):
    cc = commutation_classes(n)
    for Q in all_quivers(n):
        hits = [c for c, rep in enumerate(cc.representatives()) if is_compatible(rep, Q)]
        assert len(hits) == 1
        assert cc.class_of(compatible_word(Q)) == hits[0]


@pytest.mark.parametrize("n", [5, 6])
def test_compatible_word_larger_ranks(n):
    for Q in all_quivers(n):
        assert is_compatible(compatible_word(Q), Q)


def test_compatible_examples():
    assert is_compatible(ReducedWord(3, (1, 3, 2, 1, 3, 2)), parse_quiver(3, "LR"))
    assert commutation_equivalent(2, compatible_word(parse_quiver(2, "R")).letters, (1, 2, 1))
    assert commutation_equivalent(2, compatible_word(parse_quiver(2, "L")).letters, (2, 1, 2))


def test_is_compatible_rank_mismatch():
    with pytest.raises(InputError):
        is_compatible(ReducedWord(2, (1, 2, 1)), Quiver(3, "LR"))


def test_arrangement_with_two_bent_lines():
    A = arrangement(5, {2, 4})
    # bent lines touch the bottom edge (y = 0) or the top edge (y = n)
    assert A.lines[2][1] == (Fraction(4), Fraction(0))
    assert A.lines[4][1] == (Fraction(2), Fraction(0))
    assert A.lines[3][1] == (Fraction(2), Fraction(5))
    assert A.lines[5][1] == (Fraction(4), Fraction(5))
    assert len(A.lines[1]) == len(A.lines[6]) == 2
    assert len(A.crossings()) == 15
    Q = Quiver(5, "".join("L" if e in {2, 4} else "R" for e in range(5, 1, -1)))
    assert is_compatible(ReducedWord(5, A.sweep_word()), Q)


def test_arrangement_small():
    A = arrangement(1, set())
    assert A.sweep_word() == (1,)
    A = arrangement(2, set())
    assert A.lines[2] == ((0, 1), (1, 2), (2, 1))
    with pytest.raises(InputError):
        arrangement(3, {1})


def test_geometry_keys():
    g = chamber_diagram(ReducedWord(3, (1, 3, 2, 1, 3, 2))).geometry()
    assert g["width"] == 6 and g["height"] == 3
    assert [c["label"] for c in g["chambers"]] == ["134", "3", "13"]

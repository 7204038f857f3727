import random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from lusztig_cones import InputError, InvariantViolation
from lusztig_cones.cone import (
    bareiss_inverse,
    cone_contains,
    cone_matrix,
    multiset_M,
    spanning_vector,
    spanning_vectors,
    unimodular_inverse,
)
from lusztig_cones.quiver import parse_partial_quiver
from lusztig_cones.weyl import ReducedWord, enumerate_reduced_words
from oracles import fraction_inverse

W121 = ReducedWord(2, (1, 2, 1))
W212 = ReducedWord(2, (2, 1, 2))
W3 = ReducedWord(3, (1, 3, 2, 1, 3, 2))


def test_matrix_examples():
    assert cone_matrix(W121).rows == ((1, 0, 0), (0, 0, 1), (-1, 1, -1))
    assert cone_matrix(W212).rows == ((0, 0, 1), (1, 0, 0), (-1, 1, -1))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_unimodular_for_every_word(n):
    for w in enumerate_reduced_words(n):
        det, _ = bareiss_inverse(cone_matrix(w).rows)
        assert abs(det) == 1


@pytest.mark.parametrize("n", [2, 3])
def test_inverse_matches_sympy(n):
    for w in enumerate_reduced_words(n):
        cm = cone_matrix(w)
        ref = sympy.Matrix(cm.rows).inv()
        assert [list(r) for r in cm.inverse()] == ref.tolist()


def test_inverse_matches_fraction_oracle_n4():
    rng = random.Random(1)
    words = list(enumerate_reduced_words(4))
    for w in rng.sample(words, 60):
        cm = cone_matrix(w)
        assert [list(r) for r in cm.inverse()] == fraction_inverse(cm.rows)


def test_bareiss_on_general_matrices():
    det, adj = bareiss_inverse([[2, 1], [1, 1]])
    assert det == 1 and adj == [[1, -1], [-1, 2]]
    det, adj = bareiss_inverse([[0, 2], [3, 0]])
    assert det == -6
    assert sympy.Matrix([[0, 2], [3, 0]]).adjugate().tolist() == adj
    assert bareiss_inverse([[1, 2], [2, 4]]) == (0, [])
    with pytest.raises(InvariantViolation):
        unimodular_inverse([[2, 0], [0, 1]])


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=4, max_size=4))
def test_bareiss_determinant_matches_sympy(M):
    det, adj = bareiss_inverse(M)
    assert det == sympy.Matrix(M).det()
    if det:
        assert sympy.Matrix(M) * sympy.Matrix(adj) == det * sympy.eye(4)


def label_map(word):
    return {(sv.label if isinstance(sv.label, int) else sv.label.code): sv.coords for sv in spanning_vectors(word)}


def test_spanning_vector_examples():
    assert label_map(W121) == {1: (1, 1, 0), 2: (0, 1, 1), "R": (0, 1, 0)}
    assert label_map(W212)["L"] == (0, 1, 0)
    assert label_map(W3)["L-"] == (0, 0, 1, 1, 0, 0)
    assert spanning_vector(W3, parse_partial_quiver(3, "L-")).coords == (0, 0, 1, 1, 0, 0)
    with pytest.raises(InputError):
        spanning_vector(W121, parse_partial_quiver(2, "L"))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_spanning_vectors_are_natural_and_in_cone(n):
    for w in enumerate_reduced_words(n):
        svs = spanning_vectors(w)
        assert len(svs) == w.k
        cm = cone_matrix(w)
        for c, sv in enumerate(svs):
            assert min(sv.coords) >= 0
            # P a(c) is the c-th unit vector
            assert cm.evaluate(sv.coords) == [int(r == c) for r in range(w.k)]


def test_multiset_examples():
    assert multiset_M(3, parse_partial_quiver(3, "L-")).as_dict() == {(1, 4): 1, (2, 4): 1}
    assert multiset_M(2, 1).as_dict() == {(1, 2): 1, (1, 3): 1}
    M = multiset_M(5, parse_partial_quiver(5, "LRL-"))
    assert M[(1, 6)] == 2
    assert M[(1, 2)] == 0
    assert multiset_M(2, parse_partial_quiver(2, "L")).as_dict() == {(1, 3): 1}


def test_multiset_of_simple_is_boundary_of_j():
    for n in range(1, 6):
        for j in range(1, n + 1):
            assert len(multiset_M(n, j)) == j * (n + 1 - j)


def test_roots_of_spanning_vectors_n3():
    for sv in spanning_vectors(W3):
        assert sv.roots == multiset_M(3, sv.label)


def test_cone_contains_examples():
    assert cone_contains(W121, (0, 1, 0))
    assert not cone_contains(W121, (1, 0, 0))
    with pytest.raises(InputError):
        cone_contains(W121, (1, 0))


def test_json_shape():
    obj = spanning_vector(W121, parse_partial_quiver(2, "R")).to_json()
    assert obj == {"word": [1, 2, 1], "label": "R", "coords": [0, 1, 0], "roots": [{"i": 1, "j": 3, "mult": 1}]}

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lusztig_cones import DomainError, InputError
from lusztig_cones.quiver import (
    PartialQuiver,
    Quiver,
    all_partial_quivers,
    all_quivers,
    chamber_set_of,
    components,
    is_chamber_set,
    leq,
    parse_partial_quiver,
    parse_quiver,
    partial_quiver_of,
    sub_partial_quivers,
)


def comps(n, code):
    return [tuple(c) for c in components(parse_partial_quiver(n, code))]


def test_components_examples():
    assert comps(5, "LRL-") == [("L", 5, 5, 4, 6), ("R", 4, 4, 3, 5), ("L", 3, 3, 2, 4)]
    assert comps(2, "L") == [("L", 2, 2, 1, 3)]
    assert comps(3, "LR") == [("L", 3, 3, 2, 4), ("R", 2, 2, 1, 3)]


def test_components_merge_runs():
    assert comps(5, "LLR-") == [("L", 4, 5, 3, 6), ("R", 3, 3, 2, 4)]
    assert comps(4, "-RR") == [("R", 2, 3, 1, 4)]


def test_edge_and_unicode_minus():
    P = parse_partial_quiver(5, "LRL−")
    assert P.code == "LRL-"
    assert P.edges == {5: "L", 4: "R", 3: "L", 2: "-"}
    assert P.directed_edges == [5, 4, 3]


@pytest.mark.parametrize("n, code", [(3, "--"), (4, "L-R"), (3, "LRL"), (3, "LX")])
def test_bad_partial_quivers(n, code):
    with pytest.raises(InputError):
        PartialQuiver(n, code)


def test_quiver_requires_full_orientation():
    with pytest.raises(InputError):
        Quiver(3, "L-")
    assert Quiver(1, "").code == ""


@pytest.mark.parametrize("n, code, expected", [
    (3, "-R", {1, 3, 4}),
    (3, "L-", {3}),
    (3, "LR", {1, 3}),
    (2, "L", {2}),
    (2, "R", {1, 3}),
])
def test_chamber_set_examples(n, code, expected):
    assert chamber_set_of(parse_partial_quiver(n, code)) == frozenset(expected)


@pytest.mark.parametrize("n, c, code", [(3, {1, 3, 4}, "-R"), (3, {3}, "L-"), (2, {2}, "L")])
def test_inverse_examples(n, c, code):
    assert partial_quiver_of(n, c).code == code


def test_inverse_rejects_non_chamber_sets():
    with pytest.raises(DomainError):
        partial_quiver_of(3, {1, 2})
    with pytest.raises(DomainError):
        partial_quiver_of(3, set())


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_round_trip_and_never_an_end_interval(n):
    Ps = all_partial_quivers(n)
    assert len(Ps) == sum(2 ** (hi - lo + 1) for hi in range(2, n + 1) for lo in range(2, hi + 1))
    seen = set()
    for P in Ps:
        c = chamber_set_of(P)
        assert is_chamber_set(n, c)
        lo, hi = min(c), max(c)
        assert not (len(c) == hi - lo + 1 and (lo == 1 or hi == n + 1))
        assert partial_quiver_of(n, c) == P
        seen.add(c)
    assert len(seen) == len(Ps)


def test_all_quivers_count():
    for n in range(1, 7):
        assert len(all_quivers(n)) == 2 ** (n - 1)


def test_leq_example():
    assert leq(parse_partial_quiver(9, "---LRLL-"), parse_quiver(9, "RLRLRLLL"))
    assert not leq(parse_partial_quiver(9, "---RRLL-"), parse_quiver(9, "RLRLRLLL"))


def test_sub_partial_quivers_example():
    got = {P.code for P in sub_partial_quivers(parse_quiver(3, "LR"))}
    assert got == {"LR", "L-", "-R"}


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_sub_partial_quivers_size(n):
    for Q in all_quivers(n):
        subs = sub_partial_quivers(Q)
        assert len(subs) == n * (n - 1) // 2
        assert all(leq(P, Q) for P in subs)


@given(st.integers(2, 6).flatmap(lambda n: st.sampled_from(all_partial_quivers(n))))
def test_leq_reflexive_and_json(P):
    assert leq(P, P)
    assert PartialQuiver.from_json(P.to_json()) == P

import warnings
import pytest

from lusztig_cones import InputError
from lusztig_cones.cone import multiset_M
from lusztig_cones.crystal import weight
from lusztig_cones.quiver import all_partial_quivers, components, parse_partial_quiver
from lusztig_cones.rectangle import (
    DegenerateCentralLine,
    cell_label_counts,
    diagram,
    monomial_word,
    mu,
    rectangle_of,
    s_set,
    v_vector,
)
from lusztig_cones.weyl import PositiveRoot, standard_word

LRL = parse_partial_quiver(5, "LRL-")


def u_columns(grid):
    """Cells grouped by constant u, each read from largest v to smallest."""
    cols = {}
    for (u, v), lab in grid.cells.items():
        cols.setdefault(u, []).append((v, lab))
    return [tuple(lab for _, lab in sorted(cols[u], reverse=True)) for u in sorted(cols)]


def test_single_rectangles():
    Y1, Y2, Y3 = components(LRL)
    assert u_columns(rectangle_of(5, Y1)) == [(4, 3, 2, 1)]
    assert u_columns(rectangle_of(5, Y2)) == [(4, 3, 2), (5, 4, 3)]
    assert u_columns(rectangle_of(5, Y3)) == [(2, 1), (3, 2), (4, 3)]


def test_rectangle_corners():
    for Y in components(LRL):
        g = rectangle_of(5, Y)
        c = g.cells
        assert c[g.corners["top"]] == g.base
        assert set(c.values()) == set(range(g.base, g.base + g.width + g.height - 1))


def test_lrl_fixtures():
    assert mu(5, LRL) == (4, 5, 2, 3, 3, 4, 1, 2, 2, 3, 1)
    assert str(monomial_word(5, LRL)) == "F4 F5 F2 F3^(2) F4 F1 F2^(2) F3 F1"
    D = diagram(5, LRL)
    assert D.box_row_counts == (1, 3, 2)
    assert not D.degenerate
    # the line separates the first two box rows from the last
    assert D.central_line == D.box_rows[2][0].v_range[0]
    doubled = sorted(c.label for c in D.cells.values() if c.multiplicity == 2)
    assert doubled == [2, 3]


def test_lrl_s_and_v():
    S = {(r.i, r.j) for r in s_set(5, LRL)}
    assert S == {(1, 2), (2, 3), (3, 4), (4, 6), (1, 4), (2, 5)}
    assert v_vector(5, LRL) == (0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1)


def test_small_fixtures():
    R = parse_partial_quiver(2, "R")
    L = parse_partial_quiver(2, "L")
    D = diagram(2, R)
    assert [(c.label, c.multiplicity) for c in D.cells.values()] == [(2, 1)]
    assert mu(3, parse_partial_quiver(3, "L-")) == (2, 1)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateCentralLine)
        assert s_set(2, R) == {PositiveRoot(2, 3)}
        assert s_set(2, L) == {PositiveRoot(1, 2)}
    assert v_vector(2, R) == (1, 0, 0)
    assert v_vector(2, L) == (0, 0, 1)


def test_degenerate_line_warns():
    with pytest.warns(DegenerateCentralLine):
        s_set(2, parse_partial_quiver(2, "R"))
    assert diagram(2, parse_partial_quiver(2, "R")).degenerate


def test_simple_label_uses_whole_rectangle():
    D = diagram(2, 1)
    assert not D.degenerate
    assert sorted(c.label for c in D.cells.values()) == [1, 2]
    assert s_set(2, 1) == {PositiveRoot(1, 3)}
    assert set(D.starred(0)) == set(D.cells)


def test_bad_labels():
    with pytest.raises(InputError):
        diagram(3, 4)
    with pytest.raises(InputError):
        diagram(4, LRL)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_every_diagram_builds_with_one_parity_change(n):
    for P in all_partial_quivers(n):
        D = diagram(n, P)
        parities = [c % 2 for c in D.box_row_counts]
        changes = sum(a != b for a, b in zip(parities, parities[1:]))
        assert changes == (0 if D.degenerate else 1)
        if D.degenerate:
            assert len(components(P)) == 1


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_length_and_weight_of_monomial(n):
    for P in all_partial_quivers(n):
        M = multiset_M(n, P)
        assert len(mu(n, P)) == len(M)
        # F(P) applied to 1 has the weight of the Lusztig data v(P)
        counts = cell_label_counts(n, P)
        assert weight(standard_word(n), v_vector(n, P)) == tuple(counts[s] for s in range(1, n + 1))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_v_is_indicator_of_s(n):
    for P in [*all_partial_quivers(n), *range(1, n + 1)]:
        v = v_vector(n, P)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", DegenerateCentralLine)
            assert sum(v) == len(s_set(n, P))
        assert set(v) <= {0, 1}


def test_json_and_geometry():
    D = diagram(5, LRL)
    obj = D.to_json()
    assert obj["P"] == "LRL-" and obj["box_row_counts"] == [1, 3, 2]
    assert sum(c["multiplicity"] for c in obj["cells"]) == 11
    g = D.geometry()
    assert len(g["rectangles"]) == 3 and len(g["central_line"]) == 2

"""Rectangle diagrams D(P), the sequences mu(P), the root sets S(P) and the vectors v(P).

Cells live on a diagonal grid: u grows down-right, v grows down-left, and a
cell's label grows by one per step in either direction. A diagonal row is a
set of cells with constant v; mu reads rows from the bottom-left one
(largest v) to the top-right one, each from top-left to bottom-right.
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple, Union

from .errors import InputError, InvariantViolation
from .quiver import L, R, Component, PartialQuiver, components
from .weyl import PositiveRoot, root_order, standard_word

SIMPLE = "simple"

Label = Union[int, PartialQuiver]


class DegenerateCentralLine(UserWarning):
    """Every box row has the same parity, so the central line had to be chosen by convention."""


@dataclass(frozen=True)
class RectangleGrid:
    """rho(Y) in local coordinates: cells (u, v) with 0 <= v < a, 0 <= u <= n+1-b."""

    n: int
    kind: str  # L, R or SIMPLE (treated as type L)
    a: int
    b: int
    base: int  # label of the top corner (u, v) = (0, 0)

    @property
    def width(self) -> int:
        return self.n + 2 - self.b

    @property
    def height(self) -> int:
        return self.a

    @property
    def cells(self) -> dict[tuple[int, int], int]:
        return {(u, v): self.base + u + v for v in range(self.a) for u in range(self.width)}

    @property
    def corners(self) -> dict[str, tuple[int, int]]:
        return {
            "top": (0, 0),
            "left": (0, self.a - 1),
            "right": (self.width - 1, 0),
            "bottom": (self.width - 1, self.a - 1),
        }

    @property
    def labelled_corner(self) -> str:
        return "left" if self.kind == R else "right"


def rectangle_of(n: int, Y: Union[Component, int]) -> RectangleGrid:
    if isinstance(Y, int):
        if not 1 <= Y <= n:
            raise InputError(f"simple index {Y} out of range [1, {n}]")
        return RectangleGrid(n, SIMPLE, Y, Y + 1, 1)
    if not 1 <= Y.a < Y.b <= n + 1:
        raise InputError(f"bad boundary indices a={Y.a}, b={Y.b}")
    base = 1 if Y.kind == L else Y.b - Y.a
    return RectangleGrid(n, Y.kind, Y.a, Y.b, base)


class Cell(NamedTuple):
    label: int
    multiplicity: int
    cover: frozenset[int]


class Box(NamedTuple):
    cover: frozenset[int]
    u_range: tuple[int, int]
    v_range: tuple[int, int]


@dataclass(frozen=True)
class RectangleDiagram:
    n: int
    P: Label
    rectangles: tuple[RectangleGrid, ...]
    offsets: tuple[tuple[int, int], ...]
    cells: dict[tuple[int, int], Cell] = field(repr=False)
    boxes: tuple[Box, ...] = field(repr=False)
    box_rows: tuple[tuple[Box, ...], ...] = field(repr=False)
    central_line: int  # first v on the bottom-left side of the line
    degenerate: bool

    @property
    def rows(self) -> list[list[tuple[tuple[int, int], Cell]]]:
        """Diagonal rows in reading order: largest v first, each by increasing u."""
        by_v: dict[int, list] = {}
        for pos, cell in self.cells.items():
            by_v.setdefault(pos[1], []).append((pos, cell))
        return [sorted(by_v[v]) for v in sorted(by_v, reverse=True)]

    @property
    def box_row_counts(self) -> tuple[int, ...]:
        """Boxes per diagonal row of boxes, starting from the top right."""
        return tuple(len(r) for r in self.box_rows)

    def global_cells(self, t: int) -> dict[tuple[int, int], int]:
        du, dv = self.offsets[t]
        return {(u + du, v + dv): lab for (u, v), lab in self.rectangles[t].cells.items()}

    def starred(self, t: int) -> dict[tuple[int, int], int]:
        """rho*(Y): the part of rectangle ``t`` on the side of the line holding its labelled corner."""
        cells = self.global_cells(t)
        rect = self.rectangles[t]
        if rect.kind == SIMPLE:
            return cells
        if rect.kind == L:
            return {p: lab for p, lab in cells.items() if p[1] < self.central_line}
        return {p: lab for p, lab in cells.items() if p[1] >= self.central_line}

    def geometry(self) -> dict:
        """Drawing data in screen units: x = u - v, y = u + v (y pointing down)."""
        rects = []
        for t, rect in enumerate(self.rectangles):
            du, dv = self.offsets[t]
            u0, u1 = du - 0.5, du + rect.width - 0.5
            v0, v1 = dv - 0.5, dv + rect.height - 0.5
            rects.append({
                "kind": rect.kind,
                "outline": [_screen(u, v) for u, v in ((u0, v0), (u1, v0), (u1, v1), (u0, v1))],
            })
        us = [p[0] for p in self.cells]
        line_v = self.central_line - 0.5
        line = [_screen(min(us) - 1, line_v), _screen(max(us) + 1, line_v)]
        return {
            "cells": [
                {"x": _screen(*p)[0], "y": _screen(*p)[1], "label": c.label, "multiplicity": c.multiplicity}
                for p, c in sorted(self.cells.items())
            ],
            "rectangles": rects,
            "central_line": line,
        }

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "P": _label_str(self.P),
            "cells": [
                {"u": p[0], "v": p[1], "label": c.label, "multiplicity": c.multiplicity,
                 "cover": sorted(c.cover)}
                for p, c in sorted(self.cells.items())
            ],
            "box_row_counts": list(self.box_row_counts),
            "central_line": self.central_line,
            "degenerate_central_line": self.degenerate,
        }


def _screen(u, v):
    return (u - v, u + v)


def _label_str(P):
    return str(P) if isinstance(P, int) else P.code


def _check_label(n, P):
    if isinstance(P, int):
        if not 1 <= P <= n:
            raise InputError(f"simple index {P} out of range [1, {n}]")
    elif P.n != n:
        raise InputError(f"rank mismatch: {P.n} vs {n}")


def diagram(n: int, P: Label) -> RectangleDiagram:
    _check_label(n, P)
    return _diagram(n, P)


@lru_cache(maxsize=1024)
def _diagram(n, P):
    comps = [P] if isinstance(P, int) else components(P)
    rects = tuple(rectangle_of(n, Y) for Y in comps)
    offsets = [(0, 0)]
    for prev, cur in zip(rects, rects[1:]):
        # L then R: leftmost corners meet; R then L: rightmost corners meet
        corner = "left" if prev.kind == L else "right"
        pu, pv = prev.corners[corner]
        cu, cv = cur.corners[corner]
        du, dv = offsets[-1]
        offsets.append((du + pu - cu, dv + pv - cv))

    labels: dict[tuple[int, int], int] = {}
    cover: dict[tuple[int, int], set[int]] = {}
    for t, (rect, (du, dv)) in enumerate(zip(rects, offsets)):
        for (u, v), lab in rect.cells.items():
            pos = (u + du, v + dv)
            if labels.setdefault(pos, lab) != lab:
                raise InvariantViolation(f"glue mismatch at {pos} in D({_label_str(P)})")
            cover.setdefault(pos, set()).add(t)
    cells = {
        pos: Cell(labels[pos], (len(cover[pos]) + 1) // 2, frozenset(cover[pos]))
        for pos in labels
    }
    boxes = _boxes(cells)
    rows = _box_rows(boxes)
    line, degenerate = _central_line(rects, rows)
    return RectangleDiagram(n, P, rects, tuple(offsets), cells, tuple(boxes), rows, line, degenerate)


def _boxes(cells):
    seen = set()
    out = []
    for start in sorted(cells):
        if start in seen:
            continue
        key = cells[start].cover
        stack, comp = [start], []
        seen.add(start)
        while stack:
            u, v = stack.pop()
            comp.append((u, v))
            for nb in ((u + 1, v), (u - 1, v), (u, v + 1), (u, v - 1)):
                if nb in cells and nb not in seen and cells[nb].cover == key:
                    seen.add(nb)
                    stack.append(nb)
        us = [p[0] for p in comp]
        vs = [p[1] for p in comp]
        box = Box(key, (min(us), max(us)), (min(vs), max(vs)))
        if len(comp) != (box.u_range[1] - box.u_range[0] + 1) * (box.v_range[1] - box.v_range[0] + 1):
            raise InvariantViolation(f"box {box} is not a rectangle")
        out.append(box)
    return out


def _box_rows(boxes):
    groups: dict[tuple[int, int], list[Box]] = {}
    for b in boxes:
        groups.setdefault(b.v_range, []).append(b)
    ranges = sorted(groups)
    for r1, r2 in zip(ranges, ranges[1:]):
        if r1[1] >= r2[0]:
            raise InvariantViolation(f"box rows {r1} and {r2} overlap")
    return tuple(tuple(sorted(groups[r], key=lambda b: b.u_range)) for r in ranges)


def _central_line(rects, rows):
    """First v below the line, plus whether the choice was forced by convention."""
    if rects[0].kind == SIMPLE:
        # D(j) is read as a whole; the line plays no role
        return rows[-1][0].v_range[1] + 1, False
    parities = [len(r) % 2 for r in rows]
    changes = [t for t in range(1, len(parities)) if parities[t] != parities[t - 1]]
    if len(changes) > 1:
        raise InvariantViolation(f"box-row parities {parities} change more than once")
    if changes:
        return rows[changes[0]][0].v_range[0], False
    # One parity throughout: put everything on the labelled side of the first
    # rectangle, i.e. the top-right block for type L and the bottom-left block
    # for type R.
    first = rects[0].kind
    if first == R:
        return rows[0][0].v_range[0], True
    return rows[-1][0].v_range[1] + 1, True


# ---------------------------------------------------------------------------
# mu, F(P), S(P), v(P)
# ---------------------------------------------------------------------------

def mu(n: int, P: Label) -> tuple[int, ...]:
    D = diagram(n, P)
    return tuple(c.label for row in D.rows for _, c in row for _ in range(c.multiplicity))


@dataclass(frozen=True)
class MonomialWord:
    """Divided-power monomial F_{s_1}^{(m_1)} F_{s_2}^{(m_2)} ..."""

    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if any(m < 1 for _, m in self.letters):
            raise InputError("exponents must be positive")

    def expanded(self) -> tuple[int, ...]:
        return tuple(s for s, m in self.letters for _ in range(m))

    def __str__(self):
        return " ".join(f"F{s}" if m == 1 else f"F{s}^({m})" for s, m in self.letters)


def monomial_word(n: int, P: Label) -> MonomialWord:
    D = diagram(n, P)
    return MonomialWord(tuple((c.label, c.multiplicity) for row in D.rows for _, c in row))


def _row_roots(cells):
    by_v: dict[int, list[tuple[int, int]]] = {}
    for (u, v), lab in cells.items():
        by_v.setdefault(v, []).append((u, lab))
    out = set()
    for row in by_v.values():
        labs = [lab for _, lab in sorted(row)]
        if labs != list(range(labs[0], labs[0] + len(labs))):
            raise InvariantViolation(f"row labels {labs} are not consecutive")
        out.add(PositiveRoot(labs[0], labs[-1] + 1))
    return out


def s_set(n: int, P: Label) -> frozenset[PositiveRoot]:
    """S(P) (or S(j)): one root per diagonal row of each starred rectangle."""
    D = diagram(n, P)
    if D.degenerate:
        warnings.warn(
            f"central line of D({_label_str(P)}) fixed by the single-parity convention",
            DegenerateCentralLine,
            stacklevel=2,
        )
    out: set[PositiveRoot] = set()
    for t in range(len(D.rectangles)):
        out |= _row_roots(D.starred(t))
    return frozenset(out)


def v_vector(n: int, P: Label) -> tuple[int, ...]:
    """Indicator of S(P) along the root order of the standard word."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateCentralLine)
        S = s_set(n, P)
    return tuple(int(r in S) for r in root_order(standard_word(n)).roots)


def cell_label_counts(n: int, P: Label) -> Counter:
    """How many F_s factors F(P) carries for each s."""
    return Counter(monomial_word(n, P).expanded())

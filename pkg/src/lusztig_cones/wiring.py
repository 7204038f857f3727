"""Chamber diagrams (wiring diagrams) of reduced words and the arrangements Arr(Lambda).

Strands are numbered 1..n+1 from the top at the left end. Column j of the
diagram swaps the strands in positions i_j and i_j + 1 (counted from the top).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import InputError, InvariantViolation
from .quiver import ChamberSet, PartialQuiver, Quiver, chamber_set_of, partial_quiver_of, sub_partial_quivers
from .weyl import MinimalPair, ReducedWord, minimal_pairs


@dataclass(frozen=True)
class ChamberDiagram:
    word: ReducedWord
    snapshots: tuple[tuple[int, ...], ...]

    @property
    def crossings(self) -> tuple[int, ...]:
        return self.word.letters

    def geometry(self) -> dict:
        """Neutral drawing data: strand polylines, crossings and chamber label anchors.

        Column j spans x in [j, j+1]; position p (1 = top) sits at y = p - 1.
        """
        n1 = self.word.n + 1
        polylines: dict[int, list[tuple[float, float]]] = {s: [] for s in range(1, n1 + 1)}
        for col, snap in enumerate(self.snapshots):
            for pos, strand in enumerate(snap):
                polylines[strand].append((col, pos))
        # x of each snapshot is its column index; crossings happen between them
        crossings = [
            {"x": col + 0.5, "y": lvl - 0.5, "level": lvl}
            for col, lvl in enumerate(self.word.letters)
        ]
        labels = []
        for ch in chamber_sets(self.word):
            x = (ch.pair.s + ch.pair.s_prime) / 2 - 0.5
            labels.append({"x": x, "y": ch.pair.letter - 0.5, "label": "".join(map(str, sorted(ch.label)))})
        return {
            "width": len(self.snapshots) - 1,
            "height": n1 - 1,
            "strands": {s: pts for s, pts in polylines.items()},
            "crossings": crossings,
            "chambers": labels,
        }


class Chamber(NamedTuple):
    pair: MinimalPair
    label: ChamberSet


def chamber_diagram(word: ReducedWord) -> ChamberDiagram:
    perm = list(range(1, word.n + 2))
    snaps = [tuple(perm)]
    for x in word.letters:
        perm[x - 1], perm[x] = perm[x], perm[x - 1]
        snaps.append(tuple(perm))
    if snaps[-1] != tuple(range(word.n + 1, 0, -1)):
        raise InvariantViolation(f"{word} does not end in the reversed order")
    return ChamberDiagram(word, tuple(snaps))


def chamber_sets(word: ReducedWord) -> list[Chamber]:
    """One chamber per minimal pair: the strands below it, i.e. in positions letter+1..n+1."""
    snaps = chamber_diagram(word).snapshots
    out = []
    for pair in minimal_pairs(word):
        below = frozenset(snaps[pair.s][pair.letter:])
        for col in range(pair.s, pair.s_prime):
            if frozenset(snaps[col][pair.letter:]) != below:
                raise InvariantViolation(f"chamber label changes inside {pair} of {word}")
        out.append(Chamber(pair, below))
    return out


def chamber_partial_quivers(word: ReducedWord) -> list[PartialQuiver]:
    return [partial_quiver_of(word.n, ch.label) for ch in chamber_sets(word)]


# ---------------------------------------------------------------------------
# Arr(Lambda)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Arrangement:
    """Lines in the square [0, n] x [0, n]; Line_h runs from (0, n+1-h) to (n, h-1).

    ``lines[h]`` lists the corner points of Line_h from left to right.
    """

    n: int
    lam: frozenset[int]
    lines: dict

    def crossings(self) -> list[tuple[Fraction, Fraction, int, int]]:
        """(x, y, h, h') for every pair of lines, sorted by x then bottom-up."""
        out = []
        hs = sorted(self.lines)
        for a in range(len(hs)):
            for b in range(a + 1, len(hs)):
                pt = _intersect(self.lines[hs[a]], self.lines[hs[b]])
                if pt is None:
                    raise InvariantViolation(f"Line_{hs[a]} and Line_{hs[b]} do not cross")
                out.append((pt[0], pt[1], hs[a], hs[b]))
        out.sort(key=lambda c: (c[0], c[1]))
        return out

    def sweep_word(self) -> tuple[int, ...]:
        """Crossing levels read left to right (ties bottom-up)."""
        order = list(range(1, self.n + 2))
        letters = []
        for _, _, h1, h2 in self.crossings():
            p1, p2 = order.index(h1), order.index(h2)
            if abs(p1 - p2) != 1:
                raise InvariantViolation(f"Line_{h1} and Line_{h2} are not adjacent when they cross")
            p = min(p1, p2)
            letters.append(p + 1)
            order[p], order[p + 1] = order[p + 1], order[p]
        return tuple(letters)

    def geometry(self) -> dict:
        return {
            "n": self.n,
            "lambda": sorted(self.lam),
            "lines": {h: [(float(x), float(y)) for x, y in pts] for h, pts in self.lines.items()},
            "crossings": [(float(x), float(y)) for x, y, _, _ in self.crossings()],
        }


def arrangement(n: int, lam) -> Arrangement:
    lam = frozenset(int(h) for h in lam)
    if not lam <= frozenset(range(2, n + 1)):
        raise InputError(f"Lambda must be a subset of [2, {n}], got {sorted(lam)}")
    lines = {}
    for h in range(1, n + 2):
        start = (Fraction(0), Fraction(n + 1 - h))
        end = (Fraction(n), Fraction(h - 1))
        if h in (1, n + 1):
            lines[h] = (start, end)
        elif h in lam:
            # down to the bottom edge first, then up
            lines[h] = (start, (Fraction(n + 1 - h), Fraction(0)), end)
        else:
            lines[h] = (start, (Fraction(h - 1), Fraction(n)), end)
    return Arrangement(n, lam, lines)


def _segments(pts):
    return list(zip(pts, pts[1:]))


def _intersect(line1, line2):
    hits = set()
    for (p, q) in _segments(line1):
        for (r, s) in _segments(line2):
            pt = _segment_cross(p, q, r, s)
            if pt is not None:
                hits.add(pt)
    if len(hits) > 1:
        raise InvariantViolation("two lines of an arrangement cross more than once")
    return next(iter(hits)) if hits else None


def _segment_cross(p, q, r, s):
    d1 = (q[0] - p[0], q[1] - p[1])
    d2 = (s[0] - r[0], s[1] - r[1])
    den = d1[0] * d2[1] - d1[1] * d2[0]
    if den == 0:
        return None
    t = ((r[0] - p[0]) * d2[1] - (r[1] - p[1]) * d2[0]) / den
    u = ((r[0] - p[0]) * d1[1] - (r[1] - p[1]) * d1[0]) / den
    if 0 <= t <= 1 and 0 <= u <= 1:
        return (p[0] + t * d1[0], p[1] + t * d1[1])
    return None


def compatible_word(Q: Quiver) -> ReducedWord:
    """A reduced word compatible with ``Q``, read off Arr(Lambda) by sweeping."""
    letters = arrangement(Q.n, Q.left_edges).sweep_word()
    return ReducedWord(Q.n, letters)


def is_compatible(word: ReducedWord, Q: Quiver) -> bool:
    """Chamber sets of ``word`` equal {l(P) : P <= Q} as multisets."""
    if word.n != Q.n:
        raise InputError(f"rank mismatch: {word.n} vs {Q.n}")
    ours = Counter(ch.label for ch in chamber_sets(word))
    target = Counter(chamber_set_of(P) for P in sub_partial_quivers(Q))
    return ours == target

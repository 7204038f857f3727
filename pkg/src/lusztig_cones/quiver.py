"""Partial quivers of type A_n, their components and chamber sets.

Edges are numbered 2..n from the right-hand end. The string form lists the
symbols left to right, i.e. edge n first and edge 2 last, so for n = 5 the
string "LRL-" has L on edge 5, R on edge 4, L on edge 3 and edge 2 undirected.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .errors import DomainError, InputError

L, R, UNDIRECTED = "L", "R", "-"

ChamberSet = frozenset


class _EdgeString:
    n: int
    code: str

    def _normalize(self, allowed):
        code = self.code.replace("\u2212", "-")
        object.__setattr__(self, "code", code)
        if self.n < 1:
            raise InputError(f"rank must be positive, got {self.n}")
        if len(code) != self.n - 1:
            raise InputError(f"{code!r} needs {self.n - 1} symbols for rank {self.n}")
        if set(code) - set(allowed):
            raise InputError(f"{code!r} may only use {', '.join(allowed)}")

    def edge(self, e: int) -> str:
        """Symbol on edge ``e`` (2 <= e <= n)."""
        if not 2 <= e <= self.n:
            raise InputError(f"edge {e} out of range [2, {self.n}]")
        return self.code[self.n - e]

    @property
    def edges(self) -> dict[int, str]:
        return {e: self.edge(e) for e in range(2, self.n + 1)}

    @property
    def directed_edges(self) -> list[int]:
        """Directed edge numbers, largest (leftmost) first."""
        return [e for e in range(self.n, 1, -1) if self.edge(e) != UNDIRECTED]

    @property
    def left_edges(self) -> frozenset[int]:
        return frozenset(e for e in range(2, self.n + 1) if self.edge(e) == L)

    def to_json(self):
        return {"n": self.n, "edges": {str(e): s for e, s in self.edges.items()}}

    @classmethod
    def from_json(cls, obj):
        n = int(obj["n"])
        edges = {int(e): s for e, s in obj["edges"].items()}
        return cls(n, "".join(edges[e] for e in range(n, 1, -1)))

    def __str__(self):
        return self.code


@dataclass(frozen=True)
class PartialQuiver(_EdgeString):
    n: int
    code: str

    def __post_init__(self):
        self._normalize((L, R, UNDIRECTED))
        directed = [p for p, c in enumerate(self.code) if c != UNDIRECTED]
        if not directed:
            raise InputError("a partial quiver needs at least one directed edge")
        if directed[-1] - directed[0] + 1 != len(directed):
            raise InputError(f"directed edges of {self.code!r} are not contiguous")

    @property
    def is_quiver(self) -> bool:
        return UNDIRECTED not in self.code


@dataclass(frozen=True)
class Quiver(_EdgeString):
    """A type A_n quiver: every edge directed. Rank 1 has the empty code."""

    n: int
    code: str

    def __post_init__(self):
        self._normalize((L, R))

    @property
    def lambda_set(self) -> frozenset[int]:
        """Edges pointing to the left."""
        return self.left_edges

    def as_partial(self) -> PartialQuiver:
        return PartialQuiver(self.n, self.code)


def parse_partial_quiver(n: int, text: str) -> PartialQuiver:
    return PartialQuiver(n, text.strip())


def parse_quiver(n: int, text: str) -> Quiver:
    return Quiver(n, text.strip())


class Component(NamedTuple):
    """Maximal same-orientation run of edges ``lo..hi``; boundary indices a < b."""

    kind: str
    lo: int
    hi: int
    a: int
    b: int

    @property
    def edge_range(self) -> range:
        return range(self.lo, self.hi + 1)

    @property
    def size(self):
        return self.hi - self.lo + 1


def components(P: PartialQuiver) -> list[Component]:
    """Components ordered left to right (decreasing edge numbers)."""
    out: list[Component] = []
    run: list[int] = []
    for e in P.directed_edges:
        if run and P.edge(run[-1]) != P.edge(e):
            out.append(_component(P, run))
            run = []
        run.append(e)
    out.append(_component(P, run))
    return out


def _component(P, run):
    lo, hi = min(run), max(run)
    # a: edge number just right of the run (1 at the end); b: just left (n+1)
    return Component(P.edge(lo), lo, hi, lo - 1, hi + 1)


def chamber_set_of(P: PartialQuiver) -> ChamberSet:
    """The bijection l from partial quivers to chamber sets."""
    n = P.n
    directed = P.directed_edges
    leftmost, rightmost = directed[0], directed[-1]
    members = set(P.left_edges)
    if P.edge(rightmost) == R:
        members.update(range(1, rightmost))
    if P.edge(leftmost) == R:
        members.update(range(leftmost + 1, n + 2))
    return frozenset(members)


def is_chamber_set(n: int, c) -> bool:
    c = frozenset(c)
    if not c or not c <= frozenset(range(1, n + 2)):
        return False
    lo, hi = min(c), max(c)
    if len(c) == hi - lo + 1 and (lo == 1 or hi == n + 1):
        return False
    return True


def partial_quiver_of(n: int, c) -> PartialQuiver:
    """Inverse of :func:`chamber_set_of`."""
    c = frozenset(c)
    if not is_chamber_set(n, c):
        raise DomainError(f"{sorted(c)} is not a chamber set of rank {n}")
    return _inverse_table(n)[c]


@lru_cache(maxsize=None)
def _inverse_table(n):
    table = {}
    for P in all_partial_quivers(n):
        c = chamber_set_of(P)
        if c in table:
            raise AssertionError(f"l is not injective: {P} and {table[c]}")
        table[c] = P
    return table


def all_partial_quivers(n: int) -> list[PartialQuiver]:
    out = []
    for hi in range(n, 1, -1):
        for lo in range(hi, 1, -1):
            size = hi - lo + 1
            for mask in range(1 << size):
                sym = ["-"] * (n - 1)
                for t, e in enumerate(range(hi, lo - 1, -1)):
                    sym[n - e] = R if (mask >> (size - 1 - t)) & 1 else L
                out.append(PartialQuiver(n, "".join(sym)))
    return out


def all_quivers(n: int) -> list[Quiver]:
    """All 2^(n-1) orientations, in lexicographic order of their codes."""
    out = [""]
    for _ in range(n - 1):
        out = [c + s for c in out for s in (L, R)]
    return [Quiver(n, c) for c in out]


def leq(P: PartialQuiver, Q) -> bool:
    """P <= Q: every directed edge of P is directed the same way in Q."""
    if P.n != Q.n:
        raise InputError(f"rank mismatch: {P.n} vs {Q.n}")
    return all(Q.edge(e) == P.edge(e) for e in P.directed_edges)


def sub_partial_quivers(Q: Quiver) -> list[PartialQuiver]:
    """Every P <= Q, by interval of directed edges (leftmost edge first)."""
    n = Q.n
    out = []
    for hi in range(n, 1, -1):
        for lo in range(hi, 1, -1):
            sym = ["-"] * (n - 1)
            for e in range(lo, hi + 1):
                sym[n - e] = Q.edge(e)
            out.append(PartialQuiver(n, "".join(sym)))
    return out

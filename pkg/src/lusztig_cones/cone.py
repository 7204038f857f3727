"""Lusztig cones: the inequality matrix of a reduced word, its exact inverse,
labelled spanning vectors and the root multisets M(P), M(j)."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Union

from .errors import InputError, InvariantViolation
from .quiver import PartialQuiver, components, partial_quiver_of
from .weyl import MinimalPair, PositiveRoot, ReducedWord, minimal_pairs, root_order
from .wiring import chamber_sets

Label = Union[int, PartialQuiver]


def label_str(label: Label) -> str:
    return str(label) if isinstance(label, int) else label.code


# ---------------------------------------------------------------------------
# exact integer linear algebra
# ---------------------------------------------------------------------------

def bareiss_inverse(M: Sequence[Sequence[int]]) -> tuple[int, list[list[int]]]:
    """Fraction-free Gauss-Jordan on [M | I].

    Returns ``(det, adj)`` with ``M @ adj == det * I``. All intermediate
    divisions are exact, so everything stays in Python ints.
    """
    size = len(M)
    A = [list(map(int, row)) + [int(r == c) for c in range(size)] for r, row in enumerate(M)]
    if any(len(row) != 2 * size for row in A):
        raise InputError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(size):
        piv = next((r for r in range(k, size) if A[r][k] != 0), None)
        if piv is None:
            return 0, []
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        pk = A[k]
        for r in range(size):
            if r == k:
                continue
            row = A[r]
            f = row[k]
            for c in range(2 * size):
                num = pk[k] * row[c] - f * pk[c]
                q, rem = divmod(num, prev)
                if rem:
                    raise InvariantViolation("inexact division in fraction-free elimination")
                row[c] = q
        prev = pk[k]
    det = sign * prev
    # every diagonal entry now equals prev; the right block is prev * M^{-1}
    adj = [[sign * x for x in row[size:]] for row in A]
    return det, adj


def unimodular_inverse(M: Sequence[Sequence[int]]) -> list[list[int]]:
    det, adj = bareiss_inverse(M)
    if abs(det) != 1:
        raise InvariantViolation(f"matrix is not unimodular (det = {det})")
    inv = [[det * x for x in row] for row in adj]
    if matmul(M, inv) != identity(len(M)):
        raise InvariantViolation("computed inverse fails M @ inv == I")
    return inv


def matmul(A, B):
    cols = list(zip(*B))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in A]


def identity(size):
    return [[int(r == c) for c in range(size)] for r in range(size)]


# ---------------------------------------------------------------------------
# cone matrix and spanning vectors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConeMatrix:
    word: ReducedWord
    rows: tuple[tuple[int, ...], ...]
    # simple rows carry the int j, chamber rows their MinimalPair
    row_labels: tuple[Union[int, MinimalPair], ...]

    def evaluate(self, a: Sequence[int]) -> list[int]:
        if len(a) != self.word.k:
            raise InputError(f"vector has length {len(a)}, expected {self.word.k}")
        return [sum(p * x for p, x in zip(row, a)) for row in self.rows]

    def contains(self, a: Sequence[int]) -> bool:
        return all(x >= 0 for x in self.evaluate(a))

    def inverse(self) -> tuple[tuple[int, ...], ...]:
        return _inverse(self)


@lru_cache(maxsize=4096)
def _inverse(cm):
    return tuple(tuple(r) for r in unimodular_inverse(cm.rows))


def cone_matrix(word: ReducedWord) -> ConeMatrix:
    return _cone_matrix(word)


@lru_cache(maxsize=4096)
def _cone_matrix(word):
    k, n = word.k, word.n
    order = root_order(word)
    rows: list[tuple[int, ...]] = []
    labels: list[Union[int, MinimalPair]] = []
    for j in range(1, n + 1):
        row = [0] * k
        row[order.position((j, j + 1))] = 1
        rows.append(tuple(row))
        labels.append(j)
    letters = word.letters
    for pair in minimal_pairs(word):
        row = [0] * k
        for p in range(pair.s, pair.s_prime - 1):
            if abs(letters[p] - pair.letter) == 1:
                row[p] = 1
        row[pair.s - 1] = -1
        row[pair.s_prime - 1] = -1
        rows.append(tuple(row))
        labels.append(pair)
    return ConeMatrix(word, tuple(rows), tuple(labels))


@dataclass(frozen=True)
class SpanningVector:
    word: ReducedWord
    label: Label
    coords: tuple[int, ...]

    @property
    def roots(self) -> "RootMultiset":
        order = root_order(self.word).roots
        return RootMultiset.from_counts({order[p]: c for p, c in enumerate(self.coords) if c})

    def expanded_word(self) -> tuple[int, ...]:
        """Letters of the monomial F_{i_1}^{a_1} ... F_{i_k}^{a_k}, exponents written out."""
        return tuple(x for x, c in zip(self.word.letters, self.coords) for _ in range(c))

    def to_json(self):
        return {
            "word": list(self.word.letters),
            "label": label_str(self.label),
            "coords": list(self.coords),
            "roots": self.roots.to_json(),
        }


def spanning_vectors(word: ReducedWord) -> list[SpanningVector]:
    """Columns of the inverse cone matrix, labelled by j or by the chamber's partial quiver."""
    cm = cone_matrix(word)
    inv = cm.inverse()
    chambers = {ch.pair: ch.label for ch in chamber_sets(word)}
    out = []
    for c, rl in enumerate(cm.row_labels):
        coords = tuple(inv[r][c] for r in range(word.k))
        if min(coords) < 0:
            raise InvariantViolation(f"negative spanning vector {coords} for {word}")
        label = rl if isinstance(rl, int) else partial_quiver_of(word.n, chambers[rl])
        out.append(SpanningVector(word, label, coords))
    return out


def spanning_vector(word: ReducedWord, label: Label) -> SpanningVector:
    for sv in spanning_vectors(word):
        if sv.label == label:
            return sv
    raise InputError(f"{word} has no spanning vector labelled {label_str(label)}")


def cone_contains(word: ReducedWord, a: Sequence[int]) -> bool:
    return cone_matrix(word).contains([int(x) for x in a])


# ---------------------------------------------------------------------------
# root multisets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootMultiset:
    items: tuple[tuple[PositiveRoot, int], ...]

    @classmethod
    def from_counts(cls, counts) -> "RootMultiset":
        return cls(tuple(sorted((PositiveRoot(*r), int(m)) for r, m in counts.items() if m)))

    def as_dict(self) -> dict[PositiveRoot, int]:
        return dict(self.items)

    def __getitem__(self, root) -> int:
        return self.as_dict().get(PositiveRoot(*root), 0)

    def __len__(self):
        return sum(m for _, m in self.items)

    @property
    def support(self) -> frozenset[PositiveRoot]:
        return frozenset(r for r, _ in self.items)

    def to_json(self):
        return [{"i": r.i, "j": r.j, "mult": m} for r, m in self.items]

    def __str__(self):
        return "{" + ", ".join(f"{r}" + (f"^{m}" if m > 1 else "") for r, m in self.items) + "}"


def multiset_M(n: int, label: Label) -> RootMultiset:
    if isinstance(label, int):
        if not 1 <= label <= n:
            raise InputError(f"simple index {label} out of range [1, {n}]")
        return RootMultiset.from_counts(
            {(p, q): 1 for p in range(1, label + 1) for q in range(label + 1, n + 2)}
        )
    if label.n != n:
        raise InputError(f"rank mismatch: {label.n} vs {n}")
    cover: Counter = Counter()
    for Y in components(label):
        for i in range(1, Y.a + 1):
            for j in range(Y.b, n + 2):
                cover[(i, j)] += 1
    return RootMultiset.from_counts({r: (t + 1) // 2 for r, t in cover.items()})

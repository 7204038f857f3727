"""Reduced words for the longest element of S_{n+1}, their moves and root orders.

Letters and positions exposed to callers are 1-based, matching the usual
notation s_1, ..., s_n and (i_1, ..., i_k). Coordinates attached to a word are
plain Python sequences indexed from 0.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from . import _accel
from .errors import CapacityError, InputError

DEFAULT_RANK_LIMIT = 5


def rank_limit() -> int:
    """Largest rank for which the full set of reduced words is materialized."""
    raw = os.environ.get("LUSZTIG_CONES_RANK_LIMIT")
    if raw is None:
        return DEFAULT_RANK_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"LUSZTIG_CONES_RANK_LIMIT must be an integer, got {raw!r}")


def word_length(n: int) -> int:
    return n * (n + 1) // 2


class PositiveRoot(NamedTuple):
    """alpha_i + alpha_{i+1} + ... + alpha_{j-1}, i.e. e_i - e_j."""

    i: int
    j: int

    def __str__(self):
        return f"a{self.i}{self.j}" if self.j < 10 else f"a({self.i},{self.j})"

    @property
    def height(self):
        return self.j - self.i


class MinimalPair(NamedTuple):
    """Consecutive occurrences ``s < s_prime`` (1-based) of ``letter``."""

    s: int
    s_prime: int
    letter: int


def _check_letters(n, letters):
    if n < 1:
        raise InputError(f"rank must be positive, got {n}")
    for x in letters:
        if not 1 <= x <= n:
            raise InputError(f"letter {x} out of range [1, {n}]")


def _product_is_w0(n, letters):
    perm = list(range(1, n + 2))
    for x in letters:
        if perm[x - 1] > perm[x]:
            return False
        perm[x - 1], perm[x] = perm[x], perm[x - 1]
    return perm == list(range(n + 1, 0, -1))


def is_reduced_w0(n: int, letters: Sequence[int]) -> bool:
    """True iff ``letters`` is a reduced expression for w0 in rank ``n``."""
    letters = tuple(int(x) for x in letters)
    _check_letters(n, letters)
    return len(letters) == word_length(n) and _product_is_w0(n, letters)


@dataclass(frozen=True)
class ReducedWord:
    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        if not is_reduced_w0(self.n, letters):
            raise InputError(f"{letters} is not a reduced word for w0 in rank {self.n}")

    @classmethod
    def _trusted(cls, n, letters):
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "letters", tuple(letters))
        return obj

    @property
    def k(self):
        return len(self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, pos):
        return self.letters[pos]

    def __str__(self):
        return "(" + ",".join(map(str, self.letters)) + ")"


def parse_letters(text: str) -> tuple[int, ...]:
    """Parse "1,3,2" / "1 3 2" / "(1, 3, 2)" into a tuple of ints."""
    body = text.strip().strip("()[]")
    if not body:
        return ()
    parts = [p for p in re.split(r"[,\s]+", body) if p]
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise InputError(f"cannot parse word {text!r}")


def as_word(n: int, word) -> ReducedWord:
    if isinstance(word, ReducedWord):
        if word.n != n:
            raise InputError(f"word {word} has rank {word.n}, expected {n}")
        return word
    if isinstance(word, str):
        word = parse_letters(word)
    return ReducedWord(n, tuple(word))


def standard_word(n: int) -> ReducedWord:
    """The word (n, n-1, n, n-2, n-1, n, ..., 1, 2, ..., n)."""
    if n < 1:
        raise InputError(f"rank must be positive, got {n}")
    return _standard_word(n)


@lru_cache(maxsize=None)
def _standard_word(n):
    letters = []
    for m in range(n, 0, -1):
        letters.extend(range(m, n + 1))
    return ReducedWord._trusted(n, letters)


def enumerate_reduced_words(n: int, limit: int | None = None) -> Iterator[ReducedWord]:
    """Every reduced word of w0, each once, in lexicographic order."""
    for row in reduced_words_array(n, limit):
        yield ReducedWord._trusted(n, row.tolist())


def reduced_words_array(n: int, limit: int | None = None) -> np.ndarray:
    limit = rank_limit() if limit is None else limit
    if n < 1:
        raise InputError(f"rank must be positive, got {n}")
    if n > limit:
        raise CapacityError(f"rank {n} exceeds the enumeration limit {limit}")
    return _cached_words(n)


@lru_cache(maxsize=8)
def _cached_words(n):
    arr = _accel.reduced_words_array(n)
    arr.setflags(write=False)
    return arr


# ---------------------------------------------------------------------------
# moves
# ---------------------------------------------------------------------------

COMMUTATION = "commutation"
BRAID = "braid"


def apply_move(letters: Sequence[int], kind: str, pos: int) -> tuple[int, ...]:
    """Apply a move at 0-based ``pos``; no validity check beyond the pattern."""
    w = list(letters)
    if kind == COMMUTATION:
        w[pos], w[pos + 1] = w[pos + 1], w[pos]
    else:
        a, b = w[pos], w[pos + 1]
        w[pos:pos + 3] = [b, a, b]
    return tuple(w)


def _local_moves(letters):
    out = []
    k = len(letters)
    for p in range(k - 1):
        a, b = letters[p], letters[p + 1]
        if abs(a - b) > 1:
            out.append((COMMUTATION, p))
        elif abs(a - b) == 1 and p + 2 < k and letters[p + 2] == a:
            out.append((BRAID, p))
    return out


def moves(word: ReducedWord) -> list[tuple[str, int, ReducedWord]]:
    """All words one commutation or one long braid move away; positions are 1-based."""
    return [
        (kind, p + 1, ReducedWord._trusted(word.n, apply_move(word.letters, kind, p)))
        for kind, p in _local_moves(word.letters)
    ]


def _bring_to_front(w, target, start, path):
    # w[start:] is a reduced word of some x with left descent `target`
    head = w[start]
    if head == target:
        return
    _bring_to_front(w, target, start + 1, path)
    if abs(head - target) > 1:
        w[start], w[start + 1] = w[start + 1], w[start]
        path.append((COMMUTATION, start))
    else:
        _bring_to_front(w, head, start + 2, path)
        w[start:start + 3] = [target, head, target]
        path.append((BRAID, start))


def move_path(src: Sequence[int], dst: Sequence[int]) -> list[tuple[str, int]]:
    """A sequence of (kind, 0-based position) moves carrying ``src`` to ``dst``.

    Both must be reduced words of the same element; the path is built by
    bringing each letter of ``dst`` to the front of the remaining suffix.
    """
    w = list(src)
    if len(w) != len(dst):
        raise InputError("words of different length")
    path: list[tuple[str, int]] = []
    for p, target in enumerate(dst):
        _bring_to_front(w, target, p, path)
    if tuple(w) != tuple(dst):
        raise InputError(f"{tuple(src)} and {tuple(dst)} do not represent the same element")
    return path


def word_starting_with(word: ReducedWord, letter: int) -> tuple[ReducedWord, list[tuple[str, int]]]:
    """A reduced word of w0 beginning with ``letter``, plus the move path from ``word``."""
    w = list(word.letters)
    path: list[tuple[str, int]] = []
    _bring_to_front(w, letter, 0, path)
    return ReducedWord._trusted(word.n, w), path


# ---------------------------------------------------------------------------
# commutation equivalence and classes
# ---------------------------------------------------------------------------

def commutation_normal_form(letters: Sequence[int]) -> tuple[int, ...]:
    """Foata-style normal form: stack each letter on the lowest admissible level.

    A letter must sit strictly above every earlier letter it does not commute
    with (equal or adjacent letters). Levels are then read bottom-up, each
    sorted.
    """
    levels: list[list[int]] = []
    placed: list[tuple[int, int]] = []
    for x in letters:
        lvl = 0
        for y, ly in placed:
            if abs(x - y) <= 1 and ly + 1 > lvl:
                lvl = ly + 1
        placed.append((x, lvl))
        if lvl == len(levels):
            levels.append([])
        levels[lvl].append(x)
    return tuple(x for level in levels for x in sorted(level))


def commutation_equivalent(n: int, u: Sequence[int], v: Sequence[int]) -> bool:
    """True iff ``u`` becomes ``v`` by swapping adjacent letters that differ by more than 1."""
    u = tuple(int(x) for x in u)
    v = tuple(int(x) for x in v)
    _check_letters(n, u)
    _check_letters(n, v)
    if sorted(u) != sorted(v):
        return False
    return commutation_normal_form(u) == commutation_normal_form(v)


@dataclass(frozen=True)
class CommutationClasses:
    n: int
    words: np.ndarray
    labels: np.ndarray
    braid_edges: frozenset[tuple[int, int]]

    @property
    def count(self):
        return int(self.labels.max()) + 1 if self.labels.size else 0

    def members(self, c: int) -> list[ReducedWord]:
        return [ReducedWord._trusted(self.n, r.tolist()) for r in self.words[self.labels == c]]

    def representative(self, c: int) -> ReducedWord:
        first = int(np.argmax(self.labels == c))
        return ReducedWord._trusted(self.n, self.words[first].tolist())

    def representatives(self) -> list[ReducedWord]:
        _, first = np.unique(self.labels, return_index=True)
        return [ReducedWord._trusted(self.n, self.words[f].tolist()) for f in sorted(first)]

    def class_of(self, word: ReducedWord) -> int:
        key = np.asarray(word.letters, dtype=np.int8)
        hit = np.nonzero((self.words == key).all(axis=1))[0]
        if hit.size == 0:
            raise InputError(f"{word} is not a reduced word of rank {self.n}")
        return int(self.labels[hit[0]])

    def partition(self) -> list[list[ReducedWord]]:
        return [self.members(c) for c in range(self.count)]


def commutation_classes(n: int, limit: int | None = None) -> CommutationClasses:
    """Partition of all reduced words into commutation classes, with braid adjacency."""
    words = reduced_words_array(n, limit)
    labels = _accel.commutation_class_labels(words, n)
    return CommutationClasses(n, words, labels, _braid_edges(words, labels, n))


def _braid_edges(words, labels, n):
    count, k = words.shape
    if k < 3:
        return frozenset()
    base = np.int64(n + 1)
    powers = base ** np.arange(k - 1, -1, -1, dtype=np.int64)
    w = words.astype(np.int64)
    keys = w @ powers
    edges = set()
    for p in range(k - 2):
        a, b, c = w[:, p], w[:, p + 1], w[:, p + 2]
        mask = (np.abs(a - b) == 1) & (a == c)
        if not mask.any():
            continue
        delta = (b - a)[mask] * (powers[p] - powers[p + 1] + powers[p + 2])
        hit = np.searchsorted(keys, keys[mask] + delta)
        for x, y in zip(labels[mask].tolist(), labels[hit].tolist()):
            if x != y:
                edges.add((min(x, y), max(x, y)))
    return frozenset(edges)


# ---------------------------------------------------------------------------
# root orders and minimal pairs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootOrder:
    word: ReducedWord
    roots: tuple[PositiveRoot, ...]

    def position(self, root) -> int:
        """0-based coordinate position carrying ``root``."""
        return self._index()[PositiveRoot(*root)]

    def _index(self):
        cache = self.__dict__.get("_idx")
        if cache is None:
            cache = {r: p for p, r in enumerate(self.roots)}
            object.__setattr__(self, "_idx", cache)
        return cache


def root_order(word: ReducedWord) -> RootOrder:
    """alpha^l = s_{i_1} ... s_{i_{l-1}} (alpha_{i_l}) for l = 1..k."""
    return _root_order(word)


@lru_cache(maxsize=4096)
def _root_order(word):
    # perm[p] = w(p+1) for the prefix product w; alpha^l = e_{w(i)} - e_{w(i+1)}
    perm = list(range(1, word.n + 2))
    roots = []
    for x in word.letters:
        a, b = perm[x - 1], perm[x]
        roots.append(PositiveRoot(a, b))
        perm[x - 1], perm[x] = b, a
    return RootOrder(word, tuple(roots))


def minimal_pairs(word: ReducedWord) -> list[MinimalPair]:
    """Consecutive repetitions of each letter, ordered by first position."""
    last: dict[int, int] = {}
    pairs = []
    for p, x in enumerate(word.letters, start=1):
        if x in last:
            pairs.append(MinimalPair(last[x], p, x))
        last[x] = p
    pairs.sort()
    return pairs

"""Kashiwara operators on Lusztig data for the standard word.

Coordinates are always taken in the context of the standard word
(n, n-1, n, n-2, n-1, n, ..., 1, 2, ..., n); ``v[i, j]`` means the coordinate
at the position where that word's root order places alpha_ij.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .. import _accel
from ..errors import DomainError, InputError, InvariantViolation
from ..weyl import ReducedWord, as_word, root_order, standard_word


# ---------------------------------------------------------------------------
# data types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LusztigData:
    word: ReducedWord
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(x) for x in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != self.word.k:
            raise InputError(f"expected {self.word.k} coordinates, got {len(coords)}")
        if min(coords, default=0) < 0:
            raise InputError(f"Lusztig data must be natural, got {coords}")

    @property
    def n(self) -> int:
        return self.word.n

    def v(self, i: int, j: int) -> int:
        return self.coords[root_order(self.word).position((i, j))]

    def to_json(self):
        return {"context": list(self.word.letters), "coords": list(self.coords)}


@dataclass(frozen=True)
class StringData:
    word: ReducedWord
    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(x) for x in self.coords))
        if len(self.coords) != self.word.k:
            raise InputError(f"expected {self.word.k} coordinates, got {len(self.coords)}")

    def to_json(self):
        return {"word": list(self.word.letters), "string": list(self.coords)}


def zero(n: int) -> LusztigData:
    return LusztigData(standard_word(n), (0,) * (n * (n + 1) // 2))


def lusztig_data(n: int, coords: Sequence[int]) -> LusztigData:
    return LusztigData(standard_word(n), tuple(coords))


def from_root_set(n: int, roots) -> LusztigData:
    """0/1 data with a 1 exactly at the given roots."""
    order = root_order(standard_word(n))
    c = [0] * order.word.k
    for r in roots:
        c[order.position(r)] = 1
    return LusztigData(order.word, tuple(c))


@lru_cache(maxsize=None)
def standard_index(n: int) -> np.ndarray:
    """idx[i, j] = 0-based position of alpha_ij in the standard word's root order."""
    idx = -np.ones((n + 2, n + 2), dtype=np.int64)
    for p, r in enumerate(root_order(standard_word(n)).roots):
        idx[r.i, r.j] = p
    idx.setflags(write=False)
    return idx


@lru_cache(maxsize=None)
def _index_lists(n):
    return standard_index(n).tolist()


def _check_context(v: LusztigData):
    if v.word != standard_word(v.n):
        raise InputError(f"operator needs the standard word context, got {v.word}")


def _check_letter(n, i):
    if not 1 <= i <= n:
        raise InputError(f"letter {i} out of range [1, {n}]")


# ---------------------------------------------------------------------------
# Reineke's rule
# ---------------------------------------------------------------------------

class FProfile(NamedTuple):
    i: int
    values: tuple[int, ...]  # f_{i,j} for j = i+1 .. n+1

    def at(self, j: int) -> int:
        return self.values[j - self.i - 1]

    @property
    def argmax_min(self) -> int:
        best = max(self.values)
        return self.i + 1 + self.values.index(best)

    @property
    def argmax_max(self) -> int:
        best = max(self.values)
        return self.i + 1 + len(self.values) - 1 - self.values[::-1].index(best)


def f_profile(v: LusztigData, i: int) -> FProfile:
    """f_ij = sum_{l >= j} v_il - sum_{l >= j+1} v_{i+1,l} for j in [i+1, n+1]."""
    _check_context(v)
    n = v.n
    _check_letter(n, i)
    idx = _index_lists(n)
    c = v.coords
    vals = []
    s1 = s2 = 0
    for j in range(n + 1, i, -1):
        s1 += c[idx[i][j]]
        vals.append(s1 - s2)
        if j >= i + 2:
            s2 += c[idx[i + 1][j]]
    return FProfile(i, tuple(reversed(vals)))


def ftilde(v: LusztigData, i: int) -> LusztigData:
    prof = f_profile(v, i)
    j0 = prof.argmax_min
    idx = _index_lists(v.n)
    c = list(v.coords)
    c[idx[i][j0]] += 1
    if j0 != i + 1:
        c[idx[i + 1][j0]] -= 1
        if c[idx[i + 1][j0]] < 0:
            raise InvariantViolation(f"F{i} drove v[{i + 1},{j0}] negative on {v.coords}")
    return LusztigData(v.word, tuple(c))


def etilde(v: LusztigData, i: int) -> Optional[LusztigData]:
    """Inverse of :func:`ftilde`; ``None`` when epsilon_i(v) = 0."""
    prof = f_profile(v, i)
    j1 = prof.argmax_max
    idx = _index_lists(v.n)
    c = list(v.coords)
    if c[idx[i][j1]] == 0:
        return None
    c[idx[i][j1]] -= 1
    if j1 != i + 1:
        c[idx[i + 1][j1]] += 1
    return LusztigData(v.word, tuple(c))


def epsilon(v: LusztigData, i: int) -> int:
    count = 0
    cur = etilde(v, i)
    while cur is not None:
        count += 1
        cur = etilde(cur, i)
    return count


def ftilde_power(v: LusztigData, i: int, times: int) -> LusztigData:
    for _ in range(times):
        v = ftilde(v, i)
    return v


# ---------------------------------------------------------------------------
# crossing-out rule on 0/1 states
# ---------------------------------------------------------------------------

ZERO, MINUS, PLUS = "0", "-", "+"
_PAIR_SYMBOL = {(0, 0): ZERO, (0, 1): MINUS, (1, 0): PLUS}


@dataclass(frozen=True)
class SymbolSequence:
    i: int
    symbols: tuple[str, ...]
    reduced: tuple[str, ...]
    kept: tuple[int, ...]  # original position of each reduced symbol
    case: str
    selected: int  # position m in ``symbols``

    @property
    def j0(self) -> int:
        return self.i + self.selected + 1


def reduce_symbols(symbols: Sequence[str]) -> tuple[tuple[str, ...], tuple[int, ...], str, int]:
    """Crossing-out on a symbol sequence.

    Returns (reduced symbols, their original positions, case numeral,
    selected original position). Position 0 is never crossed out.
    """
    symbols = tuple(symbols)
    if not symbols or set(symbols) - {ZERO, MINUS, PLUS}:
        raise InputError(f"bad symbol sequence {symbols}")
    stack: list[int] = []
    for m in range(1, len(symbols)):
        s = symbols[m]
        if s == ZERO:
            continue
        if s == MINUS and stack and symbols[stack[-1]] == PLUS:
            stack.pop()
        else:
            stack.append(m)
    kept = (0, *stack)
    reduced = tuple(symbols[m] for m in kept)
    head, rest = reduced[0], reduced[1:]
    p = rest.count(MINUS)
    q = len(rest) - p
    if rest != (MINUS,) * p + (PLUS,) * q:
        raise InvariantViolation(f"reduction left {reduced}")
    last_minus = kept[p] if p else None
    if head == ZERO:
        if p:
            case, sel = ("i" if q else "ii"), last_minus
        else:
            case, sel = ("iii" if q else "iv"), 0
    elif head == PLUS:
        if p >= 2:
            case, sel = ("v" if q else "vi"), last_minus
        elif p == 1:
            case, sel = ("vii" if q else "viii"), 0
        else:
            case, sel = "xi", 0
    else:
        case = "ix" if q else "x"
        sel = last_minus if p else 0
    return reduced, kept, case, sel


def crossing_out(v: LusztigData, i: int) -> SymbolSequence:
    _check_context(v)
    n = v.n
    _check_letter(n, i)
    idx = _index_lists(n)
    c = v.coords
    symbols = []
    for m in range(n - i + 1):
        j = i + m + 1
        a = c[idx[i][j]]
        b = 1 - a if m == 0 else c[idx[i + 1][j]]
        if (a, b) not in _PAIR_SYMBOL:
            raise DomainError(f"crossing-out needs pairs (0,0), (0,1), (1,0); got ({a},{b}) at j={j}")
        symbols.append(_PAIR_SYMBOL[(a, b)])
    reduced, kept, case, sel = reduce_symbols(symbols)
    return SymbolSequence(i, tuple(symbols), reduced, kept, case, sel)


# ---------------------------------------------------------------------------
# monomials and strings
# ---------------------------------------------------------------------------

def apply_monomial(word, a: Sequence[int]) -> LusztigData:
    """Lusztig data (standard context) of F_{i_1}^{a_1} ... F_{i_k}^{a_k} . 1."""
    word = _coerce_word(word)
    a = [int(x) for x in a]
    if len(a) != word.k:
        raise InputError(f"exponent vector has length {len(a)}, expected {word.k}")
    if min(a, default=0) < 0:
        raise InputError("exponents must be natural")
    v = zero(word.n)
    for x, e in zip(reversed(word.letters), reversed(a)):
        v = ftilde_power(v, x, e)
    return v


def apply_monomial_batch(word, A, backend=None) -> np.ndarray:
    """Rows of Lusztig data, one per exponent row of ``A`` (kernel path)."""
    word = _coerce_word(word)
    A = np.atleast_2d(np.asarray(A, dtype=np.int64))
    if A.shape[1] != word.k:
        raise InputError(f"exponent rows have length {A.shape[1]}, expected {word.k}")
    return _accel.apply_monomial_batch(word.letters, A, standard_index(word.n), word.n, backend)


def string_extract(v: LusztigData, word) -> StringData:
    """The string of ``v`` along ``word``: a_1 = epsilon_{i_1}(v), strip, repeat."""
    _check_context(v)
    word = _coerce_word(word)
    if word.n != v.n:
        raise InputError(f"rank mismatch: {word.n} vs {v.n}")
    out = []
    for x in word.letters:
        count = 0
        nxt = etilde(v, x)
        while nxt is not None:
            v, count = nxt, count + 1
            nxt = etilde(v, x)
        out.append(count)
    if any(v.coords):
        raise InvariantViolation(f"string extraction left residue {v.coords}")
    return StringData(word, tuple(out))


def string_extract_batch(V, word, backend=None) -> np.ndarray:
    word = _coerce_word(word)
    V = np.atleast_2d(np.asarray(V, dtype=np.int64))
    A, residue = _accel.string_extract_batch(V, word.letters, standard_index(word.n), word.n, backend)
    if residue.any():
        raise InvariantViolation("string extraction left a nonzero residue")
    return A


def _coerce_word(word) -> ReducedWord:
    if isinstance(word, ReducedWord):
        return word
    letters = tuple(int(x) for x in word)
    # a reduced word of w0 has length n(n+1)/2, which fixes n
    n = (math.isqrt(8 * len(letters) + 1) - 1) // 2
    return as_word(max(n, 1), letters)


# ---------------------------------------------------------------------------
# transport oracle
# ---------------------------------------------------------------------------

def etilde_by_transport(v: LusztigData, i: int) -> Optional[LusztigData]:
    """E_i computed by moving to a word starting with i, where it lowers the first coordinate."""
    from ..weyl import word_starting_with
    from .transition import transition_R

    _check_context(v)
    target, _ = word_starting_with(v.word, i)
    c = list(transition_R(v.word, target, v.coords))
    if c[0] == 0:
        return None
    c[0] -= 1
    return LusztigData(v.word, transition_R(target, v.word, c))


def ftilde_by_transport(v: LusztigData, i: int) -> LusztigData:
    from ..weyl import word_starting_with
    from .transition import transition_R

    _check_context(v)
    target, _ = word_starting_with(v.word, i)
    c = list(transition_R(v.word, target, v.coords))
    c[0] += 1
    return LusztigData(v.word, transition_R(target, v.word, c))

"""Piecewise-linear transition maps between parametrizations attached to
different reduced words, computed one local move at a time."""

from __future__ import annotations

from typing import Sequence

from ..errors import InputError
from ..weyl import BRAID, COMMUTATION, ReducedWord, apply_move, move_path, root_order, standard_word
from .operators import apply_monomial


def T2(a: int, b: int) -> tuple[int, int]:
    return (b, a)


def T3(a: int, b: int, c: int) -> tuple[int, int, int]:
    """String coordinates across a braid move (i, j, i) -> (j, i, j)."""
    return (max(c, b - a), a + c, min(a, b - c))


def braid_R(a: int, b: int, c: int) -> tuple[int, int, int]:
    """Lusztig coordinates across a braid move (i, j, i) -> (j, i, j); an involution."""
    t = min(a, c)
    return (b + c - t, t, a + b - t)


def _walk(src: ReducedWord, dst: ReducedWord, coords, braid_rule):
    if src.n != dst.n:
        raise InputError(f"rank mismatch: {src.n} vs {dst.n}")
    c = [int(x) for x in coords]
    if len(c) != src.k:
        raise InputError(f"expected {src.k} coordinates, got {len(c)}")
    letters = src.letters
    for kind, p in move_path(letters, dst.letters):
        if kind == COMMUTATION:
            c[p], c[p + 1] = c[p + 1], c[p]
        else:
            c[p:p + 3] = braid_rule(*c[p:p + 3])
        letters = apply_move(letters, kind, p)
    return tuple(c)


def transition_R(src: ReducedWord, dst: ReducedWord, coords: Sequence[int]) -> tuple[int, ...]:
    """Lusztig data for ``src`` rewritten as Lusztig data for ``dst``."""
    return _walk(src, dst, coords, braid_R)


def transition_T(src: ReducedWord, dst: ReducedWord, coords: Sequence[int]) -> tuple[int, ...]:
    """String data for ``src`` rewritten as string data for ``dst``."""
    return _walk(src, dst, coords, T3)


def transition_along(src: ReducedWord, path, coords, kind="R") -> tuple[int, ...]:
    """Apply an explicit move path (as produced by ``move_path``)."""
    rule = braid_R if kind == "R" else T3
    c = [int(x) for x in coords]
    for move, p in path:
        if move == COMMUTATION:
            c[p], c[p + 1] = c[p + 1], c[p]
        elif move == BRAID:
            c[p:p + 3] = rule(*c[p:p + 3])
        else:
            raise InputError(f"unknown move {move!r}")
    return tuple(c)


def s_map(word: ReducedWord, target: ReducedWord, a: Sequence[int]) -> tuple[int, ...]:
    """String data for ``word`` to Lusztig data for ``target``."""
    if word.n != target.n:
        raise InputError(f"rank mismatch: {word.n} vs {target.n}")
    v = apply_monomial(word, a)
    return transition_R(standard_word(word.n), target, v.coords)


def weight(word: ReducedWord, coords: Sequence[int]) -> tuple[int, ...]:
    """sum_l coords_l * alpha^l, in the basis of simple roots."""
    w = [0] * word.n
    for r, c in zip(root_order(word).roots, coords):
        for s in range(r.i, r.j):
            w[s - 1] += int(c)
    return tuple(w)

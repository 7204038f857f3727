"""Verification batteries shared by ``lusztig-cones verify`` and the test suite."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from ..cone import cone_contains, label_str, multiset_M, spanning_vectors
from ..crystal import (
    apply_monomial_batch,
    crossing_out,
    etilde,
    etilde_by_transport,
    f_profile,
    ftilde,
    lusztig_data,
    reduce_symbols,
    s_map,
    standard_index,
    string_extract_batch,
    transition_R,
    transition_T,
    weight,
    zero,
)
from ..errors import DomainError, InvariantViolation
from ..quiver import all_quivers
from ..rectangle import diagram, monomial_word, v_vector
from ..weyl import (
    ReducedWord,
    commutation_equivalent,
    enumerate_reduced_words,
    moves,
    reduced_words_array,
    standard_word,
)
from ..wiring import compatible_word

EXAMPLE_STATE = (0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1)
LONG_SYMBOLS = tuple("00++--+++0-0--+----00")


@dataclass
class VerifyReport:
    suite: str
    checked: int = 0
    failures: list[tuple[str, str, str]] = field(default_factory=list)
    elapsed: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, what: str, expected, got):
        self.checked += 1
        if not cond:
            self.failures.append((what, str(expected), str(got)))

    def to_json(self):
        return {
            "suite": self.suite,
            "checked": self.checked,
            "failures": [{"input": a, "expected": b, "got": c} for a, b, c in self.failures],
            "elapsed": round(self.elapsed, 3),
            "ok": self.ok,
            "notes": self.notes,
        }

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.suite}: {self.checked} checks, {len(self.failures)} failures ({self.elapsed:.2f}s)"


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.elapsed = time.perf_counter() - t0
        return rep

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _words_up_to(n_max):
    for n in range(1, n_max + 1):
        yield from enumerate_reduced_words(n)


@_timed
def suite_multiset(n_max: int = 4, **_) -> VerifyReport:
    """Root multiset of every spanning vector equals M of its label."""
    rep = VerifyReport("multiset")
    words = 0
    for w in _words_up_to(n_max):
        words += 1
        for sv in spanning_vectors(w):
            rep.check(sv.roots == multiset_M(w.n, sv.label), f"{w} {label_str(sv.label)}",
                      multiset_M(w.n, sv.label), sv.roots)
            rep.check(cone_contains(w, sv.coords), f"{w} {label_str(sv.label)} in cone", True, False)
    rep.notes["words"] = words
    return rep


def _compatible_pairs(n_max):
    for n in range(1, n_max + 1):
        for Q in all_quivers(n):
            w = compatible_word(Q)
            for sv in spanning_vectors(w):
                yield n, Q, w, sv


@_timed
def suite_rectangle_word(n_max: int = 5, **_) -> VerifyReport:
    """Expanded spanning-vector monomial is commutation-equivalent to mu with multiplicities."""
    rep = VerifyReport("rectangle-word")
    for n, Q, w, sv in _compatible_pairs(n_max):
        F = monomial_word(n, sv.label).expanded()
        what = f"Q={Q or '()'} {w} {label_str(sv.label)}"
        rep.check(commutation_equivalent(n, sv.expanded_word(), F), what, F, sv.expanded_word())
        rep.check(sum(sv.coords) == len(F), what + " size", len(F), sum(sv.coords))
    return rep


def _pipeline_states(word: ReducedWord, a, sink):
    """Run F_{i_k}^{a_k} first, ..., F_{i_1}^{a_1} last, recording (state, i) before each step."""
    v = zero(word.n)
    for x, e in zip(reversed(word.letters), reversed(a)):
        for _ in range(e):
            sink.append((v, x))
            v = ftilde(v, x)
    return v


def _assert_two_ones(v, i, n):
    for l in range(i + 2, n + 2):
        if v.v(i, l) == 1 and v.v(i + 1, l) == 1:
            raise InvariantViolation(f"c[{i},{l}] = c[{i + 1},{l}] = 1 in {v.coords}")


@_timed
def suite_s_map(n_max: int = 5, stretch: bool = False, collect: Optional[list] = None, **_) -> VerifyReport:
    """S map of every spanning vector of a compatible word equals v of its label."""
    rep = VerifyReport("theorem63")
    top = max(n_max, 6) if stretch else n_max
    states = collect if collect is not None else []
    degenerate = 0
    for n, Q, w, sv in _compatible_pairs(top):
        expected = v_vector(n, sv.label)
        what = f"Q={Q or '()'} {w} {label_str(sv.label)}"
        got = s_map(w, standard_word(n), sv.coords)
        rep.check(got == expected, what, expected, got)
        # the same element reached through the rectangle monomial F(P)
        F = monomial_word(n, sv.label)
        v = zero(n)
        for s, m in reversed(F.letters):
            for _ in range(m):
                states.append((v, s))
                v = ftilde(v, s)
        rep.check(v.coords == expected, what + " via F(P)", expected, v.coords)
        end = _pipeline_states(w, sv.coords, states)
        rep.check(end.coords == expected, what + " pipeline", expected, end.coords)
        if not isinstance(sv.label, int) and diagram(n, sv.label).degenerate:
            degenerate += 1
    for v, i in states:
        _assert_two_ones(v, i, v.n)
    rep.notes["pipeline_states"] = len(states)
    rep.notes["degenerate_central_lines"] = degenerate
    rep.notes["max_rank"] = top
    return rep


def random_01_state(rng: random.Random, n: int):
    """Random 0/1 Lusztig data and letter i with no c[i,l] = c[i+1,l] = 1 for l > i+1."""
    k = n * (n + 1) // 2
    c = [rng.randint(0, 1) for _ in range(k)]
    i = rng.randint(1, n)
    idx = standard_index(n)
    for l in range(i + 2, n + 2):
        p, q = idx[i, l], idx[i + 1, l]
        if c[p] and c[q]:
            if rng.random() < 0.5:
                c[p] = 0
            else:
                c[q] = 0
    return lusztig_data(n, c), i


@_timed
def suite_crossing_out(n_max: int = 6, samples: int = 10_000, seed: int = 0, **_) -> VerifyReport:
    """Crossing-out selection equals the minimal argmax of the profile."""
    rep = VerifyReport("crossing-out")
    example = lusztig_data(5, EXAMPLE_STATE)
    co = crossing_out(example, 3)
    rep.check(co.symbols == ("-", "-", "0") and co.case == "x" and co.j0 == 5,
              "worked example state, i=3", "(-,-,0) case x j0=5", f"{co.symbols} case {co.case} j0={co.j0}")
    reduced, _, case, sel = reduce_symbols(LONG_SYMBOLS)
    rep.check(reduced == ("0", "-", "-", "-") and case == "ii" and sel == 18,
              "21-symbol sequence", "(0,-,-,-) case ii at 18", f"{reduced} case {case} at {sel}")

    states: list = []
    suite_s_map(min(n_max, 5), stretch=n_max >= 6, collect=states)
    skipped = 0
    for v, i in states:
        try:
            j0 = crossing_out(v, i).j0
        except DomainError:
            skipped += 1
            continue
        rep.check(j0 == f_profile(v, i).argmax_min, f"pipeline {v.coords} i={i}",
                  f_profile(v, i).argmax_min, j0)
    rng = random.Random(seed)
    for n in range(1, n_max + 1):
        for _ in range(samples):
            v, i = random_01_state(rng, n)
            want = f_profile(v, i).argmax_min
            got = crossing_out(v, i).j0
            rep.check(got == want, f"random {v.coords} i={i}", want, got)
    rep.notes["pipeline_states"] = len(states)
    rep.notes["pipeline_states_outside_01"] = skipped
    return rep


@_timed
def suite_premat(n_max: int = 4, combos: int = 100, seed: int = 0, backend=None, **_) -> VerifyReport:
    """String extraction inverts the monomial on every spanning vector and sampled combinations."""
    rep = VerifyReport("premat")
    rng = np.random.default_rng(seed)
    for n in range(1, n_max + 1):
        for row in reduced_words_array(n):
            w = ReducedWord._trusted(n, row.tolist())
            basis = np.array([sv.coords for sv in spanning_vectors(w)], dtype=np.int64)
            lam = rng.integers(0, 4, size=(combos, basis.shape[0]))
            A = np.vstack([basis, lam @ basis])
            V = apply_monomial_batch(w, A, backend=backend)
            back = string_extract_batch(V, w, backend=backend)
            bad = np.nonzero((back != A).any(axis=1))[0]
            rep.checked += A.shape[0] - 1
            rep.check(bad.size == 0, f"{w}", A[bad[:1]].tolist(), back[bad[:1]].tolist())
    return rep


@_timed
def suite_transport(n_max: int = 4, samples: int = 10_000, seed: int = 0, **_) -> VerifyReport:
    """Round trips, path independence, spanning-vector transport and the transport form of E_i."""
    rep = VerifyReport("transport")
    rng = random.Random(seed)
    for n in range(1, n_max + 1):
        words = list(enumerate_reduced_words(n))
        for w in words:
            vecs = {sv.label: sv.coords for sv in spanning_vectors(w)}
            for kind, pos, w2 in moves(w):
                other = {sv.label: sv.coords for sv in spanning_vectors(w2)}
                for label, a in vecs.items():
                    if label in other:
                        got = transition_T(w, w2, a)
                        rep.check(got == other[label], f"T {w}->{w2} {label_str(label)}", other[label], got)
        for _ in range(min(samples, 200 * n)):
            u, w, mid = rng.choice(words), rng.choice(words), rng.choice(words)
            c = tuple(rng.randint(0, 4) for _ in range(u.k))
            there = transition_R(u, w, c)
            rep.check(transition_R(w, u, there) == c, f"R round trip {u}->{w} {c}", c, "differs")
            via = transition_R(mid, w, transition_R(u, mid, c))
            rep.check(via == there, f"R path {u}->{mid}->{w} {c}", there, via)
            rep.check(weight(w, there) == weight(u, c), f"R weight {u}->{w} {c}", weight(u, c), weight(w, there))
            t_there = transition_T(u, w, c)
            t_via = transition_T(mid, w, transition_T(u, mid, c))
            rep.check(t_via == t_there, f"T path {u}->{mid}->{w} {c}", t_there, t_via)
    for t in range(samples):
        n = 1 + t % 5
        k = n * (n + 1) // 2
        v = lusztig_data(n, [rng.randint(0, 3) for _ in range(k)])
        i = rng.randint(1, n)
        want = etilde(v, i)
        got = etilde_by_transport(v, i)
        rep.check(want == got, f"E{i} on {v.coords}", want and want.coords, got and got.coords)
    return rep


SUITES: dict[str, Callable[..., VerifyReport]] = {
    "multiset": suite_multiset,
    "rectangle-word": suite_rectangle_word,
    "theorem63": suite_s_map,
    "crossing-out": suite_crossing_out,
    "premat": suite_premat,
    "transport": suite_transport,
}

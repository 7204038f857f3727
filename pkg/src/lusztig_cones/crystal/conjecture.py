"""Exploratory checks around the conjectured regions of linearity.

For every commutation class we push the canonical basis elements b_j and b_P
attached to the class into Lusztig coordinates for the alternating word
k = (1, 3, 5, ..., 2, 4, 6, ..., 1, 3, ...) and test whether the transition map
to the opposite alternating word k' behaves linearly on their span.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from ..cone import label_str, spanning_vectors
from ..errors import CapacityError, InputError
from ..weyl import ReducedWord, commutation_classes, standard_word
from .operators import apply_monomial
from .transition import transition_R

CONJECTURE_RANK_LIMIT = 4


def alternating_word(n: int, odd_first: bool = True) -> ReducedWord:
    """n+1 alternating blocks of odd and even letters."""
    odds = tuple(range(1, n + 1, 2))
    evens = tuple(range(2, n + 1, 2))
    blocks = (odds, evens) if odd_first else (evens, odds)
    letters: list[int] = []
    for t in range(n + 1):
        letters.extend(blocks[t % 2])
    return ReducedWord(n, tuple(letters))


def rational_rank(rows) -> int:
    M = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    cols = len(M[0]) if M else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(M)) if M[r][c] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for r in range(len(M)):
            if r != rank and M[r][c] != 0:
                f = M[r][c] / M[rank][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[rank])]
        rank += 1
    return rank


@dataclass
class ClassReport:
    class_id: int
    representative: tuple[int, ...]
    labels: list[str]
    vectors: list[tuple[int, ...]]
    rank: int
    independent: bool
    samples: int
    additivity_violations: int
    homogeneity_violations: int
    examples: list[dict] = field(default_factory=list)

    def to_json(self):
        return {
            "class": self.class_id,
            "representative": list(self.representative),
            "labels": self.labels,
            "vectors": [list(v) for v in self.vectors],
            "rank": self.rank,
            "independent": self.independent,
            "samples": self.samples,
            "additivity_violations": self.additivity_violations,
            "homogeneity_violations": self.homogeneity_violations,
            "examples": self.examples,
        }


@dataclass
class ConjectureReport:
    n: int
    k_word: tuple[int, ...]
    k_prime: tuple[int, ...]
    classes: list[ClassReport]
    adjacency: list[tuple[int, int]]

    @property
    def all_independent(self) -> bool:
        return all(c.independent for c in self.classes)

    @property
    def total_violations(self) -> int:
        return sum(c.additivity_violations + c.homogeneity_violations for c in self.classes)

    def to_json(self):
        return {
            "n": self.n,
            "k": list(self.k_word),
            "k_prime": list(self.k_prime),
            "classes": [c.to_json() for c in self.classes],
            "adjacency": [list(e) for e in self.adjacency],
            "all_independent": self.all_independent,
            "total_violations": self.total_violations,
        }


def conjecture_explore(n: int, samples: int = 50, seed: int = 0, max_coeff: int = 3) -> ConjectureReport:
    if n < 1:
        raise InputError(f"rank must be positive, got {n}")
    if n > CONJECTURE_RANK_LIMIT:
        raise CapacityError(f"conjecture explorer is limited to n <= {CONJECTURE_RANK_LIMIT}")
    rng = random.Random(seed)
    kw, kp = alternating_word(n, True), alternating_word(n, False)
    jn = standard_word(n)
    cc = commutation_classes(n)

    def R(x):
        return transition_R(kw, kp, x)

    reports = []
    for cid, rep in enumerate(cc.representatives()):
        labels, vecs = [], []
        for sv in spanning_vectors(rep):
            v = apply_monomial(rep, sv.coords)
            vecs.append(transition_R(jn, kw, v.coords))
            labels.append(label_str(sv.label))
        rank = rational_rank(vecs)
        images = [R(v) for v in vecs]
        add_bad = hom_bad = 0
        examples = []
        for _ in range(samples):
            lam = [rng.randint(0, max_coeff) for _ in vecs]
            x = tuple(sum(l * v[p] for l, v in zip(lam, vecs)) for p in range(kw.k))
            want = tuple(sum(l * w[p] for l, w in zip(lam, images)) for p in range(kw.k))
            got = R(x)
            if got != want:
                add_bad += 1
                if len(examples) < 3:
                    examples.append({"coefficients": lam, "expected": list(want), "got": list(got)})
            if R(tuple(2 * c for c in x)) != tuple(2 * c for c in got):
                hom_bad += 1
        reports.append(ClassReport(
            cid, rep.letters, labels, vecs, rank, rank == kw.k, samples, add_bad, hom_bad, examples,
        ))
    return ConjectureReport(n, kw.letters, kp.letters, reports, sorted(cc.braid_edges))

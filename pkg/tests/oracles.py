"""Independent reference implementations used only by the tests.

They share no code with the package: plain permutations, plain BFS, plain
fractions.
"""

from fractions import Fraction
from math import factorial


def hook_length_count(n):
    """Standard tableaux of the staircase (n, n-1, ..., 1): reduced words of w0."""
    k = n * (n + 1) // 2
    prod = 1
    for r in range(n):
        for c in range(n - r):
            prod *= 2 * (n - r - c) - 1
    return factorial(k) // prod


def brute_reduced_words(n):
    """All reduced words of w0 by DFS over permutations, adding only length-increasing letters."""
    target = tuple(range(n + 1, 0, -1))
    out = []

    def go(perm, word):
        if perm == target:
            out.append(tuple(word))
            return
        for x in range(1, n + 1):
            if perm[x - 1] < perm[x]:
                p = list(perm)
                p[x - 1], p[x] = p[x], p[x - 1]
                word.append(x)
                go(tuple(p), word)
                word.pop()

    go(tuple(range(1, n + 2)), [])
    return sorted(out)


def union_find_classes(words):
    """Commutation classes by explicit union-find over adjacent commuting swaps."""
    index = {w: t for t, w in enumerate(words)}
    parent = list(range(len(words)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for w, t in index.items():
        for p in range(len(w) - 1):
            if abs(w[p] - w[p + 1]) > 1:
                u = w[:p] + (w[p + 1], w[p]) + w[p + 2:]
                a, b = find(t), find(index[u])
                if a != b:
                    parent[a] = b
    return len({find(t) for t in range(len(words))})


def bfs_commutation_equivalent(u, v):
    """Decide commutation equivalence by exhaustive search (small words only)."""
    u, v = tuple(u), tuple(v)
    if sorted(u) != sorted(v):
        return False
    seen = {u}
    frontier = [u]
    while frontier:
        nxt = []
        for w in frontier:
            if w == v:
                return True
            for p in range(len(w) - 1):
                if abs(w[p] - w[p + 1]) > 1:
                    x = w[:p] + (w[p + 1], w[p]) + w[p + 2:]
                    if x not in seen:
                        seen.add(x)
                        nxt.append(x)
        frontier = nxt
    return False


def root_order_by_reflection(word, n):
    """alpha^l via explicit reflection of vectors in the basis e_1..e_{n+1}."""
    roots = []
    for l, x in enumerate(word):
        vec = [0] * (n + 2)
        vec[x], vec[x + 1] = 1, -1
        for y in reversed(word[:l]):
            vec[y], vec[y + 1] = vec[y + 1], vec[y]
        i = vec.index(1)
        j = vec.index(-1)
        roots.append((i, j))
    return roots


def fraction_inverse(M):
    """Gauss-Jordan inverse over the rationals."""
    size = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(r == c)) for c in range(size)] for r, row in enumerate(M)]
    for c in range(size):
        piv = next(r for r in range(c, size) if A[r][c] != 0)
        A[c], A[piv] = A[piv], A[c]
        p = A[c][c]
        A[c] = [x / p for x in A[c]]
        for r in range(size):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [row[size:] for row in A]


def reineke_ftilde(coords, i, n, roots):
    """F_i straight from the profile formula, indexing through an explicit root list."""
    pos = {r: p for p, r in enumerate(roots)}

    def v(a, b):
        return coords[pos[(a, b)]] if (a, b) in pos else 0

    f = {}
    for j in range(i + 1, n + 2):
        f[j] = sum(v(i, l) for l in range(j, n + 2)) - sum(v(i + 1, l) for l in range(j + 1, n + 2))
    best = max(f.values())
    j0 = min(j for j in f if f[j] == best)
    out = list(coords)
    out[pos[(i, j0)]] += 1
    if j0 != i + 1:
        out[pos[(i + 1, j0)]] -= 1
    return tuple(out)

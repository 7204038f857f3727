"""Hot kernels: reduced-word enumeration, commutation classes, batched crystal steps.

Every kernel exists twice, as a numba ``@njit`` function and as a pure numpy
function with the same contract. ``LUSZTIG_CONES_NUMBA=0`` in the environment
selects the numpy path globally; every public wrapper also takes an explicit
``backend`` argument ("numba" or "numpy") so the two can be compared.

Crystal kernels act on Lusztig data in the coordinate context of the standard
word (n, n-1, n, ..., 1, 2, ..., n). ``idx[i, j]`` is the 0-based coordinate
position of the root alpha_ij in that context, ``-1`` where undefined.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dependency in practice
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("LUSZTIG_CONES_NUMBA", "1") != "0"


def _resolve(backend):
    if backend is None:
        return "numba" if USE_NUMBA else "numpy"
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba backend requested but numba is not importable")
    return backend


def active_backend():
    return _resolve(None)


# ---------------------------------------------------------------------------
# reduced words of w0
# ---------------------------------------------------------------------------

def _np_reduced_words(n):
    k = n * (n + 1) // 2
    words = np.zeros((1, 0), dtype=np.int8)
    perms = np.arange(1, n + 2, dtype=np.int8)[None, :]
    for _ in range(k):
        new_words, new_perms = [], []
        for i in range(1, n + 1):
            # s_i lengthens w exactly when w(i) < w(i+1)
            mask = perms[:, i - 1] < perms[:, i]
            if not mask.any():
                continue
            p = perms[mask].copy()
            p[:, [i - 1, i]] = p[:, [i, i - 1]]
            w = np.concatenate(
                [words[mask], np.full((p.shape[0], 1), i, dtype=np.int8)], axis=1
            )
            new_words.append(w)
            new_perms.append(p)
        words = np.concatenate(new_words)
        perms = np.concatenate(new_perms)
    order = np.lexsort(words.T[::-1])
    return np.ascontiguousarray(words[order])


if HAVE_NUMBA:

    @njit(cache=True)
    def _nb_walk(n, out, fill):
        k = n * (n + 1) // 2
        perm = np.arange(1, n + 2)
        word = np.zeros(max(k, 1), dtype=np.int64)
        nxt = np.ones(k + 1, dtype=np.int64)
        depth = 0
        count = 0
        while depth >= 0:
            if depth == k:
                if fill:
                    for p in range(k):
                        out[count, p] = word[p]
                count += 1
                depth -= 1
                if depth >= 0:
                    a = word[depth]
                    perm[a - 1], perm[a] = perm[a], perm[a - 1]
                continue
            i = nxt[depth]
            while i <= n and perm[i - 1] > perm[i]:
                i += 1
            if i > n:
                depth -= 1
                if depth >= 0:
                    a = word[depth]
                    perm[a - 1], perm[a] = perm[a], perm[a - 1]
                continue
            nxt[depth] = i + 1
            word[depth] = i
            perm[i - 1], perm[i] = perm[i], perm[i - 1]
            depth += 1
            nxt[depth] = 1
        return count

    def _nb_reduced_words(n):
        k = n * (n + 1) // 2
        dummy = np.zeros((1, max(k, 1)), dtype=np.int8)
        count = _nb_walk(n, dummy, False)
        out = np.zeros((count, k), dtype=np.int8)
        _nb_walk(n, out, True)
        return out


def reduced_words_array(n, backend=None):
    """All reduced words of w0 in rank ``n`` as an int8 array, lexicographic order."""
    if _resolve(backend) == "numba":
        return _nb_reduced_words(n)
    return _np_reduced_words(n)


# ---------------------------------------------------------------------------
# commutation classes
# ---------------------------------------------------------------------------

def _word_keys(words, n):
    k = words.shape[1]
    base = np.int64(n + 1)
    powers = base ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return words.astype(np.int64) @ powers, powers


def _first_occurrence_labels(roots):
    _, first, inverse = np.unique(roots, return_index=True, return_inverse=True)
    # renumber so class ids follow the lexicographic order of their first word
    rank = np.empty_like(first)
    rank[np.argsort(first)] = np.arange(first.size)
    return rank[inverse].astype(np.int64)


def _np_class_labels(words, n):
    from scipy.sparse import coo_matrix
    from scipy.sparse.csgraph import connected_components

    count, k = words.shape
    if count == 0:
        return np.zeros(0, dtype=np.int64)
    keys, powers = _word_keys(words, n)
    w = words.astype(np.int64)
    src, dst = [np.arange(count)], [np.arange(count)]
    for p in range(k - 1):
        a, b = w[:, p], w[:, p + 1]
        mask = (b - a) > 1
        if not mask.any():
            continue
        swapped = keys[mask] + (b[mask] - a[mask]) * (powers[p] - powers[p + 1])
        hit = np.searchsorted(keys, swapped)
        src.append(np.nonzero(mask)[0])
        dst.append(hit)
    src = np.concatenate(src)
    dst = np.concatenate(dst)
    graph = coo_matrix((np.ones(src.size, dtype=np.int8), (src, dst)), shape=(count, count))
    _, roots = connected_components(graph, directed=False)
    return _first_occurrence_labels(roots)


if HAVE_NUMBA:

    @njit(cache=True)
    def _nb_find(parent, x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    @njit(cache=True)
    def _nb_union_commutations(words, keys, powers):
        count, k = words.shape
        parent = np.arange(count)
        for r in range(count):
            for p in range(k - 1):
                a = np.int64(words[r, p])
                b = np.int64(words[r, p + 1])
                if b - a > 1:
                    swapped = keys[r] + (b - a) * (powers[p] - powers[p + 1])
                    s = np.searchsorted(keys, swapped)
                    ra = _nb_find(parent, r)
                    rb = _nb_find(parent, s)
                    if ra != rb:
                        if ra < rb:
                            parent[rb] = ra
                        else:
                            parent[ra] = rb
        for r in range(count):
            parent[r] = _nb_find(parent, r)
        return parent

    def _nb_class_labels(words, n):
        if words.shape[0] == 0:
            return np.zeros(0, dtype=np.int64)
        keys, powers = _word_keys(words, n)
        roots = _nb_union_commutations(words, keys, powers)
        return _first_occurrence_labels(roots)


def commutation_class_labels(words, n, backend=None):
    """Class id per row of a lexicographically sorted word array.

    Ids are assigned in order of each class's lexicographically first word.
    """
    words = np.ascontiguousarray(words, dtype=np.int8)
    if _resolve(backend) == "numba":
        return _nb_class_labels(words, n)
    return _np_class_labels(words, n)


# ---------------------------------------------------------------------------
# crystal operators on Lusztig data (standard-word context), batched
# ---------------------------------------------------------------------------

def _np_profile(V, i, idx, n):
    # f[:, t] is f_{i, i+1+t}
    Vi = V[:, idx[i, i + 1:n + 2]]
    S1 = np.cumsum(Vi[:, ::-1], axis=1)[:, ::-1]
    S2 = np.zeros_like(S1)
    if i + 1 <= n:
        Vi1 = V[:, idx[i + 1, i + 2:n + 2]]
        S2[:, :-1] = np.cumsum(Vi1[:, ::-1], axis=1)[:, ::-1]
    return S1 - S2


def _np_ftilde(V, i, idx, n, rows):
    if rows.size == 0:
        return
    f = _np_profile(V[rows], i, idx, n)
    t = np.argmax(f, axis=1)
    j0 = i + 1 + t
    np.add.at(V, (rows, idx[i, j0]), 1)
    dec = j0 != i + 1
    if dec.any():
        np.add.at(V, (rows[dec], idx[i + 1, j0[dec]]), -1)


def _np_etilde(V, i, idx, n, rows):
    """Apply E_i to V[rows] in place; return the boolean mask of rows where it acted."""
    if rows.size == 0:
        return np.zeros(0, dtype=bool)
    f = _np_profile(V[rows], i, idx, n)
    width = f.shape[1]
    t = width - 1 - np.argmax(f[:, ::-1], axis=1)
    j1 = i + 1 + t
    pos = idx[i, j1]
    ok = V[rows, pos] > 0
    good = rows[ok]
    V[good, pos[ok]] -= 1
    inc = ok & (j1 != i + 1)
    if inc.any():
        V[rows[inc], idx[i + 1, j1[inc]]] += 1
    return ok


def _np_apply_monomial(letters, A, idx, n):
    B, k = A.shape
    V = np.zeros((B, n * (n + 1) // 2), dtype=np.int64)
    for m in range(k - 1, -1, -1):
        i = int(letters[m])
        col = A[:, m]
        top = int(col.max()) if B else 0
        for rep in range(top):
            rows = np.nonzero(col > rep)[0]
            _np_ftilde(V, i, idx, n, rows)
    return V


def _np_string_extract(V, letters, idx, n):
    V = np.array(V, dtype=np.int64, copy=True)
    B = V.shape[0]
    k = len(letters)
    A = np.zeros((B, k), dtype=np.int64)
    for m in range(k):
        i = int(letters[m])
        rows = np.arange(B)
        while rows.size:
            ok = _np_etilde(V, i, idx, n, rows)
            rows = rows[ok]
            A[rows, m] += 1
    return A, V


if HAVE_NUMBA:

    @njit(cache=True)
    def _nb_ftilde_row(v, i, idx, n):
        best = np.int64(-(1 << 62))
        j0 = -1
        s1 = np.int64(0)
        s2 = np.int64(0)
        for j in range(n + 1, i, -1):
            s1 += v[idx[i, j]]
            f = s1 - s2
            if f >= best:
                best = f
                j0 = j
            if j >= i + 2:
                s2 += v[idx[i + 1, j]]
        v[idx[i, j0]] += 1
        if j0 != i + 1:
            v[idx[i + 1, j0]] -= 1

    @njit(cache=True)
    def _nb_etilde_row(v, i, idx, n):
        best = np.int64(-(1 << 62))
        j1 = -1
        s1 = np.int64(0)
        s2 = np.int64(0)
        for j in range(n + 1, i, -1):
            s1 += v[idx[i, j]]
            f = s1 - s2
            if f > best:
                best = f
                j1 = j
            if j >= i + 2:
                s2 += v[idx[i + 1, j]]
        if v[idx[i, j1]] == 0:
            return False
        v[idx[i, j1]] -= 1
        if j1 != i + 1:
            v[idx[i + 1, j1]] += 1
        return True

    @njit(cache=True)
    def _nb_apply_monomial(letters, A, idx, n, k):
        B = A.shape[0]
        V = np.zeros((B, k), dtype=np.int64)
        for r in range(B):
            v = V[r]
            for m in range(A.shape[1] - 1, -1, -1):
                for _ in range(A[r, m]):
                    _nb_ftilde_row(v, letters[m], idx, n)
        return V

    @njit(cache=True)
    def _nb_string_extract(V, letters, idx, n):
        V = V.copy()
        B = V.shape[0]
        k = letters.shape[0]
        A = np.zeros((B, k), dtype=np.int64)
        for r in range(B):
            v = V[r]
            for m in range(k):
                while _nb_etilde_row(v, letters[m], idx, n):
                    A[r, m] += 1
        return A, V


def apply_monomial_batch(letters, A, idx, n, backend=None):
    """Lusztig data of F_{i_1}^{a_1} ... F_{i_k}^{a_k} . 1 for each row ``a`` of ``A``."""
    letters = np.asarray(letters, dtype=np.int64)
    A = np.atleast_2d(np.asarray(A, dtype=np.int64))
    idx = np.asarray(idx, dtype=np.int64)
    if _resolve(backend) == "numba":
        return _nb_apply_monomial(letters, A, idx, n, n * (n + 1) // 2)
    return _np_apply_monomial(letters, A, idx, n)


def string_extract_batch(V, letters, idx, n, backend=None):
    """Greedy raising-operator strings; returns ``(strings, residue)``."""
    letters = np.asarray(letters, dtype=np.int64)
    V = np.atleast_2d(np.asarray(V, dtype=np.int64))
    idx = np.asarray(idx, dtype=np.int64)
    if _resolve(backend) == "numba":
        return _nb_string_extract(V, letters, idx, n)
    return _np_string_extract(V, letters, idx, n)


def ftilde_batch(V, i, idx, n, backend=None):
    """Apply F_i to every row of ``V``; returns a new array."""
    V = np.array(np.atleast_2d(V), dtype=np.int64, copy=True)
    idx = np.asarray(idx, dtype=np.int64)
    if _resolve(backend) == "numba":
        for r in range(V.shape[0]):
            _nb_ftilde_row(V[r], i, idx, n)
    else:
        _np_ftilde(V, i, idx, n, np.arange(V.shape[0]))
    return V

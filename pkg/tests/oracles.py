"""Brute-force reference computations over GF(p), written against numpy only.

None of these use the package's row reduction or scanning code, so they
serve as independent checks on small cases.
"""

import itertools

import numpy as np


def all_vectors(n, p):
    return np.array(list(itertools.product(range(p), repeat=n)), dtype=np.int64).reshape(-1, n)


def gf_rank(A, p):
    A = np.array(A, dtype=np.int64) % p
    if A.size == 0:
        return 0
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        nz = np.nonzero(A[r:, c])[0]
        if len(nz) == 0:
            continue
        piv = r + nz[0]
        A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        others = np.nonzero(A[:, c])[0]
        for o in others:
            if o != r:
                A[o] = (A[o] - A[o, c] * A[r]) % p
        r += 1
        if r == rows:
            break
    return r


def structure_array(L):
    n = L.n
    C = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            C[i, j] = [int(a) for a in L.basis_bracket(i, j)]
    return C


def brackets_all(C, X, Y, p):
    """[X_a, Y_b] for every a, b as an array (len X, len Y, n)."""
    return np.einsum("ai,bj,ijk->abk", X, Y, C) % p


def wedge_rows(X, Y, n):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return np.stack([X[:, i] * Y[:, j] - X[:, j] * Y[:, i] for i, j in pairs], axis=1)


def kprime_dim(C, p):
    """dim span{x ^ y : [x, y] = 0}, every pair of vectors of GF(p)^n."""
    n = C.shape[0]
    X = all_vectors(n, p)
    comm = ~brackets_all(C, X, X, p).any(axis=2)
    a, b = np.nonzero(comm)
    rows = np.unique(wedge_rows(X[a], X[b], n) % p, axis=0)
    return gf_rank(rows, p)


def mprime_dim(C, p):
    n = C.shape[0]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    B = np.array([C[i, j] for i, j in pairs], dtype=np.int64).reshape(len(pairs), n)
    return len(pairs) - gf_rank(B, p)


def commuting_pairs(C, p):
    n = C.shape[0]
    X = all_vectors(n, p)
    comm = ~brackets_all(C, X, X, p).any(axis=2)
    a, b = np.nonzero(comm)
    return X[a], X[b]


def kv_dim(rho, p):
    """dim span{x (x) v : x v = 0} with rho an array (n, d, d) of action matrices."""
    n, d, _ = rho.shape
    X = all_vectors(n, p)
    V = all_vectors(d, p)
    act = np.einsum("ai,ijk,bk->abj", X, rho, V) % p
    a, b = np.nonzero(~act.any(axis=2))
    rows = np.unique(np.einsum("ai,aj->aij", X[a], V[b]).reshape(len(a), n * d) % p, axis=0)
    return gf_rank(rows, p)


def h2_by_counting(C, p):
    """log_p |Z^2| - log_p |B^2|, counting skew forms one by one."""
    n = C.shape[0]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    triples = list(itertools.combinations(range(n), 3))

    def form_matrix(w):
        Om = np.zeros((n, n), dtype=np.int64)
        for (i, j), c in zip(pairs, w):
            Om[i, j], Om[j, i] = c, -c
        return Om

    cocycles = 0
    for w in itertools.product(range(p), repeat=len(pairs)):
        Om = form_matrix(w)
        ok = True
        for i, j, k in triples:
            s = C[i, j] @ Om[:, k] + C[j, k] @ Om[:, i] + C[k, i] @ Om[:, j]
            if s % p:
                ok = False
                break
        cocycles += ok
    boundaries = {tuple(int(f @ C[i, j]) % p for i, j in pairs) for f in all_vectors(n, p)}
    z = round(np.log(cocycles) / np.log(p))
    b = round(np.log(len(boundaries)) / np.log(p))
    assert p**z == cocycles and p**b == len(boundaries)
    return z - b

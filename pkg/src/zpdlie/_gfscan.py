"""Compiled scans over the projective points of GF(p)^n.

Points are numbered lead-position first: for lead l the point has zeros
before l, a 1 at l, and the trailing n-l-1 coordinates read as a base-p
number (most significant first).  All arithmetic is exact mod p.
"""

import numpy as np
from numba import njit


def point_offsets(n: int, p: int) -> np.ndarray:
    offs = np.zeros(n + 1, dtype=np.int64)
    for l in range(n):
        offs[l + 1] = offs[l] + p ** (n - l - 1)
    return offs


def decode_point(g: int, n: int, p: int) -> list[int]:
    offs = point_offsets(n, p)
    l = 0
    while g >= offs[l + 1]:
        l += 1
    t = g - int(offs[l])
    x = [0] * n
    x[l] = 1
    for i in range(n - 1, l, -1):
        x[i] = t % p
        t //= p
    return x


@njit(cache=True)
def _decode(g, n, p, offs, x):
    l = 0
    while g >= offs[l + 1]:
        l += 1
    t = g - offs[l]
    for i in range(l):
        x[i] = 0
    x[l] = 1
    for i in range(n - 1, l, -1):
        x[i] = t % p
        t //= p


@njit(cache=True)
def _ad_rref(C, p, inv, x, A, piv):
    """Row-reduce ad(x) into A; return its rank, pivot columns in piv."""
    n = C.shape[0]
    for k in range(n):
        for j in range(n):
            s = 0
            for i in range(n):
                if x[i] != 0:
                    s += x[i] * C[i, j, k]
            A[k, j] = s % p
    rank = 0
    for c in range(n):
        pr = -1
        for rr in range(rank, n):
            if A[rr, c] != 0:
                pr = rr
                break
        if pr < 0:
            continue
        if pr != rank:
            for cc in range(n):
                tmp = A[pr, cc]
                A[pr, cc] = A[rank, cc]
                A[rank, cc] = tmp
        iv = inv[A[rank, c]]
        for cc in range(n):
            A[rank, cc] = A[rank, cc] * iv % p
        for rr in range(n):
            if rr != rank and A[rr, c] != 0:
                f = A[rr, c]
                for cc in range(n):
                    A[rr, cc] = (A[rr, cc] - f * A[rank, cc]) % p
        piv[rank] = c
        rank += 1
    return rank


@njit(cache=True)
def scan_wedges(C, p, inv, ann, pi, pj, offs, start, stop):
    """First point g in [start, stop) whose x ^ centralizer(x) is not killed by
    every row of ``ann``; -1 when there is none."""
    n = C.shape[0]
    r = ann.shape[0]
    W = pi.shape[0]
    x = np.zeros(n, np.int64)
    y = np.zeros(n, np.int64)
    A = np.zeros((n, n), np.int64)
    piv = np.zeros(n, np.int64)
    isfree = np.zeros(n, np.bool_)
    for g in range(start, stop):
        _decode(g, n, p, offs, x)
        rank = _ad_rref(C, p, inv, x, A, piv)
        if rank >= n - 1:
            continue
        for c in range(n):
            isfree[c] = True
        for t in range(rank):
            isfree[piv[t]] = False
        for f in range(n):
            if not isfree[f]:
                continue
            for c in range(n):
                y[c] = 0
            y[f] = 1
            for t in range(rank):
                y[piv[t]] = (p - A[t, f]) % p
            for a in range(r):
                s = 0
                for q in range(W):
                    w = ann[a, q]
                    if w != 0:
                        s += w * ((x[pi[q]] * y[pj[q]] - x[pj[q]] * y[pi[q]]) % p)
                if s % p != 0:
                    return g
    return -1


@njit(cache=True)
def scan_large_centralizer(C, p, inv, offs, start, stop):
    """First point whose centralizer has dimension >= 2; -1 when none."""
    n = C.shape[0]
    x = np.zeros(n, np.int64)
    A = np.zeros((n, n), np.int64)
    piv = np.zeros(n, np.int64)
    for g in range(start, stop):
        _decode(g, n, p, offs, x)
        if _ad_rref(C, p, inv, x, A, piv) < n - 1:
            return g
    return -1

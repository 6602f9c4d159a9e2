"""Compiled dynamic-programming cores for ED and NED.

Words arrive as int64 code arrays. Backtracking emits operation codes
(``OP_N``, ``OP_C``, ``OP_X``, ``OP_V``) in forward order; the Python side
turns them into edit letters.
"""

from __future__ import annotations

import numpy as np
from numba import njit

OP_N, OP_C, OP_X, OP_V = 0, 1, 2, 3
INF = np.int32(1 << 29)


def encode(a, b) -> tuple[np.ndarray, np.ndarray]:
    """Map two words onto a shared integer code space."""
    if isinstance(a, str) and isinstance(b, str):
        return (
            np.frombuffer(a.encode("utf-32-le"), dtype=np.uint32).astype(np.int64),
            np.frombuffer(b.encode("utf-32-le"), dtype=np.uint32).astype(np.int64),
        )
    codes: dict = {}
    ea = np.array([codes.setdefault(s, len(codes)) for s in a], dtype=np.int64)
    eb = np.array([codes.setdefault(s, len(codes)) for s in b], dtype=np.int64)
    return ea, eb


@njit(cache=True)
def _layer(prev, cur, a, b, L):
    m = a.shape[0]
    n = b.shape[0]
    for i in range(m + 1):
        for j in range(n + 1):
            cur[i, j] = INF
    for i in range(min(m, L) + 1):
        jlo = max(0, L - i)
        jhi = min(n, L)
        for j in range(jlo, jhi + 1):
            best = INF
            if i > 0 and j > 0:
                t = prev[i - 1, j - 1] + (1 if a[i - 1] != b[j - 1] else 0)
                if t < best:
                    best = t
            if i > 0:
                t = prev[i - 1, j] + 1
                if t < best:
                    best = t
            if j > 0:
                t = prev[i, j - 1] + 1
                if t < best:
                    best = t
            cur[i, j] = best


@njit(cache=True)
def ned_value(a, b):
    """Return ``(weight, length)`` of a minimum-cost path; ``(0, 0)`` for two empty words.

    Keeps two length layers in memory. On ties in cost the shortest path
    length wins.
    """
    m = a.shape[0]
    n = b.shape[0]
    if m == 0 and n == 0:
        return 0, 0
    prev = np.full((m + 1, n + 1), INF, dtype=np.int32)
    cur = np.full((m + 1, n + 1), INF, dtype=np.int32)
    prev[0, 0] = 0
    best_w = 1
    best_l = 0
    lo = max(m, n)
    for L in range(1, m + n + 1):
        _layer(prev, cur, a, b, L)
        if L >= lo:
            w = cur[m, n]
            if w < INF and (best_l == 0 or w * best_l < best_w * L):
                best_w = w
                best_l = L
        prev, cur = cur, prev
    return best_w, best_l


@njit(cache=True)
def ned_witness(a, b):
    """Like :func:`ned_value` but also backtracks an optimal path.

    Backtracking prefers, at each step from the end, no-change/change, then
    delete, then insert.
    """
    m = a.shape[0]
    n = b.shape[0]
    top = m + n
    D = np.full((top + 1, m + 1, n + 1), INF, dtype=np.int32)
    D[0, 0, 0] = 0
    best_w = 0
    best_l = 0
    lo = max(m, n)
    for L in range(1, top + 1):
        _layer(D[L - 1], D[L], a, b, L)
        if L >= lo:
            w = D[L, m, n]
            if w < INF and (best_l == 0 or w * best_l < best_w * L):
                best_w = w
                best_l = L
    ops = np.empty(best_l, dtype=np.int8)
    i, j = m, n
    for L in range(best_l, 0, -1):
        target = D[L, i, j]
        if i > 0 and j > 0:
            mis = 1 if a[i - 1] != b[j - 1] else 0
            if D[L - 1, i - 1, j - 1] + mis == target:
                ops[L - 1] = OP_C if mis else OP_N
                i -= 1
                j -= 1
                continue
        if i > 0 and D[L - 1, i - 1, j] + 1 == target:
            ops[L - 1] = OP_X
            i -= 1
            continue
        ops[L - 1] = OP_V
        j -= 1
    return best_w, best_l, ops


@njit(cache=True)
def ed_value(a, b):
    m = a.shape[0]
    n = b.shape[0]
    row = np.arange(n + 1).astype(np.int64)
    for i in range(1, m + 1):
        diag = row[0]
        row[0] = i
        for j in range(1, n + 1):
            up = row[j]
            t = diag + (1 if a[i - 1] != b[j - 1] else 0)
            if up + 1 < t:
                t = up + 1
            if row[j - 1] + 1 < t:
                t = row[j - 1] + 1
            row[j] = t
            diag = up
    return row[n]


@njit(cache=True)
def ed_witness(a, b):
    m = a.shape[0]
    n = b.shape[0]
    D = np.zeros((m + 1, n + 1), dtype=np.int64)
    for i in range(m + 1):
        D[i, 0] = i
    for j in range(n + 1):
        D[0, j] = j
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            t = D[i - 1, j - 1] + (1 if a[i - 1] != b[j - 1] else 0)
            if D[i - 1, j] + 1 < t:
                t = D[i - 1, j] + 1
            if D[i, j - 1] + 1 < t:
                t = D[i, j - 1] + 1
            D[i, j] = t
    ops = np.empty(m + n, dtype=np.int8)
    k = 0
    i, j = m, n
    while i > 0 or j > 0:
        target = D[i, j]
        if i > 0 and j > 0:
            mis = 1 if a[i - 1] != b[j - 1] else 0
            if D[i - 1, j - 1] + mis == target:
                ops[k] = OP_C if mis else OP_N
                k += 1
                i -= 1
                j -= 1
                continue
        if i > 0 and D[i - 1, j] + 1 == target:
            ops[k] = OP_X
            k += 1
            i -= 1
            continue
        ops[k] = OP_V
        k += 1
        j -= 1
    return D[m, n], ops[:k][::-1].copy()

"""Brute-force reference computations.

Nothing here is fast and nothing here shares code with the optimized
metrics: NED and ED are minimized over every alignment, CED is a plain
Fraction-valued Dijkstra over a deliberately enlarged word space.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

DEFAULT_ENUM_CAP = 10**6
DEFAULT_PAIR_LEN = 12


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class EnumBudget:
    max_len: int
    alphabet: tuple
    cap: int = DEFAULT_ENUM_CAP

    def size(self) -> int:
        k = len(self.alphabet)
        return sum(k**i for i in range(self.max_len + 1))


def enumerate_words(budget: EnumBudget):
    """Yield every word up to ``budget.max_len``, shortest first, then lexicographically."""
    if budget.size() > budget.cap:
        raise BudgetExceeded(f"{budget.size()} words exceed the enumeration cap {budget.cap}")
    as_str = all(isinstance(s, str) and len(s) == 1 for s in budget.alphabet)
    for size in range(budget.max_len + 1):
        for combo in itertools.product(budget.alphabet, repeat=size):
            yield "".join(combo) if as_str else combo


def _alignments(a, b):
    """Yield ``(weight, length)`` for every monotone alignment of ``a`` with ``b``."""
    m, n = len(a), len(b)
    stack = [(0, 0, 0, 0)]
    while stack:
        i, j, w, L = stack.pop()
        if i == m and j == n:
            yield w, L
            continue
        if i < m and j < n:
            stack.append((i + 1, j + 1, w + (a[i] != b[j]), L + 1))
        if i < m:
            stack.append((i + 1, j, w + 1, L + 1))
        if j < n:
            stack.append((i, j + 1, w + 1, L + 1))


def _check_pair(a, b, max_total: int):
    if len(a) + len(b) > max_total:
        raise BudgetExceeded(f"|a| + |b| = {len(a) + len(b)} exceeds {max_total}")


def brute_force_ned(a, b, max_total: int = DEFAULT_PAIR_LEN) -> Fraction:
    _check_pair(a, b, max_total)
    best_w, best_l = 0, 0
    for w, L in _alignments(a, b):
        if best_l == 0 or w * best_l < best_w * L:
            best_w, best_l = w, L
    return Fraction(best_w, best_l) if best_l else Fraction(0)


def brute_force_ed(a, b, max_total: int = DEFAULT_PAIR_LEN) -> int:
    _check_pair(a, b, max_total)
    return min(w for w, _ in _alignments(a, b))


def relaxed_budget(a, b, extra: int = 1, slack: int = 2) -> EnumBudget:
    """Input symbols plus ``extra`` fresh ones, lengths up to ``max(|a|,|b|) + slack``."""
    alphabet = list(dict.fromkeys(tuple(a) + tuple(b)))
    as_str = isinstance(a, str) and isinstance(b, str)
    fresh = (chr(cp) for cp in range(ord("A"), 0x2FF)) if as_str else (("fresh", i) for i in itertools.count())
    for sym in fresh:
        if extra == 0:
            break
        if sym not in alphabet:
            alphabet.append(sym)
            extra -= 1
    return EnumBudget(max(len(a), len(b)) + slack, tuple(alphabet))


@lru_cache(maxsize=256)
def _ced_from(source: tuple, alphabet: tuple, max_len: int) -> dict:
    """Exact CED from ``source`` to every word of the space, by Dijkstra."""
    budget = EnumBudget(max_len, alphabet)
    space = {tuple(w) for w in enumerate_words(budget)}
    dist = {source: Fraction(0)}
    heap = [(Fraction(0), source)]
    settled = set()
    while heap:
        d, u = heapq.heappop(heap)
        if u in settled:
            continue
        settled.add(u)
        for w in _unit_edits(u, alphabet):
            if w not in space:
                continue
            nd = d + Fraction(1, max(len(u), len(w)))
            if w not in dist or nd < dist[w]:
                dist[w] = nd
                heapq.heappush(heap, (nd, w))
    return dist


def _unit_edits(u: tuple, alphabet: tuple):
    for i in range(len(u) + 1):
        for s in alphabet:
            yield u[:i] + (s,) + u[i:]
    for i in range(len(u)):
        yield u[:i] + u[i + 1:]
        for s in alphabet:
            if s != u[i]:
                yield u[:i] + (s,) + u[i + 1:]


def brute_force_ced(a, b, relaxed: EnumBudget | None = None) -> Fraction:
    """CED over a relaxed space (one fresh symbol, two extra length units by default)."""
    relaxed = relaxed or relaxed_budget(a, b)
    if max(len(a), len(b)) > relaxed.max_len:
        raise BudgetExceeded("input longer than the enumeration budget")
    if relaxed.max_len > 8:
        raise BudgetExceeded("brute-force CED is limited to lengths <= 8")
    dist = _ced_from(tuple(a), tuple(relaxed.alphabet), relaxed.max_len)
    return dist[tuple(b)]

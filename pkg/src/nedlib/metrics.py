"""Exact uniform-cost edit distances: ED, NED, GED, CED and CED'.

Every value is a :class:`fractions.Fraction`. NED and ED run on the compiled
kernels in :mod:`nedlib._kernels`; CED is an A* search over the implicit
graph of words at unit edit distance.
"""

from __future__ import annotations

import heapq
import itertools
import math
import os
import string
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from nedlib import _kernels
from nedlib.edit_model import EditPath, Word, _wrap, c, n, v, x

DEFAULT_MAX_CED_LEN = 12
DEFAULT_NODE_CAP = 10**6


class LimitExceeded(ValueError):
    """Input is outside the size limits of an exact computation."""


class SearchBudgetExceeded(LimitExceeded):
    pass


@dataclass(frozen=True)
class DistanceResult:
    metric: str
    value: Fraction
    witness: EditPath | None = None
    # intermediate words for CED; witness stays None there
    chain: tuple | None = None


def default_ced_len() -> int:
    raw = os.environ.get("NEDLIB_MAX_CED_LEN")
    return int(raw) if raw else DEFAULT_MAX_CED_LEN


@dataclass(frozen=True)
class CedSearchConfig:
    """Search space for CED.

    ``mode`` is one of

    * ``"exact"`` (default): input symbols only, lengths up to the harmonic
      bound computed by :func:`ced_length_bound`. Returns the true CED.
    * ``"restricted"``: input symbols only, lengths up to ``max(|a|, |b|)``.
      An upper bound on CED, and not always equal to it (``ab``/``ba``).
    * ``"relaxed"``: ``extra_symbols`` fresh symbols and ``length_slack``
      extra length on top of the restricted space.
    """

    max_word_len: int | None = None
    mode: str = "exact"
    extra_symbols: int = 0
    length_slack: int = 0
    node_cap: int = DEFAULT_NODE_CAP

    def __post_init__(self):
        if self.mode not in ("exact", "restricted", "relaxed"):
            raise ValueError(f"unknown CED search mode {self.mode!r}")

    @property
    def cap(self) -> int:
        return self.max_word_len if self.max_word_len is not None else default_ced_len()

    @classmethod
    def restricted(cls, **kw) -> CedSearchConfig:
        return cls(mode="restricted", **kw)

    @classmethod
    def relaxed(cls, extra_symbols: int = 1, length_slack: int = 2, **kw) -> CedSearchConfig:
        return cls(mode="relaxed", extra_symbols=extra_symbols, length_slack=length_slack, **kw)


def _letters(ops, a: Word, b: Word) -> EditPath:
    out = []
    i = j = 0
    for op in ops:
        if op == _kernels.OP_N:
            out.append(n(a[i]))
            i += 1
            j += 1
        elif op == _kernels.OP_C:
            out.append(c(a[i], b[j]))
            i += 1
            j += 1
        elif op == _kernels.OP_X:
            out.append(x(a[i]))
            i += 1
        else:
            out.append(v(b[j]))
            j += 1
    return tuple(out)


def ed(a: Word, b: Word, witness: bool = True) -> DistanceResult:
    """Levenshtein distance with a minimum-weight witness path."""
    ea, eb = _kernels.encode(a, b)
    if not witness:
        return DistanceResult("ed", Fraction(int(_kernels.ed_value(ea, eb))))
    d, ops = _kernels.ed_witness(ea, eb)
    return DistanceResult("ed", Fraction(int(d)), _letters(ops, a, b))


def ed_value(a: Word, b: Word) -> int:
    ea, eb = _kernels.encode(a, b)
    return int(_kernels.ed_value(ea, eb))


def ned(a: Word, b: Word, witness: bool = True) -> DistanceResult:
    """Normalized edit distance: minimum over edit paths of weight / length.

    The witness is a cheapest path; among equally cheap paths the shortest
    one is reported.

    >>> ned("acbb", "cc").value
    Fraction(3, 4)
    """
    ea, eb = _kernels.encode(a, b)
    if not witness:
        w, L = _kernels.ned_value(ea, eb)
        return DistanceResult("ned", Fraction(int(w), int(L)) if L else Fraction(0))
    w, L, ops = _kernels.ned_witness(ea, eb)
    value = Fraction(int(w), int(L)) if L else Fraction(0)
    return DistanceResult("ned", value, _letters(ops, a, b))


def ned_value(a: Word, b: Word) -> Fraction:
    ea, eb = _kernels.encode(a, b)
    w, L = _kernels.ned_value(ea, eb)
    return Fraction(int(w), int(L)) if L else Fraction(0)


def ged_value(a: Word, b: Word) -> Fraction:
    d = ed_value(a, b)
    den = len(a) + len(b) + d
    return Fraction(2 * d, den) if den else Fraction(0)


def ged(a: Word, b: Word) -> DistanceResult:
    """2 ED / (|a| + |b| + ED), taken as 0 for two empty words."""
    return DistanceResult("ged", ged_value(a, b))


def postnorm_value(a: Word, b: Word) -> Fraction:
    """ED divided by the sum of lengths. Not a metric; kept for demonstrations."""
    den = len(a) + len(b)
    return Fraction(ed_value(a, b), den) if den else Fraction(0)


def postnorm(a: Word, b: Word) -> DistanceResult:
    return DistanceResult("postnorm", postnorm_value(a, b))


def _fresh_symbols(alphabet, k: int, as_str: bool) -> list:
    if k <= 0:
        return []
    if as_str:
        pool = (ch for ch in string.ascii_letters + string.digits + "".join(map(chr, range(0x100, 0x200))))
    else:
        pool = (("fresh", i) for i in range(len(alphabet) + k + 1))
    out = []
    for sym in pool:
        if sym not in alphabet:
            out.append(sym)
            if len(out) == k:
                break
    return out


def ced_length_bound(la: int, lb: int, upper: Fraction) -> int:
    """Longest intermediate word an optimal CED chain can need.

    A chain that reaches length ``M`` climbs through every length between
    ``la`` and ``M`` and descends back to ``lb``, paying ``1/l`` per level
    each way, so it costs at least ``2 H(M) - H(la) - H(lb)``. Lengths whose
    lower bound exceeds a known chain cost ``upper`` are useless.
    """
    lo, hi = sorted((la, lb))
    lower = sum((Fraction(1, k) for k in range(lo + 1, hi + 1)), Fraction(0))
    M = hi
    while lower + Fraction(2, M + 1) <= upper:
        lower += Fraction(2, M + 1)
        M += 1
    return M


def ced(a: Word, b: Word, cfg: CedSearchConfig | None = None) -> DistanceResult:
    """Contextual edit distance, computed by Dijkstra over words.

    A single insertion, deletion or substitution between ``u`` and ``w``
    costs ``1 / max(|u|, |w|)``. See :class:`CedSearchConfig` for the search
    space.

    >>> ced("aab", "aaab").value
    Fraction(1, 4)
    """
    cfg = cfg or CedSearchConfig()
    if max(len(a), len(b)) > cfg.cap:
        raise LimitExceeded(f"exact CED is limited to words of length <= {cfg.cap}")
    as_str = isinstance(a, str) and isinstance(b, str)
    src, dst = tuple(a), tuple(b)
    if src == dst:
        return DistanceResult("ced", Fraction(0), chain=(a,))
    alphabet = list(dict.fromkeys(src + dst))
    base = max(len(src), len(dst))
    if cfg.mode == "relaxed":
        alphabet += _fresh_symbols(set(alphabet), cfg.extra_symbols, as_str)
        base += cfg.length_slack
    value, chain = _dijkstra(src, dst, alphabet, base, cfg.node_cap)
    if cfg.mode == "exact":
        bound = ced_length_bound(len(src), len(dst), value)
        if bound > base:
            value, chain = _dijkstra(src, dst, alphabet, bound, cfg.node_cap)
    words = tuple(_wrap(a if as_str else (), list(w)) for w in chain)
    return DistanceResult("ced", value, chain=words)


def _dijkstra(src: tuple, dst: tuple, alphabet: list, bound: int, node_cap: int):
    # integer priorities scaled by lcm(1..bound) keep the search exact
    scale = math.lcm(*range(1, bound + 1))
    step = [0] + [scale // k for k in range(1, bound + 1)]
    # A* potential: changing length from l to |dst| costs at least the
    # harmonic steps in between; consistent, so settled nodes stay final
    harm = list(itertools.accumulate(step))
    target = harm[len(dst)]
    # every remaining edit costs at least 1/bound; the max of two
    # consistent potentials is consistent
    codes = {s: i for i, s in enumerate(alphabet)}
    enc_dst = np.array([codes[s] for s in dst], dtype=np.int64)

    def potential(w):
        ew = np.array([codes[s] for s in w], dtype=np.int64)
        return max(abs(harm[len(w)] - target), int(_kernels.ed_value(ew, enc_dst)) * step[bound])

    dist = {src: 0}
    parent: dict = {src: None}
    heap = [(potential(src), src)]
    done = set()
    while heap:
        _, u = heapq.heappop(heap)
        if u in done:
            continue
        if u == dst:
            break
        done.add(u)
        d = dist[u]
        lu = len(u)
        for w in _neighbours(u, alphabet, bound):
            if w in done:
                continue
            nd = d + step[max(lu, len(w))]
            if nd < dist.get(w, nd + 1):
                dist[w] = nd
                parent[w] = u
                heapq.heappush(heap, (nd + potential(w), w))
                if len(dist) > node_cap:
                    raise SearchBudgetExceeded(f"CED search exceeded {node_cap} nodes")
    chain = []
    node = dst
    while node is not None:
        chain.append(node)
        node = parent[node]
    return Fraction(dist[dst], scale), chain[::-1]


def _neighbours(u: tuple, alphabet: list, bound: int):
    lu = len(u)
    for i in range(lu):
        yield u[:i] + u[i + 1:]
        for s in alphabet:
            if s != u[i]:
                yield u[:i] + (s,) + u[i + 1:]
    if lu < bound:
        for i in range(lu + 1):
            for s in alphabet:
                # inserting s right after an equal symbol gives the same word
                if i > 0 and u[i - 1] == s:
                    continue
                yield u[:i] + (s,) + u[i:]


def ced_value(a: Word, b: Word, cfg: CedSearchConfig | None = None) -> Fraction:
    return ced(a, b, cfg).value


def ced_prime(a: Word, b: Word, cfg: CedSearchConfig | None = None) -> DistanceResult:
    res = ced(a, b, cfg)
    return DistanceResult("cedp", min(Fraction(1), res.value), chain=res.chain)


def ced_prime_value(a: Word, b: Word, cfg: CedSearchConfig | None = None) -> Fraction:
    return ced_prime(a, b, cfg).value


METRICS = {
    "ed": ed,
    "ned": ned,
    "ged": ged,
    "ced": ced,
    "cedp": ced_prime,
    "postnorm": postnorm,
}

VALUE_FUNCS = {
    "ed": lambda a, b: Fraction(ed_value(a, b)),
    "ned": ned_value,
    "ged": ged_value,
    "ced": ced_value,
    "cedp": ced_prime_value,
    "postnorm": postnorm_value,
}

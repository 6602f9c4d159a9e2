"""Seeded and exhaustive verification of the metric properties.

Every check returns a :class:`PropertyReport`. A report passes when the
observation matches its ``claim``; some claims are negative (for instance
"ced escalates repetitions"), in which case the check passes by reproducing
the violation.

Trials are independent. Trial ``t`` of a check draws from
``random.Random(seed * 2**32 + t)``, so a report is a pure function of its
configuration apart from ``elapsed``.
"""

from __future__ import annotations

import random
import string
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import product

import numpy as np

from nedlib import metrics, oracle
from nedlib.compose import Undefined, applies_correctly, compose
from nedlib.edit_model import (
    InvalidPath,
    apply,
    c,
    cost,
    format_path,
    length,
    n,
    project_f,
    project_word,
    render_alignment,
    reverse_path,
    v,
    wgt,
    x,
)


@dataclass(frozen=True)
class FuzzConfig:
    seed: int = 0
    trials: int = 10_000
    alphabet_size: int = 3
    max_word_len: int = 10
    # exact CED is exponential; its checks run on a smaller budget
    ced_max_len: int = 6
    ced_trials: int = 1_000

    def __post_init__(self):
        for name in ("trials", "alphabet_size", "max_word_len", "ced_max_len", "ced_trials"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")

    @property
    def alphabet(self) -> str:
        return string.ascii_lowercase[: self.alphabet_size]


@dataclass
class PropertyReport:
    property_id: str
    claim: str
    mode: str
    outcome: str
    trials_run: int
    seed: int | None = None
    trials: int | None = None
    counterexample: dict | None = None
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.outcome == "pass"

    def to_json(self) -> dict:
        return asdict(self)


def _rng(seed: int, trial: int) -> random.Random:
    return random.Random(seed * 2**32 + trial)


def random_word(rng: random.Random, alphabet: str, max_len: int) -> str:
    return "".join(rng.choice(alphabet) for _ in range(rng.randint(0, max_len)))


def mutate(rng: random.Random, word: str, alphabet: str, max_len: int, edits: int) -> str:
    """Apply up to ``edits`` random single-symbol edits, staying within ``max_len``."""
    w = list(word)
    for _ in range(edits):
        kind = rng.randrange(3)
        if kind == 0 and len(w) < max_len:
            w.insert(rng.randint(0, len(w)), rng.choice(alphabet))
        elif kind == 1 and w:
            del w[rng.randrange(len(w))]
        elif w:
            w[rng.randrange(len(w))] = rng.choice(alphabet)
    return "".join(w)


def random_triple(rng: random.Random, alphabet: str, max_len: int, trial: int) -> tuple[str, str, str]:
    """Uniform words on most trials; every third trial the words are near-equal,
    where the triangle inequality has the least slack."""
    s1 = random_word(rng, alphabet, max_len)
    if trial % 3 != 2:
        return s1, random_word(rng, alphabet, max_len), random_word(rng, alphabet, max_len)
    s2 = mutate(rng, s1, alphabet, max_len, rng.randint(0, 3))
    s3 = mutate(rng, s2, alphabet, max_len, rng.randint(0, 3))
    # shared prefix/suffix structure with a different middle
    if rng.random() < 0.5 and s1:
        cut = rng.randint(0, len(s1))
        s3 = (s1[:cut] + s3[cut:])[:max_len]
    return s1, s2, s3


def random_path(rng: random.Random, word: str, alphabet: str, max_inserts: int = 3):
    """A random edit path valid for ``word``."""
    out = []
    inserts = 0
    for sym in word:
        while inserts < max_inserts and rng.random() < 0.15:
            out.append(v(rng.choice(alphabet)))
            inserts += 1
        r = rng.random()
        others = [s for s in alphabet if s != sym]
        if r < 0.5 or (r < 0.75 and not others):
            out.append(n(sym))
        elif r < 0.75:
            out.append(c(sym, rng.choice(others)))
        else:
            out.append(x(sym))
    while inserts < max_inserts and rng.random() < 0.3:
        out.append(v(rng.choice(alphabet)))
        inserts += 1
    return tuple(out)


def shrink(words: tuple, still_fails) -> tuple:
    """Greedily delete single symbols for as long as ``still_fails`` holds."""
    words = tuple(words)
    improved = True
    while improved:
        improved = False
        for wi, w in enumerate(words):
            for pos in range(len(w)):
                cand = list(words)
                cand[wi] = w[:pos] + w[pos + 1:]
                cand = tuple(cand)
                if still_fails(cand):
                    words, improved = cand, True
                    break
            if improved:
                break
    return words


def _finish(report: PropertyReport, start: float) -> PropertyReport:
    report.elapsed = round(time.perf_counter() - start, 6)
    return report


# ---------------------------------------------------------------------------
# Metric axioms


def axiom_violation(d, s1: str, s2: str, s3: str) -> str | None:
    """Describe the first metric-axiom violation among three words, if any."""
    words = (s1, s2, s3)
    cache: dict = {}

    def dist(a, b):
        if (a, b) not in cache:
            cache[a, b] = d(a, b)
        return cache[a, b]

    for a in words:
        if dist(a, a) != 0:
            return f"d({a!r}, {a!r}) = {dist(a, a)} != 0"
    for a, b in product(words, repeat=2):
        if a != b and dist(a, b) <= 0:
            return f"d({a!r}, {b!r}) = {dist(a, b)} for distinct words"
        if dist(a, b) != dist(b, a):
            return f"d({a!r}, {b!r}) = {dist(a, b)} but d({b!r}, {a!r}) = {dist(b, a)}"
    for i, j, k in ((0, 1, 2), (1, 0, 2), (0, 2, 1)):
        a, b, e = words[i], words[j], words[k]
        if dist(a, e) > dist(a, b) + dist(b, e):
            return (
                f"triangle: d({a!r}, {e!r}) = {dist(a, e)} > "
                f"d({a!r}, {b!r}) + d({b!r}, {e!r}) = {dist(a, b) + dist(b, e)}"
            )
    return None


_BOUNDED = {"ned", "ged", "postnorm"}


def _range_violation(metric: str, d, s1, s2, s3) -> str | None:
    if metric not in _BOUNDED:
        return None
    for a, b in ((s1, s2), (s2, s3), (s1, s3)):
        val = d(a, b)
        if not 0 <= val <= 1:
            return f"{metric}({a!r}, {b!r}) = {val} outside [0, 1]"
    return None


def check_metric_axioms(metric: str, cfg: FuzzConfig = FuzzConfig(), property_id: str | None = None) -> PropertyReport:
    """Fuzz identity of indiscernibles, symmetry and the triangle inequality."""
    start = time.perf_counter()
    d = metrics.VALUE_FUNCS[metric]
    trials, max_len = cfg.trials, cfg.max_word_len
    notes = []
    if metric in ("ced", "cedp"):
        trials, max_len = min(trials, cfg.ced_trials), min(max_len, cfg.ced_max_len)
        notes.append(f"ced budget: {trials} trials, word length <= {max_len}")
    report = PropertyReport(
        property_id or f"metric-{metric}",
        f"{metric} is a metric",
        "fuzz",
        "pass",
        0,
        seed=cfg.seed,
        trials=trials,
        notes=notes,
    )

    def problem(ws):
        return _range_violation(metric, d, *ws) or axiom_violation(d, *ws)

    for t in range(trials):
        triple = random_triple(_rng(cfg.seed, t), cfg.alphabet, max_len, t)
        report.trials_run = t + 1
        if problem(triple):
            small = shrink(triple, problem)
            report.outcome = "fail"
            report.counterexample = {"trial": t, "words": list(small), "found": list(triple), "violation": problem(small)}
            break
    return _finish(report, start)


def check_postnorm_triangle(cfg: FuzzConfig = FuzzConfig()) -> PropertyReport:
    """The post-normalized distance ED / (|a| + |b|) breaks the triangle inequality."""
    start = time.perf_counter()
    inner = check_metric_axioms("postnorm", cfg)
    found = inner.counterexample is not None and inner.counterexample["violation"].startswith("triangle")
    report = PropertyReport(
        "postnorm-triangle",
        "ED/(|a|+|b|) violates the triangle inequality",
        "fuzz",
        "pass" if found else "fail",
        inner.trials_run,
        seed=cfg.seed,
        trials=cfg.trials,
        counterexample=inner.counterexample,
    )
    if found:
        report.notes.append(f"violation found at trial {inner.counterexample['trial']}")
    return _finish(report, start)


# ---------------------------------------------------------------------------
# Comparison properties


def check_antitheticals(cfg: FuzzConfig = FuzzConfig()) -> PropertyReport:
    """ned(a, b) = 1 exactly when a and b share no symbol; ged and ced' fail this."""
    start = time.perf_counter()
    report = PropertyReport(
        "antitheticals",
        "ned = 1 iff no shared symbol; ged and ced' violate it",
        "exhaustive+fuzz",
        "pass",
        0,
        seed=cfg.seed,
        trials=cfg.trials,
    )
    report.notes.append("pair (ε, ε) excluded: identity forces distance 0")

    def bad(a, b):
        if not a and not b:
            return False
        disjoint = not (set(a) & set(b))
        return (metrics.ned_value(a, b) == 1) != disjoint

    small = list(oracle.enumerate_words(oracle.EnumBudget(min(4, cfg.max_word_len), tuple(cfg.alphabet))))
    pairs = ((a, b) for a in small for b in small)
    fuzz = (
        (random_word(r, cfg.alphabet, cfg.max_word_len), random_word(r, cfg.alphabet, cfg.max_word_len))
        for r in (_rng(cfg.seed, t) for t in range(cfg.trials))
    )
    for a, b in (*pairs, *fuzz):
        report.trials_run += 1
        if bad(a, b):
            a, b = shrink((a, b), lambda ws: bad(*ws))
            report.outcome = "fail"
            report.counterexample = {"words": [a, b], "ned": str(metrics.ned_value(a, b))}
            break

    g = metrics.ged_value("aa", "bb")
    cp = metrics.ced_prime_value("a", "aaaa")
    report.notes.append(f"ged('aa', 'bb') = {g} although no symbol is shared")
    report.notes.append(f"ced'('a', 'aaaa') = {cp} although 'a' is shared")
    if g != Fraction(2, 3) or cp != 1:
        report.outcome = "fail"
    return _finish(report, start)


def check_non_escalation(metric: str, u: str, v_: str, k_max: int) -> PropertyReport:
    """d(u^k, v^k) <= d(u, v) for 2 <= k <= k_max.

    For ``ced`` the claim is reversed: the values must strictly increase.
    """
    start = time.perf_counter()
    d = metrics.VALUE_FUNCS[metric]
    values = [d(u * k, v_ * k) for k in range(1, k_max + 1)]
    escalating = metric in ("ced", "cedp")
    if escalating:
        ok = all(a < b for a, b in zip(values, values[1:]))
        claim = f"{metric} escalates repetitions"
    else:
        ok = all(val <= values[0] for val in values[1:])
        claim = f"{metric} does not escalate repetitions"
    report = PropertyReport(
        f"{metric}-{'escalation' if escalating else 'non-escalation'}",
        claim,
        "exhaustive",
        "pass" if ok else "fail",
        len(values),
        notes=[f"{metric}(({u})^{k}, ({v_})^{k}) = {val}" for k, val in enumerate(values, start=1)],
    )
    if not ok:
        report.counterexample = {"u": u, "v": v_, "values": [str(val) for val in values]}
    return _finish(report, start)


def check_non_escalation_fuzz(metric: str, cfg: FuzzConfig = FuzzConfig(), k_max: int = 3) -> PropertyReport:
    """The pair (aab, aaab) up to k = 5, then random short pairs up to ``k_max``."""
    start = time.perf_counter()
    base = check_non_escalation(metric, "aab", "aaab", 5)
    report = PropertyReport(
        f"{metric}-non-escalation",
        base.claim,
        "fuzz",
        base.outcome,
        base.trials_run,
        seed=cfg.seed,
        trials=cfg.trials,
        counterexample=base.counterexample,
        notes=base.notes,
    )
    d = metrics.VALUE_FUNCS[metric]
    max_len = max(1, cfg.max_word_len // k_max)

    def bad(ws):
        u, w = ws
        ref = d(u, w)
        return any(d(u * k, w * k) > ref for k in range(2, k_max + 1))

    for t in range(cfg.trials if report.passed else 0):
        rng = _rng(cfg.seed, t)
        pair = (random_word(rng, cfg.alphabet, max_len), random_word(rng, cfg.alphabet, max_len))
        report.trials_run += 1
        if bad(pair):
            u, w = shrink(pair, bad)
            report.outcome = "fail"
            report.counterexample = {"trial": t, "u": u, "v": w}
            break
    return _finish(report, start)


SIDE1 = "0123"
SIDE2 = "6789"


def pad(rng: random.Random, word: str, side: str, max_len: int) -> str:
    w = list(word)
    for _ in range(rng.randint(0, max(0, max_len - len(w)))):
        w.insert(rng.randint(0, len(w)), rng.choice(side))
    return "".join(w)


def check_pure_uniformity(s1: str | None = None, s2: str | None = None, cfg: FuzzConfig = FuzzConfig()) -> PropertyReport:
    """Padding with fresh symbols never brings ned below its unpadded value.

    Each trial also checks that projecting an optimal path between the padded
    words yields a path between the originals of no greater cost. When
    ``s1``/``s2`` are omitted every trial draws its own core pair.
    The ged and ced counterexamples are recorded in the notes.
    """
    start = time.perf_counter()
    max_len = min(cfg.max_word_len, 8)
    report = PropertyReport(
        "pure-uniformity",
        "ned is purely uniform; ged and ced are not",
        "fuzz",
        "pass",
        0,
        seed=cfg.seed,
        trials=cfg.trials,
    )
    core = cfg.alphabet
    for t in range(cfg.trials):
        rng = _rng(cfg.seed, t)
        a = s1 if s1 is not None else random_word(rng, core, max_len // 2)
        b = s2 if s2 is not None else random_word(rng, core, max_len // 2)
        a2, b2 = pad(rng, a, SIDE1, max_len), pad(rng, b, SIDE2, max_len)
        report.trials_run += 1
        base = metrics.ned_value(a, b)
        padded = metrics.ned(a2, b2)
        problem = None
        if project_word(a2, core) != a or project_word(b2, core) != b:
            problem = "padding changed the core words"
        elif base > padded.value:
            problem = f"ned({a!r}, {b!r}) = {base} > ned({a2!r}, {b2!r}) = {padded.value}"
        else:
            proj = project_f(padded.witness, core, SIDE1, SIDE2)
            try:
                ok = apply(proj, a) == b
            except InvalidPath:
                ok = False
            if not ok or cost(proj) > cost(padded.witness):
                problem = f"projection of {format_path(padded.witness)} is not a cheaper path {a!r} -> {b!r}"
        if problem:
            report.outcome = "fail"
            report.counterexample = {"trial": t, "core": [a, b], "padded": [a2, b2], "violation": problem}
            break

    g_plain = metrics.ged_value("a" * 50, "a" * 100)
    g_pad = metrics.ged_value("a" * 50 + "c" * 50, "a" * 100)
    c_plain = metrics.ced_value("a" * 5, "a" * 10)
    c_pad = metrics.ced_value("a" * 5 + "c" * 5, "a" * 10)
    report.notes += [
        f"ged(a^50, a^100) = {g_plain}, ged(a^50 c^50, a^100) = {g_pad}",
        f"ced(a^5, a^10) = {c_plain}, ced(a^5 c^5, a^10) = {c_pad}",
    ]
    if not (g_pad < g_plain and c_pad < c_plain):
        report.outcome = "fail"
    return _finish(report, start)


def check_ced_harmonic(n_max: int = 11) -> PropertyReport:
    """ced(ε, a^n) is the n-th harmonic number, so CED is unbounded."""
    start = time.perf_counter()
    report = PropertyReport("ced-harmonic", "ced(ε, a^n) = H(n)", "exhaustive", "pass", 0)
    h = Fraction(0)
    for k in range(1, n_max + 1):
        h += Fraction(1, k)
        val = metrics.ced_value("", "a" * k)
        report.trials_run += 1
        if val != h:
            report.outcome = "fail"
            report.counterexample = {"n": k, "ced": str(val), "harmonic": str(h)}
            break
    report.notes.append(f"ced(ε, a^{n_max}) = {h} ({float(h):.4f})")
    return _finish(report, start)


def check_ced_restriction(cfg: FuzzConfig = FuzzConfig(), max_len: int = 4) -> PropertyReport:
    """Searching only words no longer than the inputs can miss the optimum."""
    start = time.perf_counter()
    words = list(oracle.enumerate_words(oracle.EnumBudget(max_len, ("a", "b"))))
    restricted = metrics.CedSearchConfig.restricted()
    gaps = []
    for a in words:
        for b in words:
            lo = metrics.ced_value(a, b)
            hi = metrics.ced_value(a, b, restricted)
            if lo != hi:
                gaps.append((a, b, hi, lo))
    report = PropertyReport(
        "ced-restriction-gap",
        "length-restricted CED search overestimates some pairs",
        "exhaustive",
        "pass" if gaps else "fail",
        len(words) ** 2,
    )
    if gaps:
        a, b, hi, lo = min(gaps, key=lambda g: (len(g[0]) + len(g[1]), g[0], g[1]))
        chain = metrics.ced(a, b).chain
        report.counterexample = {"words": [a, b], "restricted": str(hi), "exact": str(lo), "chain": list(chain)}
        report.notes.append(f"{len(gaps)} of {len(words) ** 2} pairs differ")
    return _finish(report, start)


# ---------------------------------------------------------------------------
# Composition


def chain_problem(s1: str, p12, p23) -> str | None:
    try:
        s2 = apply(p12, s1)
        s3 = apply(p23, s2)
    except InvalidPath as exc:
        return f"input chain invalid: {exc}"
    try:
        out = compose(p12, p23)
    except Undefined as exc:
        return f"undefined: {exc}"
    if not applies_correctly(out, s1, s3):
        return "projected path does not take s1 to s3"
    if not out.weight_bound:
        return f"weight {out.wgt_raw} > {out.wgt_12} + {out.wgt_23}"
    if not out.length_bound:
        return f"length {out.len_raw} < max({out.len_12}, {out.len_23})"
    if out.cost_raw > cost(p12) + cost(p23):
        return f"cost {out.cost_raw} > {cost(p12)} + {cost(p23)}"
    if out.cost_proj > out.cost_raw:
        return f"dropping blanks raised cost {out.cost_raw} -> {out.cost_proj}"
    k = out.blanks
    if out.wgt_raw != 2 * k + out.wgt_proj or out.len_raw != 2 * k + out.len_proj:
        return "blank bookkeeping mismatch"
    return None


def check_compose_chain(cfg: FuzzConfig = FuzzConfig()) -> PropertyReport:
    """Compose optimal (even trials) or random (odd trials) paths along word triples."""
    start = time.perf_counter()
    report = PropertyReport(
        "compose-chain",
        "composition is defined, correct and obeys the weight/length/cost bounds",
        "fuzz",
        "pass",
        0,
        seed=cfg.seed,
        trials=cfg.trials,
    )
    for t in range(cfg.trials):
        rng = _rng(cfg.seed, t)
        report.trials_run += 1
        if t % 2 == 0:
            s1, s2, s3 = random_triple(rng, cfg.alphabet, cfg.max_word_len, t // 2)
            r12, r23 = metrics.ned(s1, s2), metrics.ned(s2, s3)
            p12, p23 = r12.witness, r23.witness
            problem = chain_problem(s1, p12, p23)
            if problem is None:
                out = compose(p12, p23)
                if metrics.ned_value(s1, s3) > out.cost_proj or out.cost_proj > r12.value + r23.value:
                    problem = "triangle through composed path fails"
        else:
            s1 = random_word(rng, cfg.alphabet, cfg.max_word_len)
            p12 = random_path(rng, s1, cfg.alphabet)
            p23 = random_path(rng, apply(p12, s1), cfg.alphabet)
            problem = chain_problem(s1, p12, p23)
        if problem:
            report.outcome = "fail"
            report.counterexample = {
                "trial": t,
                "s1": s1,
                "p12": format_path(p12),
                "p23": format_path(p23),
                "violation": problem,
            }
            break
    return _finish(report, start)


def check_edit_model(cfg: FuzzConfig = FuzzConfig()) -> PropertyReport:
    """Path invariants: reversal round trip, alignment/Hamming agreement, 0 <= cost <= 1."""
    start = time.perf_counter()
    report = PropertyReport(
        "edit-model",
        "reverse, alignment and cost invariants of edit paths",
        "fuzz",
        "pass",
        0,
        seed=cfg.seed,
        trials=cfg.trials,
    )
    for t in range(cfg.trials):
        rng = _rng(cfg.seed, t)
        w1 = random_word(rng, cfg.alphabet, cfg.max_word_len)
        p = random_path(rng, w1, cfg.alphabet)
        w2 = apply(p, w1)
        report.trials_run += 1
        rp = reverse_path(p)
        top, bottom = render_alignment(p, w1)
        problem = None
        if apply(rp, w2) != w1 or cost(rp) != cost(p) or reverse_path(rp) != p:
            problem = "reversal round trip"
        elif len(top) != len(bottom) or sum(a != b for a, b in zip(top, bottom)) != wgt(p):
            problem = "alignment Hamming distance differs from weight"
        elif top.replace("_", "") != w1 or bottom.replace("_", "") != w2:
            problem = "alignment rows do not strip to the words"
        elif not (wgt(p) <= length(p) == len(p)) or not 0 <= cost(p) <= 1:
            problem = "weight/length bounds"
        if problem:
            report.outcome = "fail"
            report.counterexample = {"trial": t, "word": w1, "path": format_path(p), "violation": problem}
            break
    return _finish(report, start)


def check_witnesses(cfg: FuzzConfig = FuzzConfig()) -> PropertyReport:
    """NED and ED witnesses transform a into b and realise the reported value."""
    start = time.perf_counter()
    report = PropertyReport(
        "witness",
        "ned/ed witnesses are valid optimal paths",
        "fuzz",
        "pass",
        0,
        seed=cfg.seed,
        trials=cfg.trials,
    )
    for t in range(cfg.trials):
        rng = _rng(cfg.seed, t)
        a = random_word(rng, cfg.alphabet, cfg.max_word_len)
        b = random_word(rng, cfg.alphabet, cfg.max_word_len)
        report.trials_run += 1
        rn, re_ = metrics.ned(a, b), metrics.ed(a, b)
        if apply(rn.witness, a) != b or cost(rn.witness) != rn.value or rn.value != metrics.ned_value(a, b):
            problem = "ned witness"
        elif apply(re_.witness, a) != b or wgt(re_.witness) != re_.value:
            problem = "ed witness"
        else:
            continue
        report.outcome = "fail"
        report.counterexample = {"trial": t, "words": [a, b], "violation": problem}
        break
    return _finish(report, start)


# ---------------------------------------------------------------------------
# Arithmetic lemmas and oracle sweeps


def check_fraction_lemmas(cfg: FuzzConfig = FuzzConfig(), limit: int = 200) -> PropertyReport:
    """Both fraction lemmas on every integer 0 <= d <= l <= ``limit``, l >= 1.

    Comparisons are cross-multiplied in int64, which is exact here.
    The two-path lemma is checked at its tightest point
    (d13 = d12 + d23, l13 = max(l12, l23)); d13/l13 only shrinks away from
    it, which is also confirmed over the whole range on a 12-unit grid.
    """
    start = time.perf_counter()
    report = PropertyReport(
        "fraction-lemmas",
        "(d+1)/(l+1) >= d/l and the two-path cost lemma",
        "exhaustive",
        "pass",
        0,
    )
    ls = np.arange(1, limit + 1, dtype=np.int64)
    dd, ll = np.meshgrid(np.arange(0, limit + 1, dtype=np.int64), ls, indexing="ij")
    mask = dd <= ll
    d, l = dd[mask], ll[mask]
    bad = (d + 1) * l < d * (l + 1)
    report.trials_run += int(d.size)
    if bad.any():
        i = int(np.argmax(bad))
        report.outcome = "fail"
        report.counterexample = {"lemma": "plus-one", "d": int(d[i]), "l": int(l[i])}
        return _finish(report, start)

    for d12, l12 in zip(d.tolist(), l.tolist()):
        d13 = d12 + d
        l13 = np.maximum(l12, l)
        bad = (d12 * l + d * l12) * l13 < d13 * l12 * l
        report.trials_run += int(d.size)
        if bad.any():
            i = int(np.argmax(bad))
            report.outcome = "fail"
            report.counterexample = {"lemma": "two-path", "d12": d12, "l12": l12, "d23": int(d[i]), "l23": int(l[i])}
            return _finish(report, start)

    small = 12
    for d12, l12, d23, l23 in product(range(small + 1), range(1, small + 1), range(small + 1), range(1, small + 1)):
        if d12 > l12 or d23 > l23:
            continue
        rhs = Fraction(d12, l12) + Fraction(d23, l23)
        for l13 in range(max(l12, l23), 2 * small + 1):
            if Fraction(d12 + d23, l13) > rhs:
                report.outcome = "fail"
                report.counterexample = {"lemma": "two-path", "d12": d12, "l12": l12, "d23": d23, "l23": l23, "l13": l13}
                return _finish(report, start)
    report.notes.append(f"grid limit {limit}; full d13/l13 range confirmed up to {small}")
    return _finish(report, start)


def check_oracle_ned(max_len: int = 5, alphabet: str = "ab") -> PropertyReport:
    start = time.perf_counter()
    words = list(oracle.enumerate_words(oracle.EnumBudget(max_len, tuple(alphabet))))
    report = PropertyReport("oracle-ned", "ned equals brute-force ned", "exhaustive", "pass", 0)
    for a in words:
        for b in words:
            report.trials_run += 1
            fast, slow = metrics.ned_value(a, b), oracle.brute_force_ned(a, b)
            if fast != slow:
                report.outcome = "fail"
                report.counterexample = {"words": [a, b], "ned": str(fast), "brute_force": str(slow)}
                return _finish(report, start)
    return _finish(report, start)


def check_oracle_ced(max_len: int = 4, alphabet: str = "ab", cfg: metrics.CedSearchConfig | None = None) -> PropertyReport:
    start = time.perf_counter()
    cfg = cfg or metrics.CedSearchConfig()
    words = list(oracle.enumerate_words(oracle.EnumBudget(max_len, tuple(alphabet))))
    report = PropertyReport(
        "oracle-ced",
        f"ced ({cfg.mode} search) equals brute-force ced over a relaxed space",
        "exhaustive",
        "pass",
        0,
    )
    mismatches = []
    for a in words:
        for b in words:
            report.trials_run += 1
            fast, slow = metrics.ced_value(a, b, cfg), oracle.brute_force_ced(a, b)
            if fast != slow:
                mismatches.append((a, b, fast, slow))
    if mismatches:
        a, b, fast, slow = mismatches[0]
        report.outcome = "fail"
        report.counterexample = {"words": [a, b], "ced": str(fast), "brute_force": str(slow), "disagreements": len(mismatches)}
    return _finish(report, start)


# ---------------------------------------------------------------------------
# Registry

PROPERTIES = {
    "edit-model": check_edit_model,
    "witness": check_witnesses,
    "metric-ned": lambda cfg: check_metric_axioms("ned", cfg),
    "metric-ged": lambda cfg: check_metric_axioms("ged", cfg),
    "metric-ed": lambda cfg: check_metric_axioms("ed", cfg),
    "metric-ced": lambda cfg: check_metric_axioms("ced", cfg),
    "postnorm-triangle": check_postnorm_triangle,
    "antitheticals": check_antitheticals,
    "ned-non-escalation": lambda cfg: check_non_escalation_fuzz("ned", cfg),
    "ged-non-escalation": lambda cfg: check_non_escalation_fuzz("ged", cfg),
    "ced-escalation": lambda cfg: check_non_escalation("ced", "aab", "aaab", 3),
    "ced-harmonic": lambda cfg: check_ced_harmonic(),
    "pure-uniformity": lambda cfg: check_pure_uniformity(cfg=cfg),
    "compose-chain": check_compose_chain,
    "fraction-lemmas": check_fraction_lemmas,
    "oracle-ned": lambda cfg: check_oracle_ned(),
    "oracle-ced": lambda cfg: check_oracle_ced(),
    "ced-restriction-gap": lambda cfg: check_ced_restriction(cfg),
}

ORACLE_PROPERTIES = ("oracle-ned", "oracle-ced", "ced-restriction-gap")


def run(selection, cfg: FuzzConfig = FuzzConfig()) -> list[PropertyReport]:
    """Run the named properties (or ``"all"``) in registry order."""
    if selection == "all" or selection == ["all"]:
        names = list(PROPERTIES)
    else:
        names = [selection] if isinstance(selection, str) else list(selection)
    unknown = [name for name in names if name not in PROPERTIES]
    if unknown:
        raise KeyError(f"unknown property: {', '.join(unknown)}")
    return [PROPERTIES[name](cfg) for name in names]

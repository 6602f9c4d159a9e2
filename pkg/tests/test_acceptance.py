"""Acceptance gate. Each test covers one criterion (or one part of it) and
reports a PASS/FAIL line in the pytest terminal summary."""

import json
import subprocess
import sys
import time
from fractions import Fraction as F

import pytest

from nedlib import metrics, oracle, propcheck
from nedlib.compose import compose_bare
from nedlib.edit_model import InvalidPath, apply, c, format_bare, n, v, x
from nedlib.metrics import CedSearchConfig
from nedlib.propcheck import FuzzConfig


def harmonic(k):
    return sum((F(1, i) for i in range(1, k + 1)), F(0))


A96B4, A100 = "a" * 96 + "b" * 4, "a" * 100

NED_GOLDEN = [("acbb", "cc", F(3, 4)), ("aabcde", "abpcg", F(4, 7)), (A96B4, A100, F(1, 25)), ("", "a", F(1))]
ED_GOLDEN = [("aabcde", "abpcg", 4), (A96B4, A100, 4)]
GED_GOLDEN = [
    ("aa", "bb", F(2, 3)),
    ("aab", "b", F(2, 3)),
    ("", "a", F(1)),
    ("a" * 50, A100, F(1, 2)),
    ("a" * 50 + "c" * 50, A100, F(1, 3)),
]
CED_GOLDEN = [("aab" * k, "aaab" * k, val) for k, val in ((1, F(1, 4)), (2, F(15, 56)), (3, F(181, 660)))]
CED_GOLDEN += [("", "a" * k, harmonic(k)) for k in range(1, 9)]


def runs(word):
    """Run-length form for messages, e.g. a^50c^50."""
    if not word:
        return "ε"
    out, i = [], 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        out.append(word[i] if j - i == 1 else f"{word[i]}^{j - i}")
        i = j
    return "".join(out)


def mismatches(cases, f):
    return [f"{runs(a)} vs {runs(b)}: got {f(a, b)}, expected {want}" for a, b, want in cases if f(a, b) != want]


# -- 1. golden values -------------------------------------------------------


def test_1_ned_golden(criterion):
    with criterion("1 ned golden values"):
        assert not mismatches(NED_GOLDEN, metrics.ned_value)


def test_1_ed_golden(criterion):
    with criterion("1 ed golden values"):
        assert not mismatches(ED_GOLDEN, metrics.ed_value)


def test_1_ged_golden(criterion):
    with criterion("1 ged golden values"):
        bad = mismatches(GED_GOLDEN, metrics.ged_value)
        assert not bad, "; ".join(bad)


def test_1_ced_golden(criterion):
    with criterion("1 ced/ced' golden values"):
        assert not mismatches(CED_GOLDEN, metrics.ced_value)
        assert metrics.ced_prime_value("a", "aaaa") == 1


def test_1_apply_example(criterion):
    with criterion("1 apply example"):
        path = (x("a"), n("b"), c("c", "a"), n("d"), v("e"), v("e"))
        assert apply(path, "abcd") == "badee"


def test_1_composition_pipeline(criterion):
    with criterion("1 composition pipeline on abab -> bcbbab -> ababab"):
        # bcbbbab is one symbol too long to be reached by cvnvnn from abab
        with pytest.raises(InvalidPath):
            compose_bare("cvnvnn", "vncnxnn", "abab", "bcbbbab", "ababab")
        out = compose_bare("cvnvnn", "vncnxnn", "abab", "bcbbab", "ababab")
        assert format_bare(out.raw) == "vcvnbnn"
        assert format_bare(out.projected) == "vcvnnn"
        assert apply(out.projected, "abab") == "ababab"
        assert out.wgt_proj == 3 <= out.wgt_12 + out.wgt_23 == 3 + 3
        assert len(out.raw) == 7 >= max(out.len_12, out.len_23) == max(6, 7)
        assert out.weight_bound and out.length_bound


def test_1_runtime(criterion):
    with criterion("1 golden values total runtime < 5 s"):
        start = time.perf_counter()
        for f, cases in (
            (metrics.ned_value, NED_GOLDEN),
            (metrics.ed_value, ED_GOLDEN),
            (metrics.ged_value, GED_GOLDEN),
            (metrics.ced_value, CED_GOLDEN),
        ):
            mismatches(cases, f)
        metrics.ced_prime_value("a", "aaaa")
        compose_bare("cvnvnn", "vncnxnn", "abab", "bcbbab", "ababab")
        elapsed = time.perf_counter() - start
        assert elapsed < 5, f"{elapsed:.2f}s"


# -- 2. NED oracle ------------------------------------------------------------


def test_2_ned_oracle(criterion):
    with criterion("2 ned = brute force over {a,b}, lengths <= 5"):
        start = time.perf_counter()
        words = list(oracle.enumerate_words(oracle.EnumBudget(5, ("a", "b"))))
        bad = [(a, b) for a in words for b in words if metrics.ned_value(a, b) != oracle.brute_force_ned(a, b)]
        elapsed = time.perf_counter() - start
        assert len(words) == 63
        assert not bad, bad[:5]
        assert elapsed < 60, f"{elapsed:.1f}s"


# -- 3. CED search validation ---------------------------------------------------


def _ced_sweep(cfg):
    words = list(oracle.enumerate_words(oracle.EnumBudget(4, ("a", "b"))))
    return [
        (a, b, metrics.ced_value(a, b, cfg), oracle.brute_force_ced(a, b))
        for a in words
        for b in words
        if metrics.ced_value(a, b, cfg) != oracle.brute_force_ced(a, b)
    ]


def test_3_ced_restricted_matches_oracle(criterion):
    with criterion("3 restricted ced = relaxed brute force over {a,b}, lengths <= 4"):
        bad = _ced_sweep(CedSearchConfig.restricted())
        assert not bad, f"{len(bad)} of 961 pairs disagree, e.g. {bad[0]}"


def test_3_ced_exact_matches_oracle(criterion):
    with criterion("supplementary default exact ced = relaxed brute force over {a,b}, lengths <= 4"):
        assert not _ced_sweep(CedSearchConfig())


# -- 4. metric-axiom fuzz -------------------------------------------------------

AXIOM_CFG = FuzzConfig(seed=0, trials=100_000, alphabet_size=3, max_word_len=12, ced_max_len=6, ced_trials=1_000)


@pytest.mark.parametrize("metric", ["ned", "ged"])
def test_4_metric_axioms(criterion, metric):
    with criterion(f"4 {metric} metric axioms, 1e5 triples, lengths <= 12, < 120 s"):
        start = time.perf_counter()
        report = propcheck.check_metric_axioms(metric, AXIOM_CFG)
        elapsed = time.perf_counter() - start
        assert report.passed, report.counterexample
        assert report.trials_run == 100_000
        assert elapsed < 120, f"{elapsed:.1f}s"


def test_4_ced_metric_axioms(criterion):
    with criterion("4 ced metric axioms, 1e3 triples, lengths <= 6"):
        report = propcheck.check_metric_axioms("ced", AXIOM_CFG)
        assert report.passed, report.counterexample
        assert report.trials_run == 1_000


# -- 5. composition fuzz --------------------------------------------------------


def test_5_compose_chain(criterion):
    with criterion("5 compose-chain fuzz, 1e5 triples"):
        report = propcheck.check_compose_chain(FuzzConfig(seed=0, trials=100_000))
        assert report.passed, report.counterexample
        assert report.trials_run == 100_000


# -- 6. counterexamples ---------------------------------------------------------


def test_6_ced_escalation(criterion):
    with criterion("6 ced escalates on (aab, aaab), k <= 3"):
        values = [metrics.ced_value("aab" * k, "aaab" * k) for k in (1, 2, 3)]
        assert values == [F(1, 4), F(15, 56), F(181, 660)]
        assert values[0] < values[1] < values[2]


def test_6_antitheticals(criterion):
    with criterion("6 antithetical violations of ged and ced'"):
        assert metrics.ged_value("aa", "bb") == F(2, 3) != 1
        assert metrics.ced_prime_value("a", "aaaa") == 1
        assert propcheck.check_antitheticals(FuzzConfig(seed=0, trials=1_000)).passed


def test_6_pure_uniformity(criterion):
    with criterion("6 pure-uniformity violations of ged (50/100) and ced (5/10)"):
        assert metrics.ged_value("a" * 50 + "c" * 50, A100) < metrics.ged_value("a" * 50, A100)
        assert metrics.ced_value("a" * 5 + "c" * 5, "a" * 10) < metrics.ced_value("a" * 5, "a" * 10)


def test_6_postnorm_triangle(criterion):
    with criterion("6 post-normalized distance triangle violation found within 1e5 trials"):
        report = propcheck.check_metric_axioms("postnorm", FuzzConfig(seed=0, trials=100_000))
        assert report.counterexample is not None
        assert report.counterexample["violation"].startswith("triangle")
        assert report.trials_run <= 100_000
        assert propcheck.axiom_violation(metrics.postnorm_value, *report.counterexample["words"])


# -- 7. fraction lemmas ---------------------------------------------------------


def test_7_fraction_lemmas(criterion):
    with criterion("7 fraction lemmas over d <= l <= 200"):
        report = propcheck.check_fraction_lemmas(FuzzConfig(), limit=200)
        assert report.passed, report.counterexample


# -- 8. determinism -------------------------------------------------------------


def _check_all_json():
    proc = subprocess.run(
        [sys.executable, "-m", "nedlib", "check", "--property", "all", "--seed", "0", "--json"],
        capture_output=True,
        text=True,
        check=False,
    )
    data = json.loads(proc.stdout)
    for report in data["reports"]:
        report.pop("elapsed")
    return proc.returncode, json.dumps(data, ensure_ascii=False)


def test_8_determinism(criterion):
    with criterion("8 check --property all --seed 0 --json is reproducible"):
        code1, first = _check_all_json()
        code2, second = _check_all_json()
        assert first == second
        assert code1 == code2 == 0, first

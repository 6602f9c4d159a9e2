from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nedlib.edit_model import (
    BLANK,
    BlankInPath,
    EditLetter,
    InvalidPath,
    OverlappingAlphabets,
    PathSyntaxError,
    apply,
    c,
    cost,
    format_bare,
    format_path,
    infer_subscripts,
    is_bare,
    length,
    n,
    parse_path,
    path_from_json,
    path_to_json,
    project_f,
    project_h,
    project_word,
    render_alignment,
    reverse_path,
    v,
    wgt,
    x,
)

EXAMPLE = (x("a"), n("b"), c("c", "a"), n("d"), v("e"), v("e"))

symbols = st.sampled_from("abc")
words = st.text(alphabet="abc", max_size=8)


@st.composite
def word_and_path(draw):
    """A word together with a valid path that applies to it."""
    word = draw(words)
    path = []
    for sym in word:
        path += [v(s) for s in draw(st.lists(symbols, max_size=2))]
        kind = draw(st.sampled_from("ncx"))
        if kind == "n":
            path.append(n(sym))
        elif kind == "x":
            path.append(x(sym))
        else:
            path.append(c(sym, draw(symbols.filter(lambda s: s != sym))))
    path += [v(s) for s in draw(st.lists(symbols, max_size=2))]
    return word, tuple(path)


def test_apply_example():
    assert apply(EXAMPLE, "abcd") == "badee"


def test_example_measures():
    assert wgt(EXAMPLE) == 4
    assert length(EXAMPLE) == 6
    assert cost(EXAMPLE) == Fraction(2, 3)


def test_empty_path():
    assert apply((), "") == ""
    assert cost(()) == 0
    assert format_path(()) == ""
    assert parse_path("") == () == parse_path("ε")


def test_apply_mismatch_reports_index():
    with pytest.raises(InvalidPath) as exc:
        apply((n("a"), n("x")), "ab")
    assert exc.value.index == 2


def test_apply_leftover_symbols():
    with pytest.raises(InvalidPath) as exc:
        apply((n("a"),), "ab")
    assert exc.value.index == 2


def test_apply_exhausted_word():
    with pytest.raises(InvalidPath):
        apply((n("a"), x("b")), "a")


def test_apply_rejects_blank():
    with pytest.raises(BlankInPath):
        apply((BLANK,), "")


def test_blank_measures():
    assert BLANK.weight == 2 and BLANK.length == 2
    p = (n("a"), BLANK, v("b"))
    assert (wgt(p), length(p)) == (3, 4)
    assert project_h(p) == (n("a"), v("b"))


def test_tuple_words():
    word = (1, 2, 3)
    assert apply((n(1), c(2, 5), x(3)), word) == (1, 5)


def test_reverse_example():
    back = reverse_path(EXAMPLE)
    assert apply(back, "badee") == "abcd"
    assert back[0] == v("a")


def test_reverse_rejects_blank():
    with pytest.raises(BlankInPath):
        reverse_path((BLANK,))


@given(word_and_path())
def test_reverse_round_trip(wp):
    word, path = wp
    target = apply(path, word)
    back = reverse_path(path)
    assert apply(back, target) == word
    assert cost(back) == cost(path)
    assert reverse_path(back) == path


@given(word_and_path())
def test_alignment_hamming_is_weight(wp):
    word, path = wp
    top, bottom = render_alignment(path, word)
    assert len(top) == len(bottom) == len(path)
    assert sum(s != t for s, t in zip(top, bottom)) == wgt(path)
    assert top.replace("_", "") == word
    assert bottom.replace("_", "") == apply(path, word)


@given(word_and_path())
def test_weight_at_most_length(wp):
    _, path = wp
    assert wgt(path) <= length(path) == len(path)
    assert 0 <= cost(path) <= 1


@given(word_and_path())
def test_text_and_json_round_trip(wp):
    _, path = wp
    assert parse_path(format_path(path)) == path
    assert path_from_json(path_to_json(path)) == path


@given(word_and_path())
def test_infer_subscripts_recovers_path(wp):
    word, path = wp
    assert infer_subscripts(format_bare(path), word, apply(path, word)) == path


def test_render_alignment_example():
    assert render_alignment(EXAMPLE, "abcd") == ("abcd__", "_badee")


def test_render_alignment_custom_pad():
    assert render_alignment((v("a"),), "", pad="-") == ("-", "a")


def test_parse_blank_and_change():
    assert parse_path("c(a>b).B.x(c)") == (c("a", "b"), BLANK, x("c"))


@pytest.mark.parametrize("text", ["n(a)x(b)", "q(a)", "c(a)", "n(a)."])
def test_parse_errors(text):
    with pytest.raises(PathSyntaxError):
        parse_path(text)


def test_is_bare():
    assert is_bare("cvnvnn")
    assert not is_bare("n(a)")
    assert not is_bare("")


def test_infer_subscripts_rejects_bad_n():
    with pytest.raises(InvalidPath) as exc:
        infer_subscripts("nn", "ab", "aa")
    assert exc.value.index == 2


def test_infer_subscripts_incomplete():
    with pytest.raises(InvalidPath):
        infer_subscripts("n", "ab", "a")


def test_project_word():
    assert project_word("a1b2", "ab") == "ab"
    assert project_word((1, "a"), {1}) == (1,)


def test_project_f_maps_padding_changes():
    # s1' = a0, s2' = 9b ; path c(a>9).c(0>b)
    p = (c("a", "9"), c("0", "b"))
    proj = project_f(p, "ab", "0", "9")
    assert proj == (x("a"), v("b"))
    assert apply(proj, "a") == "b"


def test_project_f_overlap():
    with pytest.raises(OverlappingAlphabets):
        project_f((), "ab", "b", "9")


def test_letter_str():
    assert str(c("a", "b")) == "c(a>b)"
    assert str(BLANK) == "B"
    assert EditLetter("n", "a", "a") == n("a")

"""Edit letters, edit paths and the operations defined on them.

A word is any finite sequence of hashable symbols; in practice a ``str``
(one symbol per character) or a tuple. An edit path is a tuple of
:class:`EditLetter`. Every letter records the symbol it consumes from the
source word (``src``) and the symbol it emits into the target word (``dst``):

====  ===========  =====  =====  ======  ======
op    meaning      src    dst    weight  length
====  ===========  =====  =====  ======  ======
n     no change    s      s      0       1
c     change       s      s'     1       1
v     insert       None   s'     1       1
x     delete       s      None   1       1
b     blank        None   None   2       2
====  ===========  =====  =====  ======  ======

The blank letter is an abbreviation for an insertion immediately followed by
the deletion of the same symbol. It only shows up in the output of
:func:`nedlib.compose.cmps_h` and is rejected by :func:`apply`.
"""

from __future__ import annotations

import json
import re
from collections.abc import Hashable, Iterable, Sequence
from fractions import Fraction
from typing import NamedTuple, Union

Symbol = Hashable
Word = Union[str, tuple]
EditPath = tuple  # tuple[EditLetter, ...]

PAD = "_"

_WEIGHT = {"n": 0, "c": 1, "v": 1, "x": 1, "b": 2}
_LENGTH = {"n": 1, "c": 1, "v": 1, "x": 1, "b": 2}


class EditError(ValueError):
    """Base class for edit-path errors."""


class InvalidPath(EditError):
    """Raised when a path cannot be applied to a word.

    ``index`` is the 1-based position of the offending letter; it is
    ``len(path) + 1`` when the path ran out before the word did.
    """

    def __init__(self, index: int, reason: str):
        super().__init__(f"invalid edit path at letter {index}: {reason}")
        self.index = index
        self.reason = reason


class BlankInPath(EditError):
    """Raised when a blank letter reaches an operation that needs real letters."""

    def __init__(self, index: int):
        super().__init__(f"blank letter at position {index} is not a real edit")
        self.index = index


class OverlappingAlphabets(EditError):
    pass


class PathSyntaxError(EditError):
    pass


class EditLetter(NamedTuple):
    op: str
    src: Symbol | None = None
    dst: Symbol | None = None

    @property
    def weight(self) -> int:
        return _WEIGHT[self.op]

    @property
    def length(self) -> int:
        return _LENGTH[self.op]

    def __str__(self) -> str:
        return format_letter(self)


def n(sym: Symbol) -> EditLetter:
    return EditLetter("n", sym, sym)


def c(src: Symbol, dst: Symbol) -> EditLetter:
    return EditLetter("c", src, dst)


def v(sym: Symbol) -> EditLetter:
    return EditLetter("v", None, sym)


def x(sym: Symbol) -> EditLetter:
    return EditLetter("x", sym, None)


BLANK = EditLetter("b")


def _wrap(word: Word, symbols: list) -> Word:
    """Build a word of the same flavour (str or tuple) as ``word``."""
    if isinstance(word, str) and all(isinstance(s, str) for s in symbols):
        return "".join(symbols)
    return tuple(symbols)


def apply(path: Sequence[EditLetter], word: Word) -> Word:
    """Apply ``path`` to ``word`` and return the transformed word.

    Raises :class:`InvalidPath` when a letter does not match the symbol it is
    supposed to consume, or when path and word are not exhausted together.

    >>> apply((x("a"), n("b"), c("c", "a"), n("d"), v("e"), v("e")), "abcd")
    'badee'
    """
    out = []
    i = 0
    for k, letter in enumerate(path, start=1):
        op = letter.op
        if op == "v":
            out.append(letter.dst)
            continue
        if op == "b":
            raise BlankInPath(k)
        if i >= len(word):
            raise InvalidPath(k, f"{format_letter(letter)} needs a symbol but the word is exhausted")
        if word[i] != letter.src:
            raise InvalidPath(k, f"{format_letter(letter)} does not match symbol {word[i]!r}")
        if op != "x":
            out.append(letter.dst)
        i += 1
    if i != len(word):
        raise InvalidPath(len(path) + 1, f"path ends with {len(word) - i} unconsumed symbol(s)")
    return _wrap(word, out)


def wgt(path: Iterable[EditLetter]) -> int:
    return sum(_WEIGHT[letter.op] for letter in path)


def length(path: Iterable[EditLetter]) -> int:
    """Total length of a path (blank letters count twice)."""
    return sum(_LENGTH[letter.op] for letter in path)


def cost(path: Sequence[EditLetter]) -> Fraction:
    """Weight divided by length, and 0 for the empty path."""
    total = length(path)
    if total == 0:
        return Fraction(0)
    return Fraction(wgt(path), total)


def reverse_path(path: Iterable[EditLetter]) -> EditPath:
    """Turn a path from ``s1`` to ``s2`` into one from ``s2`` to ``s1`` of equal cost."""
    out = []
    for k, letter in enumerate(path, start=1):
        if letter.op == "b":
            raise BlankInPath(k)
        op = {"v": "x", "x": "v"}.get(letter.op, letter.op)
        out.append(EditLetter(op, letter.dst, letter.src))
    return tuple(out)


def project_h(path: Iterable[EditLetter]) -> EditPath:
    """Drop blank letters."""
    return tuple(letter for letter in path if letter.op != "b")


def project_f(path: Iterable[EditLetter], core, side1, side2) -> EditPath:
    """Project a path over ``core | side1 | side2`` onto ``core``.

    Used to turn a path between padded words into a path between their
    ``core`` projections. Letters touching only padding symbols vanish; a
    change from a ``side1`` symbol into a core symbol becomes an insertion,
    a change from a core symbol into a ``side2`` symbol becomes a deletion.
    """
    core, side1, side2 = frozenset(core), frozenset(side1), frozenset(side2)
    if core & side1 or core & side2 or side1 & side2:
        raise OverlappingAlphabets("core and side alphabets must be pairwise disjoint")
    out = []
    for letter in path:
        op, src, dst = letter
        if op in ("n", "v", "x"):
            sym = src if op != "v" else dst
            if sym in core:
                out.append(letter)
        elif op == "c":
            if src in core and dst in core:
                out.append(letter)
            elif src in side1 and dst in core:
                out.append(v(dst))
            elif src in core and dst in side2:
                out.append(x(src))
    return tuple(out)


def project_word(word: Word, keep) -> Word:
    keep = frozenset(keep)
    return _wrap(word, [s for s in word if s in keep])


def render_alignment(path: Sequence[EditLetter], word: Word, pad=PAD) -> tuple[Word, Word]:
    """Return the two padded rows of the alignment induced by ``path``.

    The rows have equal length, and they differ in exactly ``wgt(path)``
    positions.
    """
    apply(path, word)
    top, bottom = [], []
    for letter in path:
        top.append(pad if letter.op == "v" else letter.src)
        bottom.append(pad if letter.op == "x" else letter.dst)
    return _wrap(word, top), _wrap(word, bottom)


# ---------------------------------------------------------------------------
# Text and JSON forms

_TOKEN = re.compile(r"([nvx])\((.)\)|c\((.)>(.)\)|(B)", re.S)


def format_letter(letter: EditLetter) -> str:
    op, src, dst = letter
    if op == "b":
        return "B"
    if op == "c":
        return f"c({src}>{dst})"
    return f"{op}({dst if op == 'v' else src})"


def format_path(path: Iterable[EditLetter]) -> str:
    """Compact text form, e.g. ``x(a).n(b).c(c>a)``. The empty path is ``""``."""
    return ".".join(format_letter(letter) for letter in path)


def format_bare(path: Iterable[EditLetter]) -> str:
    """Subscript-free display form, e.g. ``xncnvv``."""
    return "".join(letter.op for letter in path)


def parse_path(text: str) -> EditPath:
    """Inverse of :func:`format_path`. Symbols are single characters."""
    text = text.strip()
    if text in ("", "ε", "eps"):
        return ()
    letters = []
    pos = 0
    while pos < len(text):
        if letters:
            if text[pos] != ".":
                raise PathSyntaxError(f"expected '.' at offset {pos} in {text!r}")
            pos += 1
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PathSyntaxError(f"cannot parse edit letter at offset {pos} in {text!r}")
        op, sym, src, dst, blank = m.groups()
        if blank:
            letters.append(BLANK)
        elif op:
            letters.append({"n": n, "v": v, "x": x}[op](sym))
        else:
            letters.append(c(src, dst))
        pos = m.end()
    return tuple(letters)


def is_bare(text: str) -> bool:
    text = text.strip()
    return bool(text) and all(ch in "ncvxb" for ch in text)


def path_to_json(path: Iterable[EditLetter]) -> list[dict]:
    records = []
    for op, src, dst in path:
        rec = {"op": op}
        if src is not None:
            rec["src"] = src
        if dst is not None:
            rec["dst"] = dst
        records.append(rec)
    return records


def path_from_json(records) -> EditPath:
    if isinstance(records, str):
        records = json.loads(records)
    return tuple(EditLetter(r["op"], r.get("src"), r.get("dst")) for r in records)


def infer_subscripts(bare: str, source: Word, target: Word) -> EditPath:
    """Attach symbols to a bare path (``"xncnvv"``) by walking both words.

    Raises :class:`InvalidPath` if the bare path cannot take ``source`` to
    ``target``.
    """
    out = []
    i = j = 0
    for k, op in enumerate(bare.strip(), start=1):
        need_src = op in "ncx"
        need_dst = op in "ncv"
        if op not in "ncvx":
            raise PathSyntaxError(f"unknown bare edit letter {op!r}")
        if need_src and i >= len(source):
            raise InvalidPath(k, "source word exhausted")
        if need_dst and j >= len(target):
            raise InvalidPath(k, "target word exhausted")
        if op == "n":
            if source[i] != target[j]:
                raise InvalidPath(k, f"n cannot copy {source[i]!r} onto {target[j]!r}")
            out.append(n(source[i]))
        elif op == "c":
            out.append(c(source[i], target[j]))
        elif op == "v":
            out.append(v(target[j]))
        else:
            out.append(x(source[i]))
        i += need_src
        j += need_dst
    if i != len(source) or j != len(target):
        raise InvalidPath(len(bare) + 1, "bare path does not cover both words")
    return tuple(out)

"""Composition of edit paths ``s1 -> s2`` and ``s2 -> s3`` into ``s1 -> s3``.

:func:`cmps_h` walks both paths in lockstep. The result may contain the
blank letter (an insertion that the second path deletes again). Dropping
blanks with :func:`~nedlib.edit_model.project_h` yields an ordinary edit path
from ``s1`` to ``s3`` whose weight is at most the sum of the input weights and
whose raw length is at least the longer input length. Those two bounds are
what make NED satisfy the triangle inequality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from nedlib.edit_model import (
    BLANK,
    BlankInPath,
    EditLetter,
    EditPath,
    InvalidPath,
    Word,
    apply,
    c,
    cost,
    infer_subscripts,
    length,
    n,
    project_h,
    v,
    wgt,
    x,
)


class Undefined(ValueError):
    """The two paths do not form a chain (no composition case matches).

    ``i12`` and ``i23`` are 1-based positions of the letters that failed to
    match; a position past the end means that path was already exhausted.
    """

    def __init__(self, i12: int, i23: int, reason: str):
        super().__init__(f"composition undefined at p12[{i12}], p23[{i23}]: {reason}")
        self.i12 = i12
        self.i23 = i23
        self.reason = reason


# (op in p12, op in p23) -> builder of the composed letter from the outer
# symbols; applies only when p12's emitted symbol equals p23's consumed one.
_PAIR_CASES = {
    ("n", "n"): lambda a, b: n(a.src),  # (3)
    ("n", "c"): lambda a, b: c(a.src, b.dst),  # (4)
    ("n", "x"): lambda a, b: x(a.src),  # (5)
    ("c", "c"): lambda a, b: c(a.src, b.dst),  # (6)
    ("c", "x"): lambda a, b: x(a.src),  # (7)
    ("c", "n"): lambda a, b: c(a.src, a.dst),  # (8)
    ("v", "n"): lambda a, b: v(a.dst),  # (9)
    ("v", "c"): lambda a, b: v(b.dst),  # (10)
    ("v", "x"): lambda a, b: BLANK,  # (11)
}


def cmps_h(p12: EditPath, p23: EditPath) -> EditPath:
    """Compose two blank-free paths; raise :class:`Undefined` if they do not chain."""
    for k, letter in enumerate(p12, start=1):
        if letter.op == "b":
            raise BlankInPath(k)
    for k, letter in enumerate(p23, start=1):
        if letter.op == "b":
            raise BlankInPath(k)

    out: list[EditLetter] = []
    i = j = 0
    n12, n23 = len(p12), len(p23)
    while i < n12 or j < n23:
        a = p12[i] if i < n12 else None
        b = p23[j] if j < n23 else None
        if a is not None and a.op == "x":
            out.append(x(a.src))  # (1)
            i += 1
            continue
        if b is not None and b.op == "v":
            out.append(v(b.dst))  # (2)
            j += 1
            continue
        if a is None or b is None:
            which = "p12" if a is None else "p23"
            raise Undefined(i + 1, j + 1, f"{which} is exhausted while the other path still has letters")
        build = _PAIR_CASES.get((a.op, b.op))
        if build is None or a.dst != b.src:
            raise Undefined(i + 1, j + 1, f"no case composes {a} with {b}")
        out.append(build(a, b))
        i += 1
        j += 1
    return tuple(out)


@dataclass(frozen=True)
class ComposeOutcome:
    raw: EditPath
    projected: EditPath
    wgt_raw: int
    len_raw: int
    wgt_proj: int
    len_proj: int
    wgt_12: int
    len_12: int
    wgt_23: int
    len_23: int

    @property
    def blanks(self) -> int:
        return sum(1 for letter in self.raw if letter.op == "b")

    @property
    def weight_bound(self) -> bool:
        return self.wgt_raw <= self.wgt_12 + self.wgt_23

    @property
    def length_bound(self) -> bool:
        return self.len_raw >= max(self.len_12, self.len_23)

    @property
    def cost_raw(self) -> Fraction:
        return cost(self.raw)

    @property
    def cost_proj(self) -> Fraction:
        return cost(self.projected)


def compose(p12: EditPath, p23: EditPath) -> ComposeOutcome:
    raw = cmps_h(p12, p23)
    proj = project_h(raw)
    return ComposeOutcome(
        raw=raw,
        projected=proj,
        wgt_raw=wgt(raw),
        len_raw=length(raw),
        wgt_proj=wgt(proj),
        len_proj=length(proj),
        wgt_12=wgt(p12),
        len_12=length(p12),
        wgt_23=wgt(p23),
        len_23=length(p23),
    )


def applies_correctly(outcome: ComposeOutcome, s1: Word, s3: Word) -> bool:
    try:
        return apply(outcome.projected, s1) == s3
    except InvalidPath:
        return False


def compose_chain(p12: EditPath, p23: EditPath, s1: Word) -> tuple[ComposeOutcome, Word, Word]:
    """Compose after checking that ``p12`` applies to ``s1`` and ``p23`` to the result.

    Returns the outcome together with ``s2`` and ``s3``. Raises
    :class:`InvalidPath` if either path does not apply.
    """
    s2 = apply(p12, s1)
    s3 = apply(p23, s2)
    return compose(p12, p23), s2, s3


def compose_bare(p12: str, p23: str, s1: Word, s2: Word, s3: Word) -> ComposeOutcome:
    """Compose subscript-free paths such as ``"cvnvnn"`` given the three words."""
    return compose(infer_subscripts(p12, s1, s2), infer_subscripts(p23, s2, s3))

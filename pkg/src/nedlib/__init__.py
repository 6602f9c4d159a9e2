"""Exact normalized edit distance and related string distances.

>>> from nedlib import ned
>>> ned("acbb", "cc").value
Fraction(3, 4)
"""

from nedlib.compose import ComposeOutcome, Undefined, cmps_h, compose, compose_bare
from nedlib.edit_model import (
    BLANK,
    EditLetter,
    InvalidPath,
    apply,
    c,
    cost,
    format_path,
    length,
    n,
    parse_path,
    project_f,
    project_h,
    render_alignment,
    reverse_path,
    v,
    wgt,
    x,
)
from nedlib.metrics import (
    CedSearchConfig,
    DistanceResult,
    LimitExceeded,
    ced,
    ced_prime,
    ed,
    ged,
    ned,
    ned_value,
)

__all__ = [
    "BLANK",
    "CedSearchConfig",
    "ComposeOutcome",
    "DistanceResult",
    "EditLetter",
    "InvalidPath",
    "LimitExceeded",
    "Undefined",
    "apply",
    "c",
    "ced",
    "ced_prime",
    "cmps_h",
    "compose",
    "compose_bare",
    "cost",
    "ed",
    "format_path",
    "ged",
    "length",
    "n",
    "ned",
    "ned_value",
    "parse_path",
    "project_f",
    "project_h",
    "render_alignment",
    "reverse_path",
    "v",
    "wgt",
    "x",
]

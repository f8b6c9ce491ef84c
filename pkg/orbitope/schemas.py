from __future__ import annotations

from typing import Literal


Command = Literal[
    "eulerian",
    "hvec",
    "fvec",
    "poincare",
    "classify",
    "verify",
    "oracle",
]

OutputFormat = Literal["text", "json", "csv", "latex"]

FormTag = Literal[
    "empty",
    "left-interval",
    "right-interval",
    "two-intervals",
    "none",
]

SuiteName = Literal[
    "thm4",
    "thm5",
    "thm6",
    "cor4",
    "id14",
    "symmetry",
    "oracle",
    "example1",
    "eulerian",
    "classify",
]

SUITE_ORDER: tuple[SuiteName, ...] = (
    "thm4",
    "thm5",
    "thm6",
    "cor4",
    "id14",
    "symmetry",
    "oracle",
    "example1",
    "eulerian",
    "classify",
)

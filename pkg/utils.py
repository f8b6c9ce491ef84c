from __future__ import annotations

import csv
import io
from typing import Iterable, Mapping, Sequence

from orbitope.polynomial import Polynomial
from orbitope.state import FVector, HVector


def decimal_strings(values: Iterable[int]) -> list[str]:
    return [str(int(v)) for v in values]


def make_json_safe(obj):
    """
    Recursively convert result objects into JSON-safe structures.
    Integer coefficient sequences become decimal strings so that no
    unbounded integer is ever read back through a float.
    """

    # --- polynomials and face/h vectors ---
    if isinstance(obj, Polynomial):
        return decimal_strings(obj.coeffs)
    if isinstance(obj, FVector):
        return decimal_strings(obj.counts)
    if isinstance(obj, HVector):
        return decimal_strings(obj.coeffs)

    # --- dict / mapping ---
    if isinstance(obj, Mapping):
        return {str(make_json_safe(k)): make_json_safe(v) for k, v in obj.items()}

    # --- sets have no order of their own ---
    if isinstance(obj, (set, frozenset)):
        return [make_json_safe(item) for item in sorted(obj)]

    if isinstance(obj, (list, tuple)):
        return [make_json_safe(item) for item in obj]

    if obj is None or isinstance(obj, (str, int, bool)):
        return obj

    return str(obj)


def to_csv(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def to_latex(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    lines = [
        "\\begin{tabular}{" + "r" * len(header) + "}",
        " & ".join(header) + " \\\\",
        "\\hline",
    ]
    lines += [" & ".join(str(cell) for cell in row) + " \\\\" for row in rows]
    lines.append("\\end{tabular}")
    return "\n".join(lines)

from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field, ValidationError, model_validator

from orbitope import __version__
from orbitope.coxeter import (
    SimpleSubset,
    classify_combinatorially_smooth,
    j_family,
    parse_subset,
)
from orbitope.errors import InputError, OrbitopeError
from orbitope.eulerian import eulerian_polynomial
from orbitope.hvector import f_vector_lattice, h_polynomial_lattice, poincare
from orbitope.oracle import face_lattice, is_simple
from orbitope.schemas import SUITE_ORDER, Command, OutputFormat, SuiteName
from orbitope.settings import get_settings
from orbitope.state import Report, SuiteReport
from orbitope.suites import check_guard
from orbitope.supervisor import run_verification
from utils import decimal_strings, make_json_safe, to_csv, to_latex

logger = logging.getLogger("orbitope.cli")

# Data Models

SUBSET_COMMANDS = ("hvec", "fvec", "poincare", "oracle", "classify")


class RunConfig(BaseModel):
    command: Command
    n: Optional[int] = Field(default=None, ge=0, description="Rank of A_n.")
    j: Optional[str] = Field(default=None, description='Subset syntax: "s4,s5", "4,5" or "empty".')
    k: Optional[int] = Field(default=None, description="Shorthand for J(k, n).")
    suite: Optional[str] = None
    max_n: Optional[int] = Field(default=None, ge=1)
    format: OutputFormat = "text"
    guard_n: Optional[int] = Field(default=None, ge=1)
    dump: bool = False

    @model_validator(mode="after")
    def _check_arguments(self) -> "RunConfig":
        if self.dump and self.command != "oracle":
            raise ValueError(f"{self.command} takes no --dump")
        if self.command == "verify":
            if self.suite is None:
                raise ValueError("verify needs --suite")
            if self.n is not None or self.j is not None or self.k is not None:
                raise ValueError("verify takes --max-n, not --n / --j / --k")
            return self
        if self.suite is not None or self.max_n is not None:
            raise ValueError(f"{self.command} takes no --suite / --max-n")
        if self.n is None:
            raise ValueError(f"{self.command} needs --n")
        if self.command in SUBSET_COMMANDS:
            if (self.j is None) == (self.k is None):
                raise ValueError(f"{self.command} needs exactly one of --j / --k")
        elif self.j is not None or self.k is not None:
            raise ValueError(f"{self.command} takes no --j / --k")
        return self

    def subset(self) -> SimpleSubset:
        if self.k is not None:
            return j_family(self.n, self.k)
        return parse_subset(self.j, self.n)


def _require_rank(n: int) -> None:
    if n < 1:
        raise InputError(f"rank must be at least 1, got {n}")


def _base_report(config: RunConfig, j: SimpleSubset) -> Report:
    smooth, form = classify_combinatorially_smooth(config.n, j)
    return Report(
        version=__version__,
        command=config.command,
        n=config.n,
        j=list(j.members),
        k=config.k,
        smooth=smooth,
        form=form,
    )


def _header(report: Report) -> str:
    members = ",".join(f"s{i}" for i in report.j) or "empty"
    return (
        f"n={report.n} J={members} form={report.form} "
        f"smooth={str(report.smooth).lower()}"
    )


def _degree_rows(values: Sequence[str]) -> List[Tuple[int, str]]:
    return list(enumerate(values))


def _render(report: Report, config: RunConfig, text: str, header: Sequence[str], rows) -> str:
    if config.format == "json":
        return report.to_json()
    if config.format == "csv":
        return to_csv(header, rows)
    if config.format == "latex":
        return to_latex(header, rows)
    return text


def _run_eulerian(config: RunConfig) -> Tuple[int, str]:
    # E_n is h of the rank n-1 permutohedron, so it rides in the h field
    coeffs = make_json_safe(eulerian_polynomial(config.n))
    report = Report(version=__version__, command="eulerian", n=config.n, h=coeffs)
    return 0, _render(report, config, " ".join(coeffs), ("degree", "coefficient"), _degree_rows(coeffs))


def _run_hvec(config: RunConfig) -> Tuple[int, str]:
    _require_rank(config.n)
    j = config.subset()
    report = _base_report(config, j)
    report.h = make_json_safe(h_polynomial_lattice(config.n, j))
    text = f"{_header(report)}\nh: {' '.join(report.h)}"
    return 0, _render(report, config, text, ("degree", "h"), _degree_rows(report.h))


def _run_fvec(config: RunConfig) -> Tuple[int, str]:
    _require_rank(config.n)
    j = config.subset()
    report = _base_report(config, j)
    report.f = make_json_safe(f_vector_lattice(config.n, j))
    text = f"{_header(report)}\nf: {' '.join(report.f)}"
    return 0, _render(report, config, text, ("dim", "f"), _degree_rows(report.f))


def _run_poincare(config: RunConfig) -> Tuple[int, str]:
    _require_rank(config.n)
    j = config.subset()
    report = _base_report(config, j)
    series = poincare(config.n, j)
    report.poincare = make_json_safe(series.polynomial)
    report.betti = decimal_strings(series.betti)
    text = "\n".join(
        [
            _header(report),
            f"poincare: {' '.join(report.poincare)}",
            f"betti: {' '.join(report.betti)}",
            f"euler characteristic: {series.euler_characteristic}",
        ]
    )
    return 0, _render(report, config, text, ("degree", "betti"), _degree_rows(report.betti))


def _run_classify(config: RunConfig) -> Tuple[int, str]:
    j = config.subset()
    report = _base_report(config, j)
    row = (report.n, j.label(), report.form, str(report.smooth).lower())
    return 0, _render(report, config, _header(report), ("n", "J", "form", "smooth"), [row])


def _run_oracle(config: RunConfig) -> Tuple[int, str]:
    _require_rank(config.n)
    j = config.subset()
    report = _base_report(config, j)
    lattice = face_lattice(config.n, j, config.guard_n)
    report.f = make_json_safe(lattice.f_vector())
    report.smooth = is_simple(lattice)
    lines = [_header(report), f"f: {' '.join(report.f)}"]
    if config.dump:
        lines.append(lattice.dump())
    return 0, _render(report, config, "\n".join(lines), ("dim", "f"), _degree_rows(report.f))


def _requested_suites(name: str) -> List[SuiteName]:
    if name == "all":
        return list(SUITE_ORDER)
    if name not in SUITE_ORDER:
        raise InputError(f"unknown suite {name!r}; choose from {', '.join(SUITE_ORDER)} or all")
    return [name]


def _render_verification(results: Sequence[SuiteReport], config: RunConfig) -> str:
    if config.format == "json":
        return "\n".join(
            Report(version=__version__, command="verify", suite=result).to_json()
            for result in results
        )
    rows = [
        (result.name, instance.key, "pass" if instance.passed else "fail")
        for result in results
        for instance in result.instances
    ]
    if config.format == "csv":
        return to_csv(("suite", "key", "pass"), rows)
    if config.format == "latex":
        return to_latex(("suite", "key", "pass"), rows)
    lines = []
    for result in results:
        lines.append(result.summary())
        for instance in result.instances:
            if not instance.passed:
                lines.append(
                    f"  FAIL {instance.key}: expected {' '.join(instance.expected or [])} "
                    f"got {' '.join(instance.got or [])}"
                )
    return "\n".join(lines)


def _run_verify(config: RunConfig) -> Tuple[int, str]:
    settings = get_settings()
    guard_n = config.guard_n or settings.guard_n
    suites = _requested_suites(config.suite)
    if config.max_n is not None:
        check_guard(suites, config.max_n, guard_n)
    max_n = config.max_n or settings.verify_max_n
    results = run_verification(suites, max_n, guard_n)
    status = 0 if all(result.all_passed for result in results) else 1
    return status, _render_verification(results, config)


COMMANDS = {
    "eulerian": _run_eulerian,
    "hvec": _run_hvec,
    "fvec": _run_fvec,
    "poincare": _run_poincare,
    "classify": _run_classify,
    "oracle": _run_oracle,
    "verify": _run_verify,
}


def run(config: RunConfig) -> Tuple[int, str]:
    """Execute one command; returns (exit status, serialized report)."""
    return COMMANDS[config.command](config)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitope",
        description="f-vectors, h-polynomials and Betti numbers of A_n orbit polytopes.",
    )
    parser.add_argument("command", choices=list(COMMANDS))
    parser.add_argument("--n", type=int)
    parser.add_argument("--j", help='subset of simple reflections: "s4,s5", "4,5" or "empty"')
    parser.add_argument("--k", type=int, help="use J(k, n) = {s_(n-k+1), ..., s_n}")
    parser.add_argument("--suite", help=f"one of {', '.join(SUITE_ORDER)} or all")
    parser.add_argument("--max-n", dest="max_n", type=int)
    parser.add_argument("--format", choices=["text", "json", "csv", "latex"], default="text")
    parser.add_argument("--guard-n", dest="guard_n", type=int, help="raise the oracle size guard")
    parser.add_argument("--dump", action="store_true", help="print the oracle face lattice")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    logging.basicConfig(
        level=get_settings().log_level.upper(),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        config = RunConfig(**vars(args))
    except ValidationError as e:
        print(f"usage error: {e.errors()[0]['msg']}", file=sys.stderr)
        return 2

    try:
        status, output = run(config)
    except OrbitopeError as e:
        print(f"error: {e.detail}", file=sys.stderr)
        return e.exit_code

    print(output)
    return status


if __name__ == "__main__":
    sys.exit(main())

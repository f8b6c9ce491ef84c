"""Verification suites: each checks one family of identities instance by instance."""

from __future__ import annotations

import logging
import math
from typing import Callable, Dict, Iterable, Sequence

from orbitope.coxeter import (
    SimpleSubset,
    classify_combinatorially_smooth,
    j_family,
    parabolic_order,
)
from orbitope.errors import GuardViolation
from orbitope.eulerian import (
    eulerian_polynomial,
    eulerian_row_by_enumeration,
)
from orbitope.hvector import (
    binomial_identity_14,
    eulerian_polynomial_subset_form,
    f_vector_lattice,
    h_closed_form_theorem5,
    h_of_family,
    h_polynomial_lattice,
    h_recurrence,
    poincare_difference_corollary4,
)
from orbitope.oracle import f_vector_geometric, face_lattice, is_simple
from orbitope.polynomial import Polynomial
from orbitope.schemas import SuiteName
from orbitope.state import SuiteInstance, SuiteReport

logger = logging.getLogger(__name__)

# ranks up to which the oracle and the classifier sweep every subset J
ORACLE_ALL_SUBSETS_MAX_N = 4
ENUMERATION_MAX_N = 8

SuiteRunner = Callable[[int, int], SuiteReport]


def _instance(key: str, expected: Sequence[int], got: Sequence[int]) -> SuiteInstance:
    expected, got = tuple(expected), tuple(got)
    if expected == got:
        return SuiteInstance(key=key, passed=True)
    return SuiteInstance(
        key=key,
        passed=False,
        expected=list(expected),
        got=list(got),
    )


def _check(key: str, ok: bool, detail: Iterable[int] = ()) -> SuiteInstance:
    if ok:
        return SuiteInstance(key=key, passed=True)
    return SuiteInstance(key=key, passed=False, got=list(detail))


def _subset_key(n: int, j: SimpleSubset) -> str:
    return f"n={n},J={j.label()}"


def run_thm4(max_n: int, guard_n: int) -> SuiteReport:
    instances = []
    for n in range(1, max_n + 1):
        expected = eulerian_polynomial(n + 1).coeffs
        instances.append(_instance(f"n={n},subsets", expected, eulerian_polynomial_subset_form(n).coeffs))
        lattice = h_polynomial_lattice(n, SimpleSubset(n, 0)).coeffs
        instances.append(_instance(f"n={n},lattice", expected, lattice))
    return SuiteReport(name="thm4", instances=instances)


def run_thm5(max_n: int, guard_n: int) -> SuiteReport:
    instances = [
        _instance(
            f"n={n}",
            h_polynomial_lattice(n, SimpleSubset.of(n, [n])).coeffs,
            h_closed_form_theorem5(n).coeffs,
        )
        for n in range(2, max_n + 1)
    ]
    return SuiteReport(name="thm5", instances=instances)


def run_thm6(max_n: int, guard_n: int) -> SuiteReport:
    instances = [
        _instance(f"n={n},k={k}", h_of_family(n, k).coeffs, h_recurrence(n, k).coeffs)
        for n in range(1, max_n + 1)
        for k in range(0, n + 1)
    ]
    return SuiteReport(name="thm6", instances=instances)


def run_cor4(max_n: int, guard_n: int) -> SuiteReport:
    instances = []
    for n in range(1, max_n + 1):
        p1 = h_of_family(n, 1).polynomial.substitute_square()
        for k in range(1, n + 1):
            direct = p1 - h_of_family(n, k).polynomial.substitute_square()
            instances.append(
                _instance(f"n={n},k={k}", direct.coeffs, poincare_difference_corollary4(n, k).coeffs)
            )
    return SuiteReport(name="cor4", instances=instances)


def run_id14(max_n: int, guard_n: int) -> SuiteReport:
    instances = []
    for k in range(1, max_n + 1):
        lhs, rhs, _ = binomial_identity_14(k)
        instances.append(_instance(f"k={k}", rhs.coeffs, lhs.coeffs))
    return SuiteReport(name="id14", instances=instances)


def run_symmetry(max_n: int, guard_n: int) -> SuiteReport:
    instances = []
    for n in range(1, max_n + 1):
        for mask in range(1 << n):
            j = SimpleSubset(n, mask)
            smooth, _ = classify_combinatorially_smooth(n, j)
            if not smooth:
                continue
            h = h_polynomial_lattice(n, j)
            vertices = math.factorial(n + 1) // parabolic_order(j)
            ok = (
                h.d == n
                and h.coeffs[0] == h.coeffs[-1] == 1
                and h.is_palindromic()
                and all(c >= 1 for c in h.coeffs)
                and h.polynomial(1) == vertices
            )
            instances.append(_check(_subset_key(n, j), ok, h.coeffs))
    return SuiteReport(name="symmetry", instances=instances)


def _oracle_subsets(n: int) -> list[SimpleSubset]:
    if n <= ORACLE_ALL_SUBSETS_MAX_N:
        return [SimpleSubset(n, mask) for mask in range(1 << n)]
    return [j_family(n, k) for k in range(n + 1)]


def run_oracle(max_n: int, guard_n: int) -> SuiteReport:
    instances = []
    for n in range(1, min(max_n, guard_n) + 1):
        for j in _oracle_subsets(n):
            instances.append(
                _instance(
                    _subset_key(n, j),
                    f_vector_lattice(n, j).counts,
                    f_vector_geometric(n, j, guard_n).counts,
                )
            )
    return SuiteReport(name="oracle", instances=instances)


def run_example1(max_n: int, guard_n: int) -> SuiteReport:
    instances = []
    for n in range(3, max_n + 1):
        top = h_of_family(n, n - 1).polynomial
        below = h_of_family(n, n - 2).polynomial
        all_ones = Polynomial.geometric(0, n)
        plateau = Polynomial((1,) + (n + 2,) * (n - 1) + (1,))
        instances.append(_instance(f"n={n},k={n - 1}", all_ones.coeffs, top.coeffs))
        instances.append(_instance(f"n={n},k={n - 2}", plateau.coeffs, below.coeffs))
        instances.append(
            _instance(
                f"n={n},difference",
                Polynomial.geometric(1, n - 1).scale(n).coeffs,
                (below - top).coeffs,
            )
        )
    return SuiteReport(name="example1", instances=instances)


def run_eulerian(max_n: int, guard_n: int) -> SuiteReport:
    instances = []
    for n in range(1, max_n + 1):
        row = eulerian_polynomial(n)
        if n <= ENUMERATION_MAX_N:
            instances.append(_instance(f"n={n},enumeration", eulerian_row_by_enumeration(n), row.coeffs))
        instances.append(_instance(f"n={n},factorial", (math.factorial(n),), (row(1),)))
    return SuiteReport(name="eulerian", instances=instances)


def run_classify(max_n: int, guard_n: int) -> SuiteReport:
    top = min(max_n, ORACLE_ALL_SUBSETS_MAX_N, guard_n)
    instances = []
    for n in range(1, top + 1):
        for mask in range(1 << n):
            j = SimpleSubset(n, mask)
            smooth, _ = classify_combinatorially_smooth(n, j)
            simple = is_simple(face_lattice(n, j, guard_n))
            instances.append(_check(_subset_key(n, j), smooth == simple, (int(smooth), int(simple))))
    return SuiteReport(name="classify", instances=instances)


SUITES: Dict[SuiteName, SuiteRunner] = {
    "thm4": run_thm4,
    "thm5": run_thm5,
    "thm6": run_thm6,
    "cor4": run_cor4,
    "id14": run_id14,
    "symmetry": run_symmetry,
    "oracle": run_oracle,
    "example1": run_example1,
    "eulerian": run_eulerian,
    "classify": run_classify,
}


# suites whose rank range reaches the oracle guard rather than a fixed bound
GUARDED_SUITES: tuple[SuiteName, ...] = ("oracle",)


def check_guard(names: Sequence[SuiteName], max_n: int, guard_n: int) -> None:
    """Refuse an explicit rank range the oracle cannot reach."""
    for name in names:
        if name in GUARDED_SUITES and max_n > guard_n:
            raise GuardViolation(
                f"{name} suite up to n={max_n} exceeds the guard n <= {guard_n}; raise ORBITOPE_GUARD_N"
            )


def run_suite(name: SuiteName, max_n: int, guard_n: int) -> SuiteReport:
    logger.info("--- Running suite %s (max_n=%d) ---", name, max_n)
    try:
        report = SUITES[name](max_n, guard_n)
    except GuardViolation as e:
        logger.error("Suite %s stopped at the oracle guard: %s", name, e.detail)
        report = SuiteReport(
            name=name,
            instances=[SuiteInstance(key="guard", passed=False, got=[e.detail])],
        )
    logger.info(report.summary())
    return report

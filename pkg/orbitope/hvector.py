"""Face-count and h-polynomial formulas over the lattice S(J).

Every sum runs over bitmasks and is grouped by |I| first, so the
f-vector is a list of integers and the h-polynomial is a single
composition h(t) = f(t - 1) away.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Iterable

from orbitope.coxeter import (
    SimpleSubset,
    classify_combinatorially_smooth,
    iter_admissible_masks,
    j_family,
    mask_i_star,
    mask_parabolic_order,
)
from orbitope.errors import InputError, InvariantViolation, ValidationFailure
from orbitope.eulerian import binomial, eulerian_polynomial
from orbitope.polynomial import Polynomial
from orbitope.schemas import FormTag
from orbitope.state import FVector, HVector

logger = logging.getLogger(__name__)


def _exact_quotient(numerator: int, denominator: int, mask: int) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InvariantViolation(
            f"{numerator} is not divisible by |W_I*| = {denominator} (I* mask {mask:#b})"
        )
    return quotient


def _grouped_orbit_sizes(
    n: int, masks: Iterable[int], j_mask: int
) -> list[int]:
    """counts[i] = sum over masks with |I| = i of (n+1)!/|W_{I*_J}|."""
    group_order = math.factorial(n + 1)
    counts = [0] * (n + 1)
    for mask in masks:
        star = mask_i_star(mask, j_mask, n)
        counts[mask.bit_count()] += _exact_quotient(
            group_order, mask_parabolic_order(star), star
        )
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def f_vector_lattice(n: int, j: SimpleSubset) -> FVector:
    """f_i = sum over I in S(J) with |I| = i of (n+1)!/|W_{I*_J}|."""
    _check_subset(n, j)
    counts = _grouped_orbit_sizes(n, iter_admissible_masks(n, j.mask), j.mask)
    return FVector(counts=tuple(counts))


def f_to_h(f: FVector) -> HVector:
    return HVector.from_polynomial(f.polynomial.compose_linear(-1))


def h_to_f(h: HVector) -> FVector:
    counts = h.polynomial.compose_linear(1).coeffs or (0,)
    counts = counts + (0,) * (h.d + 1 - len(counts))
    if any(c <= 0 for c in counts):
        raise ValidationFailure(f"h-vector {h.coeffs} gives non-positive face counts {counts}")
    return FVector(counts=counts)


def h_polynomial_lattice(n: int, j: SimpleSubset) -> HVector:
    """h(t) = sum over I in S(J) of (n+1)!/|W_{I*_J}| (t - 1)^{|I|}."""
    return f_to_h(f_vector_lattice(n, j))


def eulerian_polynomial_subset_form(n: int) -> Polynomial:
    """E_{n+1}(t) rebuilt as sum over all I <= S of (n+1)!/|W_I| (t-1)^{|I|}."""
    if n < 1:
        raise InputError(f"the subset form needs n >= 1, got {n}")
    counts = _grouped_orbit_sizes(n, range(1 << n), 0)
    return Polynomial(counts).compose_linear(-1)


def h_closed_form_theorem5(n: int) -> HVector:
    """h(t) = E_{n+1}(t) - C(n+1, 2) t E_{n-1}(t) for J = {s_n}."""
    if n < 2:
        raise InputError(f"the closed form for J = {{s_n}} needs n >= 2, got {n}")
    correction = Polynomial.monomial(1, binomial(n + 1, 2)) * eulerian_polynomial(n - 1)
    return HVector.from_polynomial(eulerian_polynomial(n + 1) - correction)


def h_recurrence(n: int, k: int) -> HVector:
    """h_k(t) = h_{k-1}(t) - C(n+1, k+1)(t^k + ... + t) E_{n-k}(t), h_0 = E_{n+1}."""
    if n < 1:
        raise InputError(f"rank must be at least 1, got {n}")
    if not 0 <= k <= n:
        raise InputError(f"k must lie in 0..{n}, got {k}")
    h = eulerian_polynomial(n + 1)
    for step in range(1, k + 1):
        h = h - Polynomial.geometric(1, step) * eulerian_polynomial(n - step).scale(
            binomial(n + 1, step + 1)
        )
    return HVector.from_polynomial(h)


@dataclass(frozen=True, slots=True)
class PoincareSeries:
    """P(t) = h(t^2); ``betti[m]`` is the m-th Betti number."""

    polynomial: Polynomial
    smooth: bool
    form: FormTag

    @property
    def betti(self) -> tuple[int, ...]:
        return self.polynomial.coeffs

    @property
    def euler_characteristic(self) -> int:
        return self.polynomial(1)


def poincare(n: int, j: SimpleSubset) -> PoincareSeries:
    smooth, form = classify_combinatorially_smooth(n, j)
    if not smooth:
        logger.warning(
            "J = %s is not combinatorially smooth in A_%d; h(t^2) is not a Betti sequence",
            j.label(),
            n,
        )
    h = h_polynomial_lattice(n, j).polynomial
    return PoincareSeries(polynomial=h.substitute_square(), smooth=smooth, form=form)


def poincare_closed_form_theorem5(n: int) -> Polynomial:
    """P(t) = E_{n+1}(t^2) - C(n+1, 2) t^2 E_{n-1}(t^2) for J = {s_n}."""
    return h_closed_form_theorem5(n).polynomial.substitute_square()


def poincare_difference_corollary4(n: int, k: int) -> Polynomial:
    """P_1(t) - P_k(t) summed term by term from the recurrence.

    The i = 1 step is what produces P_1 itself, so the sum starts at i = 2.
    """
    if not 1 <= k <= n:
        raise InputError(f"k must lie in 1..{n}, got {k}")
    total = Polynomial()
    for i in range(2, k + 1):
        term = Polynomial.geometric(1, i) * eulerian_polynomial(n - i)
        total = total + term.substitute_square().scale(binomial(n + 1, i + 1))
    return total


def binomial_identity_14(k: int) -> tuple[Polynomial, Polynomial, bool]:
    """sum_{i<k} C(k+1, i)(t-1)^{k-i} + k against t + t^2 + ... + t^k."""
    if k < 1:
        raise InputError(f"k must be positive, got {k}")
    lhs = Polynomial.constant(k)
    for i in range(k):
        lhs = lhs + Polynomial.monomial(k - i, binomial(k + 1, i)).compose_linear(-1)
    rhs = Polynomial.geometric(1, k)
    return lhs, rhs, lhs == rhs


def h_of_family(n: int, k: int) -> HVector:
    return h_polynomial_lattice(n, j_family(n, k))


def _check_subset(n: int, j: SimpleSubset) -> None:
    if n < 1:
        raise InputError(f"rank must be at least 1, got {n}")
    if j.n != n:
        raise InputError(f"subset {j.label()} belongs to A_{j.n}, not A_{n}")

import logging
import math

import pytest

from orbitope.coxeter import SimpleSubset, classify_combinatorially_smooth, j_family
from orbitope.errors import InputError, InvariantViolation, ValidationFailure
from orbitope.eulerian import eulerian_polynomial
from orbitope.hvector import (
    _exact_quotient,
    binomial_identity_14,
    eulerian_polynomial_subset_form,
    f_to_h,
    f_vector_lattice,
    h_closed_form_theorem5,
    h_polynomial_lattice,
    h_recurrence,
    h_to_f,
    poincare,
    poincare_closed_form_theorem5,
    poincare_difference_corollary4,
)
from orbitope.polynomial import Polynomial
from orbitope.state import FVector, HVector


def subset(n, members):
    return SimpleSubset.of(n, members)


def test_h_polynomial_examples():
    assert h_polynomial_lattice(2, subset(2, [2])).coeffs == (1, 1, 1)
    assert h_polynomial_lattice(2, SimpleSubset(2)).coeffs == (1, 4, 1)
    assert h_polynomial_lattice(3, subset(3, [3])).coeffs == (1, 5, 5, 1)


def test_full_j_collapses_to_a_point():
    assert h_polynomial_lattice(3, SimpleSubset.full(3)).coeffs == (1,)
    assert f_vector_lattice(3, SimpleSubset.full(3)).counts == (1,)


def test_f_vector_examples():
    assert f_vector_lattice(2, SimpleSubset(2)).counts == (6, 6, 1)
    assert f_vector_lattice(2, subset(2, [2])).counts == (3, 3, 1)
    assert f_vector_lattice(3, subset(3, [3])).counts == (12, 18, 8, 1)


def test_f_h_transforms():
    assert f_to_h(FVector(counts=(6, 6, 1))).coeffs == (1, 4, 1)
    assert h_to_f(HVector(coeffs=(1,))).counts == (1,)
    assert h_to_f(HVector(coeffs=(1, 5, 5, 1))).counts == (12, 18, 8, 1)


def test_h_to_f_rejects_non_polytopal_vectors():
    with pytest.raises(ValidationFailure):
        h_to_f(HVector(coeffs=(1, -3, 1)))


def test_fvector_rejects_broken_euler_relation():
    with pytest.raises(ValueError):
        FVector(counts=(4, 4, 2))


def test_non_exact_division_is_an_invariant_violation():
    with pytest.raises(InvariantViolation):
        _exact_quotient(7, 2, 0b1)


@pytest.mark.parametrize("n", range(1, 7))
def test_two_formulas_are_one_transform_apart(n):
    for mask in range(1 << n):
        j = SimpleSubset(n, mask)
        assert f_to_h(f_vector_lattice(n, j)) == h_polynomial_lattice(n, j)
        assert h_to_f(h_polynomial_lattice(n, j)) == f_vector_lattice(n, j)


@pytest.mark.parametrize("n", range(1, 9))
def test_permutohedron_h_is_eulerian(n):
    assert h_polynomial_lattice(n, SimpleSubset(n)).polynomial == eulerian_polynomial(n + 1)


@pytest.mark.parametrize("n", range(1, 13))
def test_subset_form_is_eulerian(n):
    assert eulerian_polynomial_subset_form(n) == eulerian_polynomial(n + 1)


def test_subset_form_examples():
    assert eulerian_polynomial_subset_form(1).coeffs == (1, 1)
    assert eulerian_polynomial_subset_form(2).coeffs == (1, 4, 1)
    assert eulerian_polynomial_subset_form(3).coeffs == (1, 11, 11, 1)


def test_closed_form_examples():
    assert h_closed_form_theorem5(2).coeffs == (1, 1, 1)
    assert h_closed_form_theorem5(3).coeffs == (1, 5, 5, 1)
    assert h_closed_form_theorem5(4).coeffs == (1, 16, 26, 16, 1)
    with pytest.raises(InputError):
        h_closed_form_theorem5(1)


@pytest.mark.parametrize("n", range(2, 11))
def test_closed_form_matches_lattice(n):
    assert h_closed_form_theorem5(n) == h_polynomial_lattice(n, subset(n, [n]))
    assert poincare_closed_form_theorem5(n) == poincare(n, subset(n, [n])).polynomial


def test_recurrence_examples():
    assert h_recurrence(3, 1).coeffs == (1, 5, 5, 1)
    assert h_recurrence(3, 2).coeffs == (1, 1, 1, 1)
    assert h_recurrence(3, 3).coeffs == (1,)
    with pytest.raises(InputError):
        h_recurrence(3, 4)


@pytest.mark.parametrize("n", range(1, 9))
def test_recurrence_matches_lattice(n):
    for k in range(n + 1):
        assert h_recurrence(n, k) == h_polynomial_lattice(n, j_family(n, k))


@pytest.mark.parametrize("n", range(3, 11))
def test_example_families(n):
    assert h_polynomial_lattice(n, j_family(n, n - 1)).coeffs == (1,) * (n + 1)
    plateau = (1,) + (n + 2,) * (n - 1) + (1,)
    assert h_polynomial_lattice(n, j_family(n, n - 2)).coeffs == plateau


@pytest.mark.parametrize("n", range(1, 9))
def test_vertex_count_of_the_family(n):
    for k in range(n + 1):
        h = h_polynomial_lattice(n, j_family(n, k))
        assert h.polynomial(1) == math.factorial(n + 1) // math.factorial(k + 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_smooth_h_vectors_are_palindromic_and_positive(n):
    for mask in range(1 << n):
        j = SimpleSubset(n, mask)
        if not classify_combinatorially_smooth(n, j)[0]:
            continue
        h = h_polynomial_lattice(n, j)
        assert h.d == n
        assert h.coeffs[0] == h.coeffs[-1] == 1
        assert h.is_palindromic()
        assert min(h.coeffs) >= 1


@pytest.mark.parametrize("n", range(1, 7))
def test_diagram_flip_preserves_h(n):
    for mask in range(1 << n):
        j = SimpleSubset(n, mask)
        assert h_polynomial_lattice(n, j) == h_polynomial_lattice(n, j.mirrored())


def test_poincare_examples():
    series = poincare(2, SimpleSubset(2))
    assert series.polynomial.coeffs == (1, 0, 4, 0, 1)
    assert series.betti == (1, 0, 4, 0, 1)
    assert series.euler_characteristic == 6
    assert poincare(2, subset(2, [2])).polynomial.coeffs == (1, 0, 1, 0, 1)
    assert poincare(1, SimpleSubset(1)).polynomial.coeffs == (1, 0, 1)


def test_poincare_on_non_smooth_j_warns_and_flags(caplog):
    with caplog.at_level(logging.WARNING, logger="orbitope.hvector"):
        series = poincare(3, subset(3, [2]))
    assert not series.smooth
    assert series.form == "none"
    assert "not combinatorially smooth" in caplog.text


@pytest.mark.parametrize("n", range(1, 9))
def test_poincare_is_h_of_t_squared(n):
    for k in range(n):
        j = j_family(n, k)
        h = h_polynomial_lattice(n, j)
        series = poincare(n, j)
        for i, coefficient in enumerate(h.coeffs):
            assert series.betti[2 * i] == coefficient
        assert all(b == 0 for b in series.betti[1::2])


def test_corollary_difference_examples():
    assert poincare_difference_corollary4(3, 1).is_zero()
    assert poincare_difference_corollary4(3, 2).coeffs == (0, 0, 4, 0, 4)
    expected = Polynomial((0, 0, 1, 0, 1)) * Polynomial((1, 0, 1)) * 10
    assert poincare_difference_corollary4(4, 2) == expected


@pytest.mark.parametrize("n", range(1, 9))
def test_corollary_difference_matches_direct_difference(n):
    p1 = h_polynomial_lattice(n, j_family(n, 1)).polynomial.substitute_square()
    for k in range(1, n + 1):
        pk = h_polynomial_lattice(n, j_family(n, k)).polynomial.substitute_square()
        assert poincare_difference_corollary4(n, k) == p1 - pk


def test_identity_14_examples():
    lhs, rhs, equal = binomial_identity_14(2)
    assert lhs.coeffs == rhs.coeffs == (0, 1, 1)
    assert equal
    assert binomial_identity_14(1)[0] == Polynomial.monomial(1)


@pytest.mark.parametrize("k", range(1, 21))
def test_identity_14_holds(k):
    assert binomial_identity_14(k)[2]

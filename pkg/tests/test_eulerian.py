import itertools
import math

import pytest

from orbitope.errors import InputError
from orbitope.eulerian import (
    Permutation,
    ascent_set,
    binomial,
    eulerian_number,
    eulerian_polynomial,
    eulerian_row_by_enumeration,
)
from orbitope.polynomial import Polynomial


@pytest.mark.parametrize(
    "word, expected",
    [((1, 2, 3), {1, 2}), ((2, 1), set()), ((1, 3, 2), {1}), ((1,), set())],
)
def test_ascent_set(word, expected):
    assert ascent_set(Permutation(word)) == expected


@pytest.mark.parametrize("word", [(1, 1), (0, 1), (2, 3)])
def test_invalid_permutation_is_an_input_error(word):
    with pytest.raises(InputError):
        Permutation(word)


def test_eulerian_numbers():
    assert eulerian_number(3, 1) == 4
    assert eulerian_number(4, 0) == 1
    assert eulerian_number(4, 2) == 11


def test_eulerian_number_outside_range_is_zero():
    assert eulerian_number(4, 4) == 0
    assert eulerian_number(4, -1) == 0


def test_eulerian_polynomials():
    assert eulerian_polynomial(0) == Polynomial.constant(1)
    assert eulerian_polynomial(1) == Polynomial.constant(1)
    assert eulerian_polynomial(3) == Polynomial((1, 4, 1))
    assert eulerian_polynomial(4) == Polynomial((1, 11, 11, 1))


@pytest.mark.parametrize("n", range(1, 9))
def test_recurrence_matches_enumeration(n):
    row = eulerian_row_by_enumeration(n)
    assert tuple(eulerian_number(n, i) for i in range(n)) == row
    assert sum(row) == math.factorial(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_ascent_descent_symmetry(n):
    for i in range(n):
        assert eulerian_number(n, i) == eulerian_number(n, n - 1 - i)


def test_enumeration_counts_by_hand_for_s3():
    counts = [0, 0, 0]
    for word in itertools.permutations((1, 2, 3)):
        counts[len(ascent_set(Permutation(word)))] += 1
    assert counts == [1, 4, 1]


@pytest.mark.parametrize("n", range(1, 21))
def test_value_at_one_is_factorial(n):
    p = eulerian_polynomial(n)
    assert p(1) == math.factorial(n)
    assert p.degree == n - 1
    assert p.is_palindromic()


def test_twenty_factorial_exceeds_fixed_width():
    assert eulerian_polynomial(20)(1) > 2 * 10**18


def test_binomial():
    assert binomial(4, 2) == 6
    assert binomial(7, 0) == 1
    assert binomial(10, 3) == 120
    assert binomial(3, 4) == 0
    assert binomial(3, -1) == 0

"""Ascent statistics of permutations and the Eulerian numbers/polynomials."""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from orbitope.errors import InputError
from orbitope.polynomial import Polynomial


@dataclass(frozen=True, slots=True)
class Permutation:
    """One-line notation (p_1, ..., p_n) of an element of S_n."""

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        word = tuple(self.word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise InputError(f"{word!r} is not a permutation of 1..{len(word)}")
        object.__setattr__(self, "word", word)

    @property
    def n(self) -> int:
        return len(self.word)


def ascent_set(sigma: Permutation) -> frozenset[int]:
    """Positions i in 1..n-1 with p_i < p_{i+1}."""
    if sigma.n < 1:
        raise InputError("ascent_set needs n >= 1")
    w = sigma.word
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] < w[i + 1])


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=None)
def _eulerian_row(n: int) -> tuple[int, ...]:
    # E(m, i) = (i + 1) E(m - 1, i) + (m - i) E(m - 1, i - 1)
    row = [1]
    for m in range(2, n + 1):
        padded = [0] + row + [0]
        row = [(i + 1) * padded[i + 1] + (m - i) * padded[i] for i in range(m)]
    return tuple(row)


def eulerian_number(n: int, i: int) -> int:
    """Number of permutations of S_n with exactly i ascents (0 outside 0..n-1)."""
    if n < 1:
        raise InputError(f"eulerian_number needs n >= 1, got {n}")
    if i < 0 or i > n - 1:
        return 0
    return _eulerian_row(n)[i]


def eulerian_polynomial(n: int) -> Polynomial:
    """E_n(t) = sum_i E(n, i) t^i, with E_0(t) = 1 (the empty permutation)."""
    if n < 0:
        raise InputError(f"eulerian_polynomial needs n >= 0, got {n}")
    if n == 0:
        return Polynomial.constant(1)
    return Polynomial(_eulerian_row(n))


def eulerian_row_by_enumeration(n: int) -> tuple[int, ...]:
    """Ascent-count histogram over all of S_n; n! work, meant for cross-checks."""
    if n < 1:
        raise InputError(f"enumeration needs n >= 1, got {n}")
    counts = Counter(
        len(ascent_set(Permutation(word)))
        for word in itertools.permutations(range(1, n + 1))
    )
    return tuple(counts[i] for i in range(n))

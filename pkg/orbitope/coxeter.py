"""Subsets of the simple reflections of A_n and the lattice S(J).

A subset I of {s_1, ..., s_n} is a bitmask: bit i-1 stands for s_i. The
Coxeter graph of A_n is the path, so s_i and s_j fail to commute exactly
when |i - j| = 1 and connected components are maximal runs of set bits.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from orbitope.errors import InputError
from orbitope.schemas import FormTag


@dataclass(frozen=True, slots=True)
class SimpleSubset:
    n: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError(f"rank must be nonnegative, got {self.n}")
        if self.mask < 0 or self.mask >> self.n:
            raise InputError(f"subset mask {self.mask:#b} exceeds rank {self.n}")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "SimpleSubset":
        mask = 0
        for i in members:
            if not 1 <= i <= n:
                raise InputError(f"s{i} is not a simple reflection of A_{n}")
            mask |= 1 << (i - 1)
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "SimpleSubset":
        return cls(n, (1 << n) - 1)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if self.mask >> i & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, i: int) -> bool:
        return 1 <= i <= self.n and bool(self.mask >> (i - 1) & 1)

    def issubset(self, other: "SimpleSubset") -> bool:
        return self.mask & ~other.mask == 0

    def is_proper(self) -> bool:
        return self.mask != (1 << self.n) - 1

    def mirrored(self) -> "SimpleSubset":
        """Image under the diagram flip s_i -> s_{n+1-i}."""
        return SimpleSubset.of(self.n, (self.n + 1 - i for i in self.members))

    def label(self) -> str:
        return ",".join(f"s{i}" for i in self.members) if self.mask else "empty"


@dataclass(frozen=True, slots=True)
class ComponentDecomposition:
    """Maximal runs [a, b] of consecutive indices, left to right."""

    intervals: tuple[tuple[int, int], ...]

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)


# mask-level helpers; the lattice sums run on these directly


def mask_components(mask: int) -> list[tuple[int, int]]:
    runs: list[tuple[int, int]] = []
    i = 0
    while mask >> i:
        if mask >> i & 1:
            start = i
            while mask >> i & 1:
                i += 1
            runs.append((start + 1, i))
        else:
            i += 1
    return runs


def mask_parabolic_order(mask: int) -> int:
    order = 1
    for a, b in mask_components(mask):
        order *= math.factorial(b - a + 2)
    return order


def mask_is_admissible(mask: int, j_mask: int) -> bool:
    for a, b in mask_components(mask):
        run = ((1 << (b - a + 1)) - 1) << (a - 1)
        if run & ~j_mask == 0:
            return False
    return True


def mask_i_star(mask: int, j_mask: int, n: int) -> int:
    neighbours = ((mask << 1) | (mask >> 1)) & ((1 << n) - 1)
    return mask | (j_mask & ~neighbours)


def iter_admissible_masks(n: int, j_mask: int) -> Iterator[int]:
    for mask in range(1 << n):
        if mask_is_admissible(mask, j_mask):
            yield mask


# public operations


def connected_components(subset: SimpleSubset) -> ComponentDecomposition:
    return ComponentDecomposition(tuple(mask_components(subset.mask)))


def parabolic_order(subset: SimpleSubset) -> int:
    """|W_I|: each run of m reflections generates a copy of S_{m+1}."""
    return mask_parabolic_order(subset.mask)


def admissible_subsets(n: int, j: SimpleSubset) -> Iterator[SimpleSubset]:
    """Lazily yield S(J) in bitmask order: no component of I lies inside J."""
    _check_rank(n, j)
    for mask in iter_admissible_masks(n, j.mask):
        yield SimpleSubset(n, mask)


def i_star(i: SimpleSubset, j: SimpleSubset) -> SimpleSubset:
    """I together with every s in J commuting with all of I."""
    _check_rank(i.n, j)
    return SimpleSubset(i.n, mask_i_star(i.mask, j.mask, i.n))


def j_family(n: int, k: int) -> SimpleSubset:
    """J(k, n) = {s_{n-k+1}, ..., s_n}."""
    if not 0 <= k <= n:
        raise InputError(f"k must lie in 0..{n}, got {k}")
    return SimpleSubset.of(n, range(n - k + 1, n + 1))


def recurrence_blocks(n: int, k: int) -> list[list[SimpleSubset]]:
    """Blocks M_0..M_{k+1} partitioning S(J(k, n)).

    M_i = {A : J(k+1, n) - J(i, n) <= A <= S - J(i, n)}.
    """
    if not 0 <= k <= n - 1:
        raise InputError(f"the block partition needs 0 <= k <= n-1, got k={k}, n={n}")
    full = (1 << n) - 1
    outer = j_family(n, k + 1).mask
    blocks: list[list[SimpleSubset]] = []
    for i in range(k + 2):
        inner = j_family(n, i).mask
        required = outer & ~inner
        allowed = full & ~inner
        blocks.append(
            [
                SimpleSubset(n, mask)
                for mask in range(1 << n)
                if mask & required == required and mask & ~allowed == 0
            ]
        )
    return blocks


def classify_combinatorially_smooth(n: int, j: SimpleSubset) -> tuple[bool, FormTag]:
    """Match J against the smooth forms of type A_n.

    Smooth: empty, {s_1..s_i}, {s_j..s_n} with j > 1, or
    {s_1..s_i} + {s_j..s_n} with j - i >= 3. J = S is never smooth here.
    """
    _check_rank(n, j)
    if j.mask == 0:
        return True, "empty"
    if not j.is_proper():
        return False, "none"
    runs = mask_components(j.mask)
    if len(runs) == 1:
        a, b = runs[0]
        if a == 1:
            return True, "left-interval"
        if b == n:
            return True, "right-interval"
    if len(runs) == 2:
        (a1, i), (jj, b2) = runs
        if a1 == 1 and b2 == n and jj - i >= 3:
            return True, "two-intervals"
    return False, "none"


_SUBSET_TOKEN = re.compile(r"^s?(\d+)$")


def parse_subset(text: str, n: int) -> SimpleSubset:
    """Parse "s4,s5", "4,5" or "empty" into a subset of A_n's reflections."""
    cleaned = text.strip().lower()
    if cleaned in ("empty", ""):
        return SimpleSubset(n, 0)
    members = []
    for token in cleaned.split(","):
        match = _SUBSET_TOKEN.match(token.strip())
        if not match:
            raise InputError(f"malformed subset token {token.strip()!r} in {text!r}")
        members.append(int(match.group(1)))
    if len(set(members)) != len(members):
        raise InputError(f"repeated reflection in {text!r}")
    return SimpleSubset.of(n, members)


def _check_rank(n: int, j: SimpleSubset) -> None:
    if j.n != n:
        raise InputError(f"subset {j.label()} belongs to A_{j.n}, not A_{n}")

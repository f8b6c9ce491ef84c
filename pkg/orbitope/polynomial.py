"""Exact univariate polynomials over the integers.

Coefficients are stored low degree first; arithmetic is delegated to
sympy's dense univariate routines (which keep leading coefficients first),
so nothing here ever touches a float or a fixed-width integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from sympy.polys.densearith import (
    dup_add,
    dup_mul,
    dup_mul_ground,
    dup_neg,
    dup_sub,
)
from sympy.polys.densebasic import dup_inflate, dup_strip
from sympy.polys.densetools import dup_eval, dup_shift
from sympy.polys.domains import ZZ

Scalar = int


def _strip_low_first(coeffs: Iterable[int]) -> tuple[int, ...]:
    values = [int(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True, slots=True)
class Polynomial:
    """Dense integer polynomial; ``coeffs[i]`` is the coefficient of t^i.

    The empty tuple is the zero polynomial.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _strip_low_first(self.coeffs))

    # construction

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int]) -> "Polynomial":
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, value: int) -> "Polynomial":
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "Polynomial":
        if degree < 0:
            raise ValueError(f"negative degree {degree}")
        return cls((0,) * degree + (coefficient,))

    @classmethod
    def geometric(cls, low: int, high: int) -> "Polynomial":
        """t^low + t^(low+1) + ... + t^high; zero when high < low."""
        if high < low:
            return cls()
        return cls((0,) * low + (1,) * (high - low + 1))

    @classmethod
    def _from_dup(cls, dup: Sequence) -> "Polynomial":
        return cls(tuple(int(c) for c in reversed(dup)))

    def _dup(self) -> list:
        return [ZZ(c) for c in reversed(self.coeffs)]

    # inspection

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __call__(self, x: int) -> int:
        if not self.coeffs:
            return 0
        return int(dup_eval(self._dup(), ZZ(x), ZZ))

    # ring operations

    def __add__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial._from_dup(dup_add(self._dup(), other._dup(), ZZ))

    __radd__ = __add__

    def __sub__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial._from_dup(dup_sub(self._dup(), other._dup(), ZZ))

    def __rsub__(self, other: Scalar) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self) -> "Polynomial":
        return Polynomial._from_dup(dup_neg(self._dup(), ZZ))

    def __mul__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scale(other)
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial._from_dup(dup_mul(self._dup(), other._dup(), ZZ))

    __rmul__ = __mul__

    def scale(self, factor: int) -> "Polynomial":
        return Polynomial._from_dup(dup_mul_ground(self._dup(), ZZ(factor), ZZ))

    # substitutions

    def compose_linear(self, shift: int) -> "Polynomial":
        """Return q with q(t) = p(t + shift)."""
        if shift == 0 or not self.coeffs:
            return self
        return Polynomial._from_dup(dup_shift(self._dup(), ZZ(shift), ZZ))

    def substitute_square(self) -> "Polynomial":
        """Return p(t^2)."""
        if not self.coeffs:
            return self
        return Polynomial._from_dup(dup_strip(dup_inflate(self._dup(), 2, ZZ)))

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.coeffs) if self.coeffs else "0"


def _coerce(value: Union[Polynomial, Scalar]):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Polynomial.constant(value)
    return NotImplemented


def poly_compose_linear(p: Polynomial, shift: int) -> Polynomial:
    return p.compose_linear(shift)

"""Exact norm exponents and norm values.

Every norm in the library is a power ``p^(-e)`` whose exponent ``e`` lives in
``Q + Q*sqrt(d)`` for some fixed non-square ``d`` (or plainly in ``Q``).  All
comparisons are decided by exact sign computations on rationals; no floating
point appears anywhere.

A :class:`NormValue` is either ``Exact(e)`` (the norm is exactly ``p^-e``),
``AtMost(e)`` (the norm is ``<= p^-e``, possibly zero: the typical outcome of
a precision cap), or ``ExactZero``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional, Union

from .errors import ScaleMismatchError

Rational = Union[int, Fraction]


def _frac(x: Rational) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


@dataclass(frozen=True)
class NormExponent:
    """Exponent ``a + b*sqrt(d)`` with ``a, b`` rational.

    ``d is None`` marks a plain rational exponent (then ``b == 0``).  A scale
    ``u + v*sqrt(d)`` offered at construction is folded into this canonical
    pure-sqrt form, so two exponents are comparable iff their ``d`` agree or
    one of them is rational.
    """

    a: Fraction
    b: Fraction = Fraction(0)
    d: Optional[int] = None

    def __post_init__(self):
        a, b, d = _frac(self.a), _frac(self.b), self.d
        if d is not None:
            if d < 2 or is_square(d):
                raise ValueError(f"scale radicand must be a non-square >= 2, got {d}")
            if b == 0:
                d = None
        elif b != 0:
            # unit scale: the represented value is a + b
            a, b = a + b, Fraction(0)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    @classmethod
    def rational(cls, value: Rational) -> "NormExponent":
        return cls(_frac(value))

    @classmethod
    def with_scale(cls, a: Rational, b: Rational, u: Rational, v: Rational, d: int) -> "NormExponent":
        """Exponent ``a + b*tau`` for the scale ``tau = u + v*sqrt(d)``."""
        a, b, u, v = map(_frac, (a, b, u, v))
        return cls(a + b * u, b * v, d)

    @property
    def is_rational(self) -> bool:
        return self.d is None

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ScaleMismatchError(f"{self} is irrational")
        return self.a

    def sign(self) -> int:
        """Exact sign of ``a + b*sqrt(d)``."""
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # mixed signs: compare a^2 with b^2 d
        lhs, rhs = a * a, b * b * self.d
        if lhs == rhs:
            return 0
        if a > 0:  # b < 0
            return 1 if lhs > rhs else -1
        return -1 if lhs > rhs else 1

    def _aligned(self, other: "NormExponent") -> Optional[int]:
        if self.d is None:
            return other.d
        if other.d is None or other.d == self.d:
            return self.d
        raise ScaleMismatchError(f"incompatible norm scales sqrt({self.d}) vs sqrt({other.d})")

    def compare(self, other: "NormExponent") -> int:
        d = self._aligned(other)
        return NormExponent(self.a - other.a, self.b - other.b, d).sign()

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __add__(self, other: "NormExponent") -> "NormExponent":
        d = self._aligned(other)
        return NormExponent(self.a + other.a, self.b + other.b, d)

    def __neg__(self) -> "NormExponent":
        return NormExponent(-self.a, -self.b, self.d)

    def __sub__(self, other: "NormExponent") -> "NormExponent":
        return self + (-other)

    def scaled(self, r: Rational) -> "NormExponent":
        r = _frac(r)
        return NormExponent(self.a * r, self.b * r, self.d)

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a}+{self.b}*sqrt({self.d})"


ZERO_EXP = NormExponent(Fraction(0))


def exponent_compare(e1: NormExponent, e2: NormExponent) -> int:
    """Total order on exponents sharing a scale: -1, 0 or +1 as real numbers."""
    return e1.compare(e2)


@dataclass(frozen=True)
class NormValue:
    """Norm ``p^-e`` known exactly, bounded from above, or exactly zero."""

    kind: str  # "exact" | "at_most" | "zero"
    exponent: Optional[NormExponent] = None

    @classmethod
    def exact(cls, e) -> "NormValue":
        if not isinstance(e, NormExponent):
            e = NormExponent.rational(e)
        return cls("exact", e)

    @classmethod
    def at_most(cls, e) -> "NormValue":
        if not isinstance(e, NormExponent):
            e = NormExponent.rational(e)
        return cls("at_most", e)

    @classmethod
    def zero(cls) -> "NormValue":
        return cls("zero", None)

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"

    @property
    def is_zero(self) -> bool:
        return self.kind == "zero"

    def __mul__(self, other: "NormValue") -> "NormValue":
        if self.is_zero or other.is_zero:
            return NormValue.zero()
        e = self.exponent + other.exponent
        if self.is_exact and other.is_exact:
            return NormValue.exact(e)
        return NormValue.at_most(e)

    def power(self, k: int) -> "NormValue":
        if self.is_zero:
            return self if k > 0 else NormValue.exact(0)
        if k == 0:
            return NormValue.exact(0)
        e = self.exponent.scaled(k)
        return NormValue(self.kind, e)

    def join(self, other: "NormValue") -> "NormValue":
        """Supremum bound for ``max(|x|, |y|)``.

        Exact beats an at-most bound that cannot exceed it; two at-most
        bounds join to the weaker (larger) bound.
        """
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        c = self.exponent.compare(other.exponent)
        if self.is_exact and other.is_exact:
            return self if c <= 0 else other
        if self.is_exact:  # other is at_most
            return self if c <= 0 else NormValue.at_most(other.exponent)
        if other.is_exact:
            return other if c >= 0 else NormValue.at_most(self.exponent)
        return NormValue.at_most(self.exponent if c <= 0 else other.exponent)

    # -- three-valued certified comparisons (True / False / None) ----------

    def definitely_lt(self, other: "NormValue") -> Optional[bool]:
        """Certified ``|self| < |other|``; None when precision cannot decide."""
        if other.is_zero:
            return False
        if self.is_zero:
            return True if other.is_exact else None
        if other.is_exact:
            c = self.exponent.compare(other.exponent)
            if self.is_exact:
                return c > 0
            # self <= p^-e1: strictly below p^-e2 iff e1 > e2
            return True if c > 0 else None
        # other only bounded above: can never certify self < other
        return None

    def definitely_le(self, other: "NormValue") -> Optional[bool]:
        if other.is_zero:
            return True if self.is_zero else (None if not self.is_exact else False)
        if self.is_zero:
            return True
        if other.is_exact:
            c = self.exponent.compare(other.exponent)
            if self.is_exact:
                return c >= 0
            return True if c >= 0 else None
        return None

    def lt_one(self) -> Optional[bool]:
        return self.definitely_lt(NormValue.exact(0))

    def le_one(self) -> Optional[bool]:
        return self.definitely_le(NormValue.exact(0))

    def le_scale(self, e) -> Optional[bool]:
        """Certified ``|self| <= p^-e``."""
        if not isinstance(e, NormExponent):
            e = NormExponent.rational(e)
        if self.is_zero:
            return True
        c = self.exponent.compare(e)
        if c >= 0:
            return True
        return False if self.is_exact else None

    def __str__(self):
        if self.is_zero:
            return "0"
        tag = "p^-" if self.is_exact else "<=p^-"
        return f"{tag}({self.exponent})"

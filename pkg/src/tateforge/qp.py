"""Capped-precision elements of Q_p.

An element is ``num * p^(-shift)`` with the value known modulo ``p^cap``
(absolute precision), so ``num`` is stored modulo ``p^(cap+shift)``.  The
shift admits the inverses of non-unit elements (norm > 1) that rescaling to
distinguished form requires; ``shift == 0`` for everything inside Z_p.

Precision propagation follows the usual interval rules: a product is known
modulo ``p^m`` for ``m = min(v(x) + cap(y), v(y) + cap(x))``, an inverse of
an element of valuation ``v`` known mod ``p^N`` is known mod ``p^(N-2v)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonUnitError, PrecisionError
from .exponents import NormValue


def _vp(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class QpRing:
    """Descriptor of Q_p at a default working cap."""

    p: int
    cap: int = 16

    is_field = True

    def __post_init__(self):
        if self.p < 2:
            raise ValueError("p must be a prime >= 2")
        if self.cap < 1:
            raise ValueError("cap must be positive")

    def element(self, num: int, shift: int = 0, cap: int | None = None) -> "PadicElement":
        return PadicElement(self, num, shift, self.cap if cap is None else cap)

    def from_int(self, n: int, cap: int | None = None) -> "PadicElement":
        return self.element(n, 0, cap)

    def from_rational(self, r, cap: int | None = None) -> "PadicElement":
        """Lift a rational; the prime-to-p part of the denominator is inverted modularly."""
        r = Fraction(r)
        cap = self.cap if cap is None else cap
        num, den = r.numerator, r.denominator
        shift = _vp(den, self.p) if den != 1 else 0
        den //= self.p**shift
        modulus = self.p ** (cap + shift)
        m = (num * pow(den, -1, modulus)) % modulus if den != 1 else num % modulus
        return PadicElement(self, m, shift, cap)

    def zero(self, cap: int | None = None) -> "PadicElement":
        return self.from_int(0, cap)

    def one(self, cap: int | None = None) -> "PadicElement":
        return self.from_int(1, cap)

    def __str__(self):
        return f"Q_{self.p} (cap {self.cap})"


@dataclass(frozen=True)
class PadicElement:
    ring: QpRing
    num: int
    shift: int
    cap: int

    def __post_init__(self):
        p = self.ring.p
        num, shift, cap = self.num, self.shift, self.cap
        if cap < 1:
            raise PrecisionError("p-adic precision exhausted (cap <= 0)")
        if num == 0:
            shift = 0
        else:
            while shift > 0 and num % p == 0:
                num //= p
                shift -= 1
        num %= p ** (cap + shift)
        if num == 0:
            shift = 0
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "shift", shift)

    # -- norms ---------------------------------------------------------

    def valuation(self) -> int | None:
        """Exact valuation, or None when the element is 0 at this cap."""
        if self.num == 0:
            return None
        return _vp(self.num, self.ring.p) - self.shift

    def norm(self) -> NormValue:
        v = self.valuation()
        if v is None:
            return NormValue.at_most(self.cap)
        return NormValue.exact(v)

    def min_cap(self) -> int:
        return self.cap

    # -- ring operations -------------------------------------------------

    def _check(self, other: "PadicElement"):
        if self.ring.p != other.ring.p:
            raise ValueError("mixed primes")

    def __add__(self, other: "PadicElement") -> "PadicElement":
        self._check(other)
        p = self.ring.p
        cap = min(self.cap, other.cap)
        shift = max(self.shift, other.shift)
        num = self.num * p ** (shift - self.shift) + other.num * p ** (shift - other.shift)
        return PadicElement(self.ring, num, shift, cap)

    def __neg__(self) -> "PadicElement":
        return PadicElement(self.ring, -self.num, self.shift, self.cap)

    def __sub__(self, other: "PadicElement") -> "PadicElement":
        return self + (-other)

    def __mul__(self, other: "PadicElement") -> "PadicElement":
        self._check(other)
        va = self.cap if self.num == 0 else self.valuation()
        vb = other.cap if other.num == 0 else other.valuation()
        cap = min(va + other.cap, vb + self.cap)
        return PadicElement(self.ring, self.num * other.num, self.shift + other.shift, cap)

    def invert(self, target_exp: int | None = None) -> "PadicElement":
        """Inverse; requires an exact nonzero norm."""
        if self.num == 0:
            raise NonUnitError("cannot certify a nonzero norm at this precision")
        p = self.ring.p
        w = _vp(self.num, p)
        v = w - self.shift
        rel = self.cap + self.shift - w  # relative precision of the unit part
        new_cap = self.cap - 2 * v
        if new_cap < 1:
            raise PrecisionError("inversion exhausts the precision cap")
        unit = self.num // p**w
        inv_unit = pow(unit, -1, p**rel)
        if v >= 0:
            return PadicElement(self.ring, inv_unit, v, new_cap)
        return PadicElement(self.ring, inv_unit * p ** (-v), 0, new_cap)

    def __pow__(self, k: int) -> "PadicElement":
        if k < 0:
            return self.invert() ** (-k)
        out = self.ring.one(self.cap)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- predicates and conversions ---------------------------------------

    def is_one(self) -> bool:
        return self.num == 1 and self.shift == 0

    def reduced(self, cap: int) -> "PadicElement":
        if cap > self.cap:
            raise PrecisionError(f"cannot raise cap {self.cap} to {cap}")
        return PadicElement(self.ring, self.num, self.shift, cap)

    def eq_mod(self, other: "PadicElement", exp: int) -> bool:
        """True when |self - other| <= p^-exp is certified."""
        return (self - other).norm().le_scale(exp) is True

    def __str__(self):
        p = self.ring.p
        body = str(self.num) if self.shift == 0 else f"{self.num}/{p}^{self.shift}"
        return f"{body} + O({p}^{self.cap})"

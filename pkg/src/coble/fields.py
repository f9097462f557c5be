"""Exact coefficient fields: Q, Q(w) with w a primitive cube root of unity,
and prime fields F_p (p = 1 mod 3) carrying their own cube root of unity.

All elements are immutable and hashable.  Rationals are plain
``fractions.Fraction`` values; the field objects below exist so that generic
code (polynomials, matrices) can ask for zero/one and coerce scalars without
caring which field it is working over.
"""

from __future__ import annotations

import math
from fractions import Fraction


class Eisenstein:
    """An element a + b*w of Q(w), with w**2 = -1 - w (so w**3 = 1)."""

    __slots__ = ("re", "om")

    def __init__(self, re=0, om=0):
        self.re = Fraction(re)
        self.om = Fraction(om)

    def __add__(self, other):
        other = _as_eisenstein(other)
        if other is NotImplemented:
            return NotImplemented
        return Eisenstein(self.re + other.re, self.om + other.om)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_eisenstein(other)
        if other is NotImplemented:
            return NotImplemented
        return Eisenstein(self.re - other.re, self.om - other.om)

    def __rsub__(self, other):
        other = _as_eisenstein(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_eisenstein(other)
        if other is NotImplemented:
            return NotImplemented
        # (a + bw)(c + dw) = ac + (ad + bc)w + bd*w^2,  w^2 = -1 - w
        a, b, c, d = self.re, self.om, other.re, other.om
        return Eisenstein(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def inverse(self):
        # Norm N(a + bw) = a^2 - ab + b^2, with conjugate a + b*w^2 = (a-b) - b*w.
        a, b = self.re, self.om
        n = a * a - a * b + b * b
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        return Eisenstein((a - b) / n, -b / n)

    def __truediv__(self, other):
        other = _as_eisenstein(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _as_eisenstein(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return Eisenstein(-self.re, -self.om)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        acc = Eisenstein(1)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __eq__(self, other):
        other = _as_eisenstein(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.om == other.om

    def __hash__(self):
        if self.om == 0:
            return hash(self.re)
        return hash((self.re, self.om))

    def __bool__(self):
        return self.re != 0 or self.om != 0

    def __repr__(self):
        if self.om == 0:
            return f"{self.re}"
        if self.re == 0:
            return f"{self.om}*w"
        return f"{self.re}{'+' if self.om > 0 else ''}{self.om}*w"

    def to_json(self):
        return {"re": format_rational(self.re), "om": format_rational(self.om)}


def _as_eisenstein(x):
    if isinstance(x, Eisenstein):
        return x
    if isinstance(x, (int, Fraction)):
        return Eisenstein(x)
    return NotImplemented


OMEGA = Eisenstein(0, 1)
OMEGA2 = Eisenstein(-1, -1)


def omega_pow(k):
    """w**k for any integer k."""
    return (Eisenstein(1), OMEGA, OMEGA2)[k % 3]


def format_rational(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class RationalField:
    """The rationals, elements are fractions.Fraction."""

    name = "QQ"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into QQ")

    def coeff_to_json(self, c):
        return format_rational(c)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class EisensteinField:
    """Q(w), w^2 + w + 1 = 0."""

    name = "QQ(w)"

    def zero(self):
        return Eisenstein(0)

    def one(self):
        return Eisenstein(1)

    def omega(self):
        return OMEGA

    def coerce(self, x):
        if isinstance(x, Eisenstein):
            return x
        if isinstance(x, (int, Fraction)):
            return Eisenstein(x)
        raise TypeError(f"cannot coerce {x!r} into QQ(w)")

    def coeff_to_json(self, c):
        return c.to_json()

    def __eq__(self, other):
        return isinstance(other, EisensteinField)

    def __hash__(self):
        return hash("QQ(w)")

    def __repr__(self):
        return "QQ(w)"


QQ = RationalField()
QW = EisensteinField()


class PrimeFieldElement:
    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def _check(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise ValueError("mixed prime fields")
            return other.value
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        v = self._check(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElement(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._check(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElement(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._check(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElement(v - self.value, self.p)

    def __mul__(self, other):
        v = self._check(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElement(self.value * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._check(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElement(self.value * pow(v, -1, self.p), self.p)

    def __rtruediv__(self, other):
        v = self._check(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElement(v * pow(self.value, -1, self.p), self.p)

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.p)

    def __pow__(self, n):
        return PrimeFieldElement(pow(self.value, n, self.p), self.p)

    def inverse(self):
        return PrimeFieldElement(pow(self.value, -1, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value}"


def _is_prime(n):
    if n < 2:
        return False
    for q in range(2, int(math.isqrt(n)) + 1):
        if n % q == 0:
            return False
    return True


class PrimeField:
    """F_p with p = 1 mod 3; carries the smallest cube root of unity > 1."""

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p % 3 != 1:
            raise ValueError(f"p = {p} must be congruent to 1 mod 3")
        self.p = p
        self.omega_value = self._find_omega()
        self.name = f"GF({p})"

    def _find_omega(self):
        for r in range(2, self.p):
            if (r * r + r + 1) % self.p == 0:
                return r
        raise AssertionError("no cube root of unity found")  # unreachable for p = 1 mod 3

    def zero(self):
        return PrimeFieldElement(0, self.p)

    def one(self):
        return PrimeFieldElement(1, self.p)

    def omega(self):
        return PrimeFieldElement(self.omega_value, self.p)

    def coerce(self, x):
        if isinstance(x, PrimeFieldElement):
            if x.p != self.p:
                raise ValueError("mixed prime fields")
            return x
        if isinstance(x, int):
            return PrimeFieldElement(x, self.p)
        if isinstance(x, Fraction):
            return PrimeFieldElement(x.numerator * pow(x.denominator, -1, self.p), self.p)
        raise TypeError(f"cannot coerce {x!r} into GF({self.p})")

    def coeff_to_json(self, c):
        return c.value

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return self.name


def binomial(n, k):
    return math.comb(n, k)


_bernoulli_cache = {0: Fraction(1)}


def bernoulli(n):
    """Exact Bernoulli number B_n from the recurrence
    sum_{k=0}^{n} C(n+1, k) B_k = 0 (with B_1 = -1/2)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n in _bernoulli_cache:
        return _bernoulli_cache[n]
    for m in range(1, n + 1):
        if m not in _bernoulli_cache:
            acc = Fraction(0)
            for k in range(m):
                acc += binomial(m + 1, k) * _bernoulli_cache[k]
            _bernoulli_cache[m] = -acc / (m + 1)
    return _bernoulli_cache[n]

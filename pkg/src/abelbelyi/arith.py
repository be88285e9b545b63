"""Exact scalars: rationals (via :class:`fractions.Fraction`) and prime fields.

Every quantity in the package is exact.  A :class:`Field` is the only thing
callers pass around to say where the arithmetic lives; its elements are
``Fraction`` for characteristic 0 and :class:`PrimeFieldElem` otherwise.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC

Rational = Fraction


class BadReduction(ValueError):
    """A rational number has no image mod p (p divides its denominator)."""


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def reduce_rational(num: int, den: int) -> Fraction:
    """Canonical num/den with positive denominator; zero is 0/1."""
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(num, den)


def project_mod_p(q, p: int) -> "PrimeFieldElem":
    """Image of a rational under Z_(p) -> F_p."""
    q = Fraction(q)
    if q.denominator % p == 0:
        raise BadReduction(f"bad reduction of scalar {q} at p={p}")
    return PrimeFieldElem(q.numerator * pow(q.denominator, -1, p), p)


class PrimeFieldElem:
    """Element of F_p, p a prime > 3."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        if p <= 3 or not is_prime(p):
            raise ValueError(f"modulus must be a prime > 3, got {p}")
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElem):
            if other.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {other.p}")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, _RationalABC):
            return project_mod_p(other, self.p).value
        return NotImplemented

    def _new(self, v):
        r = object.__new__(PrimeFieldElem)
        r.value = v % self.p
        r.p = self.p
        return r

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value * o)

    __rmul__ = __mul__

    def inverse(self) -> "PrimeFieldElem":
        if self.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return self._new(pow(self.value, -1, self.p))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return self._new(self.value * pow(o, -1, self.p))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(o) / self

    def __neg__(self):
        return self._new(-self.value)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return self._new(pow(self.value, e, self.p))

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElem):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return (self.value - other) % self.p == 0
        if isinstance(other, _RationalABC):
            try:
                return self.value == project_mod_p(other, self.p).value
            except BadReduction:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"PrimeFieldElem({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class Field:
    """Ground field context: characteristic 0 (Q) or a prime p > 3 (F_p)."""

    __slots__ = ("characteristic",)

    def __init__(self, characteristic: int = 0):
        if characteristic in (2, 3):
            raise ValueError("characteristic 2,3 excluded")
        if characteristic != 0 and not is_prime(characteristic):
            raise ValueError(f"characteristic must be 0 or a prime, got {characteristic}")
        self.characteristic = characteristic

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, value):
        p = self.characteristic
        if p == 0:
            if isinstance(value, PrimeFieldElem):
                raise TypeError("cannot lift a prime-field element to Q")
            return Fraction(value)
        if isinstance(value, PrimeFieldElem):
            if value.p != p:
                raise ValueError(f"element of F_{value.p} used in F_{p}")
            return value
        if isinstance(value, int):
            return PrimeFieldElem(value, p)
        return project_mod_p(value, p)

    def elements(self):
        """All elements of a prime field, in residue order."""
        if self.characteristic == 0:
            raise ValueError("Q is infinite")
        return [PrimeFieldElem(i, self.characteristic) for i in range(self.characteristic)]

    def check_degree(self, n: int) -> None:
        p = self.characteristic
        if p and n % p == 0:
            raise ValueError(f"characteristic {p} divides the degree n={n}")

    def is_square(self, a) -> bool:
        a = self(a)
        if not a:
            return True
        if self.characteristic == 0:
            return a > 0 and _is_square_int(a.numerator) and _is_square_int(a.denominator)
        return pow(a.value, (a.p - 1) // 2, a.p) == 1

    @property
    def tag(self) -> str:
        return "Q" if self.characteristic == 0 else f"Fp:{self.characteristic}"

    def __eq__(self, other):
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("Field", self.characteristic))

    def __repr__(self):
        return f"Field({self.characteristic})"


def _is_square_int(n: int) -> bool:
    from math import isqrt

    return n >= 0 and isqrt(n) ** 2 == n


QQ = Field(0)


def GF(p: int) -> Field:
    if p <= 3:
        raise ValueError("characteristic 2,3 excluded")
    return Field(p)


def field_of(characteristic: int) -> Field:
    return QQ if characteristic == 0 else GF(characteristic)


def to_str(value) -> str:
    """Exact string form: "p/q" for rationals, residue for F_p."""
    return str(value)

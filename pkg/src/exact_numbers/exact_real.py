"""
Numeration Toolkit - Exact Real Arithmetic

Exact values over Q and the real quadratic fields Q(sqrt(d)). Every ordering
decision in the toolkit (CFE digits, admissibility, gap lengths, counts) goes
through the exact sign test here; floats only appear in ``to_mpf`` for display
and sanity checks.

Key Features:
- One immutable value type ExactReal = a + b*sqrt(d), collapsed to a rational when b == 0
- Exact sign, floor, fractional part and reciprocal
- ExtendedDigit with an INFINITY symbol for the trailing-[1, inf] CFE convention
- The extended Gauss-map primitives T1 and A1 on [0, 1]
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Union

from mpmath import mp, mpf, sqrt as mp_sqrt

from src.errors.error_handling_system import (
    DivisionByZero,
    DomainError,
    IncompatibleFieldsError
)

RationalLike = Union[int, Fraction]

_NO_ROOT = Fraction(0)


@lru_cache(maxsize=4096)
def square_free_decomposition(n: int):
    """Split a positive integer n into (k, m) with n = k*k*m and m square-free"""
    if n <= 0:
        raise DomainError(f"square-free decomposition needs a positive integer, got {n}")
    k, m = 1, n
    p = 2
    while p * p <= m:
        while m % (p * p) == 0:
            m //= p * p
            k *= p
        p += 1 if p == 2 else 2
    return k, m


def _lcm(x: int, y: int) -> int:
    return x // gcd(x, y) * y


def _sign_of(a: Fraction, b: Fraction, d: int) -> int:
    """Exact sign of a + b*sqrt(d), decided on integers over a common denominator"""
    # a + b sqrt(d) has the sign of A + B sqrt(d) with A = a.num * b.den, B = b.num * a.den
    big_a = a.numerator * b.denominator
    big_b = b.numerator * a.denominator
    sa = (big_a > 0) - (big_a < 0)
    sb = (big_b > 0) - (big_b < 0)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: |A| against |B|*sqrt(d)
    return sa if big_a * big_a > big_b * big_b * d else sb


def _exact(a: Fraction, b: Fraction, d: int) -> "ExactReal":
    """ExactReal from parts that are already normalized (d square-free or b == 0)"""
    value = object.__new__(ExactReal)
    if not b:
        b, d = _NO_ROOT, 1
    object.__setattr__(value, 'a', a)
    object.__setattr__(value, 'b', b)
    object.__setattr__(value, 'd', d)
    return value


@dataclass(frozen=True)
class ExactReal:
    """An exact real a + b*sqrt(d); rational iff b == 0 (then d == 1)"""
    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 1

    def __post_init__(self):
        a = Fraction(self.a)
        b = Fraction(self.b)
        d = int(self.d)
        if b != 0 and d < 0:
            raise DomainError(f"quadratic radicand must be positive, got {d}")
        if b == 0 or d == 0:
            b, d = Fraction(0), 1
        else:
            k, m = square_free_decomposition(d)
            if m == 1:
                a, b, d = a + b * k, Fraction(0), 1
            elif k != 1:
                b, d = b * k, m
        object.__setattr__(self, 'a', a)
        object.__setattr__(self, 'b', b)
        object.__setattr__(self, 'd', d)

    # Construction helpers

    @classmethod
    def rational(cls, value: RationalLike, denominator: int = 1) -> "ExactReal":
        if denominator == 0:
            raise DivisionByZero("rational with zero denominator")
        return cls(Fraction(value) / denominator)

    @classmethod
    def quadratic(cls, a: RationalLike, b: RationalLike, d: int) -> "ExactReal":
        return cls(Fraction(a), Fraction(b), d)

    @classmethod
    def sqrt(cls, n: RationalLike) -> "ExactReal":
        """Exact square root of a non-negative rational, when it lies in a quadratic field"""
        n = Fraction(n)
        if n < 0:
            raise DomainError(f"sqrt of negative number {n}")
        if n == 0:
            return cls(Fraction(0))
        # sqrt(p/q) = sqrt(p*q)/q
        return cls(Fraction(0), Fraction(1, n.denominator), n.numerator * n.denominator)

    # Basic properties

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def as_fraction(self) -> Fraction:
        if self.b != 0:
            raise DomainError(f"{self} is irrational")
        return self.a

    def sign(self) -> int:
        return _sign_of(self.a, self.b, self.d)

    def conjugate(self) -> "ExactReal":
        return _exact(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Field norm a^2 - b^2 d"""
        return self.a * self.a - self.b * self.b * self.d

    def floor(self) -> int:
        if self.b == 0:
            return self.a.numerator // self.a.denominator
        c = _lcm(self.a.denominator, self.b.denominator)
        big_a = int(self.a * c)
        big_b = int(self.b * c)
        root = isqrt(big_b * big_b * self.d)
        # B*sqrt(d) is irrational, so its floor is isqrt or -isqrt-1
        m = root if big_b > 0 else -root - 1
        return (big_a + m) // c

    def ceil(self) -> int:
        return -((-self).floor())

    def frac(self) -> "ExactReal":
        return self - self.floor()

    def ceil_minus_one(self) -> int:
        """The map I(u) = ceil(u) - 1"""
        return self.ceil() - 1

    def reciprocal(self) -> "ExactReal":
        if self.b == 0:
            if self.a == 0:
                raise DivisionByZero("reciprocal of zero")
            return _exact(1 / self.a, _NO_ROOT, 1)
        n = self.norm()
        return _exact(self.a / n, -self.b / n, self.d)

    # Arithmetic

    def _field(self, other: "ExactReal") -> int:
        if self.b == 0:
            return other.d
        if other.b == 0 or other.d == self.d:
            return self.d
        raise IncompatibleFieldsError(
            f"cannot combine sqrt({self.d}) and sqrt({other.d})"
        )

    def __add__(self, other):
        other = as_exact(other, strict=False)
        if other is None:
            return NotImplemented
        d = self._field(other)
        return _exact(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self):
        return _exact(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __sub__(self, other):
        other = as_exact(other, strict=False)
        if other is None:
            return NotImplemented
        d = self._field(other)
        return _exact(self.a - other.a, self.b - other.b, d)

    def __rsub__(self, other):
        other = as_exact(other, strict=False)
        if other is None:
            return NotImplemented
        d = other._field(self)
        return _exact(other.a - self.a, other.b - self.b, d)

    def __mul__(self, other):
        other = as_exact(other, strict=False)
        if other is None:
            return NotImplemented
        d = self._field(other)
        return _exact(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            d
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_exact(other, strict=False)
        if other is None:
            return NotImplemented
        if other.sign() == 0:
            raise DivisionByZero(f"division of {self} by zero")
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = as_exact(other, strict=False)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        result, base = ExactReal(Fraction(1)), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # Comparison

    def _compare(self, other) -> int:
        other = as_exact(other, strict=False)
        if other is None:
            return None
        if self.b == 0 and other.b == 0:
            return (self.a > other.a) - (self.a < other.a)
        d = self._field(other)
        return _sign_of(self.a - other.a, self.b - other.b, d)

    def __eq__(self, other):
        other = as_exact(other, strict=False)
        if other is None:
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        cached = self.__dict__.get("_hash")
        if cached is None:
            cached = hash(self.a) if self.b == 0 else hash((self.a, self.b, self.d))
            object.__setattr__(self, "_hash", cached)
        return cached

    def __lt__(self, other):
        c = self._compare(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other):
        c = self._compare(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other):
        c = self._compare(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other):
        c = self._compare(other)
        return NotImplemented if c is None else c >= 0

    def __bool__(self):
        return self.sign() != 0

    def __float__(self):
        return float(to_mpf(self, 64))

    def __str__(self):
        from .expression_parser import format_exact
        return format_exact(self)

    def __repr__(self):
        return f"ExactReal({self})"


ZERO = ExactReal(Fraction(0))
ONE = ExactReal(Fraction(1))


def as_exact(value, strict: bool = True):
    """Coerce int / Fraction / ExactReal to ExactReal"""
    if isinstance(value, ExactReal):
        return value
    if isinstance(value, bool):
        value = int(value)
    if isinstance(value, int):
        return _exact(Fraction(value), _NO_ROOT, 1)
    if isinstance(value, Fraction):
        return _exact(value, _NO_ROOT, 1)
    if strict:
        raise DomainError(f"not an exact value: {value!r}")
    return None


def to_mpf(x, bits: int = 256):
    """High-precision float evaluation (display and sanity checks only)"""
    x = as_exact(x)
    with mp.workprec(bits):
        value = mpf(x.a.numerator) / x.a.denominator
        if x.b != 0:
            value += mpf(x.b.numerator) / x.b.denominator * mp_sqrt(x.d)
        return +value


class _Infinity:
    """The CFE digit symbol for infinity; exceeds every integer"""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("ExtendedDigit.INFINITY")

    def __repr__(self):
        return "INFINITY"

    __str__ = __repr__


INFINITY = _Infinity()
ExtendedDigit = Union[int, _Infinity]


def digit_reciprocal(t: ExtendedDigit) -> Fraction:
    """1/t with 1/INFINITY = 0"""
    if t is INFINITY:
        return Fraction(0)
    if t == 0:
        raise DivisionByZero("reciprocal of digit 0")
    return Fraction(1, t)


def floor(x) -> int:
    return as_exact(x).floor()


def frac(x) -> ExactReal:
    return as_exact(x).frac()


def ceil_minus_one(x) -> int:
    return as_exact(x).ceil_minus_one()


def _unit_interval(x) -> ExactReal:
    x = as_exact(x)
    if x.sign() < 0 or x > 1:
        raise DomainError(f"{x} is outside [0, 1]")
    return x


def gauss_t1(x) -> ExactReal:
    """Extended Gauss map T1 on [0, 1]: 0 -> 0, 1 -> 0, 1/k -> 1 (k >= 2), else {1/x}"""
    x = _unit_interval(x)
    if x.sign() == 0 or x == 1:
        return ZERO
    inverse = x.reciprocal()
    if inverse.is_integer:
        return ONE
    return inverse.frac()


def gauss_a1(x) -> ExtendedDigit:
    """Digit map A1 on [0, 1]: 0 -> INFINITY, 1 -> 1, else I(1/x)"""
    x = _unit_interval(x)
    if x.sign() == 0:
        return INFINITY
    if x == 1:
        return 1
    return x.reciprocal().ceil_minus_one()

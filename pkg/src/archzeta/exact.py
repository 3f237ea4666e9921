"""Exact arithmetic in the monoid of monomials q * 2^(a/2) * pi^(b/2) * i^c.

Every closed-form quantity computed by this package lives in this ring:
a positive rational q with odd numerator and denominator, half-integer
exponents of 2 and pi, and a power of i mod 4 (the sign -1 is i^2).
The representation is unique, so equality is structural.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction

from .errors import DivisionByZero, NonPositiveArgument, Overflow


@functools.total_ordering
class HalfInt:
    """An element of (1/2)Z, stored as the integer number of halves."""

    __slots__ = ("halves",)

    def __init__(self, halves: int):
        self.halves = int(halves)

    @classmethod
    def of(cls, value) -> "HalfInt":
        """Coerce an int, Fraction with denominator 1 or 2, or HalfInt."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, int):
            return cls(2 * value)
        frac = Fraction(value)
        if frac.denominator == 1:
            return cls(2 * frac.numerator)
        if frac.denominator == 2:
            return cls(frac.numerator)
        raise ValueError(f"{value!r} is not a half-integer")

    def as_fraction(self) -> Fraction:
        return Fraction(self.halves, 2)

    @property
    def is_integer(self) -> bool:
        return self.halves % 2 == 0

    def as_int(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.halves // 2

    def __add__(self, other):
        return HalfInt(self.halves + HalfInt.of(other).halves)

    __radd__ = __add__

    def __sub__(self, other):
        return HalfInt(self.halves - HalfInt.of(other).halves)

    def __rsub__(self, other):
        return HalfInt(HalfInt.of(other).halves - self.halves)

    def __mul__(self, other: int):
        if not isinstance(other, int):
            return NotImplemented
        return HalfInt(self.halves * other)

    __rmul__ = __mul__

    def __neg__(self):
        return HalfInt(-self.halves)

    def __abs__(self):
        return HalfInt(abs(self.halves))

    def __eq__(self, other):
        try:
            return self.halves == HalfInt.of(other).halves
        except (ValueError, TypeError):
            return NotImplemented

    def __lt__(self, other):
        return self.halves < HalfInt.of(other).halves

    def __hash__(self):
        return hash(self.as_fraction())

    def __float__(self):
        return self.halves / 2.0

    def __repr__(self):
        return f"HalfInt({self.halves})"

    def __str__(self):
        if self.is_integer:
            return str(self.halves // 2)
        return f"{self.halves}/2"


def _two_adic_split(q: Fraction) -> tuple[Fraction, int]:
    """Write q = odd * 2^v with odd numerator and denominator."""
    num, den = q.numerator, q.denominator
    v = 0
    while num % 2 == 0:
        num //= 2
        v += 1
    while den % 2 == 0:
        den //= 2
        v -= 1
    return Fraction(num, den), v


class ExactScalar:
    """A nonzero monomial q * 2^(pow2) * pi^(pow_pi) * i^ipow, or zero.

    Invariants: coeff is a positive rational with odd numerator and
    denominator (all 2-adic content lives in pow2, the sign in ipow),
    ipow is reduced mod 4, and zero has all fields at canonical defaults.
    Instances are immutable; equality is field-by-field.
    """

    __slots__ = ("zero", "coeff", "pow2", "pow_pi", "ipow")

    def __init__(self, zero, coeff, pow2, pow_pi, ipow, _raw=False):
        if not _raw:
            raise TypeError("use ExactScalar.make()")
        self.zero = zero
        self.coeff = coeff
        self.pow2 = pow2
        self.pow_pi = pow_pi
        self.ipow = ipow

    @classmethod
    def make(cls, coeff, pow2=0, pow_pi=0, ipow: int = 0) -> "ExactScalar":
        coeff = Fraction(coeff)
        if coeff == 0:
            return ZERO
        ipow = int(ipow) % 4
        if coeff < 0:
            coeff = -coeff
            ipow = (ipow + 2) % 4
        coeff, v2 = _two_adic_split(coeff)
        return cls(False, coeff, HalfInt.of(pow2) + v2, HalfInt.of(pow_pi),
                   ipow, _raw=True)

    @classmethod
    def from_int(cls, value: int) -> "ExactScalar":
        return cls.make(Fraction(value))

    def is_one(self) -> bool:
        return self == ONE

    def __mul__(self, other: "ExactScalar") -> "ExactScalar":
        if self.zero or other.zero:
            return ZERO
        coeff, v2 = _two_adic_split(self.coeff * other.coeff)
        return ExactScalar(False, coeff, self.pow2 + other.pow2 + v2,
                           self.pow_pi + other.pow_pi,
                           (self.ipow + other.ipow) % 4, _raw=True)

    def inverse(self) -> "ExactScalar":
        if self.zero:
            raise DivisionByZero("cannot invert zero")
        return ExactScalar(False, 1 / self.coeff, -self.pow2, -self.pow_pi,
                           (-self.ipow) % 4, _raw=True)

    def __truediv__(self, other: "ExactScalar") -> "ExactScalar":
        return self * other.inverse()

    def __pow__(self, e: int) -> "ExactScalar":
        e = int(e)
        if self.zero:
            if e <= 0:
                raise DivisionByZero("zero to a non-positive power")
            return ZERO
        if e < 0:
            return self.inverse() ** (-e)
        return ExactScalar.make(self.coeff ** e, self.pow2.halves * e * Fraction(1, 2),
                                self.pow_pi.halves * e * Fraction(1, 2),
                                self.ipow * e)

    def __neg__(self) -> "ExactScalar":
        if self.zero:
            return ZERO
        return ExactScalar(False, self.coeff, self.pow2, self.pow_pi,
                           (self.ipow + 2) % 4, _raw=True)

    def __eq__(self, other):
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return (self.zero == other.zero and self.coeff == other.coeff
                and self.pow2 == other.pow2 and self.pow_pi == other.pow_pi
                and self.ipow == other.ipow)

    def __hash__(self):
        return hash((self.zero, self.coeff, self.pow2, self.pow_pi, self.ipow))

    def to_float(self) -> complex:
        """Double-precision value; relative error <= 1e-12 for sane exponents."""
        if self.zero:
            return 0j
        try:
            mag = float(self.coeff) * 2.0 ** (self.pow2.halves / 2.0) \
                * math.pi ** (self.pow_pi.halves / 2.0)
        except OverflowError as exc:
            raise Overflow(str(exc)) from exc
        if math.isinf(mag):
            raise Overflow(f"magnitude of {self} exceeds double range")
        return mag * (1j ** self.ipow)

    def __str__(self):
        if self.zero:
            return "0"
        sign = "-" if self.ipow in (2, 3) else ""
        parts = [str(self.coeff)]
        if self.pow2.halves:
            parts.append(f"2^({self.pow2.halves}/2)")
        if self.pow_pi.halves:
            parts.append(f"pi^({self.pow_pi.halves}/2)")
        if self.ipow % 2:
            parts.append("i")
        return sign + " * ".join(parts)

    __repr__ = __str__

    def to_json(self) -> dict:
        """JSON object form used by the CLI; round-trips via from_json."""
        value = self.to_float()
        return {
            "coeff": "0" if self.zero else str(self.coeff),
            "pow2_halves": self.pow2.halves,
            "powpi_halves": self.pow_pi.halves,
            "ipow": self.ipow,
            "float": {"re": value.real, "im": value.imag},
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ExactScalar":
        coeff = Fraction(obj["coeff"])
        if coeff == 0:
            return ZERO
        return cls.make(coeff, Fraction(obj["pow2_halves"], 2),
                        Fraction(obj["powpi_halves"], 2), obj["ipow"])


SCHEMA = "arch-zeta/1"

ZERO = ExactScalar(True, Fraction(1), HalfInt(0), HalfInt(0), 0, _raw=True)
ONE = ExactScalar(False, Fraction(1), HalfInt(0), HalfInt(0), 0, _raw=True)
TWO_PI_I = ExactScalar.make(1, 1, 1, 1)
MINUS_TWO_PI_I = ExactScalar.make(-1, 1, 1, 1)


def product(values) -> ExactScalar:
    out = ONE
    for v in values:
        out = out * v
    return out


def minus_one_pow(exponent) -> ExactScalar:
    """(-1)^e for an integer or integer-valued HalfInt/Fraction exponent."""
    if isinstance(exponent, HalfInt):
        exponent = exponent.as_int()
    elif isinstance(exponent, Fraction):
        if exponent.denominator != 1:
            raise NotInRing(f"(-1)^{exponent} is not in the monomial ring")
        exponent = exponent.numerator
    return ONE if exponent % 2 == 0 else ExactScalar.make(-1)


def i_pow(exponent) -> ExactScalar:
    """i^e for an integer exponent (HalfInt/Fraction accepted if integral)."""
    if isinstance(exponent, HalfInt):
        exponent = exponent.as_int()
    elif isinstance(exponent, Fraction):
        if exponent.denominator != 1:
            raise NotInRing(f"i^{exponent} is not in the monomial ring")
        exponent = exponent.numerator
    return ExactScalar.make(1, 0, 0, exponent)


def gamma_exact(arg) -> ExactScalar:
    """Gamma at a positive integer or half-integer, as an ExactScalar.

    Gamma(m) = (m-1)!; Gamma(m + 1/2) = (2m)!/(4^m m!) * sqrt(pi).
    """
    return _gamma_exact_cached(HalfInt.of(arg).halves)


@functools.lru_cache(maxsize=4096)
def _gamma_exact_cached(halves: int) -> ExactScalar:
    arg = HalfInt(halves)
    if arg.halves <= 0:
        raise NonPositiveArgument(f"Gamma pole or non-positive point at {arg}")
    if arg.is_integer:
        return ExactScalar.make(math.factorial(arg.as_int() - 1))
    m = (arg.halves - 1) // 2
    return ExactScalar.make(
        Fraction(math.factorial(2 * m), 4 ** m * math.factorial(m)),
        0, Fraction(1, 2))


def gamma_C(arg) -> ExactScalar:
    """Gamma_C(s) = 2 * (2 pi)^(-s) * Gamma(s) at a positive half-integer."""
    return _gamma_C_cached(HalfInt.of(arg).halves)


@functools.lru_cache(maxsize=4096)
def _gamma_C_cached(halves: int) -> ExactScalar:
    arg = HalfInt(halves)
    prefactor = ExactScalar.make(1, 1 - arg.as_fraction(), -arg.as_fraction())
    return prefactor * gamma_exact(arg)

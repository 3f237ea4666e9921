"""One-variable rational functions over Q and Gamma-product reduction.

Multivariate Gamma products whose arguments differ by integers reduce to
Pochhammer polynomials in s via Gamma(x+1) = x Gamma(x), applied formally
(Gamma is never evaluated at an s-dependent point).  This is the engine
behind the intertwining-constant check `c_ratio`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import IrreducibleGammaContent, NotConstant
from .exact import ExactScalar, HalfInt


class Poly:
    """Dense univariate polynomial with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def linear(cls, const, slope) -> "Poly":
        """const + slope * s"""
        return cls([const, slope])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        return self.coeffs[-1]

    def monic(self) -> "Poly":
        lead = self.leading()
        return Poly([c / lead for c in self.coeffs])

    def scale(self, factor) -> "Poly":
        return Poly([c * factor for c in self.coeffs])

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + other.scale(-1)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    def __pow__(self, e: int) -> "Poly":
        out = Poly([1])
        for _ in range(e):
            out = out * self
        return out

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quo = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        dlead = other.leading()
        dd = other.degree
        while len(rem) - 1 >= dd and rem:
            shift = len(rem) - 1 - dd
            factor = rem[-1] / dlead
            quo[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= factor * c
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(quo), Poly(rem)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def evaluate(self, x: Fraction) -> Fraction:
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = [f"{c}*s^{i}" for i, c in enumerate(self.coeffs) if c]
        return "Poly(" + " + ".join(terms) + ")"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    if a.is_zero():
        return a
    return a.monic()


class RationalFunction:
    """num/den with den monic and gcd(num, den) = 1; canonical and unique."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = Poly([]), Poly([1])
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
        lead = den.leading()
        self.num = num.scale(1 / lead)
        self.den = den.monic()

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls(Poly([1]), Poly([1]))

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __eq__(self, other):
        return (isinstance(other, RationalFunction)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree <= 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise NotConstant(f"{self!r} depends on s")
        if self.num.is_zero():
            return Fraction(0)
        return self.num.coeffs[0] / self.den.coeffs[0]

    def __repr__(self):
        return f"RationalFunction({self.num!r} / {self.den!r})"


@dataclass
class GammaFactorList:
    """pi^pi_pow * prod Gamma(base + s_sign * s)^exponent, kept symbolic."""

    factors: list  # (base: HalfInt, s_sign: +1|-1, exponent: int)
    pi_pow: HalfInt = field(default_factory=lambda: HalfInt(0))

    def __mul__(self, other: "GammaFactorList") -> "GammaFactorList":
        return GammaFactorList(self.factors + other.factors,
                               self.pi_pow + other.pi_pow)

    def inverse(self) -> "GammaFactorList":
        return GammaFactorList([(b, sg, -e) for b, sg, e in self.factors],
                               -self.pi_pow)


def multivariate_gamma(m: int, base, s_sign: int) -> GammaFactorList:
    """Gamma_m(x) = pi^{m(m-1)/2} prod_{j=0}^{m-1} Gamma(x - j), x = base + s_sign*s.

    Adopted Hermitian-case convention; m = 0 gives the empty product.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    base = HalfInt.of(base)
    factors = [(base - j, s_sign, 1) for j in range(m)]
    return GammaFactorList(factors, HalfInt.of(Fraction(m * (m - 1), 2)))


def gamma_shift_reduce(fl: GammaFactorList) -> tuple[RationalFunction, HalfInt]:
    """Cancel the Gamma content of `fl` into Pochhammer polynomials in s.

    Within each (s_sign, base mod 1) class the net exponents must sum to
    zero; each Gamma(base + sg*s) then contributes rising factors
    (b0 + j + sg*s) relative to the minimal base b0 of its class.
    """
    net: dict[tuple[int, int], dict[HalfInt, int]] = {}
    for base, s_sign, exponent in fl.factors:
        base = HalfInt.of(base)
        cls = (s_sign, base.halves % 2)
        net.setdefault(cls, {})
        net[cls][base] = net[cls].get(base, 0) + exponent
    result = RationalFunction.one()
    for (s_sign, _), bases in net.items():
        bases = {b: e for b, e in bases.items() if e != 0}
        if not bases:
            continue
        if sum(bases.values()) != 0:
            raise IrreducibleGammaContent(
                f"net Gamma exponents do not cancel in sign class {s_sign:+d}")
        b0 = min(bases)
        num, den = Poly([1]), Poly([1])
        for base, exponent in bases.items():
            shift = (base - b0).halves // 2  # same class => integer
            block = Poly([1])
            for j in range(shift):
                block = block * Poly.linear((b0 + j).as_fraction(),
                                            Fraction(s_sign))
            if exponent > 0:
                num = num * block ** exponent
            else:
                den = den * block ** (-exponent)
        result = result * RationalFunction(num, den)
    return result, fl.pi_pow


def c_ratio(n: int, k: int) -> ExactScalar:
    """The intertwining-constant ratio c(s,1)/c(s,delta) as an exact constant.

    Assembles Gamma_n((k+n)/2 - s)/Gamma_n((k+n)/2 + s) times
    Gamma_{ceil(n/2)}((k+n)/2 + s) Gamma_{floor(n/2)}((n-k)/2 + s) over
    Gamma_{ceil(n/2)}((k+n)/2 - s) Gamma_{floor(n/2)}((n-k)/2 - s),
    reduces the Gamma content, and requires a constant with no residual
    pi power.  Expected value: (-1)^{(k+n+1)*floor(n/2)}.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    outer = HalfInt.of(Fraction(k + n, 2))
    inner = HalfInt.of(Fraction(n - k, 2))
    ceil_h, floor_h = (n + 1) // 2, n // 2
    combined = (multivariate_gamma(n, outer, -1)
                * multivariate_gamma(n, outer, +1).inverse()
                * multivariate_gamma(ceil_h, outer, +1)
                * multivariate_gamma(floor_h, inner, +1)
                * multivariate_gamma(ceil_h, outer, -1).inverse()
                * multivariate_gamma(floor_h, inner, -1).inverse())
    reduced, residual_pi = gamma_shift_reduce(combined)
    if residual_pi != HalfInt(0):
        raise NotConstant(f"residual pi power {residual_pi} in c_ratio({n},{k})")
    return ExactScalar.make(reduced.constant_value())

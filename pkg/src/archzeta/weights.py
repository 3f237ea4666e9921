"""Signatures, discrete-series weights, twist parameters and criticality.

All downstream evaluation is gated through `check_k_condition`: the twist
integer k must satisfy k = r mod 2, k >= n, tau_a >= (k+r)/2 and
nu_1 <= -(k-r)/2, which makes s = +-(k-n)/2 + 1/2 critical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ValidationError
from .exact import HalfInt


@dataclass(frozen=True)
class Signature:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0 or self.a + self.b < 1:
            raise ValidationError(f"invalid signature ({self.a},{self.b})")

    @property
    def n(self) -> int:
        return self.a + self.b


@dataclass(frozen=True)
class DiscreteSeriesWeight:
    tau: tuple
    nu: tuple

    def __post_init__(self):
        object.__setattr__(self, "tau", tuple(int(t) for t in self.tau))
        object.__setattr__(self, "nu", tuple(int(v) for v in self.nu))
        if any(x < y for x, y in zip(self.tau, self.tau[1:])):
            raise ValidationError(f"tau {self.tau} is not weakly decreasing")
        if any(x < y for x, y in zip(self.nu, self.nu[1:])):
            raise ValidationError(f"nu {self.nu} is not weakly decreasing")


@dataclass(frozen=True)
class TwistParams:
    k: int
    r: int

    def __post_init__(self):
        if (self.k - self.r) % 2 != 0:
            raise ValidationError(f"k parity violates k ≡ r (mod 2): "
                                  f"k={self.k}, r={self.r}")

    @property
    def k_plus_r_half(self) -> int:
        return (self.k + self.r) // 2

    @property
    def k_minus_r_half(self) -> int:
        return (self.k - self.r) // 2


def dual_weight(wt: DiscreteSeriesWeight) -> tuple[tuple, tuple]:
    """(tau*, nu*): negate and reverse each block."""
    tau_star = tuple(-t for t in reversed(wt.tau))
    nu_star = tuple(-v for v in reversed(wt.nu))
    return tau_star, nu_star


def hc_parameter(wt: DiscreteSeriesWeight, sig: Signature) -> tuple:
    """Harish-Chandra parameter (tau;nu) + (rho_c - rho_nc), as HalfInts."""
    a, b = sig.a, sig.b
    if len(wt.tau) != a or len(wt.nu) != b:
        raise ValidationError("weight length does not match signature")
    first = [HalfInt.of(Fraction(2 * wt.tau[j - 1] + a - b + 1 - 2 * j, 2))
             for j in range(1, a + 1)]
    second = [HalfInt.of(Fraction(2 * wt.nu[j - 1] + a + b + 1 - 2 * j, 2))
              for j in range(1, b + 1)]
    return tuple(first + second)


@dataclass(frozen=True)
class ZetaContext:
    sig: Signature
    wt: DiscreteSeriesWeight
    tw: TwistParams

    def __post_init__(self):
        if len(self.wt.tau) != self.sig.a or len(self.wt.nu) != self.sig.b:
            raise ValidationError("weight length does not match signature")
        ok, why = check_k_condition(self.sig, self.wt, self.tw)
        if not ok:
            raise ValidationError(why)

    @property
    def a(self) -> int:
        return self.sig.a

    @property
    def b(self) -> int:
        return self.sig.b

    @property
    def n(self) -> int:
        return self.sig.n

    @property
    def k(self) -> int:
        return self.tw.k

    @property
    def r(self) -> int:
        return self.tw.r

    @property
    def tau(self) -> tuple:
        return self.wt.tau

    @property
    def nu(self) -> tuple:
        return self.wt.nu

    @property
    def nu_star(self) -> tuple:
        return dual_weight(self.wt)[1]

    @property
    def tau_star(self) -> tuple:
        return dual_weight(self.wt)[0]

    def key(self) -> tuple:
        return (self.a, self.b, self.k, self.r, self.tau, self.nu)


def make_context(a, b, tau, nu, k, r) -> ZetaContext:
    return ZetaContext(Signature(a, b),
                       DiscreteSeriesWeight(tuple(tau), tuple(nu)),
                       TwistParams(k, r))


def check_k_condition(sig: Signature, wt: DiscreteSeriesWeight,
                      tw: TwistParams) -> tuple[bool, str]:
    """All four clauses of the criticality condition, with a diagnostic
    naming the first failing clause."""
    k, r, n = tw.k, tw.r, sig.n
    if (k - r) % 2 != 0:
        return False, f"k parity violates k ≡ r (mod 2): k={k}, r={r}"
    if k < n:
        return False, f"k={k} < n={n}"
    if sig.a > 0 and 2 * wt.tau[-1] < k + r:
        return False, (f"tau_a={wt.tau[-1]} < (k+r)/2={Fraction(k + r, 2)}")
    if sig.b > 0 and 2 * wt.nu[0] > -(k - r):
        return False, (f"nu_1={wt.nu[0]} > -(k-r)/2={-Fraction(k - r, 2)}")
    return True, "ok"


def shifted_parameters(wt: DiscreteSeriesWeight, sig: Signature,
                       r: int) -> tuple:
    """The 2n signed L-factor shifts: tau_j - r/2 + (a-b+1)/2 - j and
    nu_j - r/2 + (a+b+1)/2 - j, as HalfInts."""
    a, b = sig.a, sig.b
    out = [HalfInt.of(Fraction(2 * wt.tau[j - 1] - r + a - b + 1 - 2 * j, 2))
           for j in range(1, a + 1)]
    out += [HalfInt.of(Fraction(2 * wt.nu[j - 1] - r + a + b + 1 - 2 * j, 2))
            for j in range(1, b + 1)]
    return tuple(out)


@dataclass(frozen=True)
class CriticalSet:
    """The critical points: s0 = offset + m (m integer) with lo <= s0 <= hi.

    `offset` is the representative of the lattice Z - (r+n-1)/2 in [0, 1).
    The set is empty iff lo > hi or no lattice point fits.
    """
    offset: HalfInt
    lo: HalfInt
    hi: HalfInt

    def contains(self, s) -> bool:
        s = HalfInt.of(s)
        if (s.halves - self.offset.halves) % 2 != 0:
            return False
        return self.lo <= s <= self.hi

    def points(self) -> list:
        out = []
        start = self.lo.halves
        rem = (self.offset.halves - start) % 2
        h = start + rem
        while h <= self.hi.halves:
            out.append(HalfInt(h))
            h += 2
        return out

    def is_empty(self) -> bool:
        return not self.points()


def critical_points(wt: DiscreteSeriesWeight, sig: Signature,
                    r: int) -> CriticalSet:
    """Critical set for L(s, D* x chi^r): the lattice Z - (r+n-1)/2 cut by
    -|c_j| + 1 <= s0 <= |c_j| over all 2n shifted parameters c_j."""
    shifts = shifted_parameters(wt, sig, r)
    offset = HalfInt((-(r + sig.n - 1)) % 2)
    lo = max((-abs(c) + 1 for c in shifts), default=HalfInt(-10 ** 9))
    hi = min((abs(c) for c in shifts), default=HalfInt(10 ** 9))
    return CriticalSet(offset, lo, hi)

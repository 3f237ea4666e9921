"""Weyl dimensions, the U(k) theta-lift dimension, formal degrees, and a
Gelfand-Tsetlin brute-force dimension oracle.

The closed dimension formula and the formal degree are exact monomial /
integer computations; Gamma quotients are evaluated as rising-factorial
products so everything stays in integer arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import BoundExceeded, ConditionViolated, NonPositiveArgument
from .exact import ExactScalar
from .weights import ZetaContext

GT_MAX_LENGTH = 5
GT_MAX_ENTRY = 12


def weyl_dim(entries) -> int:
    """Weyl dimension for a GL(m) highest weight (weakly decreasing ints):
    prod_{i<j} (w_i - w_j + j - i)/(j - i)."""
    w = tuple(int(x) for x in entries)
    if any(x < y for x, y in zip(w, w[1:])):
        raise ValueError(f"{w} is not weakly decreasing")
    m = len(w)
    value = Fraction(1)
    for i in range(m):
        for j in range(i + 1, m):
            value *= Fraction(w[i] - w[j] + j - i, j - i)
    assert value.denominator == 1 and value > 0
    return int(value)


@lru_cache(maxsize=None)
def _gt_count(top: tuple) -> int:
    """Number of Gelfand-Tsetlin patterns with the given (nonnegative) top row."""
    if len(top) <= 1:
        return 1
    total = 0
    for row in _interlacing_rows(top):
        total += _gt_count(row)
    return total


def _interlacing_rows(top: tuple):
    """All weakly decreasing rows (r_1..r_{m-1}) with top_i >= r_i >= top_{i+1}."""
    m = len(top)

    def rec(i, prefix):
        if i == m - 1:
            yield tuple(prefix)
            return
        hi = top[i] if not prefix else min(top[i], prefix[-1])
        lo = top[i + 1]
        for v in range(hi, lo - 1, -1):
            yield from rec(i + 1, prefix + [v])

    yield from rec(0, [])


def gt_dim_oracle(entries) -> int:
    """Brute-force dimension: count GT patterns with top row `entries`
    (shifted to be nonnegative first).  Independent of weyl_dim."""
    w = tuple(int(x) for x in entries)
    if len(w) > GT_MAX_LENGTH:
        raise BoundExceeded(f"length {len(w)} exceeds {GT_MAX_LENGTH}")
    if any(abs(x) > GT_MAX_ENTRY for x in w):
        raise BoundExceeded(f"entry out of [-{GT_MAX_ENTRY},{GT_MAX_ENTRY}]")
    if not w:
        return 1
    shift = min(w)
    return _gt_count(tuple(x - shift for x in w))


def lambda_weight(ctx: ZetaContext) -> tuple:
    """The U(k) highest weight paired with the discrete series:
    (tau_j - (k+r)/2, ..., 0...0, nu_j + (k-r)/2, ...), length k."""
    kpr, kmr = ctx.tw.k_plus_r_half, ctx.tw.k_minus_r_half
    head = [t - kpr for t in ctx.tau]
    tail = [v + kmr for v in ctx.nu]
    zeros = [0] * (ctx.k - ctx.a - ctx.b)
    w = tuple(head + zeros + tail)
    if any(x < y for x, y in zip(w, w[1:])):
        raise ConditionViolated(f"lambda weight {w} not weakly decreasing")
    return w


def _rising_product(lo: int, hi: int) -> int:
    """Gamma(hi)/Gamma(lo) = lo (lo+1) ... (hi-1) for integers 0 < lo <= hi."""
    if lo <= 0 or hi < lo:
        raise NonPositiveArgument(f"Gamma quotient Gamma({hi})/Gamma({lo}) "
                                  "outside the positive-integer domain")
    out = 1
    for t in range(lo, hi):
        out *= t
    return out


def _root_products(ctx: ZetaContext) -> tuple[int, int, int]:
    """The three positive-root products over tau, nu*, and the cross block."""
    tau, nu_star = ctx.tau, ctx.nu_star
    a, b = ctx.a, ctx.b
    p_tau = 1
    for i in range(1, a + 1):
        for j in range(i + 1, a + 1):
            p_tau *= tau[i - 1] - tau[j - 1] - i + j
    p_nu = 1
    for i in range(1, b + 1):
        for j in range(i + 1, b + 1):
            p_nu *= nu_star[i - 1] - nu_star[j - 1] - i + j
    p_cross = 1
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            p_cross *= tau[i - 1] + nu_star[j - 1] + 1 - i - j
    return p_tau, p_nu, p_cross


def dim_lambda_closed(ctx: ZetaContext) -> int:
    """The closed three-line product for dim of the U(k) weight; must agree
    with weyl_dim(lambda_weight(ctx))."""
    a, b, k = ctx.a, ctx.b, ctx.k
    tau, nu_star = ctx.tau, ctx.nu_star
    kpr, kmr = ctx.tw.k_plus_r_half, ctx.tw.k_minus_r_half
    value = Fraction(1)
    for j in range(1, a + b + 1):
        value /= math.factorial(k - j)
    for j in range(1, a + 1):
        value *= _rising_product(tau[j - 1] - j - kpr + a + 1,
                                 tau[j - 1] - j + kmr - b + 1)
    for j in range(1, b + 1):
        value *= _rising_product(nu_star[j - 1] - j - kmr + b + 1,
                                 nu_star[j - 1] - j + kpr - a + 1)
    p_tau, p_nu, p_cross = _root_products(ctx)
    value *= p_tau * p_nu * p_cross
    assert value.denominator == 1 and value > 0, value
    return int(value)


def formal_degree(ctx: ZetaContext) -> ExactScalar:
    """Formal degree of the holomorphic discrete series w.r.t. the fixed
    Haar measure: root products over 2^{ab-n/2} pi^{ab} prod Gamma(j)^2."""
    a, b = ctx.a, ctx.b
    p_tau, p_nu, p_cross = _root_products(ctx)
    numerator = p_tau * p_nu * p_cross
    if numerator <= 0:
        raise NonPositiveArgument(
            f"non-regular Harish-Chandra parameter: root product {numerator}")
    den = 1
    for j in range(1, a + 1):
        den *= math.factorial(j - 1)
    for j in range(1, b + 1):
        den *= math.factorial(j - 1)
    return ExactScalar.make(Fraction(numerator, den),
                            Fraction(-(2 * a * b - a - b), 2), -a * b)


def dfd_ratio(ctx: ZetaContext) -> ExactScalar:
    """Closed form of dim(lambda)/formal_degree; checked elsewhere to equal
    the quotient of the two routines computing the pieces."""
    a, b, k = ctx.a, ctx.b, ctx.k
    tau, nu_star = ctx.tau, ctx.nu_star
    kpr, kmr = ctx.tw.k_plus_r_half, ctx.tw.k_minus_r_half
    coeff = Fraction(1)
    for j in range(1, a + 1):
        coeff *= math.factorial(j - 1)
    for j in range(1, b + 1):
        coeff *= math.factorial(j - 1)
    for j in range(1, a + b + 1):
        coeff /= math.factorial(k - j)
    for j in range(1, a + 1):
        coeff *= _rising_product(tau[j - 1] - j - kpr + a + 1,
                                 tau[j - 1] - j + kmr - b + 1)
    for j in range(1, b + 1):
        coeff *= _rising_product(nu_star[j - 1] - j - kmr + b + 1,
                                 nu_star[j - 1] - j + kpr - a + 1)
    return ExactScalar.make(coeff, Fraction(2 * a * b - a - b, 2), a * b)

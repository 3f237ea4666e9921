"""The archimedean L-factor, the modified Euler factor E, and the
gamma factor extracted from E's two-point functional relation.

E(s) = prod_j e^{-pi i/2 (s+|c_j|)} Gamma_C(s+|c_j|) over the 2n shifted
parameters c_j; whenever s+|c_j| is an integer m the phase is i^{-m} and
everything stays in the exact monomial ring.  E in this form is the
normative value used by the zeta module.
"""

from __future__ import annotations

from .errors import NotInRing
from .exact import ExactScalar, HalfInt, ONE, gamma_C, gamma_exact, i_pow, \
    minus_one_pow, product
from .weights import DiscreteSeriesWeight, Signature, ZetaContext, \
    dual_weight, shifted_parameters


def l_factor(s, wt: DiscreteSeriesWeight, sig: Signature,
             r: int) -> ExactScalar:
    """L(s, D* x chi^r) = prod Gamma_C(s + |c_j|) over the 2n shifts."""
    s = HalfInt.of(s)
    return product(gamma_C(s + abs(c)) for c in shifted_parameters(wt, sig, r))


def euler_factor(s, ctx: ZetaContext) -> ExactScalar:
    """The modified Euler factor E(s); requires every s+|c_j| integral."""
    s = HalfInt.of(s)
    out = ONE
    for c in shifted_parameters(ctx.wt, ctx.sig, ctx.r):
        arg = s + abs(c)
        if not arg.is_integer:
            raise NotInRing(f"s+|c| = {arg} is not an integer; "
                            "the phase leaves the monomial ring")
        out = out * i_pow(-arg.as_int()) * gamma_C(arg)
    return out


def euler_right_expanded(ctx: ZetaContext) -> ExactScalar:
    """Closed Gamma-product expansion of E at s = (k-n+1)/2.

    Leading constant 2^{+n} (direct expansion of Gamma_C over the 2n
    factors); equality with euler_factor at the right point is the
    acceptance test for this routine.
    """
    a, b, k, r = ctx.a, ctx.b, ctx.k, ctx.r
    nu_star = ctx.nu_star
    kpr, kmr = ctx.tw.k_plus_r_half, ctx.tw.k_minus_r_half
    exponent = (-sum(ctx.tau) - sum(nu_star) - a * kmr - b * kpr
                + (a * (a - 1) + b * (b - 1)) // 2 + 2 * a * b)
    out = ExactScalar.make(2 ** (a + b)) \
        * ExactScalar.make(1, 1, 1, 1) ** exponent
    out = out * product(gamma_exact(ctx.tau[j - 1] + 1 - j + kmr - b)
                        for j in range(1, a + 1))
    out = out * product(gamma_exact(nu_star[j - 1] + 1 - j + kpr - a)
                        for j in range(1, b + 1))
    return out


def euler_right(ctx: ZetaContext) -> ExactScalar:
    """E at s = (k-n+1)/2 through the normative term-by-term form."""
    return euler_factor(HalfInt(ctx.k - ctx.n + 1), ctx)


def euler_left(ctx: ZetaContext) -> ExactScalar:
    """E at s = (n-k+1)/2 through the normative term-by-term form."""
    return euler_factor(HalfInt(ctx.n - ctx.k + 1), ctx)


def gamma_factor_from_euler(ctx: ZetaContext) -> ExactScalar:
    """gamma((k-n+1)/2) solved from
    E_left = (-1)^{sum tau + sum nu + a(k+r)/2 + b(k-r)/2} i^{-a^2-b^2}
             * gamma * E_right."""
    a, b = ctx.a, ctx.b
    sign = minus_one_pow(sum(ctx.tau) + sum(ctx.nu)
                         + a * ctx.tw.k_plus_r_half + b * ctx.tw.k_minus_r_half)
    phase = i_pow(-(a * a + b * b))
    return euler_left(ctx) / (sign * phase * euler_right(ctx))
